#include "abelia/catalog.hpp"

#include <algorithm>
#include <functional>

#include "abelia/error.hpp"

namespace abelia {

  namespace {

    using Binary = std::function<Elem(Elem, Elem)>;
    using Unary  = std::function<Elem(Elem)>;

    std::vector<Elem> tabulate(std::size_t n, Binary const& f) {
      std::vector<Elem> t(n * n);
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
          t[x * n + y] = f(x, y);
        }
      }
      return t;
    }

    std::vector<Elem> tabulate(std::size_t n, Unary const& f) {
      std::vector<Elem> t(n);
      for (Elem x = 0; x < n; ++x) {
        t[x] = f(x);
      }
      return t;
    }

    AlgebraPtr pointed_set(std::string name, std::size_t n) {
      return make_algebra(std::move(name), n, {}, {});
    }

    AlgebraPtr cyclic(std::string name, Elem n) {
      return make_algebra(std::move(name),
                          n,
                          {{"add", 2}, {"neg", 1}},
                          {tabulate(n, Binary([n](Elem x, Elem y) { return (x + y) % n; })),
                           tabulate(n, Unary([n](Elem x) { return (n - x) % n; }))});
    }

    Expectation expect(std::string outcome, std::string note) {
      return {std::move(outcome), std::move(note)};
    }

    Fixture make_fixture(std::string_view name) {
      if (name == "P2" || name == "P3") {
        std::size_t n = name == "P2" ? 2 : 3;
        return {std::string(name),
                pointed_set(std::string(name), n),
                {{"subtraction_term", expect("none", "only projections and 0 are terms")},
                 {"unit_term", expect("none", "only projections and 0 are terms")},
                 {"internal_subtractions",
                  expect(n == 2 ? "2" : "81",
                         "every pointed map is a homomorphism; the free cells "
                         "of the table are unconstrained")},
                 {"np_self", expect("fails", "nothing propagates the generators")},
                 {"abelian", expect("yes", "the cyclic group subtraction is a pointed map")}}};
      }
      if (name == "Z2" || name == "Z3" || name == "Z4") {
        Elem n = static_cast<Elem>(name[1] - '0');
        return {std::string(name),
                cyclic(std::string(name), n),
                {{"subtraction_term", expect("found", "add(x1, neg(x2))")},
                 {"unit_term", expect("found", "add")},
                 {"internal_subtractions", expect("1", "linear maps x -> ax + by force a = 1, b = -1")},
                 {"np_self", expect("holds", "groups have a subtraction term")},
                 {"abelian", expect("yes", "the group itself")}}};
      }
      if (name == "V4") {
        return {"V4",
                make_algebra("V4",
                             4,
                             {{"add", 2}, {"neg", 1}},
                             {tabulate(4, Binary([](Elem x, Elem y) { return x ^ y; })),
                              tabulate(4, Unary([](Elem x) { return x; }))}),
                {{"subtraction_term", expect("found", "x1 - x2 = add(x1, neg(x2))")},
                 {"unit_term", expect("found", "add")},
                 {"internal_subtractions", expect("1", "endomorphism pair forced to (1, -1)")},
                 {"np_self", expect("holds", "groups have a subtraction term")},
                 {"abelian", expect("yes", "the Klein four group")}}};
      }
      if (name == "S2") {
        return {"S2",
                make_algebra("S2",
                             2,
                             {{"meet", 2}},
                             {tabulate(2, Binary([](Elem x, Elem y) { return x & y; }))}),
                {{"subtraction_term", expect("none", "term operations are 0, x, y, x meet y")},
                 {"unit_term", expect("none", "0 meet x = 0")},
                 {"internal_subtractions",
                  expect("0", "s(1,0) = 1 and s(1,1) = 0 clash with meet preservation")},
                 {"np_self", expect("fails", "meet keeps (1,1) apart from (0,1)")},
                 {"abelian", expect("no", "no internal subtraction")}}};
      }
      if (name == "B2") {
        return {"B2",
                make_algebra("B2",
                             2,
                             {{"s", 2}},
                             {tabulate(2, Binary([](Elem x, Elem y) { return x & (y ^ 1); }))}),
                {{"subtraction_term", expect("found", "the basic operation s(x1, x2)")},
                 {"unit_term", expect("none", "every term operation lies below a projection")},
                 {"internal_subtractions",
                  expect("0", "neither candidate table is a homomorphism out of B2 x B2")},
                 {"np_self", expect("holds", "subtractive")},
                 {"abelian", expect("no", "no internal subtraction")}}};
      }
      throw Error("unknown builtin algebra '" + std::string(name) + "'");
    }

  }  // namespace

  Fixture builtin(std::string_view name) {
    return make_fixture(name);
  }

  std::vector<std::string> list_builtins() {
    return {"B2", "P2", "P3", "S2", "V4", "Z2", "Z3", "Z4"};
  }

}  // namespace abelia
