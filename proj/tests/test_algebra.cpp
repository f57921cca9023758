#include <random>

#include "doctest.h"

#include "abelia/algebra.hpp"
#include "abelia/catalog.hpp"
#include "abelia/congruence.hpp"
#include "abelia/error.hpp"
#include "abelia/quotient.hpp"
#include "oracles.hpp"

using namespace abelia;

namespace {

  constexpr char const* z3_text = R"(# cyclic group of order 3
algebra Z3
size 3
zero 0
op add 2
0 1 2
1 2 0
2 0 1
op neg 1
0 2 1
)";

  AlgebraPtr fixture(char const* name) {
    return builtin(name).algebra;
  }

  AlgebraPtr trivial() {
    return make_algebra("T", 1, {{"add", 2}, {"neg", 1}}, {{0}, {0}});
  }

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("parse the Z3 fixture") {
    auto a = parse_algebra(z3_text);
    CHECK(a->name() == "Z3");
    CHECK(a->size() == 3);
    REQUIRE(a->signature().size() == 3);
    auto add = *a->signature().index_of("add");
    auto neg = *a->signature().index_of("neg");
    CHECK(a->arity(add) == 2);
    CHECK(a->arity(neg) == 1);
    CHECK(a->apply(add, {2, 2}) == 1);
    CHECK(a->apply(neg, {1}) == 2);
    CHECK(a->same_structure(*fixture("Z3")));
  }

  TEST_CASE("parse a pointed set") {
    auto a = parse_algebra("algebra P2\nsize 2\nzero 0\n");
    CHECK(a->size() == 2);
    CHECK(a->signature().size() == 1);
    CHECK(a->signature()[0].name == "zero");
  }

  TEST_CASE("parse errors") {
    SUBCASE("out of range entry") {
      std::string bad = "algebra X\nsize 3\nzero 0\nop neg 1\n0 5 1\n";
      CHECK_THROWS_AS(parse_algebra(bad), ParseError);
      try {
        parse_algebra(bad);
      } catch (ParseError const& e) {
        CHECK(e.line() == 5);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
      }
    }
    SUBCASE("short table") {
      CHECK_THROWS_AS(parse_algebra("algebra X\nsize 2\nzero 0\nop f 2\n0 1 1\n"),
                      ParseError);
    }
    SUBCASE("long table") {
      CHECK_THROWS_AS(parse_algebra("algebra X\nsize 2\nzero 0\nop f 1\n0 1 1\n"),
                      ParseError);
    }
    SUBCASE("missing zero") {
      CHECK_THROWS_AS(parse_algebra("algebra X\nsize 2\n"), ParseError);
    }
    SUBCASE("zero must be 0") {
      CHECK_THROWS_AS(parse_algebra("algebra X\nsize 2\nzero 1\n"), ParseError);
    }
    SUBCASE("syntax") {
      try {
        parse_algebra("algebra X\nsize 2\nzero 0\nfrobnicate\n");
        FAIL("no throw");
      } catch (ParseError const& e) {
        CHECK(e.line() == 4);
      }
    }
  }

  TEST_CASE("serialize round trip over the catalog") {
    for (auto const& name : list_builtins()) {
      auto a    = builtin(name).algebra;
      auto text = serialize(*a);
      auto b    = parse_algebra(text);
      CHECK(b->name() == a->name());
      CHECK(b->same_structure(*a));
      CHECK(serialize(*b) == text);
    }
  }

  TEST_CASE("products") {
    auto z2 = fixture("Z2");
    auto p  = product(z2, z2);
    CHECK(p.algebra->size() == 4);
    CHECK(compose(p.pi2, p.iota1).is_zero());

    auto p23 = product(fixture("P2"), fixture("P3"));
    CHECK(p23.algebra->size() == 6);
    CHECK(p23.iota1(1) == 3);

    auto z3  = fixture("Z3");
    auto p33 = product(z3, z3);
    auto add = *z3->signature().index_of("add");
    // (1,2) + (2,2) = (0,1)
    CHECK(p33.algebra->apply(add, {p33.encode(1, 2), p33.encode(2, 2)})
          == p33.encode(0, 1));

    CHECK_THROWS_AS(product(z2, fixture("P2")), SignatureMismatch);
  }

  TEST_CASE("canonical maps of products are homomorphisms with the unit laws") {
    auto names = list_builtins();
    for (auto const& x : names) {
      for (auto const& y : names) {
        auto a = fixture(x.c_str()), b = fixture(y.c_str());
        if (!(a->signature() == b->signature())) {
          continue;
        }
        auto p = product(a, b);
        CHECK(is_homomorphism(p.pi1));
        CHECK(is_homomorphism(p.pi2));
        CHECK(is_homomorphism(p.iota1));
        CHECK(is_homomorphism(p.iota2));
        CHECK(compose(p.pi1, p.iota1) == identity(a));
        CHECK(compose(p.pi2, p.iota2) == identity(b));
        CHECK(compose(p.pi2, p.iota1) == zero_hom(a, b));
        CHECK(compose(p.pi1, p.iota2) == zero_hom(b, a));
      }
    }
  }

  TEST_CASE("zero maps and composition") {
    auto z3 = fixture("Z3"), z2 = fixture("Z2"), p2 = fixture("P2");
    CHECK(zero_hom(z3, z3).map() == std::vector<Elem>{0, 0, 0});
    CHECK(is_homomorphism(zero_hom(z2, z3)));
    for (auto const& h : enumerate_homomorphisms(p2, p2)) {
      CHECK(compose(h, zero_hom(p2, p2)).is_zero());
      CHECK(compose(zero_hom(p2, p2), h).is_zero());
    }
    auto p = product(z2, z2);
    CHECK(compose(p.pi2, p.iota2) == identity(z2));
    // (x,y) -> (0,y)
    CHECK(compose(p.iota2, p.pi2).map() == std::vector<Elem>{0, 1, 0, 1});
    CHECK_THROWS_AS(compose(p.pi2, p.pi2), Error);
  }

  TEST_CASE("homomorphism enumeration examples") {
    auto z2 = fixture("Z2"), p2 = fixture("P2"), z3 = fixture("Z3");
    CHECK(enumerate_homomorphisms(z2, z2).size() == 2);
    CHECK(enumerate_homomorphisms(p2, p2).size() == 2);

    auto p     = product(z3, z3);
    auto homs  = enumerate_homomorphisms(p.algebra, z3);
    // oracle: (x,y) -> ax + by mod 3
    std::set<std::vector<Elem>> linear;
    for (Elem alpha = 0; alpha < 3; ++alpha) {
      for (Elem beta = 0; beta < 3; ++beta) {
        std::vector<Elem> m(9);
        for (Elem x = 0; x < 3; ++x) {
          for (Elem y = 0; y < 3; ++y) {
            m[p.encode(x, y)] = (alpha * x + beta * y) % 3;
          }
        }
        linear.insert(m);
      }
    }
    std::set<std::vector<Elem>> got;
    for (auto const& h : homs) {
      got.insert(h.map());
    }
    CHECK(homs.size() == 9);
    CHECK(got == linear);
  }

  TEST_CASE("enumeration order is lexicographic and respects pins") {
    auto p3   = fixture("P3");
    auto homs = enumerate_homomorphisms(p3, p3);
    REQUIRE(homs.size() == 9);
    for (std::size_t i = 1; i < homs.size(); ++i) {
      CHECK(homs[i - 1].map() < homs[i].map());
    }
    auto pinned = enumerate_homomorphisms(p3, p3, {{1, 2}});
    CHECK(pinned.size() == 3);
    for (auto const& h : pinned) {
      CHECK(h(1) == 2);
    }
    // a pin breaking map(0) = 0 yields nothing
    CHECK(enumerate_homomorphisms(p3, p3, {{0, 1}}).empty());
    auto z3 = fixture("Z3");
    // add(1,1) = 2 forces map(2) = 2 map(1)
    CHECK(enumerate_homomorphisms(z3, z3, {{1, 1}, {2, 1}}).empty());
  }

  TEST_CASE("enumeration agrees with the filter-all-maps oracle") {
    std::vector<AlgebraPtr> algebras;
    for (auto const& name : list_builtins()) {
      algebras.push_back(fixture(name.c_str()));
    }
    algebras.push_back(product(fixture("Z2"), fixture("Z2")).algebra);
    algebras.push_back(product(fixture("P2"), fixture("P2")).algebra);
    algebras.push_back(product(fixture("S2"), fixture("S2")).algebra);
    algebras.push_back(product(fixture("B2"), fixture("B2")).algebra);
    for (auto const& x : algebras) {
      for (auto const& y : algebras) {
        if (x->size() > 4 || y->size() > 3 || !(x->signature() == y->signature())) {
          continue;
        }
        std::set<std::vector<Elem>> got;
        auto                        homs = enumerate_homomorphisms(x, y);
        for (auto const& h : homs) {
          got.insert(h.map());
        }
        CHECK(got.size() == homs.size());
        CHECK(got == oracle::homomorphisms(*x, *y));
      }
    }
  }

  TEST_CASE("quotients") {
    auto z2 = fixture("Z2");
    auto p  = product(z2, z2);
    auto q  = quotient(p.algebra, kernel_congruence(p.pi2));
    CHECK(q.algebra->same_structure(*z2));
    CHECK(is_homomorphism(q.projection));

    auto z3 = fixture("Z3");
    CHECK(quotient(z3, Congruence::all(3)).algebra->size() == 1);

    auto pp    = product(fixture("P2"), fixture("P2"));
    auto theta = cg(*pp.algebra, {{pp.encode(1, 0), pp.encode(0, 0)}});
    auto qp    = quotient(pp.algebra, theta);
    CHECK(qp.algebra->size() == 3);
    // blocks {(0,0),(1,0)}, {(0,1)}, {(1,1)}
    CHECK(qp.projection.map() == std::vector<Elem>{0, 1, 0, 2});

    // not compatible with add
    CHECK_THROWS_AS(quotient(z3, Congruence::from_labels(std::vector<int>{0, 0, 1})),
                    Error);
  }

  TEST_CASE("quotient map kernels reproduce the congruence") {
    for (auto const& name : {"Z4", "V4", "S2", "P3"}) {
      auto a = fixture(name);
      for (auto const& theta : all_congruences(*a)) {
        auto q = quotient(a, theta);
        CHECK(is_homomorphism(q.projection));
        CHECK(kernel_congruence(q.projection) == theta);
        CHECK(q.projection(0) == 0);
      }
    }
  }

  TEST_CASE("free algebras") {
    auto f = free_algebra(fixture("P2"), 1);
    CHECK(f.algebra->size() == 2);
    CHECK(f.generators == std::vector<Elem>{1});

    auto z2 = fixture("Z2");
    auto f2 = free_algebra(z2, 1);
    CHECK(f2.algebra->same_structure(*z2));

    CHECK(free_algebra(fixture("Z3"), 1).algebra->size() == 3);
    CHECK(free_algebra(fixture("V4"), 1).algebra->size() == 2);
    // Z2 on two generators: 0, x, y, x+y
    CHECK(free_algebra(z2, 2).algebra->size() == 4);
    // S2 on two generators: 0, x, y, x meet y
    CHECK(free_algebra(fixture("S2"), 2).algebra->size() == 4);

    Caps small;
    small.free_positions = 8;
    CHECK_THROWS_AS(free_algebra(fixture("Z3"), 2, small), CapExceeded);
    small.free_positions = 16;
    small.free_carrier   = 2;
    CHECK_THROWS_AS(free_algebra(fixture("Z3"), 1, small), CapExceeded);
  }

  TEST_CASE("split epi factorization examples") {
    auto z2 = fixture("Z2");
    auto p  = product(z2, z2);
    auto u  = factor_through_split_epi(p.pi2, p.pi2, p.iota2);
    REQUIRE(u);
    CHECK(*u == identity(z2));
    CHECK_FALSE(factor_through_split_epi(p.pi1, p.pi2, p.iota2));
    auto zero = factor_through_split_epi(zero_hom(p.algebra, z2), p.pi2, p.iota2);
    REQUIRE(zero);
    CHECK(zero->is_zero());
    CHECK_THROWS_AS(factor_through_split_epi(p.pi1, p.pi2, p.iota1), Error);
  }

  TEST_CASE("split epi factorization, both directions on random triples") {
    std::mt19937 rng(7);
    auto         names = std::vector<char const*>{"P2", "P3", "Z2", "Z3", "S2"};
    std::size_t  positives = 0, negatives = 0;
    for (int trial = 0; trial < 300; ++trial) {
      auto a = fixture(names[rng() % names.size()]);
      std::vector<AlgebraPtr> family;
      for (auto n : names) {
        if (fixture(n)->signature() == a->signature()) {
          family.push_back(fixture(n));
        }
      }
      auto b   = family[rng() % family.size()];
      auto c   = family[rng() % family.size()];
      auto p   = product(a, b);
      bool two = rng() % 2;
      auto r   = two ? p.pi2 : p.pi1;
      auto s   = two ? p.iota2 : p.iota1;
      auto fs  = enumerate_homomorphisms(p.algebra, c);
      auto f   = fs[rng() % fs.size()];
      auto u   = factor_through_split_epi(f, r, s);
      bool factors = compose(compose(f, s), r) == f;
      CHECK(u.has_value() == factors);
      if (u) {
        ++positives;
        CHECK(compose(*u, r) == f);
        CHECK(*u == compose(f, s));
      } else {
        ++negatives;
      }
    }
    CHECK(positives > 0);
    CHECK(negatives > 0);
  }

  TEST_CASE("invalid tables are rejected") {
    CHECK_THROWS_AS(make_algebra("X", 2, {{"f", 1}}, {{0, 2}}), Error);
    CHECK_THROWS_AS(make_algebra("X", 2, {{"f", 1}}, {{0}}), Error);
    CHECK_THROWS_AS(make_algebra("X", 2, {{"zero", 0}}, {{1}}), Error);
    CHECK_THROWS_AS(Homomorphism(fixture("Z2"), fixture("Z2"), {0, 2}), Error);
    CHECK(trivial()->size() == 1);
  }
}
