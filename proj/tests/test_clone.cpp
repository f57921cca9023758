#include "doctest.h"

#include "abelia/catalog.hpp"
#include "abelia/clone.hpp"
#include "abelia/error.hpp"
#include "oracles.hpp"

using namespace abelia;

namespace {

  AlgebraPtr fixture(char const* name) {
    return builtin(name).algebra;
  }

  std::set<std::vector<Elem>> tables(TermOpSet const& set) {
    std::set<std::vector<Elem>> out;
    for (auto const& op : set.ops) {
      out.insert(op.table);
    }
    return out;
  }

}  // namespace

TEST_SUITE("clone") {
  TEST_CASE("term operations of small fixtures") {
    auto p2 = generate_term_ops(*fixture("P2"), 2, 1000);
    CHECK(p2.complete);
    CHECK(p2.ops.size() == 3);

    auto z2 = generate_term_ops(*fixture("Z2"), 2, 1000);
    CHECK(z2.complete);
    // 0, x, y, x + y
    CHECK(tables(z2) == std::set<std::vector<Elem>>{{0, 0, 0, 0}, {0, 0, 1, 1},
                                                    {0, 1, 0, 1}, {0, 1, 1, 0}});

    auto s2 = generate_term_ops(*fixture("S2"), 2, 1000);
    // 0, x, y, x meet y
    CHECK(tables(s2) == std::set<std::vector<Elem>>{{0, 0, 0, 0}, {0, 0, 1, 1},
                                                    {0, 1, 0, 1}, {0, 0, 0, 1}});
    // ax + by: coefficients mod 4, and mod 2 on V4
    CHECK(generate_term_ops(*fixture("Z4"), 2, 1000).ops.size() == 16);
    CHECK(generate_term_ops(*fixture("V4"), 2, 1000).ops.size() == 4);
  }

  TEST_CASE("witnesses reproduce their tables and sizes never decrease") {
    for (auto const& name : list_builtins()) {
      auto a = fixture(name.c_str());
      for (unsigned k : {1u, 2u}) {
        auto set = generate_term_ops(*a, k, 100000);
        CHECK(set.complete);
        for (std::size_t i = 0; i < set.ops.size(); ++i) {
          CHECK(term_table(*a, set.ops[i].witness, k) == set.ops[i].table);
          if (i > 0) {
            CHECK(set.ops[i - 1].witness.size() <= set.ops[i].witness.size());
          }
        }
      }
    }
  }

  TEST_CASE("closure agrees with the depth-6 oracle on 2-element fixtures") {
    for (auto const& name : list_builtins()) {
      auto a = fixture(name.c_str());
      if (a->size() != 2) {
        continue;
      }
      CHECK(tables(generate_term_ops(*a, 2, 100000)) == oracle::binary_terms(*a, 6));
    }
  }

  TEST_CASE("cap exceeded yields an incomplete set") {
    auto set = generate_term_ops(*fixture("Z4"), 2, 5);
    CHECK_FALSE(set.complete);
    CHECK(set.ops.size() == 5);
    Caps caps;
    caps.term_ops = 2;
    CHECK(find_unit_term(*fixture("S2"), caps).status == SearchStatus::unknown);
  }

  TEST_CASE("subtraction terms") {
    auto z3 = find_subtraction_term(*fixture("Z3"));
    REQUIRE(z3.status == SearchStatus::found);
    CHECK(z3.term->witness.to_string() == "add(x1, neg(x2))");
    CHECK(z3.term->witness.operation_count() <= 3);
    CHECK(z3.term->table == std::vector<Elem>{0, 2, 1, 1, 0, 2, 2, 1, 0});

    CHECK(find_subtraction_term(*fixture("P2")).status == SearchStatus::none);
    CHECK(find_subtraction_term(*fixture("S2")).status == SearchStatus::none);

    auto b2 = find_subtraction_term(*fixture("B2"));
    REQUIRE(b2.status == SearchStatus::found);
    CHECK(b2.term->witness.to_string() == "s(x1, x2)");
  }

  TEST_CASE("unit terms") {
    for (auto name : {"Z2", "Z3", "Z4", "V4"}) {
      auto u = find_unit_term(*fixture(name));
      REQUIRE(u.status == SearchStatus::found);
      CHECK(u.term->witness.to_string() == "add(x1, x2)");
    }
    CHECK(find_unit_term(*fixture("B2")).status == SearchStatus::none);
    CHECK(find_unit_term(*fixture("S2")).status == SearchStatus::none);
    CHECK(find_unit_term(*fixture("P2")).status == SearchStatus::none);
  }

  TEST_CASE("term printing") {
    auto t = Term::apply(0, "add", {Term::variable(0), Term::apply(1, "zero", {})});
    CHECK(t.to_string() == "add(x1, 0)");
    CHECK(t.size() == 3);
    CHECK(t.operation_count() == 2);
  }
}
