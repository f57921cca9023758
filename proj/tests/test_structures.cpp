#include "doctest.h"

#include "abelia/catalog.hpp"
#include "abelia/error.hpp"
#include "abelia/structures.hpp"
#include "oracles.hpp"

using namespace abelia;

namespace {

  AlgebraPtr fixture(char const* name) {
    return builtin(name).algebra;
  }

  // Maps s: A x A -> A with the two laws, filtered by hand.
  std::size_t count_subtractions(AlgebraPtr const& a) {
    auto        p = product(a, a);
    std::size_t n = a->size(), count = 0;
    for (auto const& m : oracle::homomorphisms(*p.algebra, *a)) {
      bool ok = true;
      for (Elem x = 0; x < n && ok; ++x) {
        ok = m[x * n + x] == 0 && m[x * n] == x;
      }
      count += ok;
    }
    return count;
  }

}  // namespace

TEST_SUITE("structures") {
  TEST_CASE("internal subtractions") {
    auto p2 = fixture("P2");
    auto s  = find_internal_subtractions(p2);
    REQUIRE(s.size() == 2);
    CHECK(s[0].table() == std::vector<Elem>{0, 0, 1, 0});
    CHECK(s[1].table() == std::vector<Elem>{0, 1, 1, 0});
    CHECK(find_internal_subtractions(fixture("P3")).size() == 81);
    CHECK(find_internal_subtractions(fixture("B2")).empty());
    CHECK(find_internal_subtractions(fixture("S2")).empty());
    for (auto name : {"Z2", "Z3", "Z4", "V4"}) {
      CHECK(find_internal_subtractions(fixture(name)).size() == 1);
    }
    Caps caps;
    caps.subtraction = 8;
    CHECK_THROWS_AS(find_internal_subtractions(fixture("Z3"), caps), CapExceeded);
    CHECK_THROWS_AS(InternalSubtraction(p2, {0, 0, 0, 0}), Error);
  }

  TEST_CASE("subtraction counts agree with map filtering") {
    for (auto name : {"P2", "P3", "Z2", "Z3", "S2", "B2"}) {
      auto a = fixture(name);
      CHECK(find_internal_subtractions(a).size() == count_subtractions(a));
    }
  }

  TEST_CASE("group law") {
    auto p2 = fixture("P2");
    auto v  = verify_group_law(InternalSubtraction(p2, {0, 0, 1, 0}));
    CHECK_FALSE(v.holds);
    CHECK(v.witness == std::vector<Elem>{1, 0, 1});
    CHECK(verify_group_law(InternalSubtraction(p2, {0, 1, 1, 0})).holds);
    for (auto name : {"Z2", "Z3", "Z4", "V4"}) {
      CHECK(verify_group_law(find_internal_subtractions(fixture(name)).front()).holds);
    }
  }

  TEST_CASE("abelian structures") {
    auto z3 = fixture("Z3");
    auto r  = derive_abelian(find_internal_subtractions(z3).front());
    REQUIRE(r.structure);
    CHECK(r.failed_axiom.empty());
    for (Elem x = 0; x < 3; ++x) {
      for (Elem y = 0; y < 3; ++y) {
        CHECK(r.structure->plus(x, y) == z3->apply(*z3->signature().index_of("add"), {x, y}));
      }
    }
    CHECK(r.structure->neg == std::vector<Elem>{0, 2, 1});

    auto p2 = fixture("P2");
    CHECK(derive_abelian(InternalSubtraction(p2, {0, 1, 1, 0})).structure);
    // x - (0 - y) = x here, so 0 is no left identity
    auto bad = derive_abelian(InternalSubtraction(p2, {0, 0, 1, 0}));
    CHECK_FALSE(bad.structure);
    CHECK(bad.failed_axiom == "left identity");
    CHECK(bad.witness == std::vector<Elem>{1});
  }

  TEST_CASE("maps between subtractions") {
    auto p2  = fixture("P2");
    auto xr  = InternalSubtraction(p2, {0, 1, 1, 0});
    auto amn = InternalSubtraction(p2, {0, 0, 1, 0});
    auto h   = check_homomorphic(identity(p2), xr, amn);
    CHECK_FALSE(h.holds);
    CHECK(h.witness == std::vector<Elem>{0, 1});
    CHECK(check_homomorphic(identity(p2), xr, xr).holds);
    CHECK(check_homomorphic(zero_hom(p2, p2), amn, xr).holds);

    auto z2 = fixture("Z2"), z4 = fixture("Z4");
    auto s2 = find_internal_subtractions(z2).front();
    auto s4 = find_internal_subtractions(z4).front();
    auto a2 = *derive_abelian(s2).structure;
    auto a4 = *derive_abelian(s4).structure;
    for (auto const& g : enumerate_homomorphisms(z4, z2)) {
      CHECK(check_homomorphic(g, s4, s2).holds);
      CHECK(check_additive(g, a4, a2).holds);
    }
    CHECK_THROWS_AS(check_homomorphic(identity(z2), s4, s2), Error);
  }

  TEST_CASE("first construction") {
    for (auto name : {"Z2", "Z3"}) {
      auto s = find_internal_subtractions(fixture(name)).front();
      auto r = verify_proof_construction_1(s);
      CHECK(r.np);
      CHECK(r.passed());
      REQUIRE(r.conclusion);
      CHECK(*r.conclusion);
      CHECK(*r.conclusion == verify_group_law(s).holds);
    }
    auto p = verify_proof_construction_1(InternalSubtraction(fixture("P2"), {0, 0, 1, 0}));
    CHECK_FALSE(p.np);
    CHECK_FALSE(p.conclusion);
    REQUIRE(p.stages.size() == 2);
    CHECK(p.stages[0].name == "homomorphism");
    CHECK(p.stages[0].passed);
    CHECK(p.stages[1].passed);
  }

  TEST_CASE("second construction") {
    auto z2 = fixture("Z2"), z3 = fixture("Z3");
    auto s2 = find_internal_subtractions(z2).front();
    auto s3 = find_internal_subtractions(z3).front();
    for (auto const& g : enumerate_homomorphisms(z3, z3)) {
      auto r = verify_proof_construction_2(g, s3, s3);
      CHECK(r.passed());
      REQUIRE(r.conclusion);
      CHECK(*r.conclusion == check_homomorphic(g, s3, s3).holds);
    }
    for (auto const& g : enumerate_homomorphisms(z2, z2)) {
      CHECK(verify_proof_construction_2(g, s2, s2).conclusion.value_or(false));
    }
    auto p2 = fixture("P2");
    auto r  = verify_proof_construction_2(identity(p2), InternalSubtraction(p2, {0, 1, 1, 0}),
                                          InternalSubtraction(p2, {0, 0, 1, 0}));
    CHECK_FALSE(r.np);
    CHECK_FALSE(r.conclusion);
  }

  TEST_CASE("crystallographic reports") {
    auto groups = crystallographic_report({fixture("Z2"), fixture("Z3"), fixture("V4")});
    CHECK(groups.holds());
    CHECK(groups.anomalies.empty());
    REQUIRE(groups.entries.size() == 3);
    for (auto const& e : groups.entries) {
      CHECK(e.preconditions());
      CHECK(e.subtractions == 1);
      CHECK(e.abelian);
      CHECK(e.group_law);
    }
    // Z2 -> Z2: 2, Z2 -> Z3: 1, Z2 -> V4: 4, Z3 -> Z2: 1, Z3 -> Z3: 3,
    // Z3 -> V4: 1, V4 -> Z2: 4, V4 -> Z3: 1, V4 -> V4: 16
    CHECK(groups.homs_checked == 33);

    auto sets = crystallographic_report({fixture("P2")});
    CHECK(sets.holds());
    CHECK_FALSE(sets.anomalies.empty());
    CHECK_FALSE(sets.entries.front().np_square);

    auto b2 = crystallographic_report({fixture("B2")});
    CHECK(b2.holds());
    CHECK(b2.entries.front().subtractions == 0);
    CHECK(b2.entries.front().preconditions());

    auto parallel = crystallographic_report({fixture("Z2"), fixture("Z3"), fixture("V4")},
                                            Caps{}, 3);
    CHECK(parallel.homs_checked == groups.homs_checked);
    CHECK(parallel.violations == groups.violations);
  }
}
