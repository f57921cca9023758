#include <cstdlib>

#include "doctest.h"

#include "abelia/caps.hpp"
#include "abelia/error.hpp"

using namespace abelia;

TEST_SUITE("caps") {
  TEST_CASE("parsing") {
    auto c = Caps::parse("cg=10, lattice=4,terms=7");
    CHECK(c.cg == 10);
    CHECK(c.lattice == 4);
    CHECK(c.term_ops == 7);
    CHECK(c.hom_src == Caps{}.hom_src);
    CHECK(Caps::parse("").cg == Caps{}.cg);
    CHECK(Caps::parse(Caps{}.to_string()).to_string() == Caps{}.to_string());
    CHECK_THROWS_AS(Caps::parse("bogus=1"), Error);
    CHECK_THROWS_AS(Caps::parse("cg=abc"), Error);
    CHECK_THROWS_AS(Caps::parse("cg"), Error);
    CHECK_THROWS_AS(Caps::parse("cg=-3"), Error);
  }

  TEST_CASE("environment") {
    ::setenv("ABELIA_CAPS", "hom_tgt=2,sub=9", 1);
    auto c = Caps::from_environment();
    CHECK(c.hom_tgt == 2);
    CHECK(c.subtraction == 9);
    ::unsetenv("ABELIA_CAPS");
    CHECK(Caps::from_environment().hom_tgt == Caps{}.hom_tgt);
  }
}
