#include <algorithm>

#include "doctest.h"

#include "abelia/catalog.hpp"
#include "abelia/error.hpp"

using namespace abelia;

TEST_SUITE("catalog") {
  TEST_CASE("every fixture reproduces its expectations") {
    for (auto const& name : list_builtins()) {
      auto f = builtin(name);
      CHECK(f.name == name);
      CHECK(f.algebra->name() == name);
      CHECK_FALSE(f.expectations.empty());
      for (auto const& [check, expected] : f.expectations) {
        INFO(name << " " << check);
        CHECK(observe(check, f.algebra) == expected.outcome);
      }
    }
  }

  TEST_CASE("listing") {
    auto names = list_builtins();
    CHECK(std::is_sorted(names.begin(), names.end()));
    CHECK(std::adjacent_find(names.begin(), names.end()) == names.end());
    for (auto const& name : names) {
      auto a = builtin(name).algebra;
      CHECK(same_algebra(parse_algebra(serialize(*a)), a));
    }
    CHECK_THROWS_AS(builtin("Q8"), Error);
    CHECK_THROWS_AS(observe("no_such_check", builtin("Z2").algebra), Error);
  }
}
