#ifndef ABELIA_CATALOG_HPP_
#define ABELIA_CATALOG_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "algebra.hpp"

namespace abelia {

  struct Expectation {
    std::string outcome;
    std::string note;
  };

  // A built-in algebra together with the outcomes the checks must produce.
  // Keys of `expectations` are the check names understood by observe().
  struct Fixture {
    std::string                        name;
    AlgebraPtr                         algebra;
    std::map<std::string, Expectation> expectations;
  };

  // One of B2, P2, P3, S2, V4, Z2, Z3, Z4.  Throws Error otherwise.
  Fixture builtin(std::string_view name);

  std::vector<std::string> list_builtins();

  // Runs the named check on `a` and renders its outcome the way fixture
  // expectations are written:
  //   subtraction_term, unit_term       found | none | unknown
  //   internal_subtractions             the count
  //   np_self                           holds | fails
  //   abelian                           yes | no
  std::string observe(std::string_view check, AlgebraPtr const& a);

}  // namespace abelia

#endif
