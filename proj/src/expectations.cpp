#include "abelia/catalog.hpp"
#include "abelia/clone.hpp"
#include "abelia/error.hpp"
#include "abelia/normalproj.hpp"
#include "abelia/structures.hpp"

namespace abelia {

  std::string observe(std::string_view check, AlgebraPtr const& a) {
    if (check == "subtraction_term") {
      return to_string(find_subtraction_term(*a).status);
    }
    if (check == "unit_term") {
      return to_string(find_unit_term(*a).status);
    }
    if (check == "internal_subtractions") {
      return std::to_string(find_internal_subtractions(a).size());
    }
    if (check == "np_self") {
      return check_np_pair(a, a).holds ? "holds" : "fails";
    }
    if (check == "abelian") {
      for (auto const& s : find_internal_subtractions(a)) {
        if (derive_abelian(s).structure) {
          return "yes";
        }
      }
      return "no";
    }
    throw Error("unknown check '" + std::string(check) + "'");
  }

}  // namespace abelia
