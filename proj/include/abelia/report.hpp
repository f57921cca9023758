#ifndef ABELIA_REPORT_HPP_
#define ABELIA_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "algebra.hpp"
#include "clone.hpp"
#include "congruence.hpp"
#include "normalproj.hpp"
#include "structures.hpp"

// JSON renderings of the analysis results.  Every document carries the
// fields of schema/verdict-v1.schema.json:
//   {"version": 1, "check": ..., "inputs": [...], "holds": bool,
//    "witness": {...} | null, "instances": n}
namespace abelia::report {

  using json = nlohmann::json;

  inline constexpr int schema_version = 1;

  json blocks(Congruence const& theta);

  json verdict(std::string const&              check,
               std::vector<std::string> const& inputs,
               bool                            holds,
               json                            witness,
               std::size_t                     instances);

  json np(std::vector<std::string> const& inputs, NpVerdict const& v);
  json condition(std::vector<std::string> const& inputs, ConditionReport const& r);
  json shifting(std::vector<std::string> const& inputs, ShiftingVerdict const& v);
  json centralic(std::vector<std::string> const& inputs, CentralicReport const& r);
  json term(std::string const&              check,
            std::vector<std::string> const& inputs,
            TermSearch const&               t);
  json subtractions(std::vector<std::string> const&        inputs,
                    std::vector<InternalSubtraction> const& subs);
  json abelian(std::vector<std::string> const&        inputs,
               std::vector<InternalSubtraction> const& subs);
  json crystal(std::vector<std::string> const& inputs, CrystalReport const& r);
  json congruences(std::vector<std::string> const& inputs,
                   std::vector<Congruence> const&  lattice);
  json free(std::vector<std::string> const& inputs, FreeAlgebra const& f);
  json cross_check(std::vector<std::string> const& inputs,
                   CrossCheckReport const&         r);

}  // namespace abelia::report

#endif
