#include "abelia/report.hpp"

namespace abelia::report {

  json blocks(Congruence const& theta) {
    return json(theta.blocks());
  }

  json verdict(std::string const&              check,
               std::vector<std::string> const& inputs,
               bool                            holds,
               json                            witness,
               std::size_t                     instances) {
    return json{{"version", schema_version},
                {"check", check},
                {"inputs", inputs},
                {"holds", holds},
                {"witness", std::move(witness)},
                {"instances", instances}};
  }

  json np(std::vector<std::string> const& inputs, NpVerdict const& v) {
    json witness = nullptr;
    if (v.witness) {
      witness = {{"a", v.witness->first}, {"b", v.witness->second}};
    }
    auto out     = verdict("np", inputs, v.holds, witness, v.instances);
    out["theta"] = blocks(v.theta);
    return out;
  }

  json condition(std::vector<std::string> const& inputs, ConditionReport const& r) {
    json witness = nullptr;
    if (!r.failures.empty()) {
      auto const& f = r.failures.front();
      witness       = {{"f", f.f.map()},
                       {"first", f.first},
                       {"second", f.second},
                       {"description", f.describe(r.condition)}};
      if (f.left) {
        witness["left"] = f.left->map();
      }
      if (f.right) {
        witness["right"] = f.right->map();
      }
    }
    auto out = verdict(std::string("condition_") + tag(r.condition),
                       inputs,
                       r.holds(),
                       witness,
                       r.instances);
    out["failures"] = r.failures.size();
    return out;
  }

  json shifting(std::vector<std::string> const& inputs, ShiftingVerdict const& v) {
    json witness = nullptr;
    if (v.theta && v.witness) {
      witness = {{"theta", blocks(*v.theta)},
                 {"a", v.witness->first},
                 {"b", v.witness->second}};
    }
    return verdict("shifting", inputs, v.holds, witness, v.congruences);
  }

  json centralic(std::vector<std::string> const& inputs, CentralicReport const& r) {
    json witness = nullptr;
    if (!r.failures.empty()) {
      auto const& f = r.failures.front();
      witness       = {{"theta", blocks(f.theta)}, {"x", f.x}, {"y", f.y}, {"z", f.z}};
    }
    auto out          = verdict("centralic", inputs, r.holds(), witness, r.congruences);
    out["violations"] = r.violations;
    out["failing_congruences"] = r.failures.size();
    return out;
  }

  json term(std::string const&              check,
            std::vector<std::string> const& inputs,
            TermSearch const&               t) {
    json witness = nullptr;
    if (t.term) {
      witness = {{"term", t.term->witness.to_string()}, {"table", t.term->table}};
    }
    auto out = verdict(check, inputs, t.status == SearchStatus::found, witness, t.generated);
    out["status"] = to_string(t.status);
    return out;
  }

  json subtractions(std::vector<std::string> const&        inputs,
                    std::vector<InternalSubtraction> const& subs) {
    json tables = json::array();
    for (auto const& s : subs) {
      tables.push_back(s.table());
    }
    auto out            = verdict("internal_subtractions", inputs, !subs.empty(), nullptr, subs.size());
    out["subtractions"] = subs.size();
    out["tables"]       = tables;
    return out;
  }

  json abelian(std::vector<std::string> const&        inputs,
               std::vector<InternalSubtraction> const& subs) {
    json structures = json::array();
    json witness    = nullptr;
    bool all        = !subs.empty();
    bool any        = false;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      auto r     = derive_abelian(subs[i]);
      json entry = {{"subtraction", subs[i].table()}, {"abelian", r.structure.has_value()}};
      if (r.structure) {
        any          = true;
        entry["add"] = r.structure->add;
        entry["neg"] = r.structure->neg;
      } else {
        all                   = false;
        entry["failed_axiom"] = r.failed_axiom;
        entry["at"]           = r.witness;
        if (witness.is_null()) {
          witness = {{"subtraction", i}, {"failed_axiom", r.failed_axiom}, {"at", r.witness}};
        }
      }
      structures.push_back(entry);
    }
    auto out            = verdict("abelian", inputs, all, witness, subs.size());
    out["subtractions"] = subs.size();
    out["abelian"]      = any;
    out["structures"]   = structures;
    return out;
  }

  json crystal(std::vector<std::string> const& inputs, CrystalReport const& r) {
    json entries = json::array();
    for (auto const& e : r.entries) {
      entries.push_back({{"name", e.name},
                         {"subtractions", e.subtractions},
                         {"abelian", e.abelian},
                         {"group_law", e.group_law},
                         {"np_preconditions", {{"square", e.np_square}, {"cube", e.np_cube}}}});
    }
    json witness = nullptr;
    if (!r.violations.empty()) {
      witness = {{"violations", r.violations}};
    }
    auto out         = verdict("crystal", inputs, r.holds(), witness, r.homs_checked);
    out["entries"]   = entries;
    out["anomalies"] = r.anomalies;
    return out;
  }

  json congruences(std::vector<std::string> const& inputs,
                   std::vector<Congruence> const&  lattice) {
    json list = json::array();
    for (auto const& theta : lattice) {
      list.push_back(blocks(theta));
    }
    auto out           = verdict("congruences", inputs, true, nullptr, lattice.size());
    out["congruences"] = list;
    return out;
  }

  json free(std::vector<std::string> const& inputs, FreeAlgebra const& f) {
    auto out          = verdict("free", inputs, true, nullptr, f.algebra->size());
    out["size"]       = f.algebra->size();
    out["generators"] = f.generators;
    out["algebra"]    = serialize(*f.algebra);
    return out;
  }

  json cross_check(std::vector<std::string> const& inputs, CrossCheckReport const& r) {
    json witness = nullptr;
    if (!r.discrepancies.empty()) {
      witness = {{"discrepancies", r.discrepancies}};
    }
    auto out = verdict("cross_check", inputs, r.holds(), witness, r.pairs);
    out["np_holding"]      = r.np_holding;
    out["d_instances"]     = r.d_instances;
    out["shifting_pairs"]  = r.shifting_pairs;
    out["centralic_pairs"] = r.centralic_pairs;
    out["skipped"]         = r.skipped;
    return out;
  }

}  // namespace abelia::report
