#include "abelia/structures.hpp"

#include <algorithm>
#include <future>

#include "abelia/error.hpp"
#include "abelia/normalproj.hpp"

namespace abelia {

  namespace {

    std::string tuple_string(std::vector<Elem> const& v) {
      std::string out = "(";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(v[i]);
      }
      return out + ")";
    }

    // Table of a binary operation as a map out of A x A.
    Homomorphism as_map(AlgebraPtr const& a, std::vector<Elem> const& table) {
      auto p = product(a, a);
      return Homomorphism(p.algebra, a, table);
    }

  }  // namespace

  InternalSubtraction::InternalSubtraction(AlgebraPtr algebra,
                                           std::vector<Elem> table)
      : _algebra(std::move(algebra)), _table(std::move(table)) {
    std::size_t const n = _algebra->size();
    if (_table.size() != n * n) {
      throw Error("subtraction table has the wrong length");
    }
    for (Elem x = 0; x < n; ++x) {
      if ((*this)(x, x) != 0 || (*this)(x, 0) != x) {
        throw Error("table violates s(x,x) = 0 or s(x,0) = x at x = "
                    + std::to_string(x));
      }
    }
    if (!is_homomorphism(as_map(_algebra, _table))) {
      throw Error("subtraction is not a homomorphism out of the square of "
                  + _algebra->name());
    }
  }

  std::vector<InternalSubtraction> find_internal_subtractions(
      AlgebraPtr const& a,
      Caps const&       caps) {
    std::size_t const n = a->size();
    if (n * n > caps.subtraction) {
      throw CapExceeded("internal subtraction search on " + a->name()
                        + " needs " + std::to_string(n * n)
                        + " cells, cap is " + std::to_string(caps.subtraction));
    }
    auto       p = product(a, a);
    PartialMap pinned;
    for (Elem x = 0; x < n; ++x) {
      pinned[p.encode(x, x)] = 0;
      pinned[p.encode(x, 0)] = x;
    }
    std::vector<InternalSubtraction> out;
    for_each_homomorphism(p.algebra, a, pinned, [&](Homomorphism const& h) {
      out.emplace_back(a, h.map());
      return true;
    });
    return out;
  }

  LawVerdict verify_group_law(InternalSubtraction const& s) {
    std::size_t const n = s.algebra()->size();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (s(s(x, z), s(y, z)) != s(x, y)) {
            return {false, {x, y, z}};
          }
        }
      }
    }
    return {};
  }

  AbelianResult derive_abelian(InternalSubtraction const& s) {
    auto const&       a = s.algebra();
    std::size_t const n = a->size();
    AbelianStructure  g{a, s.table(), std::vector<Elem>(n * n), std::vector<Elem>(n)};
    for (Elem x = 0; x < n; ++x) {
      g.neg[x] = s(0, x);
      for (Elem y = 0; y < n; ++y) {
        g.add[x * n + y] = s(x, s(0, y));
      }
    }
    auto fail = [](std::string axiom, std::vector<Elem> witness) {
      return AbelianResult{std::nullopt, std::move(axiom), std::move(witness)};
    };
    for (Elem x = 0; x < n; ++x) {
      if (g.plus(x, 0) != x) {
        return fail("right identity", {x});
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (g.plus(0, x) != x) {
        return fail("left identity", {x});
      }
    }
    for (Elem x = 0; x < n; ++x) {
      if (g.plus(x, g.neg[x]) != 0) {
        return fail("inverse", {x});
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (g.plus(g.plus(x, y), z) != g.plus(x, g.plus(y, z))) {
            return fail("associativity", {x, y, z});
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (g.plus(x, y) != g.plus(y, x)) {
          return fail("commutativity", {x, y});
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (s(x, y) != g.plus(x, g.neg[y])) {
          return fail("subtraction", {x, y});
        }
      }
    }
    if (!is_homomorphism(as_map(a, g.add))) {
      return fail("homomorphism", {});
    }
    return AbelianResult{std::move(g), "", {}};
  }

  LawVerdict check_homomorphic(Homomorphism const&        g,
                               InternalSubtraction const& s,
                               InternalSubtraction const& s_target) {
    if (!same_algebra(g.source(), s.algebra())
        || !same_algebra(g.target(), s_target.algebra())) {
      throw Error("check_homomorphic: endpoints do not match the subtractions");
    }
    std::size_t const n = g.source()->size();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (g(s(x, y)) != s_target(g(x), g(y))) {
          return {false, {x, y}};
        }
      }
    }
    return {};
  }

  LawVerdict check_additive(Homomorphism const&     g,
                            AbelianStructure const& source,
                            AbelianStructure const& target) {
    if (!same_algebra(g.source(), source.algebra)
        || !same_algebra(g.target(), target.algebra)) {
      throw Error("check_additive: endpoints do not match the structures");
    }
    std::size_t const n = g.source()->size();
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (g(source.plus(x, y)) != target.plus(g(x), g(y))) {
          return {false, {x, y}};
        }
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Construction replays
  ////////////////////////////////////////////////////////////////////////

  bool ConstructionReport::passed() const {
    return std::all_of(stages.begin(), stages.end(), [](auto const& st) {
      return st.passed;
    });
  }

  ConstructionReport verify_proof_construction_1(InternalSubtraction const& s,
                                                 Caps const&                caps) {
    auto const&       a = s.algebra();
    std::size_t const n = a->size();
    if (n * n * n > caps.cg) {
      throw CapExceeded("construction on " + a->name() + " needs carrier "
                        + std::to_string(n * n * n) + ", cap is "
                        + std::to_string(caps.cg));
    }
    auto inner = product(a, a);
    auto outer = product(a, inner.algebra);

    std::vector<Elem> table(outer.algebra->size());
    for (Elem e = 0; e < table.size(); ++e) {
      auto [z, w] = outer.decode(e);
      auto [x, y] = inner.decode(w);
      table[e]    = s(s(x, z), s(y, z));
    }
    Homomorphism f(outer.algebra, a, table);

    ConstructionReport report;
    report.stages.push_back({"homomorphism", is_homomorphism(f), {}});

    Stage vanish{"vanishes_on_first_factor", true, {}};
    for (Elem z = 0; z < n; ++z) {
      if (f(outer.encode(z, 0)) != 0) {
        vanish = {vanish.name, false, {z}};
        break;
      }
    }
    report.stages.push_back(vanish);

    report.np = check_np_pair(a, inner.algebra, caps).holds;
    if (report.np) {
      Stage independent{"independent_of_first_factor", true, {}};
      for (Elem z = 1; z < n && independent.passed; ++z) {
        for (Elem w = 0; w < inner.algebra->size(); ++w) {
          if (f(outer.encode(z, w)) != f(outer.encode(0, w))) {
            auto [x, y] = inner.decode(w);
            independent = {independent.name, false, {z, x, y}};
            break;
          }
        }
      }
      report.stages.push_back(independent);
      report.conclusion = independent.passed;
    }
    return report;
  }

  ConstructionReport verify_proof_construction_2(Homomorphism const&        g,
                                                 InternalSubtraction const& s,
                                                 InternalSubtraction const& s_target,
                                                 Caps const&                caps) {
    if (!same_algebra(g.source(), s.algebra())
        || !same_algebra(g.target(), s_target.algebra())) {
      throw Error("construction replay: endpoints do not match the subtractions");
    }
    auto const&       x_alg = g.source();
    std::size_t const n     = x_alg->size();
    auto              add   = [&](Elem x, Elem y) { return s(x, s(0, y)); };
    auto add_target = [&](Elem x, Elem y) { return s_target(x, s_target(0, y)); };

    ConstructionReport report;
    report.applicable = derive_abelian(s).structure.has_value()
                        && derive_abelian(s_target).structure.has_value();

    auto              sq = product(x_alg, x_alg);
    std::vector<Elem> table(n * n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        table[sq.encode(x, y)] = s_target(g(add(x, y)), add_target(g(x), g(y)));
      }
    }
    Homomorphism f(sq.algebra, g.target(), table);
    report.stages.push_back({"homomorphism", is_homomorphism(f), {}});

    Stage vanish{"vanishes_on_first_factor", true, {}};
    for (Elem x = 0; x < n; ++x) {
      if (f(sq.encode(x, 0)) != 0) {
        vanish = {vanish.name, false, {x}};
        break;
      }
    }
    report.stages.push_back(vanish);

    report.np = check_np_pair(x_alg, x_alg, caps).holds;
    if (!report.applicable || !report.np) {
      return report;
    }
    Stage independent{"independent_of_first_factor", true, {}};
    for (Elem x = 1; x < n && independent.passed; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (f(sq.encode(x, y)) != f(sq.encode(0, y))) {
          independent = {independent.name, false, {x, y}};
          break;
        }
      }
    }
    report.stages.push_back(independent);

    Stage additive{"additive", true, {}};
    for (Elem x = 0; x < n && additive.passed; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (g(add(x, y)) != add_target(g(x), g(y))) {
          additive = {additive.name, false, {x, y}};
          break;
        }
      }
    }
    report.stages.push_back(additive);
    report.conclusion = independent.passed && additive.passed;
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Crystallographic report
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Analysis {
      CrystalEntry                     entry;
      std::vector<InternalSubtraction> subtractions;
      std::optional<AbelianStructure>  structure;  // of the first subtraction
      std::vector<std::string>         findings;
    };

    Analysis analyse(AlgebraPtr const& a, Caps const& caps) {
      Analysis out;
      auto&    e = out.entry;
      e.name     = a->name();
      out.subtractions = find_internal_subtractions(a, caps);
      e.subtractions   = out.subtractions.size();
      e.np_square      = check_np_pair(a, a, caps).holds;
      e.np_cube        = check_np_pair(a, product(a, a).algebra, caps).holds;

      if (e.subtractions > 1) {
        out.findings.push_back(e.name + ": " + std::to_string(e.subtractions)
                               + " internal subtractions (uniqueness fails)");
      }
      for (std::size_t i = 0; i < out.subtractions.size(); ++i) {
        auto const& s   = out.subtractions[i];
        auto        law = verify_group_law(s);
        if (!law.holds) {
          e.group_law = false;
          out.findings.push_back(e.name + ": subtraction #" + std::to_string(i)
                                 + " fails the group law at (x,y,z)="
                                 + tuple_string(law.witness));
        }
        auto ab = derive_abelian(s);
        if (ab.structure) {
          e.abelian = true;
          if (i == 0) {
            out.structure = std::move(ab.structure);
          }
        } else {
          out.findings.push_back(e.name + ": subtraction #" + std::to_string(i)
                                 + " derives no abelian group ("
                                 + ab.failed_axiom + " fails at "
                                 + tuple_string(ab.witness) + ")");
        }
      }
      return out;
    }

  }  // namespace

  CrystalReport crystallographic_report(std::vector<AlgebraPtr> const& catalog,
                                        Caps const&                    caps,
                                        unsigned                       jobs) {
    std::vector<Analysis> analyses;
    if (jobs <= 1) {
      for (auto const& a : catalog) {
        analyses.push_back(analyse(a, caps));
      }
    } else {
      for (std::size_t start = 0; start < catalog.size(); start += jobs) {
        std::vector<std::future<Analysis>> batch;
        for (std::size_t i = start; i < std::min(catalog.size(), start + jobs); ++i) {
          batch.push_back(std::async(std::launch::async, analyse, catalog[i], caps));
        }
        for (auto& f : batch) {
          analyses.push_back(f.get());
        }
      }
    }

    CrystalReport report;
    for (auto const& an : analyses) {
      report.entries.push_back(an.entry);
      auto& sink = an.entry.preconditions() ? report.violations : report.anomalies;
      sink.insert(sink.end(), an.findings.begin(), an.findings.end());
    }

    // (A1)/(A3): every map between verified abelian objects.
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      for (std::size_t j = 0; j < catalog.size(); ++j) {
        auto const& src = analyses[i];
        auto const& tgt = analyses[j];
        if (!src.entry.preconditions() || !tgt.entry.preconditions()
            || src.subtractions.empty() || tgt.subtractions.empty()
            || !src.structure || !tgt.structure
            || !(catalog[i]->signature() == catalog[j]->signature())) {
          continue;
        }
        if (catalog[i]->size() > caps.hom_src || catalog[j]->size() > caps.hom_tgt) {
          report.anomalies.push_back("maps " + src.entry.name + " -> "
                                     + tgt.entry.name + " skipped (hom caps)");
          continue;
        }
        auto const& s  = src.subtractions.front();
        auto const& s2 = tgt.subtractions.front();
        for_each_homomorphism(catalog[i], catalog[j], {}, [&](Homomorphism const& g) {
          ++report.homs_checked;
          auto hom = check_homomorphic(g, s, s2);
          if (!hom.holds) {
            report.violations.push_back(
                "A1: a map " + src.entry.name + " -> " + tgt.entry.name
                + " is not homomorphic at " + tuple_string(hom.witness));
          }
          auto add = check_additive(g, *src.structure, *tgt.structure);
          if (!add.holds) {
            report.violations.push_back(
                "A3: a map " + src.entry.name + " -> " + tgt.entry.name
                + " does not preserve addition at " + tuple_string(add.witness));
          }
          return true;
        });
      }
    }
    return report;
  }

}  // namespace abelia
