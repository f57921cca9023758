#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "abelia/catalog.hpp"
#include "abelia/clone.hpp"
#include "abelia/error.hpp"
#include "abelia/normalproj.hpp"
#include "abelia/report.hpp"
#include "abelia/structures.hpp"

using namespace abelia;
using report::json;

namespace {

  enum Exit { holds = 0, refuted = 1, usage = 2, unknown = 3 };

  constexpr std::string_view builtin_prefix = "@builtin:";

  AlgebraPtr load(std::string const& source) {
    if (source.rfind(builtin_prefix, 0) == 0) {
      return builtin(source.substr(builtin_prefix.size())).algebra;
    }
    std::ifstream in(source);
    if (!in) {
      throw Error("cannot read '" + source + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
      return parse_algebra(text.str());
    } catch (ParseError const& e) {
      throw Error(source + ": " + e.what());
    }
  }

  std::vector<AlgebraPtr> load_all(std::vector<std::string> const& sources) {
    std::vector<AlgebraPtr> out;
    for (auto const& s : sources) {
      out.push_back(load(s));
    }
    return out;
  }

  std::vector<std::string> names(std::vector<AlgebraPtr> const& algebras) {
    std::vector<std::string> out;
    for (auto const& a : algebras) {
      out.push_back(a->name());
    }
    return out;
  }

  std::string tuple(std::vector<Elem> const& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + ")";
  }

  std::string table(std::vector<Elem> const& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + "]";
  }

  char const* verdict(bool ok) {
    return ok ? "holds" : "fails";
  }

  // Output produced by one command.
  struct Result {
    json        doc;
    std::string text;
    int         code = holds;
  };

  Result finish(json doc, std::string text, bool ok) {
    return {std::move(doc), std::move(text), ok ? holds : refuted};
  }

  ////////////////////////////////////////////////////////////////////////

  Result run_np(std::vector<AlgebraPtr> const& in, Caps const& caps) {
    auto               v = check_np_pair(in[0], in[1], caps);
    std::ostringstream out;
    out << "np " << in[0]->name() << " " << in[1]->name() << ": " << verdict(v.holds) << "\n";
    out << "theta: " << v.theta.to_string() << "\n";
    if (v.witness) {
      out << "witness: (" << v.witness->first << "," << v.witness->second << ")\n";
    }
    return finish(report::np(names(in), v), out.str(), v.holds);
  }

  Result run_conditions(std::vector<AlgebraPtr> const& in,
                        std::vector<AlgebraPtr> const& params,
                        char                           which,
                        Caps const&                    caps) {
    auto const c      = condition_from_tag(which);
    bool const binary = c == Condition::a || c == Condition::d;
    auto const a      = in[0];
    auto const b      = binary && in.size() > 1 ? in[1] : a;
    std::size_t const given = binary ? 2 : 1;
    if (in.size() > given + 1) {
      throw CLI::ValidationError("conditions", "too many algebras for condition "
                                                   + std::string(1, which));
    }

    std::vector<AlgebraPtr> targets;
    if (in.size() == given + 1) {
      targets.push_back(in[given]);
    } else {
      targets.push_back(a);
      if (b != a) {
        targets.push_back(b);
      }
    }
    auto parameters = params;
    if (parameters.empty()) {
      parameters.push_back(a);
      if (b != a) {
        parameters.push_back(b);
      }
    }

    ConditionReport r;
    switch (c) {
      case Condition::a: r = check_condition_a(a, b, targets, caps); break;
      case Condition::b: r = check_condition_b(a, targets, caps); break;
      case Condition::c: r = check_condition_c(a, targets, caps); break;
      case Condition::d:
        r = check_condition_d_instances(a, b, targets, parameters, caps);
        break;
      case Condition::e: r = check_condition_e_instances(a, targets, parameters, caps); break;
    }

    std::vector<std::string> inputs{a->name()};
    if (binary) {
      inputs.push_back(b->name());
    }
    for (auto const& t : targets) {
      inputs.push_back(t->name());
    }
    std::ostringstream out;
    out << "condition (" << which << ") on";
    for (auto const& s : inputs) {
      out << " " << s;
    }
    out << ": " << (r.holds() ? "no counterexample over the test family" : "refuted") << "\n";
    out << "instances: " << r.instances << "\n";
    out << "failures: " << r.failures.size() << "\n";
    for (auto const& f : r.failures) {
      out << "  " << f.describe(c) << "\n";
    }
    return finish(report::condition(inputs, r), out.str(), r.holds());
  }

  Result run_shifting(std::vector<AlgebraPtr> const& in, Caps const& caps) {
    auto               v = shifting_shape_check(in[0], in[1], caps);
    std::ostringstream out;
    out << "shifting " << in[0]->name() << " " << in[1]->name() << ": " << verdict(v.holds)
        << "\n";
    out << "congruences: " << v.congruences << "\n";
    if (v.theta && v.witness) {
      out << "theta: " << v.theta->to_string() << "\n";
      out << "witness: (" << v.witness->first << "," << v.witness->second << ")\n";
    }
    return finish(report::shifting(names(in), v), out.str(), v.holds);
  }

  Result run_centralic(std::vector<AlgebraPtr> const& in, Caps const& caps) {
    auto               r = centralic_check(in[0], in[1], caps);
    std::ostringstream out;
    out << "centralic " << in[0]->name() << " " << in[1]->name() << ": "
        << verdict(r.holds()) << "\n";
    out << "congruences: " << r.congruences << "\n";
    out << "failing congruences: " << r.failures.size() << "\n";
    out << "violations: " << r.violations << "\n";
    for (auto const& f : r.failures) {
      out << "  " << f.theta.to_string() << " at x=" << f.x << " y=" << f.y << " z=" << f.z
          << "\n";
    }
    return finish(report::centralic(names(in), r), out.str(), r.holds());
  }

  Result run_term(std::string const& check, AlgebraPtr const& a, Caps const& caps) {
    bool const subtraction = check == "subtraction_term";
    auto const t = subtraction ? find_subtraction_term(*a, caps) : find_unit_term(*a, caps);
    std::ostringstream out;
    out << (subtraction ? "subtraction term " : "unit term ") << a->name() << ": "
        << to_string(t.status) << "\n";
    out << "term operations generated: " << t.generated << "\n";
    if (t.term) {
      out << "term: " << t.term->witness.to_string() << "\n";
      out << "table: " << table(t.term->table) << "\n";
    }
    Result r{report::term(check, {a->name()}, t), out.str(), holds};
    r.code = t.status == SearchStatus::found ? holds
             : t.status == SearchStatus::none ? refuted
                                              : unknown;
    return r;
  }

  Result run_subtractions(AlgebraPtr const& a, Caps const& caps) {
    auto               subs = find_internal_subtractions(a, caps);
    std::ostringstream out;
    out << "internal subtractions " << a->name() << ": " << subs.size() << "\n";
    for (std::size_t i = 0; i < subs.size(); ++i) {
      out << "  #" << i << " " << table(subs[i].table()) << "\n";
    }
    return finish(report::subtractions({a->name()}, subs), out.str(), !subs.empty());
  }

  Result run_abelian(AlgebraPtr const& a, Caps const& caps) {
    auto               subs = find_internal_subtractions(a, caps);
    auto               doc  = report::abelian({a->name()}, subs);
    std::ostringstream out;
    out << "abelian " << a->name() << ": " << verdict(doc["holds"].get<bool>()) << "\n";
    out << "internal subtractions: " << subs.size() << "\n";
    for (std::size_t i = 0; i < subs.size(); ++i) {
      auto r = derive_abelian(subs[i]);
      out << "  #" << i << " " << table(subs[i].table()) << ": ";
      if (r.structure) {
        out << "abelian group, add " << table(r.structure->add) << ", neg "
            << table(r.structure->neg) << "\n";
      } else {
        out << r.failed_axiom << " fails at " << tuple(r.witness) << "\n";
      }
    }
    bool ok = doc["holds"].get<bool>();
    return finish(std::move(doc), out.str(), ok);
  }

  Result run_crystal(std::vector<AlgebraPtr> const& in, Caps const& caps, unsigned jobs) {
    auto               r = crystallographic_report(in, caps, jobs);
    std::ostringstream out;
    auto pad = [](std::string const& s, std::size_t width) {
      return s + std::string(s.size() < width ? width - s.size() : 1, ' ');
    };
    auto yes = [](bool b) -> std::string { return b ? "yes" : "no"; };
    out << pad("algebra", 9) << pad("subtractions", 14) << pad("np(A,A)", 9)
        << pad("np(A,AxA)", 11) << pad("group_law", 11) << "abelian\n";
    for (auto const& e : r.entries) {
      out << pad(e.name, 9) << pad(std::to_string(e.subtractions), 14)
          << pad(yes(e.np_square), 9) << pad(yes(e.np_cube), 11) << pad(yes(e.group_law), 11)
          << yes(e.abelian) << "\n";
    }
    out << "maps checked: " << r.homs_checked << "\n";
    out << "violations: " << r.violations.size() << "\n";
    for (auto const& v : r.violations) {
      out << "  " << v << "\n";
    }
    out << "anomalies: " << r.anomalies.size() << "\n";
    for (auto const& v : r.anomalies) {
      out << "  " << v << "\n";
    }
    return finish(report::crystal(names(in), r), out.str(), r.holds());
  }

  Result run_congruences(AlgebraPtr const& a, Caps const& caps) {
    auto               lattice = all_congruences(*a, caps);
    std::ostringstream out;
    out << "congruences " << a->name() << ": " << lattice.size() << "\n";
    for (auto const& t : lattice) {
      out << "  " << t.to_string() << "\n";
    }
    return finish(report::congruences({a->name()}, lattice), out.str(), true);
  }

  Result run_free(AlgebraPtr const& a, unsigned k, Caps const& caps) {
    auto               f = free_algebra(a, k, caps);
    std::ostringstream out;
    out << "# generators " << table(f.generators) << "\n" << serialize(*f.algebra);
    return finish(report::free({a->name(), std::to_string(k)}, f), out.str(), true);
  }

  Result run_cross_check(std::vector<AlgebraPtr> const& in, Caps const& caps) {
    auto               r = cross_check_conditions(in, caps);
    std::ostringstream out;
    out << "cross-check: " << verdict(r.holds()) << "\n";
    out << "pairs: " << r.pairs << "\n";
    out << "np holding: " << r.np_holding << "\n";
    out << "(d) instances: " << r.d_instances << "\n";
    out << "shifting pairs: " << r.shifting_pairs << "\n";
    out << "centralic pairs: " << r.centralic_pairs << "\n";
    out << "skipped: " << r.skipped << "\n";
    for (auto const& d : r.discrepancies) {
      out << "  " << d << "\n";
    }
    return finish(report::cross_check(names(in), r), out.str(), r.holds());
  }

  Result run_catalog(std::string const& action, std::string const& name) {
    if (action == "list") {
      auto        all = list_builtins();
      std::string text;
      for (auto const& n : all) {
        text += n + "\n";
      }
      auto doc     = report::verdict("catalog", {}, true, nullptr, all.size());
      doc["names"] = all;
      return finish(std::move(doc), text, true);
    }
    if (name.empty()) {
      throw CLI::ValidationError("catalog export", "a fixture name is required");
    }
    auto f    = builtin(name);
    auto text = serialize(*f.algebra);
    auto doc  = report::verdict("catalog", {name}, true, nullptr, 1);
    doc["algebra"] = text;
    json expectations = json::object();
    for (auto const& [check, e] : f.expectations) {
      expectations[check] = {{"outcome", e.outcome}, {"note", e.note}};
    }
    doc["expectations"] = expectations;
    return finish(std::move(doc), text, true);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite pointed algebras: normal projections and internal subtractions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  bool     as_json = false;
  unsigned jobs    = 1;
  app.add_flag("--json", as_json, "emit JSON")->configurable(false);
  app.add_option("--jobs", jobs, "worker threads for independent checks")
      ->check(CLI::Range(1u, 256u));
  app.fallthrough();

  std::vector<std::string> sources, params;
  std::string              which = "a", action, name;
  unsigned                 rank  = 1;

  auto with_sources = [&](char const* cmd, char const* help, int count) {
    auto* sub = app.add_subcommand(cmd, help);
    sub->add_option("sources", sources, "file paths or @builtin:NAME")
        ->required()
        ->expected(count);
    return sub;
  };

  auto* np        = with_sources("np", "normal projections for the pair (A, B)", 2);
  auto* shifting  = with_sources("shifting", "shifting-shape check over Con(A x B)", 2);
  auto* centralic = with_sources("centralic", "centralic check over Con(A x B)", 2);
  auto* sub_term  = with_sources("subtraction-term", "search a binary subtraction term", 1);
  auto* unit_term = with_sources("unit-term", "search a binary unit term", 1);
  auto* subs      = with_sources("internal-subtractions", "list internal subtractions", 1);
  auto* abelian   = with_sources("abelian", "derive abelian groups from subtractions", 1);
  auto* congr     = with_sources("congruences", "list the congruence lattice", 1);
  auto* crystal   = with_sources("crystal", "uniqueness, group law and abelianness report", -1);
  auto* cross     = with_sources("cross-check", "cross-check the pair conditions", -1);

  auto* conditions = app.add_subcommand("conditions", "instance checks of conditions (a)-(e)");
  conditions->add_option("sources", sources, "A [B] [C]")->required()->expected(1, 3);
  conditions->add_option("--which", which, "condition letter")
      ->check(CLI::IsMember({"a", "b", "c", "d", "e"}));
  conditions->add_option("--params", params, "parameter algebras")->delimiter(',');

  auto* free = app.add_subcommand("free", "free algebra on k generators");
  std::string free_source;
  free->add_option("source", free_source, "file path or @builtin:NAME")->required();
  free->add_option("k", rank, "number of generators")->required();

  auto* catalog = app.add_subcommand("catalog", "built-in fixtures");
  catalog->add_option("action", action, "list | export")
      ->required()
      ->check(CLI::IsMember({"list", "export"}));
  catalog->add_option("name", name, "fixture name for export");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? holds : usage;
  }

  Result result;
  try {
    Caps const caps = Caps::from_environment();
    if (catalog->parsed()) {
      result = run_catalog(action, name);
    } else if (free->parsed()) {
      result = run_free(load(free_source), rank, caps);
    } else if (conditions->parsed()) {
      result = run_conditions(load_all(sources), load_all(params), which[0], caps);
    } else {
      auto in = load_all(sources);
      if (np->parsed()) {
        result = run_np(in, caps);
      } else if (shifting->parsed()) {
        result = run_shifting(in, caps);
      } else if (centralic->parsed()) {
        result = run_centralic(in, caps);
      } else if (sub_term->parsed()) {
        result = run_term("subtraction_term", in[0], caps);
      } else if (unit_term->parsed()) {
        result = run_term("unit_term", in[0], caps);
      } else if (subs->parsed()) {
        result = run_subtractions(in[0], caps);
      } else if (abelian->parsed()) {
        result = run_abelian(in[0], caps);
      } else if (congr->parsed()) {
        result = run_congruences(in[0], caps);
      } else if (crystal->parsed()) {
        result = run_crystal(in, caps, jobs);
      } else if (cross->parsed()) {
        result = run_cross_check(in, caps);
      }
    }
  } catch (CapExceeded const& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return unknown;
  } catch (CLI::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }

  if (as_json) {
    std::cout << result.doc.dump(2) << "\n";
  } else {
    std::cout << result.text;
  }
  return result.code;
}
