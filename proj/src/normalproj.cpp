#include "abelia/normalproj.hpp"

#include <sstream>

#include "abelia/error.hpp"

namespace abelia {

  namespace {

    std::string map_string(Homomorphism const& h) {
      std::string out = "[";
      for (std::size_t i = 0; i < h.map().size(); ++i) {
        out += (i == 0 ? "" : ",") + std::to_string(h.map()[i]);
      }
      return out + "]";
    }

    void require_size(std::size_t n, std::size_t cap, std::string const& what) {
      if (n > cap) {
        throw CapExceeded(what + " has size " + std::to_string(n)
                          + ", cap is " + std::to_string(cap));
      }
    }

    void require_targets(AlgebraPtr const&              domain,
                         std::vector<AlgebraPtr> const& targets,
                         Caps const&                    caps) {
      for (auto const& c : targets) {
        require_same_signature(*domain, *c);
        require_size(c->size(), caps.hom_tgt, "target " + c->name());
      }
    }

    // Shared body of (a) and (b): f(x,0) = 0 for all x implies
    // f(x,y) = f(0,y) for all x, y.
    ConditionReport check_quotient_law(Condition                      tag,
                                       AlgebraPtr const&              a,
                                       AlgebraPtr const&              b,
                                       std::vector<AlgebraPtr> const& targets,
                                       Caps const&                    caps) {
      auto p = product(a, b);
      require_size(p.algebra->size(), caps.hom_src, "domain " + p.algebra->name());
      require_targets(p.algebra, targets, caps);
      ConditionReport report{tag, 0, {}};
      for (auto const& c : targets) {
        for_each_homomorphism(p.algebra, c, {}, [&](Homomorphism const& f) {
          ++report.instances;
          for (Elem x = 0; x < a->size(); ++x) {
            if (f(p.encode(x, 0)) != 0) {
              return true;
            }
          }
          for (Elem x = 1; x < a->size(); ++x) {
            for (Elem y = 0; y < b->size(); ++y) {
              if (f(p.encode(x, y)) != f(p.encode(0, y))) {
                report.failures.push_back(
                    {f, std::nullopt, std::nullopt, x, y, b->size()});
                return true;
              }
            }
          }
          return true;
        });
      }
      return report;
    }

    std::vector<std::vector<Homomorphism>> homs_from(
        std::vector<AlgebraPtr> const& parameters,
        AlgebraPtr const&              target,
        Caps const&                    caps) {
      require_size(target->size(), caps.hom_tgt, "parameter target " + target->name());
      std::vector<std::vector<Homomorphism>> out;
      for (auto const& u : parameters) {
        require_same_signature(*u, *target);
        require_size(u->size(), caps.hom_src, "parameter object " + u->name());
        out.push_back(enumerate_homomorphisms(u, target));
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Pair-level decision
  ////////////////////////////////////////////////////////////////////////

  NpVerdict check_np_pair(AlgebraPtr const& a,
                          AlgebraPtr const& b,
                          Caps const&       caps) {
    require_same_signature(*a, *b);
    require_size(a->size() * b->size(), caps.cg, a->name() + "x" + b->name());
    auto                  p = product(a, b);
    std::vector<ElemPair> generators;
    for (Elem x = 1; x < a->size(); ++x) {
      generators.emplace_back(p.encode(x, 0), 0);
    }
    NpVerdict verdict;
    verdict.theta     = cg(*p.algebra, generators);
    verdict.instances = a->size() * b->size();
    for (Elem x = 1; x < a->size() && !verdict.witness; ++x) {
      for (Elem y = 0; y < b->size(); ++y) {
        if (!verdict.theta.related(p.encode(x, y), p.encode(0, y))) {
          verdict.witness = ElemPair{x, y};
          break;
        }
      }
    }
    verdict.holds = !verdict.witness;
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // Instance checks
  ////////////////////////////////////////////////////////////////////////

  char tag(Condition c) {
    return static_cast<char>('a' + static_cast<int>(c));
  }

  Condition condition_from_tag(char c) {
    if (c < 'a' || c > 'e') {
      throw Error(std::string("unknown condition '") + c + "'");
    }
    return static_cast<Condition>(c - 'a');
  }

  std::string ConditionFailure::describe(Condition c) const {
    std::ostringstream out;
    out << "f=" << map_string(f);
    switch (c) {
      case Condition::a:
      case Condition::b:
        out << " at (" << first << "," << second << ")";
        break;
      case Condition::c:
        out << " at x=" << first;
        break;
      case Condition::d:
        out << " a=" << map_string(*left) << " b=" << map_string(*right)
            << " at u=" << first;
        break;
      case Condition::e:
        out << " x=" << map_string(*left) << " at u=" << first;
        break;
    }
    return out.str();
  }

  bool reverify(Condition c, ConditionFailure const& failure) {
    auto const& f     = failure.f;
    std::size_t right = failure.right_size;
    if (right == 0 || f.source()->size() % right != 0) {
      return false;
    }
    std::size_t left = f.source()->size() / right;
    auto        enc  = [right](Elem i, Elem j) {
      return static_cast<Elem>(i * right + j);
    };
    switch (c) {
      case Condition::a:
      case Condition::b:
      case Condition::c: {
        for (Elem x = 0; x < left; ++x) {
          if (f(enc(x, 0)) != 0) {
            return false;
          }
        }
        if (c == Condition::c) {
          Elem x = failure.first;
          return f(enc(x, x)) != f(enc(0, x));
        }
        return f(enc(failure.first, failure.second))
               != f(enc(0, failure.second));
      }
      case Condition::d:
      case Condition::e: {
        if (!failure.left) {
          return false;
        }
        auto const& a = *failure.left;
        auto const& b = c == Condition::d ? *failure.right : *failure.left;
        for (Elem u = 0; u < a.source()->size(); ++u) {
          if (f(enc(a(u), 0)) != 0) {
            return false;
          }
        }
        Elem u = failure.first;
        return f(enc(a(u), b(u))) != f(enc(0, b(u)));
      }
    }
    return false;
  }

  ConditionReport check_condition_a(AlgebraPtr const&              a,
                                    AlgebraPtr const&              b,
                                    std::vector<AlgebraPtr> const& targets,
                                    Caps const&                    caps) {
    return check_quotient_law(Condition::a, a, b, targets, caps);
  }

  ConditionReport check_condition_b(AlgebraPtr const&              x,
                                    std::vector<AlgebraPtr> const& targets,
                                    Caps const&                    caps) {
    return check_quotient_law(Condition::b, x, x, targets, caps);
  }

  ConditionReport check_condition_c(AlgebraPtr const&              x,
                                    std::vector<AlgebraPtr> const& targets,
                                    Caps const&                    caps) {
    auto p = product(x, x);
    require_size(p.algebra->size(), caps.hom_src, "domain " + p.algebra->name());
    require_targets(p.algebra, targets, caps);
    ConditionReport report{Condition::c, 0, {}};
    for (auto const& c : targets) {
      for_each_homomorphism(p.algebra, c, {}, [&](Homomorphism const& f) {
        ++report.instances;
        for (Elem e = 0; e < x->size(); ++e) {
          if (f(p.encode(e, 0)) != 0) {
            return true;
          }
        }
        for (Elem e = 1; e < x->size(); ++e) {
          if (f(p.encode(e, e)) != f(p.encode(0, e))) {
            report.failures.push_back(
                {f, std::nullopt, std::nullopt, e, 0, x->size()});
            break;
          }
        }
        return true;
      });
    }
    return report;
  }

  ConditionReport check_condition_d_instances(
      AlgebraPtr const&              a,
      AlgebraPtr const&              b,
      std::vector<AlgebraPtr> const& targets,
      std::vector<AlgebraPtr> const& parameters,
      Caps const&                    caps) {
    auto p = product(a, b);
    require_size(p.algebra->size(), caps.hom_src, "domain " + p.algebra->name());
    require_targets(p.algebra, targets, caps);
    auto to_a = homs_from(parameters, a, caps);
    auto to_b = homs_from(parameters, b, caps);

    ConditionReport report{Condition::d, 0, {}};
    for (auto const& c : targets) {
      for_each_homomorphism(p.algebra, c, {}, [&](Homomorphism const& f) {
        for (std::size_t k = 0; k < parameters.size(); ++k) {
          std::size_t const usize = parameters[k]->size();
          for (auto const& ha : to_a[k]) {
            bool hypothesis = true;
            for (Elem u = 0; u < usize && hypothesis; ++u) {
              hypothesis = f(p.encode(ha(u), 0)) == 0;
            }
            report.instances += to_b[k].size();
            if (!hypothesis) {
              continue;
            }
            for (auto const& hb : to_b[k]) {
              for (Elem u = 0; u < usize; ++u) {
                if (f(p.encode(ha(u), hb(u))) != f(p.encode(0, hb(u)))) {
                  report.failures.push_back({f, ha, hb, u, 0, b->size()});
                  break;
                }
              }
            }
          }
        }
        return true;
      });
    }
    return report;
  }

  ConditionReport check_condition_e_instances(
      AlgebraPtr const&              x,
      std::vector<AlgebraPtr> const& targets,
      std::vector<AlgebraPtr> const& parameters,
      Caps const&                    caps) {
    auto p = product(x, x);
    require_size(p.algebra->size(), caps.hom_src, "domain " + p.algebra->name());
    require_targets(p.algebra, targets, caps);
    auto to_x = homs_from(parameters, x, caps);

    ConditionReport report{Condition::e, 0, {}};
    for (auto const& c : targets) {
      for_each_homomorphism(p.algebra, c, {}, [&](Homomorphism const& f) {
        for (std::size_t k = 0; k < parameters.size(); ++k) {
          std::size_t const usize = parameters[k]->size();
          for (auto const& hx : to_x[k]) {
            ++report.instances;
            bool hypothesis = true;
            for (Elem u = 0; u < usize && hypothesis; ++u) {
              hypothesis = f(p.encode(hx(u), 0)) == 0;
            }
            if (!hypothesis) {
              continue;
            }
            for (Elem u = 0; u < usize; ++u) {
              if (f(p.encode(hx(u), hx(u))) != f(p.encode(0, hx(u)))) {
                report.failures.push_back(
                    {f, hx, std::nullopt, u, 0, x->size()});
                break;
              }
            }
          }
        }
        return true;
      });
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence-lattice checks
  ////////////////////////////////////////////////////////////////////////

  ShiftingVerdict shifting_shape_check(AlgebraPtr const& a,
                                       AlgebraPtr const& b,
                                       Caps const&       caps) {
    require_same_signature(*a, *b);
    require_size(a->size() * b->size(), caps.lattice, a->name() + "x" + b->name());
    auto            p = product(a, b);
    ShiftingVerdict verdict;
    verdict.holds = true;
    for (auto const& theta : all_congruences(*p.algebra, caps)) {
      ++verdict.congruences;
      bool hypothesis = true;
      for (Elem x = 1; x < a->size() && hypothesis; ++x) {
        hypothesis = theta.related(p.encode(x, 0), 0);
      }
      if (!hypothesis) {
        continue;
      }
      for (Elem x = 1; x < a->size() && verdict.holds; ++x) {
        for (Elem y = 0; y < b->size(); ++y) {
          if (!theta.related(p.encode(x, y), p.encode(0, y))) {
            verdict.holds   = false;
            verdict.theta   = theta;
            verdict.witness = ElemPair{x, y};
            break;
          }
        }
      }
      if (!verdict.holds) {
        break;
      }
    }
    return verdict;
  }

  CentralicReport centralic_check(AlgebraPtr const& a,
                                  AlgebraPtr const& b,
                                  Caps const&       caps) {
    require_same_signature(*a, *b);
    require_size(a->size() * b->size(), caps.lattice, a->name() + "x" + b->name());
    auto            p = product(a, b);
    CentralicReport report;
    for (auto const& theta : all_congruences(*p.algebra, caps)) {
      ++report.congruences;
      bool first = true;
      for (Elem x = 1; x < a->size(); ++x) {
        for (Elem y = 0; y < x; ++y) {
          if (!theta.related(p.encode(x, 0), p.encode(y, 0))) {
            continue;
          }
          for (Elem z = 1; z < b->size(); ++z) {
            if (!theta.related(p.encode(x, z), p.encode(y, z))) {
              ++report.violations;
              if (first) {
                report.failures.push_back({theta, x, y, z});
                first = false;
              }
            }
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cross-checks
  ////////////////////////////////////////////////////////////////////////

  CrossCheckReport cross_check_conditions(std::vector<AlgebraPtr> const& catalog,
                                          Caps const&                    caps) {
    CrossCheckReport report;
    auto             same_sig = [&](AlgebraPtr const& x) {
      std::vector<AlgebraPtr> out;
      for (auto const& y : catalog) {
        if (x->signature() == y->signature()) {
          out.push_back(y);
        }
      }
      return out;
    };

    for (auto const& a : catalog) {
      auto family = same_sig(a);
      for (auto const& b : family) {
        ++report.pairs;
        std::string const pair = "(" + a->name() + "," + b->name() + ")";
        std::optional<NpVerdict> np;
        try {
          np = check_np_pair(a, b, caps);
        } catch (CapExceeded const&) {
          ++report.skipped;
          continue;
        }
        report.np_holding += np->holds;

        if (a->size() * b->size() <= caps.lattice) {
          auto shifting = shifting_shape_check(a, b, caps);
          ++report.shifting_pairs;
          if (shifting.holds != np->holds) {
            report.discrepancies.push_back(
                "(ii) " + pair + ": shifting check and cg check disagree");
          }
          auto centralic = centralic_check(a, b, caps);
          ++report.centralic_pairs;
          if (centralic.holds() && !np->holds) {
            report.discrepancies.push_back(
                "(iii) " + pair + ": centralic but normal projections fail");
          }
        } else {
          ++report.skipped;
        }

        if (!np->holds) {
          continue;
        }
        std::vector<AlgebraPtr> targets, parameters;
        for (auto const& c : family) {
          if (c->size() <= caps.hom_tgt) {
            targets.push_back(c);
          }
          if (c->size() <= caps.hom_src && c->size() * c->size() <= caps.cg
              && check_np_pair(c, c, caps).holds) {
            parameters.push_back(c);
          }
        }
        try {
          auto d = check_condition_d_instances(a, b, targets, parameters, caps);
          report.d_instances += d.instances;
          for (auto const& failure : d.failures) {
            report.discrepancies.push_back("(i) " + pair + ": "
                                           + failure.describe(Condition::d));
          }
        } catch (CapExceeded const&) {
          ++report.skipped;
        }
      }
    }
    return report;
  }

}  // namespace abelia
