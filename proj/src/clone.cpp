#include "abelia/clone.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "abelia/error.hpp"

namespace abelia {

  ////////////////////////////////////////////////////////////////////////
  // Term
  ////////////////////////////////////////////////////////////////////////

  struct Term::Node {
    bool              variable = false;
    unsigned          index    = 0;
    std::size_t       op       = 0;
    std::string       name;
    std::vector<Term> args;
    std::size_t       size       = 1;
    std::size_t       operations = 0;
  };

  Term Term::variable(unsigned index) {
    auto node      = std::make_shared<Node>();
    node->variable = true;
    node->index    = index;
    return Term(std::move(node));
  }

  Term Term::apply(std::size_t op, std::string name, std::vector<Term> args) {
    auto node        = std::make_shared<Node>();
    node->op         = op;
    node->name       = std::move(name);
    node->operations = 1;
    for (auto const& t : args) {
      node->size += t.size();
      node->operations += t.operation_count();
    }
    node->args = std::move(args);
    return Term(std::move(node));
  }

  bool Term::is_variable() const {
    return _node->variable;
  }

  unsigned Term::variable_index() const {
    return _node->index;
  }

  std::size_t Term::op() const {
    return _node->op;
  }

  std::string const& Term::op_name() const {
    return _node->name;
  }

  std::vector<Term> const& Term::args() const {
    return _node->args;
  }

  std::size_t Term::size() const {
    return _node->size;
  }

  std::size_t Term::operation_count() const {
    return _node->operations;
  }

  Elem Term::evaluate(FiniteAlgebra const& a, std::span<Elem const> point) const {
    if (_node->variable) {
      return point[_node->index];
    }
    std::vector<Elem> values;
    values.reserve(_node->args.size());
    for (auto const& t : _node->args) {
      values.push_back(t.evaluate(a, point));
    }
    return a.apply(_node->op, values);
  }

  std::string Term::to_string() const {
    if (_node->variable) {
      return "x" + std::to_string(_node->index + 1);
    }
    if (_node->args.empty()) {
      return _node->name == Signature::zero_name ? "0" : _node->name;
    }
    std::string out = _node->name + "(";
    for (std::size_t i = 0; i < _node->args.size(); ++i) {
      out += (i == 0 ? "" : ", ") + _node->args[i].to_string();
    }
    return out + ")";
  }

  std::vector<Elem> term_table(FiniteAlgebra const& a,
                               Term const&          t,
                               unsigned             arity) {
    std::size_t const points = *table_rows(a.size(), arity);
    std::vector<Elem> table(points), point(arity);
    for (std::size_t p = 0; p < points; ++p) {
      std::size_t r = p;
      for (unsigned i = arity; i-- > 0;) {
        point[i] = static_cast<Elem>(r % a.size());
        r /= a.size();
      }
      table[p] = t.evaluate(a, point);
    }
    return table;
  }

  std::string to_string(SearchStatus status) {
    switch (status) {
      case SearchStatus::found:
        return "found";
      case SearchStatus::none:
        return "none";
      case SearchStatus::unknown:
        return "unknown";
    }
    return "unknown";
  }

  ////////////////////////////////////////////////////////////////////////
  // Term operation generation
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct TableHash {
      std::size_t operator()(std::vector<Elem> const& v) const noexcept {
        std::size_t h = v.size();
        for (Elem e : v) {
          h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };

    using TableIndex = std::unordered_map<std::vector<Elem>, std::size_t, TableHash>;

    std::vector<TermOp> atoms(FiniteAlgebra const& a, unsigned arity) {
      std::size_t const   points = *table_rows(a.size(), arity);
      auto const&         sig    = a.signature();
      std::vector<TermOp> out;
      for (unsigned i = 0; i < arity; ++i) {
        auto t = Term::variable(i);
        out.push_back({arity, term_table(a, t, arity), t});
      }
      for (std::size_t op = 0; op < sig.size(); ++op) {
        if (sig[op].arity == 0) {
          out.push_back({arity,
                         std::vector<Elem>(points, a.table(op)[0]),
                         Term::apply(op, sig[op].name, {})});
        }
      }
      return out;
    }

    std::vector<Elem> compose_tables(FiniteAlgebra const&            a,
                                     std::size_t                     op,
                                     std::vector<TermOp> const&      known,
                                     std::vector<std::size_t> const& args,
                                     std::size_t                     points) {
      std::vector<Elem> out(points), values(args.size());
      for (std::size_t p = 0; p < points; ++p) {
        for (std::size_t i = 0; i < args.size(); ++i) {
          values[i] = known[args[i]].table[p];
        }
        out[p] = a.apply(op, values);
      }
      return out;
    }

    std::vector<Term> witness_args(std::vector<TermOp> const&      known,
                                   std::vector<std::size_t> const& args) {
      std::vector<Term> out;
      out.reserve(args.size());
      for (auto i : args) {
        out.push_back(known[i].witness);
      }
      return out;
    }

    // Round-based closure.  Returns every distinct table (with some
    // witness) and whether the fixpoint was reached within `cap`.
    std::pair<std::vector<TermOp>, bool> closure(FiniteAlgebra const& a,
                                                 unsigned             arity,
                                                 std::size_t          cap) {
      std::size_t const   points = *table_rows(a.size(), arity);
      auto const&         sig    = a.signature();
      std::vector<TermOp> known;
      TableIndex          index;
      for (auto& t : atoms(a, arity)) {
        if (index.try_emplace(t.table, known.size()).second) {
          if (known.size() == cap) {
            return {std::move(known), false};
          }
          known.push_back(std::move(t));
        }
      }
      std::size_t fresh_from = 0;
      while (true) {
        std::size_t const count = known.size();
        for (std::size_t op = 0; op < sig.size(); ++op) {
          unsigned m = sig[op].arity;
          if (m == 0) {
            continue;
          }
          auto combos = table_rows(count, m);
          if (!combos) {
            return {std::move(known), false};
          }
          std::vector<std::size_t> args(m);
          for (std::size_t c = 0; c < *combos; ++c) {
            std::size_t r = c;
            for (unsigned i = m; i-- > 0;) {
              args[i] = r % count;
              r /= count;
            }
            if (*std::max_element(args.begin(), args.end()) < fresh_from) {
              continue;
            }
            auto table = compose_tables(a, op, known, args, points);
            if (index.try_emplace(table, known.size()).second) {
              if (known.size() == cap) {
                return {std::move(known), false};
              }
              known.push_back({arity,
                               std::move(table),
                               Term::apply(op, sig[op].name,
                                           witness_args(known, args))});
            }
          }
        }
        if (known.size() == count) {
          return {std::move(known), true};
        }
        fresh_from = count;
      }
    }

  }  // namespace

  TermOpSet generate_term_ops(FiniteAlgebra const& a,
                              unsigned             arity,
                              std::size_t          cap) {
    if (arity == 0) {
      throw Error("generate_term_ops needs arity at least 1");
    }
    auto points = table_rows(a.size(), arity);
    if (!points || *points > (std::size_t(1) << 20)) {
      throw CapExceeded("term operation tables of arity "
                        + std::to_string(arity) + " over " + a.name()
                        + " are too large");
    }
    auto [all, complete] = closure(a, arity, cap);
    if (!complete) {
      return {std::move(all), false};
    }

    // Breadth-first by term size.  Within one size: operations in signature
    // order, then argument tuples lexicographically by discovery index.
    auto const&         sig = a.signature();
    std::vector<TermOp> found;
    TableIndex          index;
    for (auto& t : atoms(a, arity)) {
      if (index.try_emplace(t.table, found.size()).second) {
        found.push_back(std::move(t));
      }
    }
    std::size_t const target = all.size();
    // level_end[s] = number of entries with witness size <= s
    std::vector<std::size_t> level_end{0, found.size()};

    std::vector<std::size_t> args;
    for (std::size_t size = 2; found.size() < target; ++size) {
      std::size_t const usable = found.size();
      for (std::size_t op = 0; op < sig.size() && found.size() < target; ++op) {
        unsigned m = sig[op].arity;
        if (m == 0 || m > size - 1) {
          continue;
        }
        args.assign(m, 0);
        // Fills argument j onwards with witness sizes summing to budget.
        std::function<void(unsigned, std::size_t)> fill = [&](unsigned    j,
                                                               std::size_t budget) {
          if (j + 1 == m) {
            if (budget >= level_end.size()) {
              return;
            }
            for (std::size_t e = level_end[budget - 1]; e < level_end[budget]; ++e) {
              args[j]    = e;
              auto table = compose_tables(a, op, found, args, *points);
              if (index.try_emplace(table, found.size()).second) {
                found.push_back({arity,
                                 std::move(table),
                                 Term::apply(op, sig[op].name,
                                             witness_args(found, args))});
              }
            }
            return;
          }
          std::size_t const rest = m - j - 1;
          for (std::size_t e = 0; e < usable; ++e) {
            std::size_t s = found[e].witness.size();
            if (s + rest > budget) {
              break;
            }
            args[j] = e;
            fill(j + 1, budget - s);
          }
        };
        fill(0, size - 1);
      }
      level_end.push_back(found.size());
    }
    return {std::move(found), true};
  }

  ////////////////////////////////////////////////////////////////////////
  // Special terms
  ////////////////////////////////////////////////////////////////////////

  namespace {

    template <typename Laws>
    TermSearch find_binary_term(FiniteAlgebra const& a,
                                Caps const&          caps,
                                Laws&&               laws) {
      auto ops = generate_term_ops(a, 2, caps.term_ops);
      for (auto& op : ops.ops) {
        if (laws(op.table)) {
          return {SearchStatus::found, std::move(op), ops.ops.size()};
        }
      }
      return {ops.complete ? SearchStatus::none : SearchStatus::unknown,
              std::nullopt,
              ops.ops.size()};
    }

  }  // namespace

  TermSearch find_subtraction_term(FiniteAlgebra const& a, Caps const& caps) {
    std::size_t const n = a.size();
    return find_binary_term(a, caps, [n](std::vector<Elem> const& s) {
      for (std::size_t x = 0; x < n; ++x) {
        if (s[x * n + x] != 0 || s[x * n] != x) {
          return false;
        }
      }
      return true;
    });
  }

  TermSearch find_unit_term(FiniteAlgebra const& a, Caps const& caps) {
    std::size_t const n = a.size();
    return find_binary_term(a, caps, [n](std::vector<Elem> const& p) {
      for (std::size_t x = 0; x < n; ++x) {
        if (p[x * n] != x || p[x] != x) {
          return false;
        }
      }
      return true;
    });
  }

}  // namespace abelia
