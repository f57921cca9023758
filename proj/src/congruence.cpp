#include "abelia/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "abelia/error.hpp"

namespace abelia {

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  Congruence::Congruence(std::vector<Elem> rep) : _rep(std::move(rep)) {
    for (std::size_t x = 0; x < _rep.size(); ++x) {
      if (_rep[x] > x || _rep[_rep[x]] != _rep[x]) {
        throw Error("representative table is not in least-member form");
      }
    }
  }

  Congruence Congruence::discrete(std::size_t n) {
    std::vector<Elem> rep(n);
    std::iota(rep.begin(), rep.end(), Elem(0));
    return Congruence(std::move(rep));
  }

  Congruence Congruence::all(std::size_t n) {
    return Congruence(std::vector<Elem>(n, 0));
  }

  std::size_t Congruence::block_count() const {
    std::size_t count = 0;
    for (std::size_t x = 0; x < _rep.size(); ++x) {
      count += _rep[x] == x;
    }
    return count;
  }

  std::vector<std::vector<Elem>> Congruence::blocks() const {
    std::vector<std::vector<Elem>> out;
    std::vector<std::size_t>       slot(_rep.size());
    for (std::size_t x = 0; x < _rep.size(); ++x) {
      if (_rep[x] == x) {
        slot[x] = out.size();
        out.emplace_back();
      }
      out[slot[_rep[x]]].push_back(static_cast<Elem>(x));
    }
    return out;
  }

  bool Congruence::contains(Congruence const& finer) const {
    if (finer.size() != size()) {
      return false;
    }
    for (std::size_t x = 0; x < size(); ++x) {
      if (!related(static_cast<Elem>(x), finer._rep[x])) {
        return false;
      }
    }
    return true;
  }

  std::string Congruence::to_string() const {
    std::ostringstream out;
    out << "[";
    bool first_block = true;
    for (auto const& block : blocks()) {
      out << (first_block ? "[" : ",[");
      first_block = false;
      for (std::size_t i = 0; i < block.size(); ++i) {
        out << (i == 0 ? "" : ",") << block[i];
      }
      out << "]";
    }
    out << "]";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure machinery
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), Elem(0));
      }

      explicit UnionFind(Congruence const& theta)
          : _parent(theta.representatives()) {}

      Elem find(Elem x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      bool unite(Elem x, Elem y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        return true;
      }

      Congruence canonical() {
        std::vector<Elem> rep(_parent.size());
        for (std::size_t x = 0; x < rep.size(); ++x) {
          rep[x] = find(static_cast<Elem>(x));
        }
        // Roots are always the least member since unite keeps the smaller.
        return Congruence(std::move(rep));
      }

     private:
      std::vector<Elem> _parent;
    };

    // Worklist closure: for each merged pair (a, b) and each basic
    // translation t (an operation with all but one argument fixed), merge
    // t(a) with t(b).  The equivalence generated by the processed pairs is
    // then compatible with every operation.
    void close(FiniteAlgebra const&   a,
               UnionFind&             uf,
               std::vector<ElemPair>& work) {
      std::size_t const n   = a.size();
      auto const&       sig = a.signature();
      while (!work.empty()) {
        auto [x, y] = work.back();
        work.pop_back();
        for (std::size_t op = 0; op < sig.size(); ++op) {
          unsigned k = sig[op].arity;
          if (k == 0) {
            continue;
          }
          auto        table = a.table(op);
          std::size_t high  = 1;  // n^i
          std::size_t low   = *table_rows(n, k - 1);
          for (unsigned i = 0; i < k; ++i) {
            // row = h * n^(k-i) + e * low + l with low = n^(k-1-i)
            for (std::size_t h = 0; h < high; ++h) {
              std::size_t base = h * low * n;
              for (std::size_t l = 0; l < low; ++l) {
                Elem fx = table[base + x * low + l];
                Elem fy = table[base + y * low + l];
                if (uf.unite(fx, fy)) {
                  work.emplace_back(fx, fy);
                }
              }
            }
            high *= n;
            low /= n;
          }
        }
      }
    }

    void check_pairs(FiniteAlgebra const& a, std::vector<ElemPair> const& pairs) {
      for (auto const& [x, y] : pairs) {
        if (x >= a.size() || y >= a.size()) {
          throw Error("pair (" + std::to_string(x) + "," + std::to_string(y)
                      + ") out of range for " + a.name());
        }
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  bool is_congruence(FiniteAlgebra const& a, Congruence const& theta) {
    if (theta.size() != a.size()) {
      return false;
    }
    std::size_t const n   = a.size();
    auto const&       sig = a.signature();
    // Compatibility with each argument position separately suffices.
    for (std::size_t op = 0; op < sig.size(); ++op) {
      unsigned k = sig[op].arity;
      if (k == 0) {
        continue;
      }
      auto        table = a.table(op);
      std::size_t high  = 1;
      std::size_t low   = *table_rows(n, k - 1);
      for (unsigned i = 0; i < k; ++i) {
        for (std::size_t x = 0; x < n; ++x) {
          Elem rx = theta.representative(static_cast<Elem>(x));
          if (rx == x) {
            continue;
          }
          for (std::size_t h = 0; h < high; ++h) {
            std::size_t base = h * low * n;
            for (std::size_t l = 0; l < low; ++l) {
              if (!theta.related(table[base + x * low + l],
                                 table[base + rx * low + l])) {
                return false;
              }
            }
          }
        }
        high *= n;
        low /= n;
      }
    }
    return true;
  }

  Congruence kernel_congruence(Homomorphism const& f) {
    return Congruence::from_labels(f.map());
  }

  Congruence cg(FiniteAlgebra const& a, std::vector<ElemPair> const& pairs) {
    check_pairs(a, pairs);
    UnionFind             uf(a.size());
    std::vector<ElemPair> work;
    for (auto const& [x, y] : pairs) {
      if (uf.unite(x, y)) {
        work.emplace_back(x, y);
      }
    }
    close(a, uf, work);
    return uf.canonical();
  }

  Congruence join(FiniteAlgebra const& a,
                  Congruence const&    x,
                  Congruence const&    y) {
    if (x.size() != a.size() || y.size() != a.size()) {
      throw Error("join: carrier mismatch");
    }
    std::vector<ElemPair> pairs;
    for (std::size_t e = 0; e < a.size(); ++e) {
      auto elem = static_cast<Elem>(e);
      if (x.representative(elem) != elem) {
        pairs.emplace_back(elem, x.representative(elem));
      }
      if (y.representative(elem) != elem) {
        pairs.emplace_back(elem, y.representative(elem));
      }
    }
    return cg(a, pairs);
  }

  Congruence meet(Congruence const& x, Congruence const& y) {
    if (x.size() != y.size()) {
      throw Error("meet: carrier mismatch");
    }
    std::vector<std::pair<Elem, Elem>> labels(x.size());
    for (std::size_t e = 0; e < x.size(); ++e) {
      labels[e] = {x.representative(static_cast<Elem>(e)),
                   y.representative(static_cast<Elem>(e))};
    }
    return Congruence::from_labels(labels);
  }

  std::vector<Congruence> all_congruences(FiniteAlgebra const& a,
                                          Caps const&          caps) {
    std::size_t const n = a.size();
    if (n > caps.lattice) {
      throw CapExceeded("congruence lattice of " + a.name() + " (size "
                        + std::to_string(n) + ") exceeds the lattice cap "
                        + std::to_string(caps.lattice));
    }
    std::set<std::vector<Elem>> seen;
    std::vector<Congruence>     found;
    auto                        record = [&](Congruence theta) {
      if (seen.insert(theta.representatives()).second) {
        found.push_back(std::move(theta));
      }
    };

    record(Congruence::discrete(n));
    std::vector<ElemPair> principal_pairs;
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = x + 1; y < n; ++y) {
        principal_pairs.emplace_back(x, y);
        record(cg(a, {{x, y}}));
      }
    }
    // Every congruence is a join of principal ones, so joining each found
    // congruence with single generating pairs reaches the whole lattice.
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (auto const& [x, y] : principal_pairs) {
        if (found[i].related(x, y)) {
          continue;
        }
        UnionFind             uf(found[i]);
        std::vector<ElemPair> work{{x, y}};
        uf.unite(x, y);
        close(a, uf, work);
        record(uf.canonical());
      }
    }
    std::sort(found.begin(), found.end(), [](auto const& p, auto const& q) {
      auto bp = p.block_count(), bq = q.block_count();
      if (bp != bq) {
        return bp > bq;
      }
      return p.representatives() < q.representatives();
    });
    return found;
  }

}  // namespace abelia
