#include "abelia/algebra.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

#include "abelia/error.hpp"

namespace abelia {

  namespace {

    constexpr Elem unset = std::numeric_limits<Elem>::max();

    struct VectorHash {
      std::size_t operator()(std::vector<Elem> const& v) const noexcept {
        std::size_t h = v.size();
        for (Elem e : v) {
          h ^= e + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };

    // Flat row index of an argument tuple.
    std::size_t row_of(std::span<Elem const> args, std::size_t n) {
      std::size_t row = 0;
      for (Elem a : args) {
        row = row * n + a;
      }
      return row;
    }

    void decode_row(std::size_t row, std::size_t n, std::span<Elem> out) {
      for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<Elem>(row % n);
        row /= n;
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Signature
  ////////////////////////////////////////////////////////////////////////

  Signature::Signature() : Signature(std::vector<OpSymbol>{}) {}

  Signature::Signature(std::vector<OpSymbol> ops) : _ops(std::move(ops)) {
    auto zero = std::find_if(_ops.begin(), _ops.end(), [](auto const& op) {
      return op.name == zero_name;
    });
    if (zero == _ops.end()) {
      _ops.push_back({std::string(zero_name), 0});
    } else if (zero->arity != 0) {
      throw Error("operation \"zero\" must be nullary");
    }
    std::sort(_ops.begin(), _ops.end(), [](auto const& x, auto const& y) {
      return x.name < y.name;
    });
    for (std::size_t i = 0; i < _ops.size(); ++i) {
      if (_ops[i].name.empty()) {
        throw Error("operation with empty name");
      }
      if (i > 0 && _ops[i].name == _ops[i - 1].name) {
        throw Error("duplicate operation \"" + _ops[i].name + "\"");
      }
      if (_ops[i].name == zero_name) {
        _zero = i;
      }
    }
  }

  std::optional<std::size_t> Signature::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < _ops.size(); ++i) {
      if (_ops[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::string Signature::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < _ops.size(); ++i) {
      out += (i == 0 ? "" : ", ") + _ops[i].name + "/"
             + std::to_string(_ops[i].arity);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteAlgebra
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> table_rows(std::size_t n, unsigned k) {
    std::size_t rows = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (n != 0 && rows > std::numeric_limits<std::size_t>::max() / n) {
        return std::nullopt;
      }
      rows *= n;
    }
    return rows;
  }

  FiniteAlgebra::FiniteAlgebra(std::string                    name,
                               std::size_t                    size,
                               Signature                      signature,
                               std::vector<std::vector<Elem>> tables)
      : _name(std::move(name)),
        _size(size),
        _signature(std::move(signature)),
        _tables(std::move(tables)) {
    if (_size == 0) {
      throw Error("algebra \"" + _name + "\" has an empty carrier");
    }
    if (_size > std::numeric_limits<Elem>::max() / 2) {
      throw Error("algebra \"" + _name + "\" is too large");
    }
    if (_tables.size() != _signature.size()) {
      throw Error("algebra \"" + _name + "\": expected "
                  + std::to_string(_signature.size()) + " tables, got "
                  + std::to_string(_tables.size()));
    }
    for (std::size_t op = 0; op < _tables.size(); ++op) {
      auto const& sym  = _signature[op];
      auto        rows = table_rows(_size, sym.arity);
      if (!rows || *rows > (std::size_t(1) << 28)) {
        throw Error("table of operation \"" + sym.name + "\" is too large");
      }
      if (_tables[op].size() != *rows) {
        throw Error("table of operation \"" + sym.name + "\" has "
                    + std::to_string(_tables[op].size())
                    + " entries, expected " + std::to_string(*rows));
      }
      for (Elem v : _tables[op]) {
        if (v >= _size) {
          throw Error("table of operation \"" + sym.name
                      + "\" has out-of-range entry " + std::to_string(v));
        }
      }
    }
    if (_tables[_signature.zero_index()][0] != 0) {
      throw Error("the zero of algebra \"" + _name + "\" must be element 0");
    }
  }

  Elem FiniteAlgebra::apply(std::size_t op, std::span<Elem const> args) const {
    return _tables[op][row_of(args, _size)];
  }

  bool FiniteAlgebra::same_structure(FiniteAlgebra const& that) const {
    return _size == that._size && _signature == that._signature
           && _tables == that._tables;
  }

  bool same_algebra(AlgebraPtr const& a, AlgebraPtr const& b) {
    return a == b || (a && b && a->same_structure(*b));
  }

  void require_same_signature(FiniteAlgebra const& a, FiniteAlgebra const& b) {
    if (!(a.signature() == b.signature())) {
      throw SignatureMismatch("signature mismatch: " + a.name() + " has "
                              + a.signature().to_string() + ", " + b.name()
                              + " has " + b.signature().to_string());
    }
  }

  AlgebraPtr make_algebra(std::string                    name,
                          std::size_t                    size,
                          std::vector<OpSymbol>          ops,
                          std::vector<std::vector<Elem>> tables) {
    if (ops.size() != tables.size()) {
      throw Error("make_algebra: one table per operation required");
    }
    Signature                      sig(ops);
    std::vector<std::vector<Elem>> sorted(sig.size());
    for (std::size_t i = 0; i < ops.size(); ++i) {
      sorted[*sig.index_of(ops[i].name)] = std::move(tables[i]);
    }
    if (sorted[sig.zero_index()].empty()) {
      sorted[sig.zero_index()] = {0};
    }
    return std::make_shared<FiniteAlgebra const>(
        std::move(name), size, std::move(sig), std::move(sorted));
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism
  ////////////////////////////////////////////////////////////////////////

  Homomorphism::Homomorphism(AlgebraPtr        source,
                             AlgebraPtr        target,
                             std::vector<Elem> map)
      : _source(std::move(source)),
        _target(std::move(target)),
        _map(std::move(map)) {
    if (!_source || !_target) {
      throw Error("homomorphism with null endpoint");
    }
    if (_map.size() != _source->size()) {
      throw Error("map of length " + std::to_string(_map.size())
                  + " on a carrier of size "
                  + std::to_string(_source->size()));
    }
    for (Elem v : _map) {
      if (v >= _target->size()) {
        throw Error("map value " + std::to_string(v) + " out of range");
      }
    }
  }

  bool Homomorphism::is_zero() const {
    return std::all_of(_map.begin(), _map.end(), [](Elem v) { return v == 0; });
  }

  bool Homomorphism::operator==(Homomorphism const& that) const {
    return _map == that._map && same_algebra(_source, that._source)
           && same_algebra(_target, that._target);
  }

  bool is_homomorphism(Homomorphism const& h) {
    auto const& src = *h.source();
    auto const& tgt = *h.target();
    if (!(src.signature() == tgt.signature())) {
      return false;
    }
    std::vector<Elem> args, image;
    for (std::size_t op = 0; op < src.signature().size(); ++op) {
      unsigned k    = src.arity(op);
      auto     rows = src.table(op).size();
      args.resize(k);
      image.resize(k);
      for (std::size_t row = 0; row < rows; ++row) {
        decode_row(row, src.size(), args);
        for (unsigned i = 0; i < k; ++i) {
          image[i] = h(args[i]);
        }
        if (h(src.table(op)[row]) != tgt.apply(op, image)) {
          return false;
        }
      }
    }
    return true;
  }

  Homomorphism zero_hom(AlgebraPtr const& source, AlgebraPtr const& target) {
    require_same_signature(*source, *target);
    return Homomorphism(source, target, std::vector<Elem>(source->size(), 0));
  }

  Homomorphism identity(AlgebraPtr const& a) {
    std::vector<Elem> map(a->size());
    for (std::size_t i = 0; i < map.size(); ++i) {
      map[i] = static_cast<Elem>(i);
    }
    return Homomorphism(a, a, std::move(map));
  }

  Homomorphism compose(Homomorphism const& g, Homomorphism const& f) {
    if (!same_algebra(f.target(), g.source())) {
      throw Error("compose: target of " + f.target()->name()
                  + " does not match source " + g.source()->name());
    }
    std::vector<Elem> map(f.source()->size());
    for (std::size_t i = 0; i < map.size(); ++i) {
      map[i] = g(f(static_cast<Elem>(i)));
    }
    return Homomorphism(f.source(), g.target(), std::move(map));
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  ProductAlgebra product(AlgebraPtr const& a, AlgebraPtr const& b) {
    require_same_signature(*a, *b);
    std::size_t const na = a->size(), nb = b->size(), n = na * nb;
    auto const&       sig = a->signature();

    std::vector<std::vector<Elem>> tables(sig.size());
    std::vector<Elem>              args, left, right;
    for (std::size_t op = 0; op < sig.size(); ++op) {
      unsigned k    = sig[op].arity;
      auto     rows = table_rows(n, k);
      if (!rows || *rows > (std::size_t(1) << 28)) {
        throw CapExceeded("product " + a->name() + "x" + b->name()
                          + " has tables that are too large");
      }
      args.resize(k);
      left.resize(k);
      right.resize(k);
      tables[op].resize(*rows);
      for (std::size_t row = 0; row < *rows; ++row) {
        decode_row(row, n, args);
        for (unsigned i = 0; i < k; ++i) {
          left[i]  = static_cast<Elem>(args[i] / nb);
          right[i] = static_cast<Elem>(args[i] % nb);
        }
        tables[op][row] = static_cast<Elem>(a->apply(op, left) * nb
                                            + b->apply(op, right));
      }
    }
    auto ab = std::make_shared<FiniteAlgebra const>(
        a->name() + "x" + b->name(), n, sig, std::move(tables));

    std::vector<Elem> p1(n), p2(n), i1(na), i2(nb);
    for (std::size_t e = 0; e < n; ++e) {
      p1[e] = static_cast<Elem>(e / nb);
      p2[e] = static_cast<Elem>(e % nb);
    }
    for (std::size_t x = 0; x < na; ++x) {
      i1[x] = static_cast<Elem>(x * nb);
    }
    for (std::size_t y = 0; y < nb; ++y) {
      i2[y] = static_cast<Elem>(y);
    }
    return ProductAlgebra{ab,
                          a,
                          b,
                          Homomorphism(ab, a, std::move(p1)),
                          Homomorphism(ab, b, std::move(p2)),
                          Homomorphism(a, ab, std::move(i1)),
                          Homomorphism(b, ab, std::move(i2))};
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphism enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {

    // Backtracking over source elements in increasing order, candidate
    // values in increasing order.  Whenever every argument of a table row
    // is mapped, the image of the row's result is forced.
    class HomSearch {
     public:
      HomSearch(AlgebraPtr source, AlgebraPtr target)
          : _source(std::move(source)),
            _target(std::move(target)),
            _map(_source->size(), unset),
            _occurrences(_source->size()) {
        auto const& src = *_source;
        for (std::size_t op = 0; op < src.signature().size(); ++op) {
          unsigned k = src.arity(op);
          if (k == 0) {
            continue;
          }
          auto              rows = src.table(op).size();
          std::vector<Elem> args(k);
          for (std::size_t row = 0; row < rows; ++row) {
            decode_row(row, src.size(), args);
            std::sort(args.begin(), args.end());
            auto last = std::unique(args.begin(), args.end());
            for (auto it = args.begin(); it != last; ++it) {
              _occurrences[*it].push_back({op, row});
            }
          }
        }
      }

      void run(PartialMap const&                               pinned,
               std::function<bool(Homomorphism const&)> const& visit) {
        auto const& src = *_source;
        auto const& tgt = *_target;
        for (std::size_t op = 0; op < src.signature().size(); ++op) {
          if (src.arity(op) == 0
              && !assign(src.table(op)[0], tgt.table(op)[0])) {
            return;
          }
        }
        for (auto const& [x, v] : pinned) {
          if (x >= src.size() || v >= tgt.size()) {
            throw Error("pinned entry out of range");
          }
          if (!assign(x, v)) {
            return;
          }
        }
        _visit = &visit;
        search(0);
      }

     private:
      struct Occurrence {
        std::size_t op;
        std::size_t row;
      };

      bool assign(Elem x, Elem v) {
        if (_map[x] != unset) {
          return _map[x] == v;
        }
        _map[x] = v;
        _trail.push_back(x);
        std::size_t head = _trail.size() - 1;
        while (head < _trail.size()) {
          if (!check(_trail[head++])) {
            return false;
          }
        }
        return true;
      }

      // Checks every row containing x whose arguments are all mapped,
      // forcing images of results.  New assignments go on the trail.
      bool check(Elem x) {
        auto const& src = *_source;
        auto const& tgt = *_target;
        for (auto const& [op, row] : _occurrences[x]) {
          unsigned k = src.arity(op);
          _args.resize(k);
          decode_row(row, src.size(), _args);
          bool complete = true;
          for (auto& a : _args) {
            if (_map[a] == unset) {
              complete = false;
              break;
            }
            a = _map[a];
          }
          if (!complete) {
            continue;
          }
          Elem image  = tgt.apply(op, _args);
          Elem result = src.table(op)[row];
          if (_map[result] == unset) {
            _map[result] = image;
            _trail.push_back(result);
          } else if (_map[result] != image) {
            return false;
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          _map[_trail.back()] = unset;
          _trail.pop_back();
        }
      }

      // Returns false once the visitor asks to stop.
      bool search(Elem from) {
        while (from < _map.size() && _map[from] != unset) {
          ++from;
        }
        if (from == _map.size()) {
          return (*_visit)(Homomorphism(_source, _target, _map));
        }
        for (Elem v = 0; v < _target->size(); ++v) {
          std::size_t mark = _trail.size();
          bool        ok   = assign(from, v);
          bool        go   = !ok || search(from + 1);
          undo(mark);
          if (!go) {
            return false;
          }
        }
        return true;
      }

      AlgebraPtr                              _source;
      AlgebraPtr                              _target;
      std::vector<Elem>                       _map;
      std::vector<Elem>                       _trail;
      std::vector<std::vector<Occurrence>>    _occurrences;
      std::vector<Elem>                       _args;
      std::function<bool(Homomorphism const&)> const* _visit = nullptr;
    };

  }  // namespace

  void for_each_homomorphism(
      AlgebraPtr const&                               source,
      AlgebraPtr const&                               target,
      PartialMap const&                               pinned,
      std::function<bool(Homomorphism const&)> const& visit) {
    require_same_signature(*source, *target);
    HomSearch(source, target).run(pinned, visit);
  }

  std::vector<Homomorphism> enumerate_homomorphisms(AlgebraPtr const& source,
                                                    AlgebraPtr const& target,
                                                    PartialMap const& pinned) {
    std::vector<Homomorphism> out;
    for_each_homomorphism(source, target, pinned, [&](Homomorphism const& h) {
      out.push_back(h);
      return true;
    });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free algebras
  ////////////////////////////////////////////////////////////////////////

  FreeAlgebra free_algebra(AlgebraPtr const& a, unsigned k, Caps const& caps) {
    if (k == 0) {
      throw Error("free_algebra needs at least one generator");
    }
    auto positions = table_rows(a->size(), k);
    if (!positions || *positions > caps.free_positions) {
      throw CapExceeded("free algebra on " + std::to_string(k)
                        + " generators over " + a->name() + " needs "
                        + std::to_string(a->size()) + "^" + std::to_string(k)
                        + " positions, cap is "
                        + std::to_string(caps.free_positions));
    }
    std::size_t const p   = *positions;
    auto const&       sig = a->signature();

    std::vector<std::vector<Elem>> elems;
    std::unordered_map<std::vector<Elem>, Elem, VectorHash> index;
    auto insert = [&](std::vector<Elem> tuple) -> Elem {
      auto [it, fresh] = index.try_emplace(tuple, static_cast<Elem>(elems.size()));
      if (fresh) {
        if (elems.size() >= caps.free_carrier) {
          throw CapExceeded("free algebra on " + std::to_string(k)
                            + " generators over " + a->name()
                            + " exceeds the carrier cap "
                            + std::to_string(caps.free_carrier));
        }
        elems.push_back(std::move(tuple));
      }
      return it->second;
    };

    insert(std::vector<Elem>(p, 0));
    std::vector<Elem> generators;
    std::vector<Elem> point(k);
    for (unsigned g = 0; g < k; ++g) {
      std::vector<Elem> proj(p);
      for (std::size_t pos = 0; pos < p; ++pos) {
        decode_row(pos, a->size(), point);
        proj[pos] = point[g];
      }
      generators.push_back(insert(std::move(proj)));
    }
    for (std::size_t op = 0; op < sig.size(); ++op) {
      if (sig[op].arity == 0) {
        insert(std::vector<Elem>(p, a->table(op)[0]));
      }
    }

    // Semi-naive closure: each round applies every operation to argument
    // tuples that involve at least one element from the previous round.
    std::vector<Elem> args, idx;
    std::size_t       fresh_from = 0;
    while (true) {
      std::size_t const known = elems.size();
      for (std::size_t op = 0; op < sig.size(); ++op) {
        unsigned m = sig[op].arity;
        if (m == 0) {
          continue;
        }
        auto combos = table_rows(known, m);
        if (!combos) {
          throw CapExceeded("free algebra closure too large");
        }
        idx.assign(m, 0);
        args.resize(m);
        for (std::size_t c = 0; c < *combos; ++c) {
          decode_row(c, known, idx);
          if (*std::max_element(idx.begin(), idx.end()) < fresh_from) {
            continue;
          }
          std::vector<Elem> tuple(p);
          for (std::size_t pos = 0; pos < p; ++pos) {
            for (unsigned i = 0; i < m; ++i) {
              args[i] = elems[idx[i]][pos];
            }
            tuple[pos] = a->apply(op, args);
          }
          insert(std::move(tuple));
        }
      }
      if (elems.size() == known) {
        break;
      }
      fresh_from = known;
    }

    std::size_t const              n = elems.size();
    std::vector<std::vector<Elem>> tables(sig.size());
    for (std::size_t op = 0; op < sig.size(); ++op) {
      unsigned m    = sig[op].arity;
      auto     rows = table_rows(n, m);
      if (!rows || *rows > (std::size_t(1) << 24)) {
        throw CapExceeded("free algebra tables too large");
      }
      tables[op].resize(*rows);
      idx.assign(m, 0);
      args.resize(m);
      std::vector<Elem> tuple(p);
      for (std::size_t row = 0; row < *rows; ++row) {
        decode_row(row, n, idx);
        for (std::size_t pos = 0; pos < p; ++pos) {
          for (unsigned i = 0; i < m; ++i) {
            args[i] = elems[idx[i]][pos];
          }
          tuple[pos] = a->apply(op, args);
        }
        tables[op][row] = index.at(tuple);
      }
    }
    auto free = std::make_shared<FiniteAlgebra const>(
        "F" + std::to_string(k) + "(" + a->name() + ")",
        n,
        sig,
        std::move(tables));
    return FreeAlgebra{std::move(free), std::move(generators)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Split epimorphisms
  ////////////////////////////////////////////////////////////////////////

  std::optional<Homomorphism> factor_through_split_epi(Homomorphism const& f,
                                                       Homomorphism const& r,
                                                       Homomorphism const& s) {
    if (!same_algebra(f.source(), r.source())) {
      throw Error("factor_through_split_epi: f and r have different sources");
    }
    if (!same_algebra(s.source(), r.target())
        || !same_algebra(s.target(), r.source())) {
      throw Error("factor_through_split_epi: s is not opposite to r");
    }
    if (!(compose(r, s) == identity(r.target()))) {
      throw Error("factor_through_split_epi: r s is not the identity");
    }
    auto u = compose(f, s);
    if (!(compose(u, r) == f)) {
      return std::nullopt;
    }
    return u;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string_view trim(std::string_view s) {
      auto const ws = " \t\r\n";
      auto       b  = s.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return {};
      }
      return s.substr(b, s.find_last_not_of(ws) - b + 1);
    }

    std::vector<std::string_view> split(std::string_view s) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') {
          ++j;
        }
        if (j > i) {
          out.push_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    std::size_t parse_number(std::string_view tok, std::size_t line) {
      std::size_t value = 0;
      auto [ptr, ec]    = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected a number, got '" + std::string(tok) + "'");
      }
      return value;
    }

  }  // namespace

  AlgebraPtr parse_algebra(std::string_view text) {
    std::optional<std::string> name;
    std::optional<std::size_t> size;
    bool                       have_zero = false;

    std::vector<OpSymbol>          ops;
    std::vector<std::vector<Elem>> tables;
    std::size_t                    expected = 0;  // entries still owed
    std::size_t                    op_line  = 0;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      auto end = text.find('\n', pos);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      std::string_view line = text.substr(pos, end - pos);
      pos                   = end + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto toks = split(line);
      if (toks.empty()) {
        continue;
      }
      if (expected > 0) {
        for (auto tok : toks) {
          if (expected == 0) {
            throw ParseError(line_no,
                             "table of operation '" + ops.back().name
                                 + "' has too many entries");
          }
          auto v = parse_number(tok, line_no);
          if (v >= *size) {
            throw ParseError(line_no,
                             "table entry " + std::to_string(v)
                                 + " out of range for size "
                                 + std::to_string(*size));
          }
          tables.back().push_back(static_cast<Elem>(v));
          --expected;
        }
        continue;
      }
      auto const& kw = toks[0];
      if (kw == "algebra") {
        if (name) {
          throw ParseError(line_no, "duplicate 'algebra' line");
        }
        auto rest = trim(line.substr(line.find("algebra") + 7));
        if (rest.empty()) {
          throw ParseError(line_no, "'algebra' needs a name");
        }
        name = std::string(rest);
      } else if (kw == "size") {
        if (!name) {
          throw ParseError(line_no, "'size' before 'algebra'");
        }
        if (size) {
          throw ParseError(line_no, "duplicate 'size' line");
        }
        if (toks.size() != 2) {
          throw ParseError(line_no, "expected 'size <n>'");
        }
        size = parse_number(toks[1], line_no);
        if (*size == 0) {
          throw ParseError(line_no, "size must be at least 1");
        }
      } else if (kw == "zero") {
        if (toks.size() != 2 || toks[1] != "0") {
          throw ParseError(line_no, "expected literal 'zero 0'");
        }
        if (have_zero) {
          throw ParseError(line_no, "duplicate 'zero' line");
        }
        have_zero = true;
      } else if (kw == "op") {
        if (!size) {
          throw ParseError(line_no, "'op' before 'size'");
        }
        if (toks.size() != 3) {
          throw ParseError(line_no, "expected 'op <name> <arity>'");
        }
        std::string op_name(toks[1]);
        if (op_name == Signature::zero_name) {
          throw ParseError(line_no, "'zero' is implicit and cannot be an op");
        }
        for (auto const& existing : ops) {
          if (existing.name == op_name) {
            throw ParseError(line_no, "duplicate operation '" + op_name + "'");
          }
        }
        auto arity = parse_number(toks[2], line_no);
        auto rows  = table_rows(*size, static_cast<unsigned>(arity));
        if (arity > 16 || !rows || *rows > (std::size_t(1) << 28)) {
          throw ParseError(line_no, "table of '" + op_name + "' too large");
        }
        ops.push_back({op_name, static_cast<unsigned>(arity)});
        tables.emplace_back();
        tables.back().reserve(*rows);
        expected = *rows;
        op_line  = line_no;
      } else {
        throw ParseError(line_no, "unknown directive '" + std::string(kw) + "'");
      }
    }
    if (expected > 0) {
      throw ParseError(op_line,
                       "table of operation '" + ops.back().name + "' has "
                           + std::to_string(tables.back().size())
                           + " entries, expected "
                           + std::to_string(tables.back().size() + expected));
    }
    if (!name) {
      throw ParseError(line_no, "missing 'algebra' declaration");
    }
    if (!size) {
      throw ParseError(line_no, "missing 'size' declaration");
    }
    if (!have_zero) {
      throw ParseError(line_no, "missing 'zero 0' declaration");
    }
    return make_algebra(*name, *size, std::move(ops), std::move(tables));
  }

  std::string serialize(FiniteAlgebra const& a) {
    std::ostringstream out;
    out << "algebra " << a.name() << "\n";
    out << "size " << a.size() << "\n";
    out << "zero 0\n";
    auto const& sig = a.signature();
    for (std::size_t op = 0; op < sig.size(); ++op) {
      if (op == sig.zero_index()) {
        continue;
      }
      out << "op " << sig[op].name << " " << sig[op].arity << "\n";
      auto        table = a.table(op);
      std::size_t width = sig[op].arity == 0 ? 1 : a.size();
      for (std::size_t i = 0; i < table.size(); ++i) {
        out << table[i] << ((i + 1) % width == 0 ? "\n" : " ");
      }
    }
    return out.str();
  }

}  // namespace abelia
