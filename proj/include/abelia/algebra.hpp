#ifndef ABELIA_ALGEBRA_HPP_
#define ABELIA_ALGEBRA_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "caps.hpp"

namespace abelia {

  // Elements of a carrier of size n are 0, ..., n - 1; 0 is the point.
  using Elem = std::uint32_t;

  struct OpSymbol {
    std::string name;
    unsigned    arity = 0;

    bool operator==(OpSymbol const&) const = default;
  };

  // The operation symbols of a pointed signature.  Always contains the
  // nullary "zero"; symbols are kept sorted by name so that two signatures
  // with the same symbols compare equal regardless of declaration order.
  class Signature {
   public:
    static constexpr std::string_view zero_name = "zero";

    Signature();
    explicit Signature(std::vector<OpSymbol> ops);

    std::span<OpSymbol const> ops() const noexcept {
      return _ops;
    }

    std::size_t size() const noexcept {
      return _ops.size();
    }

    OpSymbol const& operator[](std::size_t i) const {
      return _ops[i];
    }

    std::optional<std::size_t> index_of(std::string_view name) const;

    std::size_t zero_index() const noexcept {
      return _zero;
    }

    bool operator==(Signature const& that) const {
      return _ops == that._ops;
    }

    std::string to_string() const;

   private:
    std::vector<OpSymbol> _ops;
    std::size_t           _zero = 0;
  };

  // A finite pointed algebra with total operation tables.  Tables are
  // row-major over argument tuples, last argument fastest.  Immutable.
  class FiniteAlgebra {
   public:
    // Validates every invariant and throws Error on violation.
    FiniteAlgebra(std::string                    name,
                  std::size_t                    size,
                  Signature                      signature,
                  std::vector<std::vector<Elem>> tables);

    std::string const& name() const noexcept {
      return _name;
    }

    std::size_t size() const noexcept {
      return _size;
    }

    Signature const& signature() const noexcept {
      return _signature;
    }

    unsigned arity(std::size_t op) const {
      return _signature[op].arity;
    }

    std::span<Elem const> table(std::size_t op) const {
      return _tables[op];
    }

    Elem apply(std::size_t op, std::span<Elem const> args) const;

    Elem apply(std::size_t op, std::initializer_list<Elem> args) const {
      return apply(op, std::span<Elem const>(args.begin(), args.size()));
    }

    // Equality of carrier, signature and tables; the name is ignored.
    bool same_structure(FiniteAlgebra const& that) const;

   private:
    std::string                    _name;
    std::size_t                    _size;
    Signature                      _signature;
    std::vector<std::vector<Elem>> _tables;
  };

  using AlgebraPtr = std::shared_ptr<FiniteAlgebra const>;

  // Number of rows n^k of a k-ary table, or nullopt on overflow.
  std::optional<std::size_t> table_rows(std::size_t n, unsigned k);

  bool same_algebra(AlgebraPtr const& a, AlgebraPtr const& b);

  // Throws SignatureMismatch.
  void require_same_signature(FiniteAlgebra const& a, FiniteAlgebra const& b);

  class Homomorphism {
   public:
    // Checks length and range of the map, not the homomorphism property.
    Homomorphism(AlgebraPtr source, AlgebraPtr target, std::vector<Elem> map);

    AlgebraPtr const& source() const noexcept {
      return _source;
    }

    AlgebraPtr const& target() const noexcept {
      return _target;
    }

    std::vector<Elem> const& map() const noexcept {
      return _map;
    }

    Elem operator()(Elem x) const {
      return _map[x];
    }

    bool is_zero() const;

    // Pointwise equality of maps with the same endpoints.
    bool operator==(Homomorphism const& that) const;

   private:
    AlgebraPtr        _source;
    AlgebraPtr        _target;
    std::vector<Elem> _map;
  };

  bool is_homomorphism(Homomorphism const& h);

  Homomorphism zero_hom(AlgebraPtr const& source, AlgebraPtr const& target);
  Homomorphism identity(AlgebraPtr const& a);

  // g after f.  Throws Error unless f.target is g.source.
  Homomorphism compose(Homomorphism const& g, Homomorphism const& f);

  struct ProductAlgebra {
    AlgebraPtr   algebra;
    AlgebraPtr   left;
    AlgebraPtr   right;
    Homomorphism pi1;
    Homomorphism pi2;
    Homomorphism iota1;  // x -> (x, 0)
    Homomorphism iota2;  // y -> (0, y)

    Elem encode(Elem i, Elem j) const {
      return static_cast<Elem>(i * right->size() + j);
    }

    std::pair<Elem, Elem> decode(Elem e) const {
      return {static_cast<Elem>(e / right->size()),
              static_cast<Elem>(e % right->size())};
    }
  };

  // Componentwise product, pairs encoded row-major: (i, j) -> i * |B| + j.
  ProductAlgebra product(AlgebraPtr const& a, AlgebraPtr const& b);

  // Source element -> forced target element.
  using PartialMap = std::map<Elem, Elem>;

  // Calls `visit` on every homomorphism source -> target extending `pinned`,
  // in lexicographic order of maps, until `visit` returns false.  Pinned
  // values inconsistent with the operations simply yield nothing.
  void for_each_homomorphism(
      AlgebraPtr const&                             source,
      AlgebraPtr const&                             target,
      PartialMap const&                             pinned,
      std::function<bool(Homomorphism const&)> const& visit);

  std::vector<Homomorphism> enumerate_homomorphisms(AlgebraPtr const& source,
                                                    AlgebraPtr const& target,
                                                    PartialMap const& pinned
                                                    = {});

  struct FreeAlgebra {
    AlgebraPtr        algebra;
    std::vector<Elem> generators;
  };

  // The subalgebra of A^(A^k) generated by the k projections.  Element 0
  // is the constant-zero tuple, generators follow, then closure order.
  FreeAlgebra free_algebra(AlgebraPtr const& a,
                           unsigned          k,
                           Caps const&       caps = {});

  // Given r with right inverse s, returns u = f s if f = f s r, else nothing.
  std::optional<Homomorphism> factor_through_split_epi(Homomorphism const& f,
                                                       Homomorphism const& r,
                                                       Homomorphism const& s);

  AlgebraPtr  parse_algebra(std::string_view text);
  std::string serialize(FiniteAlgebra const& a);

  // Convenience constructor used by fixtures and tests.
  AlgebraPtr make_algebra(std::string                    name,
                          std::size_t                    size,
                          std::vector<OpSymbol>          ops,
                          std::vector<std::vector<Elem>> tables);

}  // namespace abelia

#endif
