#ifndef ABELIA_CONGRUENCE_HPP_
#define ABELIA_CONGRUENCE_HPP_

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "caps.hpp"

namespace abelia {

  // An equivalence relation on {0, ..., n-1} stored in least-representative
  // form: rep[x] is the smallest member of the block of x.  Whether it is
  // compatible with some algebra is a separate question (is_congruence).
  class Congruence {
   public:
    Congruence() = default;

    // Throws Error unless `rep` is in least-representative form.
    explicit Congruence(std::vector<Elem> rep);

    // Canonicalizes arbitrary block labels.
    template <typename Label>
    static Congruence from_labels(std::vector<Label> const& labels);

    static Congruence discrete(std::size_t n);
    static Congruence all(std::size_t n);

    std::size_t size() const noexcept {
      return _rep.size();
    }

    Elem representative(Elem x) const {
      return _rep[x];
    }

    bool related(Elem x, Elem y) const {
      return _rep[x] == _rep[y];
    }

    std::vector<Elem> const& representatives() const noexcept {
      return _rep;
    }

    std::size_t block_count() const;

    // Blocks sorted by least member, each sorted ascending.
    std::vector<std::vector<Elem>> blocks() const;

    // True if every pair related in `finer` is related here.
    bool contains(Congruence const& finer) const;

    std::string to_string() const;  // e.g. [[0,2],[1],[3]]

    bool operator==(Congruence const&) const = default;
    auto operator<=>(Congruence const&) const = default;

   private:
    std::vector<Elem> _rep;
  };

  template <typename Label>
  Congruence Congruence::from_labels(std::vector<Label> const& labels) {
    std::map<Label, Elem> first;
    std::vector<Elem>     rep(labels.size());
    for (std::size_t x = 0; x < labels.size(); ++x) {
      rep[x] = first.try_emplace(labels[x], static_cast<Elem>(x)).first->second;
    }
    return Congruence(std::move(rep));
  }

  using ElemPair = std::pair<Elem, Elem>;

  bool is_congruence(FiniteAlgebra const& a, Congruence const& theta);

  Congruence kernel_congruence(Homomorphism const& f);

  // Least congruence of `a` containing `pairs`.  Throws Error on
  // out-of-range pairs.
  Congruence cg(FiniteAlgebra const& a, std::vector<ElemPair> const& pairs);

  Congruence join(FiniteAlgebra const& a,
                  Congruence const&    x,
                  Congruence const&    y);
  Congruence meet(Congruence const& x, Congruence const& y);

  // The whole congruence lattice, sorted by block count descending and then
  // by representative table.  Throws CapExceeded above caps.lattice.
  std::vector<Congruence> all_congruences(FiniteAlgebra const& a,
                                          Caps const&          caps = {});

}  // namespace abelia

#endif
