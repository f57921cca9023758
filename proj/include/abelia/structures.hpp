#ifndef ABELIA_STRUCTURES_HPP_
#define ABELIA_STRUCTURES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "caps.hpp"

namespace abelia {

  // A homomorphism s: A x A -> A with s(x,x) = 0 and s(x,0) = x.
  class InternalSubtraction {
   public:
    // Throws Error unless `s` is such a homomorphism out of A x A.
    InternalSubtraction(AlgebraPtr algebra, std::vector<Elem> table);

    AlgebraPtr const& algebra() const noexcept {
      return _algebra;
    }

    std::vector<Elem> const& table() const noexcept {
      return _table;
    }

    Elem operator()(Elem x, Elem y) const {
      return _table[x * _algebra->size() + y];
    }

   private:
    AlgebraPtr        _algebra;
    std::vector<Elem> _table;
  };

  // Backtracking over homomorphisms A x A -> A with the forced cells
  // pinned.  Throws CapExceeded when |A|^2 exceeds caps.subtraction.
  std::vector<InternalSubtraction> find_internal_subtractions(
      AlgebraPtr const& a,
      Caps const&       caps = {});

  // Outcome of a pointwise law check, with the first violating arguments.
  struct LawVerdict {
    bool              holds = true;
    std::vector<Elem> witness;
  };

  // s(s(x,z), s(y,z)) = s(x,y), triples in lexicographic order.
  LawVerdict verify_group_law(InternalSubtraction const& s);

  struct AbelianStructure {
    AlgebraPtr        algebra;
    std::vector<Elem> subtraction;
    std::vector<Elem> add;  // a(x,y) = s(x, s(0,y))
    std::vector<Elem> neg;  // x -> s(0,x)

    Elem plus(Elem x, Elem y) const {
      return add[x * algebra->size() + y];
    }
  };

  struct AbelianResult {
    std::optional<AbelianStructure> structure;
    std::string                     failed_axiom;  // empty on success
    std::vector<Elem>               witness;
  };

  // Derives addition and negation and checks, in this order: right and
  // left identity, inverses, associativity, commutativity, s(x,y) = x + -y,
  // and that the addition is a homomorphism out of A x A.
  AbelianResult derive_abelian(InternalSubtraction const& s);

  // g(s(x,y)) = s'(g(x), g(y)).  Throws Error on endpoint mismatch.
  LawVerdict check_homomorphic(Homomorphism const&        g,
                               InternalSubtraction const& s,
                               InternalSubtraction const& s_target);

  // g(x + y) = g(x) + g(y).
  LawVerdict check_additive(Homomorphism const&     g,
                            AbelianStructure const& source,
                            AbelianStructure const& target);

  struct Stage {
    std::string       name;
    bool              passed = false;
    std::vector<Elem> witness;
  };

  struct ConstructionReport {
    bool               applicable = true;  // preconditions of the replay
    bool               np         = false;  // the normal-projection premise
    std::vector<Stage> stages;
    // Outcome of the final stage when the premise holds.
    std::optional<bool> conclusion;

    bool passed() const;
  };

  // Replays f(z,(x,y)) = s(s(x,z), s(y,z)) on A x (A x A): f is a
  // homomorphism, f(z,(0,0)) = 0, and under NP(A, A x A) f does not depend
  // on z, which is the group law.
  ConstructionReport verify_proof_construction_1(InternalSubtraction const& s,
                                                 Caps const& caps = {});

  // Replays f(x,y) = s'(g(a(x,y)), a'(g(x),g(y))) on X x X: f(x,0) = 0,
  // and under NP(X,X) f does not depend on x, so g is additive.
  ConstructionReport verify_proof_construction_2(Homomorphism const&        g,
                                                 InternalSubtraction const& s,
                                                 InternalSubtraction const& s_target,
                                                 Caps const& caps = {});

  struct CrystalEntry {
    std::string name;
    std::size_t subtractions = 0;
    bool        np_square    = false;  // NP(A, A)
    bool        np_cube      = false;  // NP(A, A x A)
    bool        group_law    = true;   // over all subtractions
    bool        abelian      = false;  // some subtraction derives a group

    bool preconditions() const {
      return np_square && np_cube;
    }
  };

  struct CrystalReport {
    std::vector<CrystalEntry> entries;
    std::size_t               homs_checked = 0;
    // Contradictions of the theory under verified preconditions.
    std::vector<std::string> violations;
    // Deviations where the preconditions are not met; informative only.
    std::vector<std::string> anomalies;

    bool holds() const {
      return violations.empty();
    }
  };

  // Uniqueness of internal subtractions, the group law, abelianness and
  // homomorphicity of every map, asserted on the catalog members whose
  // normal-projection preconditions verify.  `jobs` > 1 analyses the
  // algebras concurrently; the report does not depend on it.
  CrystalReport crystallographic_report(std::vector<AlgebraPtr> const& catalog,
                                        Caps const&                    caps = {},
                                        unsigned                       jobs = 1);

}  // namespace abelia

#endif
