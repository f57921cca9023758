#ifndef ABELIA_NORMALPROJ_HPP_
#define ABELIA_NORMALPROJ_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "caps.hpp"
#include "congruence.hpp"

namespace abelia {

  // Verdict on the quotient law (A x B)/A' = B for one pair, where A' is the
  // image of x -> (x, 0).  theta is the congruence of A x B generated by
  // the pairs ((a,0),(0,0)); the law holds iff theta also relates every
  // (a,b) with (0,b).
  struct NpVerdict {
    bool                    holds = false;
    Congruence              theta;
    std::optional<ElemPair> witness;  // (a, b) with (a,b) not ~ (0,b)
    std::size_t             instances = 0;
  };

  // Decides the law over all targets with one cg computation.
  NpVerdict check_np_pair(AlgebraPtr const& a,
                          AlgebraPtr const& b,
                          Caps const&       caps = {});

  enum class Condition { a, b, c, d, e };

  char        tag(Condition c);
  Condition   condition_from_tag(char c);

  // One instance that satisfied the hypothesis and broke the conclusion.
  //   a: f: A x B -> C, first/second = (a, b) with f(a,b) != f(0,b)
  //   b: f: X x X -> C, first/second = (x, y) with f(x,y) != f(0,y)
  //   c: f: X x X -> C, first = x with f(x,x) != f(0,x)
  //   d: f, left = a: U -> A, right = b: U -> B, first = u
  //   e: f, left = x: U -> X, first = u
  struct ConditionFailure {
    Homomorphism                f;
    std::optional<Homomorphism> left;
    std::optional<Homomorphism> right;
    Elem                        first  = 0;
    Elem                        second = 0;
    std::size_t                 right_size = 0;  // |B| for product decoding

    std::string describe(Condition c) const;
  };

  // "No counterexample over the test family" when failures is empty; any
  // failure is a definitive refutation.
  struct ConditionReport {
    Condition                     condition;
    std::size_t                   instances = 0;  // instances enumerated
    std::vector<ConditionFailure> failures;

    bool holds() const {
      return failures.empty();
    }
  };

  // Re-evaluates the cited maps: true iff the hypothesis holds and the
  // conclusion fails exactly as recorded.
  bool reverify(Condition c, ConditionFailure const& failure);

  // (a) instance form: every f: A x B -> C with f(x,0) = 0 has
  // f(x,y) = f(0,y).
  ConditionReport check_condition_a(AlgebraPtr const&              a,
                                    AlgebraPtr const&              b,
                                    std::vector<AlgebraPtr> const& targets,
                                    Caps const&                    caps = {});

  // (b): as (a) with A = B = X.
  ConditionReport check_condition_b(AlgebraPtr const&              x,
                                    std::vector<AlgebraPtr> const& targets,
                                    Caps const&                    caps = {});

  // (c): f(x,0) = 0 for all x implies f(x,x) = f(0,x) for all x.
  ConditionReport check_condition_c(AlgebraPtr const&              x,
                                    std::vector<AlgebraPtr> const& targets,
                                    Caps const&                    caps = {});

  // (d) with generalized elements a: U -> A, b: U -> B, U drawn from
  // `parameters`.
  ConditionReport check_condition_d_instances(
      AlgebraPtr const&              a,
      AlgebraPtr const&              b,
      std::vector<AlgebraPtr> const& targets,
      std::vector<AlgebraPtr> const& parameters,
      Caps const&                    caps = {});

  // (e) with generalized elements x: U -> X.
  ConditionReport check_condition_e_instances(
      AlgebraPtr const&              x,
      std::vector<AlgebraPtr> const& targets,
      std::vector<AlgebraPtr> const& parameters,
      Caps const&                    caps = {});

  struct ShiftingVerdict {
    bool                    holds = false;
    std::size_t             congruences = 0;
    std::optional<Congruence> theta;  // first violating congruence
    std::optional<ElemPair>   witness;  // (a, b) in that congruence
  };

  // For every congruence theta of A x B: (a,0) theta (0,0) for all a implies
  // (a,b) theta (0,b) for all a, b.
  ShiftingVerdict shifting_shape_check(AlgebraPtr const& a,
                                       AlgebraPtr const& b,
                                       Caps const&       caps = {});

  struct CentralicFailure {
    Congruence theta;
    Elem       x, y, z;
  };

  struct CentralicReport {
    std::size_t                   congruences = 0;
    std::size_t                   violations  = 0;  // (theta, x, y, z) total
    std::vector<CentralicFailure> failures;  // first violation per theta

    bool holds() const {
      return failures.empty();
    }
  };

  // For every congruence theta of A x B and x > y in A, z in B:
  // (x,0) theta (y,0) implies (x,z) theta (y,z).
  CentralicReport centralic_check(AlgebraPtr const& a,
                                  AlgebraPtr const& b,
                                  Caps const&       caps = {});

  struct CrossCheckReport {
    std::size_t              pairs          = 0;
    std::size_t              np_holding     = 0;
    std::size_t              d_instances    = 0;  // implication (i)
    std::size_t              shifting_pairs = 0;  // implication (ii)
    std::size_t              centralic_pairs = 0;  // implication (iii)
    std::size_t              skipped        = 0;  // checks beyond caps
    std::vector<std::string> discrepancies;

    bool holds() const {
      return discrepancies.empty();
    }
  };

  // Runs the finite implications between the checks on every ordered
  // same-signature pair of the catalog:
  //   (i)   NP(A,B) and NP(U,U) leave no failing (d) instance,
  //   (ii)  shifting_shape_check agrees with check_np_pair,
  //   (iii) a passing centralic_check implies check_np_pair holds.
  CrossCheckReport cross_check_conditions(std::vector<AlgebraPtr> const& catalog,
                                          Caps const& caps = {});

}  // namespace abelia

#endif
