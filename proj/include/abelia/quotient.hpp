#ifndef ABELIA_QUOTIENT_HPP_
#define ABELIA_QUOTIENT_HPP_

#include "algebra.hpp"
#include "congruence.hpp"

namespace abelia {

  struct Quotient {
    AlgebraPtr   algebra;
    Homomorphism projection;  // the canonical surjection
  };

  // Blocks are numbered by least member, so the block of 0 becomes 0.
  // Throws Error if theta is not compatible with the operations of a.
  Quotient quotient(AlgebraPtr const& a, Congruence const& theta);

}  // namespace abelia

#endif
