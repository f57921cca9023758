#ifndef ABELIA_CAPS_HPP_
#define ABELIA_CAPS_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace abelia {

  // Size limits for the exhaustive procedures.  Overridable through the
  // ABELIA_CAPS environment variable, e.g. "cg=256,lattice=12,hom_src=9".
  struct Caps {
    std::size_t cg             = 256;     // carrier of cg-based checks
    std::size_t lattice        = 12;      // carrier of lattice-based checks
    std::size_t hom_src        = 9;       // source of enumerated homs
    std::size_t hom_tgt        = 4;       // target of enumerated homs
    std::size_t subtraction    = 64;      // |A|^2 for subtraction search
    std::size_t free_positions = 16;      // |A|^k for free algebras
    std::size_t free_carrier   = 4096;    // generated free carrier
    std::size_t term_ops       = 100000;  // distinct term operation tables

    // Throws Error on unknown keys or malformed values.
    static Caps parse(std::string_view spec);
    static Caps from_environment();

    std::string to_string() const;
  };

}  // namespace abelia

#endif
