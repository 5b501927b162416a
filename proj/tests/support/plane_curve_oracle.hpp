#pragma once

// Test-only oracles that share no code path with the library's lattice
// reduction.
//
// plane_curve_h0: S is P2 blown up at six general points, and
// H0(S, a*l - sum b_i*e_i) is the space of degree-a plane forms with
// multiplicity >= max(b_i, 0) at the i-th point. We pick six random points
// over F_p (p = 2^61 - 1), write the multiplicity conditions as a linear
// system on monomial coefficients and take its corank. Random points are in
// general position with overwhelming probability.

#include <cstdint>

#include "cubic/picard.hpp"

namespace oracle {

std::int64_t plane_curve_h0(const cubic::DivisorClass& d, std::uint64_t seed = 7);

/// (D^2 - D.K)/2 + 1 written out on raw coordinates.
std::int64_t raw_chi(const cubic::DivisorClass& d);

struct Triple {
    std::int64_t h0, h1, h2;
};

/// h0 and h2 (via Serre duality) from plane_curve_h0, h1 from raw_chi.
Triple plane_curve_cohomology(const cubic::DivisorClass& d, std::uint64_t seed = 7);

}  // namespace oracle
