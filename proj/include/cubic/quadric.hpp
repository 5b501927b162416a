#pragma once

// Curves of bidegree (a, b) on a smooth quadric Q = P1 x P1.

#include <optional>

#include "cubic/picard.hpp"
#include "cubic/surface_cohomology.hpp"

namespace cubic {

/// Cohomology of O_Q(m, n) by Kunneth from h0, h1 of O_P1(k).
Cohomology cohomology_quadric(Int m, Int n);

enum class QuadricVerdict { component, proper_subvariety };

const char* to_string(QuadricVerdict v);

struct QuadricFamily {
    Int a = 0;
    Int b = 0;
    Int degree = 0;      // a + b
    Int genus = 0;       // (a-1)(b-1)
    Int dim_w = 0;       // 2d + g + 8
    Int h1_ideal_2 = 0;  // h1(O_Q(a-4, b-4))
    QuadricVerdict verdict = QuadricVerdict::component;
    std::optional<Int> codimension;        // 2d - 8 - g for proper subvarieties
    bool generically_non_singular = true;  // holds for every (a, b); reported, not computed

    friend bool operator==(const QuadricFamily&, const QuadricFamily&) = default;
};

/// Requires a >= b > 0 and a + b > 4; throws DomainError otherwise.
QuadricFamily classify_quadric(Int a, Int b);

}  // namespace cubic
