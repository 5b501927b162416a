#include "cubic/quadric.hpp"

#include <algorithm>
#include <string>

#include "cubic/checked.hpp"
#include "cubic/errors.hpp"

namespace cubic {

namespace {

// h0 and h1 of O_P1(k).
Int p1_h0(Int k) { return std::max<Int>(checked::add(k, 1), 0); }
Int p1_h1(Int k) { return std::max<Int>(checked::sub(-1, k), 0); }

}  // namespace

Cohomology cohomology_quadric(Int m, Int n) {
    return {checked::mul(p1_h0(m), p1_h0(n)),
            checked::add(checked::mul(p1_h0(m), p1_h1(n)), checked::mul(p1_h1(m), p1_h0(n))),
            checked::mul(p1_h1(m), p1_h1(n))};
}

const char* to_string(QuadricVerdict v) {
    return v == QuadricVerdict::component ? "component" : "proper_subvariety";
}

QuadricFamily classify_quadric(Int a, Int b) {
    if (!(a >= b && b > 0))
        throw DomainError("bidegree needs a >= b > 0, got (" + std::to_string(a) + "," + std::to_string(b) + ")");
    QuadricFamily f;
    f.a = a;
    f.b = b;
    f.degree = checked::add(a, b);
    if (f.degree <= 4) throw DomainError("bidegree needs d = a + b > 4, got d = " + std::to_string(f.degree));
    f.genus = checked::mul(a - 1, b - 1);
    f.dim_w = checked::add(checked::add(checked::mul(2, f.degree), f.genus), 8);
    // H^1(I_C(2)) is dual to H^1(O_Q(a-4, b-4)).
    f.h1_ideal_2 = cohomology_quadric(a - 4, b - 4).h1;

    const Int threshold = checked::sub(checked::mul(2, f.degree), 8);
    if (f.genus >= threshold) {
        f.verdict = QuadricVerdict::component;
        if (f.h1_ideal_2 != 0)
            throw InconsistencyError("h1(I_C(2)) must vanish when g >= 2d - 8");
    } else {
        f.verdict = QuadricVerdict::proper_subvariety;
        f.codimension = threshold - f.genus;
        if (f.h1_ideal_2 != *f.codimension)
            throw InconsistencyError("h1(I_C(2)) differs from 2d - 8 - g");
    }
    return f;
}

}  // namespace cubic
