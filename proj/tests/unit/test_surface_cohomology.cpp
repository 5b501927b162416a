#include <doctest.h>

#include <random>

#include "cubic/errors.hpp"
#include "cubic/surface_cohomology.hpp"
#include "cubic/weyl.hpp"
#include "plane_curve_oracle.hpp"

using namespace cubic;

namespace {

const DivisorClass kH = lattice::hyperplane();
const DivisorClass kK = lattice::canonical();
const DivisorClass kE6 = lattice::exceptional(6);
const DivisorClass kMumford{12, {4, 4, 4, 4, 4, 2}};

template <class F>
void for_each_in_box(int r, F&& f) {
    DivisorClass d;
    for (d.a = -r; d.a <= r; ++d.a)
        for (d.b[0] = -r; d.b[0] <= r; ++d.b[0])
            for (d.b[1] = -r; d.b[1] <= r; ++d.b[1])
                for (d.b[2] = -r; d.b[2] <= r; ++d.b[2])
                    for (d.b[3] = -r; d.b[3] <= r; ++d.b[3])
                        for (d.b[4] = -r; d.b[4] <= r; ++d.b[4])
                            for (d.b[5] = -r; d.b[5] <= r; ++d.b[5]) f(d);
}

}  // namespace

TEST_CASE("is_nef") {
    CHECK(is_nef(kH));
    CHECK_FALSE(is_nef(kE6));
    CHECK_FALSE(is_nef(kMumford - 3 * kH));
}

TEST_CASE("is_big_and_nef") {
    const DivisorClass residual = kMumford - 3 * kH - kE6;
    CHECK(residual == DivisorClass{3, {1, 1, 1, 1, 1, 0}});
    CHECK(is_big_and_nef(residual));
    CHECK(self_intersection(residual) == 4);
    const DivisorClass conic{1, {1, 0, 0, 0, 0, 0}};
    CHECK(is_nef(conic));
    CHECK_FALSE(is_big_and_nef(conic));
    CHECK_FALSE(is_big_and_nef(DivisorClass{}));
}

TEST_CASE("decompose: a single fixed line") {
    const SystemAnalysis s = decompose(DivisorClass{3, {1, 1, 1, 1, 1, -1}});
    REQUIRE(s.effective);
    REQUIRE(s.fixed_lines.size() == 1);
    CHECK(s.fixed_lines.view()[0] == FixedLine{kE6, 1});
    CHECK(s.fixed_part == kE6);
    CHECK(s.mobile == DivisorClass{3, {1, 1, 1, 1, 1, 0}});
    CHECK(s.mobile_kind == MobileKind::big);
    CHECK(s.peel_rounds == 1);
}

TEST_CASE("decompose: Mumford's C - 4h is a double line") {
    const SystemAnalysis s = decompose(kMumford - 4 * kH);
    REQUIRE(s.effective);
    CHECK(s.mobile.is_zero());
    CHECK(s.mobile_kind == MobileKind::zero);
    REQUIRE(s.fixed_lines.size() == 1);
    CHECK(s.fixed_lines.view()[0] == FixedLine{kE6, 2});
}

TEST_CASE("decompose: ineffective classes") {
    CHECK_FALSE(decompose(DivisorClass{-1, {}}).effective);
    CHECK_FALSE(decompose(-kE6).effective);
    CHECK_FALSE(decompose(DivisorClass{0, {1, -1, 0, 0, 0, 0}}).effective);  // e2 - e1, degree 0
}

TEST_CASE("decompose: peeling over several rounds") {
    // Standard already, but l - e1 - e2 is left behind after the first peel.
    const DivisorClass d{1, {1, 1, -1, -1, -1, -1}};
    REQUIRE(is_standard(d));
    const SystemAnalysis s = decompose(d);
    REQUIRE(s.effective);
    CHECK(s.peel_rounds == 2);
    CHECK(s.mobile.is_zero());
    CHECK(s.fixed_lines.size() == 5);
    DivisorClass sum;
    for (const FixedLine& fl : s.fixed_lines.view()) sum += fl.multiplicity * fl.line;
    CHECK(sum == d);
    CHECK(h1_of_minus(d) == oracle::plane_curve_cohomology(-d).h1);
    CHECK(h1_of_minus(d) == 4);
}

TEST_CASE("decompose: conic pencils") {
    const SystemAnalysis s = decompose(DivisorClass{3, {3, 0, 0, 0, 0, 0}});
    REQUIRE(s.effective);
    CHECK(s.mobile_kind == MobileKind::conics);
    CHECK(s.conic_count == 3);
    // h - e6 is the conic pencil residual to a line; it is in another basis.
    const SystemAnalysis t = decompose(kH - kE6);
    CHECK(t.mobile_kind == MobileKind::conics);
    CHECK(t.conic_count == 1);
}

TEST_CASE("structure sheaves of multiple curves") {
    CHECK(h0_multiple_line(2) == 3);
    CHECK(h0_multiple_line(0) == 0);
    CHECK(h0_multiple_conic(3) == 3);
    CHECK_THROWS_AS(h0_multiple_line(-1), DomainError);
}

TEST_CASE("cohomology examples") {
    CHECK(cohomology(DivisorClass{}) == Cohomology{1, 0, 0});
    CHECK(cohomology(-kH) == Cohomology{0, 0, 1});
    // chi(2E) = 0, h0 = 1 (the double line), h2 = h0(K - 2E) = 0.
    CHECK(cohomology(2 * kE6) == Cohomology{1, 1, 0});
    const auto o = oracle::plane_curve_cohomology(2 * kE6);
    CHECK(o.h0 == 1);
    CHECK(o.h1 == 1);
    CHECK(o.h2 == 0);
}

TEST_CASE("h1_of_minus examples") {
    CHECK(h1_of_minus(kMumford - 3 * kH) == 1);
    CHECK(h1_of_minus(2 * kE6) == 2);
    CHECK(h1_of_minus(DivisorClass{1, {1, 0, 0, 0, 0, 0}}) == 0);
    CHECK_THROWS_AS(h1_of_minus(DivisorClass{}), DomainError);
    CHECK_THROWS_AS(h1_of_minus(-kH), DomainError);
}

TEST_CASE("cohomology matches the plane-curve oracle on random classes") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<Int> ua(-2, 7), ub(-3, 4);
    for (int t = 0; t < 1500; ++t) {
        DivisorClass d{ua(rng), {}};
        for (Int& x : d.b) x = ub(rng);
        const Cohomology c = cohomology(d);
        const auto o = oracle::plane_curve_cohomology(d);
        INFO("class " << d);
        REQUIRE(c.h0 == o.h0);
        REQUIRE(c.h1 == o.h1);
        REQUIRE(c.h2 == o.h2);
    }
}

TEST_CASE("properties on the box [-3,3]^7") {
    long effective_nonzero = 0;
    for_each_in_box(3, [&](const DivisorClass& d) {
        const SystemAnalysis s = decompose(d);
        const Cohomology& c = s.cohomology;
        if (c.h0 - c.h1 + c.h2 != euler_characteristic(d)) FAIL("chi at " << d);
        if (c.h2 != cohomology(kK - d).h0) FAIL("Serre duality at " << d);
        if (is_nef(d) && !(c == Cohomology{euler_characteristic(d), 0, 0})) FAIL("nef not clean at " << d);
        if (!s.effective) {
            if (c.h0 != 0) FAIL("ineffective class with sections " << d);
            return;
        }
        if (!is_nef(s.mobile) || s.mobile + s.fixed_part != d) FAIL("peel unsound at " << d);
        if (cohomology(d + kH).h0 < c.h0) FAIL("h0 decreased at " << d);
        if (d.is_zero()) return;
        ++effective_nonzero;
        if (h1_of_minus(d) != cohomology(-d).h1) FAIL("double route at " << d);
    });
    CHECK(effective_nonzero > 0);
}
