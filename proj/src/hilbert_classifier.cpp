#include "cubic/hilbert_classifier.hpp"

#include <algorithm>
#include <cmath>

#include "cubic/checked.hpp"
#include "cubic/errors.hpp"
#include "cubic/surface_cohomology.hpp"

namespace cubic {

bool is_admissible(const DivisorClass& c) {
    if (!(c.a > c.b[0])) return false;
    for (std::size_t i = 0; i + 1 < 6; ++i)
        if (c.b[i] < c.b[i + 1]) return false;
    if (c.b[5] < 0) return false;
    return c.a >= checked::add(checked::add(c.b[0], c.b[1]), c.b[2]);
}

FamilyKey::FamilyKey(const DivisorClass& c) : class_(c) {
    if (!is_admissible(c))
        throw DomainError(to_string(c) +
                          " is not admissible (need a > b1 >= ... >= b6 >= 0 and a >= b1 + b2 + b3)");
}

bool in_omega(Int d, Int g) { return d > 9 && g >= checked::sub(checked::mul(3, d), 18); }

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::reduced_component: return "reduced_component";
        case Verdict::non_reduced_component: return "non_reduced_component";
        case Verdict::not_component: return "not_component";
        case Verdict::below_omega: return "below_omega";
        case Verdict::open: return "open";
    }
    return "?";
}

LiteratureFlags literature_flags(Int d, Int g) {
    LiteratureFlags f;
    const Int eight_g = checked::mul(8, g);
    if (d >= 18) {
        const Int dm2 = checked::sub(d, 2);
        f.kleppe_range_1 = eight_g > checked::add(56, checked::mul(dm2, dm2));
    }
    if (d >= 14 && d <= 17) f.kleppe_range_2 = eight_g > checked::sub(checked::mul(d, d), 12);
    return f;
}

bool CoreCheck::all_true() const {
    return fixed_part_is_single_line && c_minus_4h_effective && c_dot_e_is_2 && c_minus_3h_minus_e_nef_big &&
           delta_effective && delta_disjoint_from_e && injectivity_inequality && h1_ideal_3_is_1;
}

namespace {

DivisorClass twist_down(const FamilyKey& key, Int n) {
    return key.divisor() - n * lattice::hyperplane();
}

}  // namespace

Int h1_ideal(const FamilyKey& key, Int n) {
    if (n < 0) throw DomainError("h1_ideal needs n >= 0");
    return cohomology(-twist_down(key, n)).h1;
}

Int h1_ideal_fixed_part_formula(const FamilyKey& key, Int n) {
    Int total = 0;
    for (Int bi : key.divisor().b) {
        if (bi >= n) continue;
        const Int gap = checked::sub(n, bi);
        total = checked::add(total, checked::mul(checked::add(gap, 1), gap) / 2);
    }
    return total;
}

bool fixed_part_is_exceptional(const FamilyKey& key, Int n) {
    if (n < 0) throw DomainError("fixed_part_is_exceptional needs n >= 0");
    const SystemAnalysis s = decompose(twist_down(key, n));
    if (!s.effective) return false;
    DivisorClass expected{};
    for (int i = 1; i <= 6; ++i)
        if (key.b(i) < n) expected = expected + checked::sub(n, key.b(i)) * lattice::exceptional(i);
    return s.fixed_part == expected;
}

Int h1_ideal_3_closed_form(const FamilyKey& key) {
    const Int d = degree(key.divisor());
    const Int g = genus(key.divisor());
    if (!in_omega(d, g))
        throw DomainError("closed form for h1(I_C(3)) needs (d, g) in Omega; got d=" + std::to_string(d) +
                          ", g=" + std::to_string(g));
    if (d < 12) return 0;
    Int count = 0;
    for (Int bi : key.divisor().b) {
        if (bi == 2) count += 1;
        else if (bi == 1) count += 3;
        else if (bi == 0) count += 6;
    }
    return count;
}

CoreCheck verify_core(const FamilyKey& key) {
    const DivisorClass& c = key.divisor();
    const DivisorClass h = lattice::hyperplane();
    CoreCheck out;

    const SystemAnalysis cubic_twist = decompose(c - 3 * h);
    const auto lines = cubic_twist.fixed_lines.view();
    out.fixed_part_is_single_line = cubic_twist.effective && lines.size() == 1 && lines[0].multiplicity == 1;
    out.c_minus_4h_effective = decompose(c - 4 * h).effective;
    out.h1_ideal_3_is_1 = h1_ideal(key, 3) == 1;
    if (!out.fixed_part_is_single_line) return out;

    const DivisorClass e = lines[0].line;
    out.line = e;
    out.c_dot_e_is_2 = intersect(c, e) == 2;
    out.c_minus_3h_minus_e_nef_big = is_big_and_nef(c - 3 * h - e);

    const DivisorClass delta = c - 4 * h - 2 * e;
    out.delta = delta;
    const SystemAnalysis ds = decompose(delta);
    out.delta_effective = ds.effective;
    if (ds.effective) {
        // A general member of |delta| misses E iff delta.E = 0 and E is not a fixed component.
        bool e_is_fixed = false;
        for (const FixedLine& fl : ds.fixed_lines.view()) e_is_fixed = e_is_fixed || fl.line == e;
        out.delta_disjoint_from_e = delta.is_zero() || (intersect(delta, e) == 0 && !e_is_fixed);
    }
    out.injectivity_inequality = intersect(3 * h + 2 * e - c, c) < 0;
    return out;
}

FamilyReport classify(const FamilyKey& key) {
    const DivisorClass& c = key.divisor();
    const Int d = degree(c);
    if (d <= 9)
        throw DomainError("classification needs d > 9; " + to_string(c) + " has d = " + std::to_string(d));
    const Int g = genus(c);

    FamilyReport r{.key = key};
    r.degree = d;
    r.genus = g;
    r.in_omega = in_omega(d, g);
    r.dim_w = checked::add(checked::add(d, g), 18);
    r.chi_normal = checked::mul(4, d);
    r.h1_ideal_3 = h1_ideal(key, 3);
    r.h1_ideal_1 = h1_ideal(key, 1);
    r.h1_oc3 = cohomology(twist_down(key, 4)).h0;
    r.h0_normal = checked::add(r.chi_normal, r.h1_oc3);

    const Int b5 = key.b(5), b6 = key.b(6);
    if (!r.in_omega)
        r.verdict = Verdict::below_omega;
    else if (r.h1_ideal_3 == 0)
        r.verdict = Verdict::reduced_component;
    else if (b6 == 2 && b5 >= 3)
        r.verdict = Verdict::non_reduced_component;
    else if (b6 == 0)
        r.verdict = Verdict::not_component;
    else
        r.verdict = Verdict::open;

    if (r.verdict == Verdict::open) {
        r.kleppe_ellia_hypotheses = r.h1_ideal_3 != 0 && r.h1_ideal_1 == 0;
        r.literature = literature_flags(d, g);
    }

    CoreCheck core = verify_core(key);
    if (core.fixed_part_is_single_line) r.core = std::move(core);
    return r;
}

std::optional<std::pair<Int, Int>> enumeration_a_range(Int d, Int g) {
    // 3a^2 - 6da + c = 3(a - d)^2 - r with r = 2d^2 - 6d + 12 - 12g.
    const Int r = checked::sub(checked::add(checked::sub(checked::mul(2, checked::mul(d, d)), checked::mul(6, d)), 12),
                               checked::mul(12, g));
    if (r < 0) return std::nullopt;
    Int k = static_cast<Int>(std::sqrt(static_cast<long double>(r) / 3.0L));
    while (k > 0 && checked::mul(3, checked::mul(k, k)) > r) --k;
    while (checked::mul(3, checked::mul(k + 1, k + 1)) <= r) ++k;
    return std::pair{checked::sub(d, k), checked::add(d, k)};
}

namespace {

// Sorted b1 >= ... >= b6 >= 0 with b1 < a, b1 + b2 + b3 <= a, sum = s and,
// when want_squares, sum of squares = q.
class DescentEnumerator {
public:
    DescentEnumerator(Int a, Int s, std::optional<Int> q, std::vector<FamilyKey>& out)
        : a_(a), q_(q), out_(out) {
        cur_.a = a;
        descend(0, a - 1, s, q.value_or(0));
    }

private:
    void descend(int pos, Int max_value, Int rem_sum, Int rem_sq) {
        const Int slots = 6 - pos;
        if (slots == 0) {
            if (rem_sum == 0 && (!q_ || rem_sq == 0)) out_.emplace_back(cur_);
            return;
        }
        for (Int v = std::min(max_value, rem_sum); v >= 0; --v) {
            if (rem_sum > slots * v) break;  // smaller v cannot reach the sum either
            const Int sum_after = rem_sum - v;
            if (q_) {
                const Int sq_after = rem_sq - v * v;
                if (sq_after < 0) continue;
                if (sq_after > (slots - 1) * v * v) break;
                // Cauchy-Schwarz on the remaining slots.
                if (sum_after * sum_after > (slots - 1) * sq_after) continue;
                if (sq_after > sum_after * v) continue;
            }
            cur_.b[static_cast<std::size_t>(pos)] = v;
            if (pos == 2 && cur_.b[0] + cur_.b[1] + cur_.b[2] > a_) continue;
            descend(pos + 1, v, sum_after, q_ ? rem_sq - v * v : 0);
        }
        cur_.b[static_cast<std::size_t>(pos)] = 0;
    }

    Int a_;
    std::optional<Int> q_;
    std::vector<FamilyKey>& out_;
    DivisorClass cur_;
};

void require_degree_above_nine(Int d) {
    if (d <= 9) throw DomainError("enumeration needs d > 9, got d = " + std::to_string(d));
}

}  // namespace

std::vector<FamilyKey> enumerate(Int d, Int g) {
    require_degree_above_nine(d);
    std::vector<FamilyKey> out;
    const auto range = enumeration_a_range(d, g);
    if (!range) return out;
    // Admissible keys also satisfy d/3 <= a <= d.
    const Int lo = std::max({range->first, (d + 2) / 3, Int{1}});
    const Int hi = std::min(range->second, d);
    for (Int a = lo; a <= hi; ++a) {
        const Int s = checked::sub(checked::mul(3, a), d);
        const Int q = checked::sub(checked::sub(checked::add(checked::mul(a, a), 2), d), checked::mul(2, g));
        if (s < 0 || q < 0) continue;
        DescentEnumerator(a, s, q, out);
    }
    std::sort(out.begin(), out.end());
    for (const FamilyKey& k : out)
        if (degree(k.divisor()) != d || genus(k.divisor()) != g)
            throw InconsistencyError("enumeration produced " + to_string(k.divisor()) + " outside (d, g)");
    return out;
}

std::vector<FamilyKey> enumerate_naive(Int d, Int g) {
    require_degree_above_nine(d);
    std::vector<FamilyKey> out;
    DivisorClass c;
    auto& b = c.b;
    for (c.a = 1; c.a <= d; ++c.a)
        for (b[0] = 0; b[0] < c.a; ++b[0])
            for (b[1] = 0; b[1] <= b[0]; ++b[1])
                for (b[2] = 0; b[2] <= b[1]; ++b[2])
                    for (b[3] = 0; b[3] <= b[2]; ++b[3])
                        for (b[4] = 0; b[4] <= b[3]; ++b[4])
                            for (b[5] = 0; b[5] <= b[4]; ++b[5])
                                if (is_admissible(c) && degree(c) == d && genus(c) == g) out.emplace_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FamilyKey> enumerate_degree(Int d) {
    require_degree_above_nine(d);
    std::vector<FamilyKey> out;
    for (Int a = (d + 2) / 3; a <= d; ++a) DescentEnumerator(a, checked::sub(checked::mul(3, a), d), std::nullopt, out);
    std::vector<std::pair<Int, FamilyKey>> keyed;
    keyed.reserve(out.size());
    for (const FamilyKey& k : out) keyed.emplace_back(genus(k.divisor()), k);
    std::sort(keyed.begin(), keyed.end());
    out.clear();
    for (auto& [g, k] : keyed) out.push_back(k);
    return out;
}

std::vector<FamilyReport> sweep(Int d_lo, Int d_hi, SweepMode mode) {
    std::vector<FamilyReport> out;
    for (Int d = d_lo; d <= d_hi; ++d) {
        for (const FamilyKey& key : enumerate_degree(d)) {
            FamilyReport r = classify(key);
            if (mode == SweepMode::omega_only && !r.in_omega) continue;
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace cubic
