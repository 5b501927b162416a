#pragma once

// Families W_(a;b1..b6) of smooth space curves lying on smooth cubic surfaces
// and their position inside the Hilbert scheme H_{d,g}.

#include <optional>
#include <string>
#include <vector>

#include "cubic/picard.hpp"

namespace cubic {

/// a > b1 >= ... >= b6 >= 0 and a >= b1 + b2 + b3.
bool is_admissible(const DivisorClass& c);

/// An admissible 7-tuple. Construction validates.
class FamilyKey {
public:
    explicit FamilyKey(const DivisorClass& c);

    const DivisorClass& divisor() const { return class_; }
    Int a() const { return class_.a; }
    Int b(int i) const { return class_.coeff(i); }

    friend auto operator<=>(const FamilyKey&, const FamilyKey&) = default;
    friend bool operator==(const FamilyKey&, const FamilyKey&) = default;

private:
    DivisorClass class_;
};

/// d > 9 and g >= 3d - 18.
bool in_omega(Int d, Int g);

enum class Verdict { reduced_component, non_reduced_component, not_component, below_omega, open };

/// snake_case name used in JSON output.
const char* to_string(Verdict v);

struct LiteratureFlags {
    bool kleppe_range_1 = false;  // d >= 18 and g > 7 + (d-2)^2/8
    bool kleppe_range_2 = false;  // 14 <= d <= 17 and g > -1 + (d^2-4)/8

    friend bool operator==(const LiteratureFlags&, const LiteratureFlags&) = default;
};

LiteratureFlags literature_flags(Int d, Int g);

/// Lattice-level hypotheses and consequences for an obstructed curve class C
/// whose |C - 3h| has a single line E as fixed part.
struct CoreCheck {
    bool fixed_part_is_single_line = false;
    bool c_minus_4h_effective = false;
    bool c_dot_e_is_2 = false;
    bool c_minus_3h_minus_e_nef_big = false;
    bool delta_effective = false;
    bool delta_disjoint_from_e = false;
    bool injectivity_inequality = false;  // (3h + 2E - C).C < 0
    bool h1_ideal_3_is_1 = false;
    std::optional<DivisorClass> line;   // E, when hypothesis (i) holds
    std::optional<DivisorClass> delta;  // C - 4h - 2E

    bool hypotheses_hold() const { return fixed_part_is_single_line && c_minus_4h_effective; }
    bool all_true() const;

    friend bool operator==(const CoreCheck&, const CoreCheck&) = default;
};

struct FamilyReport {
    FamilyKey key;
    Int degree = 0;
    Int genus = 0;
    bool in_omega = false;
    Int dim_w = 0;          // d + g + 18
    Int chi_normal = 0;     // 4d
    Int h1_ideal_3 = 0;
    Int h1_ideal_1 = 0;
    Int h1_oc3 = 0;         // h0(S, C - 4h)
    Int h0_normal = 0;      // 4d + h1_oc3
    Verdict verdict = Verdict::open;
    bool kleppe_ellia_hypotheses = false;  // only evaluated for open verdicts
    LiteratureFlags literature{};          // only evaluated for open verdicts
    std::optional<CoreCheck> core{};       // present when |C - 3h| has a single fixed line

    friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

/// h1(I_C(n)) = h1(S, -(C - n h)), through the general surface cohomology.
Int h1_ideal(const FamilyKey& key, Int n);

/// True when |C - n h| is nonempty with fixed part exactly the sum over
/// b_i < n of (n - b_i) E_i. Both closed forms below assume this shape. It
/// can fail when two or more b_i < n: for (17;8,7,2,2,2,2) and n = 3 the line
/// l - e1 - e2 is also fixed, and the true h1 exceeds the closed form by one.
bool fixed_part_is_exceptional(const FamilyKey& key, Int n);

/// #{b_i = 2} + 3 #{b_i = 1} + 6 #{b_i = 0} when d >= 12, zero when d < 12.
/// Equals h1_ideal(key, 3) when fixed_part_is_exceptional(key, 3).
/// Throws DomainError outside Omega.
Int h1_ideal_3_closed_form(const FamilyKey& key);

/// sum over b_i < n of (n + 1 - b_i)(n - b_i)/2. Equals h1_ideal(key, n) when
/// fixed_part_is_exceptional(key, n) and (C - n h)^2 > 0.
Int h1_ideal_fixed_part_formula(const FamilyKey& key, Int n);

/// Throws DomainError when d <= 9.
FamilyReport classify(const FamilyKey& key);

CoreCheck verify_core(const FamilyKey& key);

/// Admissible keys with the given degree and genus, lexicographically sorted.
/// Throws DomainError when d <= 9.
std::vector<FamilyKey> enumerate(Int d, Int g);

/// Unpruned search over 1 <= a <= d and b1 < a; slow, used to re-check enumerate().
std::vector<FamilyKey> enumerate_naive(Int d, Int g);

/// Admissible keys of degree d with any genus, sorted by (genus, key).
std::vector<FamilyKey> enumerate_degree(Int d);

/// Closed interval [lo, hi] of a satisfying 3a^2 - 6da + d^2 + 12g - 12 + 6d <= 0,
/// or nullopt when no real a does.
std::optional<std::pair<Int, Int>> enumeration_a_range(Int d, Int g);

enum class SweepMode { omega_only, all };

/// Reports for every admissible key with lo <= d <= hi, ordered by (d, g, key).
std::vector<FamilyReport> sweep(Int d_lo, Int d_hi, SweepMode mode);

}  // namespace cubic
