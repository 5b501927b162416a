#pragma once

// Linear systems |D| on a smooth cubic surface S.
//
// decompose() peels (-1)-curves off D: reduce to the E-standard chamber, and
// while some b_i < 0 subtract (-b_i) copies of the line e_i (in that basis),
// then re-reduce. The result is D = M + F with M nef (hence free) and F a
// disjoint union of multiple lines, or a proof of ineffectivity from pairing
// with the nef classes l and h. Cohomology is then
//   h0(D) = chi(M),   h2(D) = h0(K - D),   h1 = h0 + h2 - chi(D).

#include <array>
#include <cstddef>
#include <span>

#include "cubic/picard.hpp"

namespace cubic {

struct FixedLine {
    DivisorClass line;  // coordinates of the input's basis
    Int multiplicity = 0;

    friend bool operator==(const FixedLine&, const FixedLine&) = default;
};

/// At most 27 distinct lines exist on S, so a fixed-size buffer suffices.
class FixedLines {
public:
    /// Adds multiplicity to an existing entry with the same class, or appends.
    void add(const DivisorClass& line, Int multiplicity);
    std::span<const FixedLine> view() const { return {items_.data(), size_}; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    void clear() { size_ = 0; }

private:
    std::array<FixedLine, 27> items_{};
    std::size_t size_ = 0;
};

enum class MobileKind { zero, conics, big };

const char* to_string(MobileKind k);

struct Cohomology {
    Int h0 = 0;
    Int h1 = 0;
    Int h2 = 0;

    friend bool operator==(const Cohomology&, const Cohomology&) = default;
};

struct SystemAnalysis {
    bool effective = false;
    DivisorClass mobile;      // nef; zero when ineffective
    DivisorClass fixed_part;  // input - mobile; zero when ineffective
    FixedLines fixed_lines;
    int peel_rounds = 0;
    MobileKind mobile_kind = MobileKind::zero;
    Int conic_count = 0;  // m for MobileKind::conics
    Cohomology cohomology;
};

/// b6 >= 0 in E-standard form.
bool is_nef(const DivisorClass& d);
bool is_big_and_nef(const DivisorClass& d);

SystemAnalysis decompose(const DivisorClass& d);
Cohomology cohomology(const DivisorClass& d);

/// h0 of the structure sheaf of m*E for a line E, and of m disjoint conics.
Int h0_multiple_line(Int m);
Int h0_multiple_conic(Int m);

/// h1(S, -D) = h0(O_M) + h0(O_F) - 1 for effective nonzero D = M + F.
/// Throws DomainError when D is zero or not effective.
Int h1_of_minus(const DivisorClass& d);

}  // namespace cubic
