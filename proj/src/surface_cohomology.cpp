#include "cubic/surface_cohomology.hpp"

#include "cubic/checked.hpp"
#include "cubic/errors.hpp"
#include "cubic/weyl.hpp"

namespace cubic {

void FixedLines::add(const DivisorClass& line, Int multiplicity) {
    for (std::size_t i = 0; i < size_; ++i) {
        if (items_[i].line == line) {
            items_[i].multiplicity = checked::add(items_[i].multiplicity, multiplicity);
            return;
        }
    }
    if (size_ == items_.size()) throw InconsistencyError("more than 27 distinct lines in a fixed part");
    items_[size_++] = {line, multiplicity};
}

const char* to_string(MobileKind k) {
    switch (k) {
        case MobileKind::zero: return "zero";
        case MobileKind::conics: return "conics";
        case MobileKind::big: return "big";
    }
    return "?";
}

namespace {

struct Peel {
    bool effective = false;
    DivisorClass mobile;
    int rounds = 0;
};

// w^{-1}(e_i) for the word w that carried the input to standard form.
DivisorClass pull_back_exceptional(int i, const CompactWord& word) {
    DivisorClass e = lattice::exceptional(i);
    const auto w = word.view();
    for (auto it = w.rbegin(); it != w.rend(); ++it) e = apply(*it, e);
    return e;
}

// Collects the fixed lines into *lines when given; h0-only callers skip them.
Peel peel(const DivisorClass& d, FixedLines* lines = nullptr) {
    Peel out;
    DivisorClass current = d;
    for (;;) {
        DivisorClass standard = current;
        reduce_to_chamber(standard);

        if (standard.is_zero()) {
            out.effective = true;
            break;
        }
        // l and h are nef, so an effective class pairs nonnegatively with both,
        // and a nonzero effective class has positive degree.
        if (standard.a < 0 || degree(standard) <= 0) break;
        if (standard.b[5] >= 0) {
            out.effective = true;
            out.mobile = current;
            break;
        }
        // Only now is the word needed, to pull the negative lines back.
        CompactWord word;
        standard = current;
        reduce_to_chamber(standard, &word);
        ++out.rounds;
        for (int i = 1; i <= 6; ++i) {
            const Int bi = standard.coeff(i);
            if (bi >= 0) continue;
            const DivisorClass line = pull_back_exceptional(i, word);
            if (lines) lines->add(line, -bi);
            current -= (-bi) * line;
        }
    }
    if (!out.effective && lines) lines->clear();
    return out;
}

Int h0_from_peel(const Peel& p) { return p.effective ? euler_characteristic(p.mobile) : 0; }

Cohomology cohomology_from_peel(const DivisorClass& d, const Peel& p) {
    Cohomology c;
    c.h0 = h0_from_peel(p);
    c.h2 = h0_from_peel(peel(lattice::canonical() - d));
    c.h1 = checked::sub(checked::add(c.h0, c.h2), euler_characteristic(d));
    if (c.h1 < 0)
        throw InconsistencyError("negative h1 for " + to_string(d) + ": peeling and Riemann-Roch disagree");
    return c;
}

void classify_mobile(SystemAnalysis& s) {
    const DivisorClass& m = s.mobile;
    if (m.is_zero()) {
        s.mobile_kind = MobileKind::zero;
        return;
    }
    if (self_intersection(m) > 0) {
        s.mobile_kind = MobileKind::big;
        return;
    }
    // Nef with square zero: standard form must be (m; m,0,0,0,0,0).
    const DivisorClass st = standardize(m).standard;
    const bool shape = st.a > 0 && st.b[0] == st.a && st.b[1] == 0 && st.b[5] == 0;
    if (!shape)
        throw InconsistencyError("square-zero mobile part " + to_string(m) + " has standard form " +
                                 to_string(st) + ", not m(l - e1)");
    s.mobile_kind = MobileKind::conics;
    s.conic_count = st.a;
}

}  // namespace

bool is_nef(const DivisorClass& d) {
    DivisorClass st = d;
    reduce_to_chamber(st);
    return st.b[5] >= 0;
}

bool is_big_and_nef(const DivisorClass& d) { return is_nef(d) && self_intersection(d) > 0; }

SystemAnalysis decompose(const DivisorClass& d) {
    SystemAnalysis s;
    const Peel p = peel(d, &s.fixed_lines);
    s.effective = p.effective;
    s.peel_rounds = p.rounds;
    s.cohomology = cohomology_from_peel(d, p);
    if (!p.effective) return s;
    s.mobile = p.mobile;
    s.fixed_part = d - p.mobile;
    classify_mobile(s);
    return s;
}

Cohomology cohomology(const DivisorClass& d) { return cohomology_from_peel(d, peel(d)); }

Int h0_multiple_line(Int m) {
    if (m < 0) throw DomainError("multiplicity must be nonnegative");
    return checked::mul(m, checked::add(m, 1)) / 2;
}

Int h0_multiple_conic(Int m) {
    if (m < 0) throw DomainError("multiplicity must be nonnegative");
    return m;
}

Int h1_of_minus(const DivisorClass& d) {
    if (d.is_zero()) throw DomainError("h1_of_minus needs a nonzero class");
    const SystemAnalysis s = decompose(d);
    if (!s.effective) throw DomainError("h1_of_minus needs an effective class, got " + to_string(d));

    const auto lines = s.fixed_lines.view();
    const DivisorClass h = lattice::hyperplane();
    Int h0_fixed = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const DivisorClass& li = lines[i].line;
        if (self_intersection(li) != -1 || intersect(li, h) != 1)
            throw InconsistencyError("peeled class " + to_string(li) + " is not a line");
        if (intersect(li, s.mobile) != 0)
            throw InconsistencyError("mobile part meets fixed line " + to_string(li));
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (intersect(li, lines[j].line) != 0)
                throw InconsistencyError("fixed lines " + to_string(li) + " and " + to_string(lines[j].line) +
                                         " meet");
        h0_fixed = checked::add(h0_fixed, h0_multiple_line(lines[i].multiplicity));
    }

    Int h0_mobile = 0;
    switch (s.mobile_kind) {
        case MobileKind::zero: h0_mobile = 0; break;
        case MobileKind::conics: h0_mobile = h0_multiple_conic(s.conic_count); break;
        case MobileKind::big: h0_mobile = 1; break;
    }
    return checked::sub(checked::add(h0_mobile, h0_fixed), 1);
}

}  // namespace cubic
