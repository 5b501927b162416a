#include "cubic/weyl.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "cubic/checked.hpp"

namespace cubic {

Reflection Reflection::swap(int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > 6 || i == j) throw DomainError("swap indices must satisfy 1 <= i < j <= 6");
    return {Kind::swap, i, j};
}

std::string to_string(const Reflection& r) {
    if (r.kind == Reflection::Kind::cremona) return "c";
    return "s(" + std::to_string(r.i) + "," + std::to_string(r.j) + ")";
}

DivisorClass apply(const Reflection& r, const DivisorClass& d) {
    DivisorClass out = d;
    if (r.kind == Reflection::Kind::swap) {
        std::swap(out.coeff(r.i), out.coeff(r.j));
        return out;
    }
    const Int b1 = d.b[0], b2 = d.b[1], b3 = d.b[2];
    out.a = checked::sub(checked::mul(2, d.a), checked::add(checked::add(b1, b2), b3));
    out.b[0] = checked::sub(d.a, checked::add(b2, b3));
    out.b[1] = checked::sub(d.a, checked::add(b1, b3));
    out.b[2] = checked::sub(d.a, checked::add(b1, b2));
    return out;
}

DivisorClass apply_word(DivisorClass d, std::span<const Reflection> word) {
    for (const Reflection& r : word) d = apply(r, d);
    return d;
}

std::vector<Reflection> inverse_word(std::span<const Reflection> word) {
    return {word.rbegin(), word.rend()};
}

bool is_standard(const DivisorClass& d) {
    for (std::size_t i = 0; i + 1 < 6; ++i)
        if (d.b[i] < d.b[i + 1]) return false;
    return d.a >= checked::add(checked::add(d.b[0], d.b[1]), d.b[2]);
}

namespace {

std::string limit_message(const DivisorClass& input) {
    return "E-standard reduction exceeded its iteration cap on input " + to_string(input);
}

Int iteration_cap(const DivisorClass& d) {
    Int s = checked::add(checked::abs(d.a), 7);
    for (Int x : d.b) s = checked::add(s, checked::abs(x));
    return checked::mul(10, s);
}

template <bool kRecord, class Record>
void reduce_impl(DivisorClass& d, Record&& record) {
    const DivisorClass input = d;
    Int cap = -1;  // computed on first use; most reductions finish in a few steps
    for (Int steps = 0;; ++steps) {
        if (steps > static_cast<Int>(kMaxReductionLength)) {
            if (cap < 0) cap = iteration_cap(input);
            if (steps > cap) throw IterationLimitError(input);
        }
        if constexpr (kRecord) {
            // Adjacent transpositions only where b_i < b_{i+1}; equal entries never move.
            for (bool moved = true; moved;) {
                moved = false;
                for (int i = 1; i < 6; ++i) {
                    if (d.b[i - 1] < d.b[i]) {
                        std::swap(d.b[i - 1], d.b[i]);
                        record(Reflection{Reflection::Kind::swap, i, i + 1});
                        moved = true;
                    }
                }
            }
        } else {
            std::sort(d.b.begin(), d.b.end(), std::greater<>());
        }
        if (d.a >= checked::add(checked::add(d.b[0], d.b[1]), d.b[2])) return;
        d = apply(Reflection::cremona(), d);
        record(Reflection::cremona());
    }
}

}  // namespace

IterationLimitError::IterationLimitError(const DivisorClass& input)
    : InconsistencyError(limit_message(input)) {}

void CompactWord::push_back(const Reflection& r) {
    if (size_ == items_.size())
        throw InconsistencyError("reduction word longer than the number of positive roots of E6");
    items_[size_++] = r;
}

void reduce_to_chamber(DivisorClass& d, CompactWord* word) {
    if (word)
        reduce_impl<true>(d, [word](const Reflection& r) { word->push_back(r); });
    else
        reduce_impl<false>(d, [](const Reflection&) {});
}

StandardForm standardize(const DivisorClass& d) {
    StandardForm out{d, {}};
    reduce_impl<true>(out.standard, [&out](const Reflection& r) { out.word.push_back(r); });
    return out;
}

}  // namespace cubic
