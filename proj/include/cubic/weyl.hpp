#pragma once

// W(E6) acting on Pic S through the simple reflections: the transpositions
// of b_i, b_j and the Cremona reflection in l - e1 - e2 - e3.

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/picard.hpp"

namespace cubic {

struct Reflection {
    enum class Kind { swap, cremona };

    Kind kind = Kind::cremona;
    int i = 0;  // 1-based, only for swap
    int j = 0;

    static Reflection swap(int i, int j);
    static Reflection cremona() { return {}; }

    friend bool operator==(const Reflection&, const Reflection&) = default;
};

/// "s(i,j)" or "c".
std::string to_string(const Reflection& r);

DivisorClass apply(const Reflection& r, const DivisorClass& d);

/// Reflections applied left to right.
DivisorClass apply_word(DivisorClass d, std::span<const Reflection> word);

/// The inverse of a word: reflections are involutions, so this is the reversal.
std::vector<Reflection> inverse_word(std::span<const Reflection> word);

/// b1 >= ... >= b6 and a >= b1 + b2 + b3.
bool is_standard(const DivisorClass& d);

struct StandardForm {
    DivisorClass standard;
    std::vector<Reflection> word;  // apply_word(input, word) == standard
};

class IterationLimitError : public InconsistencyError {
public:
    explicit IterationLimitError(const DivisorClass& input);
};

StandardForm standardize(const DivisorClass& d);

/// Number of positive roots of E6. Every reduction applies a simple reflection
/// only against a negative pairing, so no word is ever longer than this.
inline constexpr std::size_t kMaxReductionLength = 36;

/// Word storage for the hot paths of surface_cohomology (no allocation).
class CompactWord {
public:
    void push_back(const Reflection& r);
    std::span<const Reflection> view() const { return {items_.data(), size_}; }
    std::size_t size() const { return size_; }

private:
    std::array<Reflection, kMaxReductionLength> items_{};
    std::size_t size_ = 0;
};

/// In-place reduction to the E-standard chamber; records the word if asked.
void reduce_to_chamber(DivisorClass& d, CompactWord* word = nullptr);

}  // namespace cubic
