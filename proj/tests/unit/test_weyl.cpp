#include <doctest.h>

#include <random>

#include "cubic/errors.hpp"
#include "cubic/weyl.hpp"

using namespace cubic;

namespace {

DivisorClass random_class(std::mt19937_64& rng, Int r) {
    std::uniform_int_distribution<Int> u(-r, r);
    DivisorClass d{u(rng), {}};
    for (Int& x : d.b) x = u(rng);
    return d;
}

Reflection random_reflection(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(1, 6);
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) return Reflection::cremona();
    int i = pick(rng), j = pick(rng);
    while (j == i) j = pick(rng);
    return Reflection::swap(i, j);
}

std::vector<Reflection> random_word(std::mt19937_64& rng) {
    std::vector<Reflection> w(std::uniform_int_distribution<std::size_t>(0, 20)(rng));
    for (Reflection& r : w) r = random_reflection(rng);
    return w;
}

}  // namespace

TEST_CASE("cremona formula") {
    CHECK(apply(Reflection::cremona(), DivisorClass{3, {2, 2, 2, 0, 0, 0}}) == DivisorClass{0, {-1, -1, -1, 0, 0, 0}});
    CHECK(apply(Reflection::cremona(), DivisorClass{5, {1, 2, 3, 4, 5, 6}}) == DivisorClass{4, {0, 1, 2, 4, 5, 6}});
}

TEST_CASE("apply_word") {
    const DivisorClass d{3, {2, 2, 2, 0, 0, 0}};
    CHECK(apply_word(d, {}) == d);
    const Reflection c[] = {Reflection::cremona()};
    CHECK(apply_word(d, c) == DivisorClass{0, {-1, -1, -1, 0, 0, 0}});
    const Reflection s16[] = {Reflection::swap(1, 6)};
    CHECK(apply_word(DivisorClass{0, {-1, 0, 0, 0, 0, 0}}, s16) == DivisorClass{0, {0, 0, 0, 0, 0, -1}});
}

TEST_CASE("swap validation") {
    CHECK_THROWS_AS(Reflection::swap(0, 2), DomainError);
    CHECK_THROWS_AS(Reflection::swap(3, 3), DomainError);
    CHECK(Reflection::swap(4, 2) == Reflection::swap(2, 4));
    CHECK(to_string(Reflection::swap(1, 2)) == "s(1,2)");
    CHECK(to_string(Reflection::cremona()) == "c");
}

TEST_CASE("standardize examples") {
    const StandardForm already = standardize(DivisorClass{12, {4, 4, 4, 4, 4, 2}});
    CHECK(already.standard == DivisorClass{12, {4, 4, 4, 4, 4, 2}});
    CHECK(already.word.empty());

    CHECK(standardize(DivisorClass{12, {2, 4, 4, 4, 4, 4}}).standard == DivisorClass{12, {4, 4, 4, 4, 4, 2}});

    const DivisorClass d{3, {2, 2, 2, 0, 0, 0}};
    const StandardForm s = standardize(d);
    const DivisorClass expected{0, {0, 0, 0, -1, -1, -1}};
    CHECK(s.standard == expected);
    CHECK(apply_word(d, s.word) == expected);
    // Invariants, computed by hand: d = 3, D^2 = -3, D.K = -3.
    CHECK(degree(d) == 3);
    CHECK(degree(expected) == 3);
    CHECK(self_intersection(d) == -3);
    CHECK(self_intersection(expected) == -3);
    CHECK(intersect(d, lattice::canonical()) == -3);
    CHECK(intersect(expected, lattice::canonical()) == -3);
}

TEST_CASE("ties are not swapped") {
    const StandardForm s = standardize(DivisorClass{20, {3, 3, 3, 3, 3, 3}});
    CHECK(s.word.empty());
    const StandardForm t = standardize(DivisorClass{20, {1, 3, 3, 3, 3, 3}});
    // e1 must travel to the end: five adjacent transpositions, nothing else.
    CHECK(t.word.size() == 5);
}

TEST_CASE("every generator is an involution preserving the form") {
    std::mt19937_64 rng(3);
    std::vector<Reflection> gens{Reflection::cremona()};
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) gens.push_back(Reflection::swap(i, j));
    for (int t = 0; t < 500; ++t) {
        const DivisorClass x = random_class(rng, 100), y = random_class(rng, 100);
        for (const Reflection& r : gens) {
            REQUIRE(apply(r, apply(r, x)) == x);
            REQUIRE(intersect(apply(r, x), apply(r, y)) == intersect(x, y));
        }
    }
    for (const Reflection& r : gens) CHECK(apply(r, lattice::canonical()) == lattice::canonical());
}

TEST_CASE("orbit invariance and canonical representative") {
    std::mt19937_64 rng(5);
    const DivisorClass k = lattice::canonical();
    for (int t = 0; t < 3000; ++t) {
        const DivisorClass d = random_class(rng, 40);
        const auto w = random_word(rng);
        const DivisorClass moved = apply_word(d, w);
        REQUIRE(degree(moved) == degree(d));
        REQUIRE(self_intersection(moved) == self_intersection(d));
        REQUIRE(intersect(moved, k) == intersect(d, k));

        const StandardForm s = standardize(d);
        REQUIRE(is_standard(s.standard));
        REQUIRE(apply_word(d, s.word) == s.standard);
        REQUIRE(apply_word(s.standard, inverse_word(s.word)) == d);
        REQUIRE(s.word.size() <= kMaxReductionLength);
        REQUIRE(standardize(moved).standard == s.standard);
    }
}

TEST_CASE("cremona steps strictly decrease a") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 2000; ++t) {
        DivisorClass d = random_class(rng, 25);
        const StandardForm s = standardize(d);
        Int last_a = std::numeric_limits<Int>::max();
        for (const Reflection& r : s.word) {
            if (r.kind == Reflection::Kind::cremona) {
                const DivisorClass next = apply(r, d);
                REQUIRE(next.a < d.a);
                REQUIRE(next.a < last_a);
                last_a = next.a;
            }
            d = apply(r, d);
        }
    }
}

TEST_CASE("reduce_to_chamber agrees with standardize") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 1000; ++t) {
        const DivisorClass d = random_class(rng, 60);
        DivisorClass e = d;
        CompactWord w;
        reduce_to_chamber(e, &w);
        const StandardForm s = standardize(d);
        REQUIRE(e == s.standard);
        REQUIRE(std::vector<Reflection>(w.view().begin(), w.view().end()) == s.word);
    }
}
