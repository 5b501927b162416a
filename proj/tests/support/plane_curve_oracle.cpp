#include "plane_curve_oracle.hpp"

#include <random>
#include <utility>
#include <vector>

namespace oracle {

namespace {

using u64 = std::uint64_t;
constexpr u64 kPrime = (u64{1} << 61) - 1;

u64 mulmod(u64 x, u64 y) { return static_cast<u64>((static_cast<unsigned __int128>(x) * y) % kPrime); }
u64 submod(u64 x, u64 y) { return (x + kPrime - y) % kPrime; }

u64 powmod(u64 x, u64 e) {
    u64 r = 1;
    for (; e; e >>= 1, x = mulmod(x, x))
        if (e & 1) r = mulmod(r, x);
    return r;
}

u64 inv(u64 x) { return powmod(x, kPrime - 2); }

u64 binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    u64 r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<u64>(n - k + i) / static_cast<u64>(i);
    return r % kPrime;
}

std::size_t rank(std::vector<std::vector<u64>> m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        const u64 iv = inv(m[r][c]);
        for (u64& x : m[r]) x = mulmod(x, iv);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const u64 f = m[i][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] = submod(m[i][k], mulmod(f, m[r][k]));
        }
        ++r;
    }
    return r;
}

}  // namespace

std::int64_t plane_curve_h0(const cubic::DivisorClass& d, std::uint64_t seed) {
    const int a = static_cast<int>(d.a);
    if (a < 0) return 0;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> dist(1, kPrime - 1);
    std::vector<std::pair<int, int>> monomials;  // x^u y^v, u + v <= a (affine chart z = 1)
    for (int u = 0; u <= a; ++u)
        for (int v = 0; u + v <= a; ++v) monomials.emplace_back(u, v);

    std::vector<std::vector<u64>> rows;
    for (int p = 0; p < 6; ++p) {
        const u64 x0 = dist(rng), y0 = dist(rng);
        const int mult = static_cast<int>(d.b[static_cast<std::size_t>(p)]);
        // Vanishing of the coefficient of (x-x0)^i (y-y0)^j for all i + j < mult.
        for (int i = 0; i < mult; ++i)
            for (int j = 0; i + j < mult; ++j) {
                std::vector<u64> row(monomials.size(), 0);
                for (std::size_t k = 0; k < monomials.size(); ++k) {
                    const auto [u, v] = monomials[k];
                    if (u < i || v < j) continue;
                    row[k] = mulmod(mulmod(binom(u, i), binom(v, j)),
                                    mulmod(powmod(x0, static_cast<u64>(u - i)), powmod(y0, static_cast<u64>(v - j))));
                }
                rows.push_back(std::move(row));
            }
    }
    return static_cast<std::int64_t>(monomials.size() - rank(std::move(rows)));
}

std::int64_t raw_chi(const cubic::DivisorClass& d) {
    // D^2 = a^2 - sum b_i^2, D.K = -3a + sum b_i.
    std::int64_t sq = d.a * d.a, dk = -3 * d.a;
    for (std::int64_t b : d.b) {
        sq -= b * b;
        dk += b;
    }
    return (sq - dk) / 2 + 1;
}

Triple plane_curve_cohomology(const cubic::DivisorClass& d, std::uint64_t seed) {
    cubic::DivisorClass dual;  // K - D
    dual.a = -3 - d.a;
    for (std::size_t i = 0; i < 6; ++i) dual.b[i] = -1 - d.b[i];
    const std::int64_t h0 = plane_curve_h0(d, seed);
    const std::int64_t h2 = plane_curve_h0(dual, seed);
    return {h0, h0 + h2 - raw_chi(d), h2};
}

}  // namespace oracle
