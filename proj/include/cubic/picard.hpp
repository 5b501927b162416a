#pragma once

// Picard lattice of a smooth cubic surface, written in an exceptional basis
// {l, e1, ..., e6}: the tuple (a; b1..b6) is the class a*l - sum b_i*e_i.
// The intersection form is l^2 = 1, e_i^2 = -1, all other products zero.

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cubic {

using Int = std::int64_t;

struct DivisorClass {
    Int a = 0;
    std::array<Int, 6> b{};

    /// 1-based access to b_i, matching the usual e_1..e_6 labels.
    Int& coeff(int i) { return b[static_cast<std::size_t>(i - 1)]; }
    Int coeff(int i) const { return b[static_cast<std::size_t>(i - 1)]; }

    bool is_zero() const;

    DivisorClass& operator+=(const DivisorClass& o);
    DivisorClass& operator-=(const DivisorClass& o);

    friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
    friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
    friend DivisorClass operator-(const DivisorClass& x);
    friend DivisorClass operator*(Int k, const DivisorClass& x);

    /// Lexicographic on (a, b1, ..., b6).
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

namespace lattice {

/// h = 3l - sum e_i, the hyperplane class.
DivisorClass hyperplane();
/// K_S = -h.
DivisorClass canonical();
/// The class e_i, i.e. the tuple with -1 in slot i.
DivisorClass exceptional(int i);
/// l, the pullback of a line of the plane.
DivisorClass line_pullback();

}  // namespace lattice

Int intersect(const DivisorClass& x, const DivisorClass& y);
inline Int self_intersection(const DivisorClass& x) { return intersect(x, x); }

/// D.h = 3a - sum b_i.
Int degree(const DivisorClass& d);

/// binom(a-1, 2) - sum binom(b_i, 2), with binom(n, 2) = n(n-1)/2 for every integer n.
Int genus(const DivisorClass& d);

/// (D^2 + D.K)/2 + 1.
Int adjunction_genus(const DivisorClass& d);

/// Riemann-Roch on S: chi(O_S(D)) = D.(D - K)/2 + 1.
Int euler_characteristic(const DivisorClass& d);

/// binom(n, 2) extended to all integers.
Int binom2(Int n);

/// "(a;b1,b2,b3,b4,b5,b6)".
std::string to_string(const DivisorClass& d);
std::ostream& operator<<(std::ostream& os, const DivisorClass& d);

}  // namespace cubic
