#include "cubic/picard.hpp"

#include <ostream>
#include <sstream>

#include "cubic/checked.hpp"

namespace cubic {

bool DivisorClass::is_zero() const {
    if (a != 0) return false;
    for (Int x : b)
        if (x != 0) return false;
    return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
    a = checked::add(a, o.a);
    for (std::size_t i = 0; i < 6; ++i) b[i] = checked::add(b[i], o.b[i]);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
    a = checked::sub(a, o.a);
    for (std::size_t i = 0; i < 6; ++i) b[i] = checked::sub(b[i], o.b[i]);
    return *this;
}

DivisorClass operator-(const DivisorClass& x) {
    DivisorClass r;
    r.a = checked::neg(x.a);
    for (std::size_t i = 0; i < 6; ++i) r.b[i] = checked::neg(x.b[i]);
    return r;
}

DivisorClass operator*(Int k, const DivisorClass& x) {
    DivisorClass r;
    r.a = checked::mul(k, x.a);
    for (std::size_t i = 0; i < 6; ++i) r.b[i] = checked::mul(k, x.b[i]);
    return r;
}

namespace lattice {

DivisorClass hyperplane() { return {3, {1, 1, 1, 1, 1, 1}}; }

DivisorClass canonical() { return {-3, {-1, -1, -1, -1, -1, -1}}; }

DivisorClass exceptional(int i) {
    if (i < 1 || i > 6) throw DomainError("exceptional class index must be in 1..6");
    DivisorClass e;
    e.coeff(i) = -1;
    return e;
}

DivisorClass line_pullback() { return {1, {}}; }

}  // namespace lattice

Int intersect(const DivisorClass& x, const DivisorClass& y) {
    Int r = checked::mul(x.a, y.a);
    for (std::size_t i = 0; i < 6; ++i) r = checked::sub(r, checked::mul(x.b[i], y.b[i]));
    return r;
}

Int degree(const DivisorClass& d) {
    Int r = checked::mul(3, d.a);
    for (Int x : d.b) r = checked::sub(r, x);
    return r;
}

Int binom2(Int n) {
    // n(n-1) is always even, so the division is exact.
    return checked::mul(n, checked::sub(n, 1)) / 2;
}

Int genus(const DivisorClass& d) {
    Int r = binom2(checked::sub(d.a, 1));
    for (Int x : d.b) r = checked::sub(r, binom2(x));
    return r;
}

Int adjunction_genus(const DivisorClass& d) {
    const Int twice = checked::add(self_intersection(d), intersect(d, lattice::canonical()));
    return checked::add(twice / 2, 1);
}

Int euler_characteristic(const DivisorClass& d) {
    const Int twice = intersect(d, d - lattice::canonical());
    return checked::add(twice / 2, 1);
}

std::string to_string(const DivisorClass& d) {
    std::ostringstream os;
    os << d;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& d) {
    os << '(' << d.a << ';';
    for (std::size_t i = 0; i < 6; ++i) os << (i ? "," : "") << d.b[i];
    return os << ')';
}

}  // namespace cubic
