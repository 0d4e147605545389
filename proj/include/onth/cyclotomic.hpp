#pragma once

#include <string>
#include <vector>

#include "onth/arith.hpp"

namespace onth {

// exp(2 pi i num / den), normalised so 0 <= num < den and gcd(num, den) = 1
struct RootOfUnity {
    i64 num = 0, den = 1;
    static RootOfUnity make(i64 num, i64 den);
    RootOfUnity operator*(const RootOfUnity& o) const;
    RootOfUnity conj() const { return make(-num, den); }
    RootOfUnity pow(i64 e) const;
    bool is_one() const { return num == 0; }
    bool operator==(const RootOfUnity&) const = default;
};

// integer coefficients of the n-th cyclotomic polynomial, low degree first
const std::vector<i64>& cyclotomic_poly(i64 n);

// element of Q(zeta_e) in the power basis 1, zeta, ..., zeta^(phi(e)-1)
struct Cyc {
    i64 e = 1;
    std::vector<mpq_class> c{0};

    Cyc() = default;
    Cyc(const mpq_class& q) : c{q} {}
    Cyc(long q) : c{mpq_class(q)} {}
    static Cyc root(const RootOfUnity& z);
    static Cyc zero() { return Cyc(); }

    bool is_zero() const;
    bool is_rational() const;
    mpq_class rational() const;  // throws unless rational
    Cyc lift(i64 L) const;       // same element in Q(zeta_L), e | L
    Cyc conj() const;
    std::string str() const;

    friend Cyc operator+(const Cyc& x, const Cyc& y);
    friend Cyc operator-(const Cyc& x, const Cyc& y);
    friend Cyc operator*(const Cyc& x, const Cyc& y);
    friend Cyc operator-(const Cyc& x);
    Cyc& operator+=(const Cyc& y) { return *this = *this + y; }
    Cyc& operator-=(const Cyc& y) { return *this = *this - y; }
    Cyc& operator*=(const Cyc& y) { return *this = *this * y; }
    friend bool operator==(const Cyc& x, const Cyc& y);
};

}  // namespace onth
