#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace onth {

using i64 = std::int64_t;
using i128 = __int128;

struct OverflowError : std::overflow_error {
    OverflowError() : std::overflow_error("128-bit overflow") {}
};

// checked 128-bit operations
inline i128 cadd(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline i128 csub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError();
    return r;
}
inline i128 cmul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
    return r;
}

// Value wrapper whose arithmetic throws on overflow; lets polynomial code be
// written once for both this type and mpz_class.
struct Ck {
    i128 v = 0;
    Ck() = default;
    Ck(i128 x) : v(x) {}
    friend Ck operator+(Ck a, Ck b) { return cadd(a.v, b.v); }
    friend Ck operator-(Ck a, Ck b) { return csub(a.v, b.v); }
    friend Ck operator*(Ck a, Ck b) { return cmul(a.v, b.v); }
    friend Ck operator-(Ck a) { return csub(0, a.v); }
    Ck& operator+=(Ck b) { return *this = *this + b; }
    Ck& operator-=(Ck b) { return *this = *this - b; }
    Ck& operator*=(Ck b) { return *this = *this * b; }
    friend bool operator==(Ck a, Ck b) { return a.v == b.v; }
};

// canonical rational num/den
template <class N, class D>
inline mpq_class qfrac(const N& num, const D& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(i128 x);
mpz_class to_mpz(i128 x);
i128 from_mpz(const mpz_class& z);  // throws OverflowError if out of range
i64 narrow64(i128 x);                // throws OverflowError if out of range

inline i128 iabs(i128 x) { return x < 0 ? -x : x; }
i128 gcd(i128 a, i128 b);
i64 gcd(i64 a, i64 b);
inline i64 lcm(i64 a, i64 b) { return a / gcd(a, b) * b; }

// floor division and nonnegative remainder
inline i128 fdiv(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline i128 fmod(i128 a, i128 b) { return a - fdiv(a, b) * b; }

// floor(sqrt(n)) for n >= 0
i128 isqrt(i128 n);
bool is_square(i128 n, i128* root = nullptr);
// floor(n^(1/k)) for n >= 0
i128 iroot(i128 n, int k);

i64 powmod(i64 b, i64 e, i64 m);
i64 invmod(i64 a, i64 m);  // requires gcd(a, m) = 1

bool is_prime(i64 n);
std::vector<i64> primes_up_to(i64 n);
// prime factorisation as (p, e) pairs, p ascending
std::vector<std::pair<i64, int>> factor(i64 n);
std::vector<i64> divisors(i64 n);  // ascending
std::vector<i64> prime_divisors(i64 n);
int mobius(i64 n);
i64 euler_phi(i64 n);
bool is_squarefree(i64 n);

// Kronecker symbol (a/n); for a = 1 this is 1 for every n, which matches the
// split-algebra convention.
int kronecker(i64 a, i64 n);

// fundamental discriminant of a quadratic field, or 1 for Q + Q
bool is_fundamental(i64 d);
// fundamental discriminants with 1 < |D| <= bound of the given sign, ascending |D|
std::vector<i64> fundamental_discriminants(i64 bound, int sign);
// (D, f) with d = f^2 D and D fundamental or 1; requires d = 0, 1 mod 4, d != 0
std::pair<i64, i64> split_discriminant(i64 d);

}  // namespace onth
