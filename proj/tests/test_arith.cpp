#include <numeric>

#include "doctest.h"
#include "onth/arith.hpp"

using namespace onth;

namespace {

bool naive_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 naive_phi(i64 n) {
    i64 c = 0;
    for (i64 k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
    return c;
}

// Legendre symbol by Euler's criterion
int euler_legendre(i64 a, i64 p) {
    i64 r = powmod(((a % p) + p) % p, (p - 1) / 2, p);
    return r == 0 ? 0 : r == 1 ? 1 : -1;
}

}  // namespace

TEST_CASE("integer roots") {
    for (i128 n = 0; n < 5000; ++n) {
        i128 r = isqrt(n);
        CHECK(r * r <= n);
        CHECK((r + 1) * (r + 1) > n);
        CHECK(is_square(n) == (r * r == n));
        i128 c = iroot(n, 3);
        CHECK(c * c * c <= n);
        CHECK((c + 1) * (c + 1) * (c + 1) > n);
    }
    i128 big = (i128)1 << 100;
    CHECK(isqrt(big) == (i128)1 << 50);
    CHECK(isqrt(big - 1) == ((i128)1 << 50) - 1);
}

TEST_CASE("checked arithmetic") {
    i128 big = ((i128)1 << 126);
    CHECK_THROWS_AS(cmul(big, 4), OverflowError);
    CHECK_THROWS_AS(cadd(big, big), OverflowError);
    CHECK(cmul(-3, 7) == -21);
    CHECK_THROWS_AS(narrow64((i128)1 << 70), OverflowError);
    CHECK(from_mpz(to_mpz(-big)) == -big);
    CHECK(to_string(-big) == mpz_class(-to_mpz(big)).get_str());
    CHECK(fdiv(-7, 2) == -4);
    CHECK(fmod(-7, 3) == 2);
}

TEST_CASE("primes, factorisation and multiplicative functions") {
    auto ps = primes_up_to(1000);
    std::size_t k = 0;
    for (i64 n = 0; n <= 1000; ++n) {
        CHECK(is_prime(n) == naive_prime(n));
        if (naive_prime(n)) {
            REQUIRE(k < ps.size());
            CHECK(ps[k++] == n);
        }
    }
    CHECK(k == ps.size());
    for (i64 n = 1; n <= 600; ++n) {
        i64 prod = 1;
        int mu = 1;
        for (auto [p, e] : factor(n)) {
            CHECK(naive_prime(p));
            for (int i = 0; i < e; ++i) prod *= p;
            mu = e > 1 ? 0 : -mu;
        }
        CHECK(prod == n);
        CHECK(mobius(n) == mu);
        CHECK(is_squarefree(n) == (mu != 0));
        CHECK(euler_phi(n) == naive_phi(n));
        auto ds = divisors(n);
        std::vector<i64> naive;
        for (i64 d = 1; d <= n; ++d)
            if (n % d == 0) naive.push_back(d);
        CHECK(ds == naive);
        int musum = 0;
        for (i64 d : ds) musum += mobius(d);
        CHECK(musum == (n == 1));
    }
}

TEST_CASE("modular arithmetic") {
    for (i64 m = 2; m <= 60; ++m)
        for (i64 a = 0; a < m; ++a) {
            i64 acc = 1 % m;
            for (i64 e = 0; e <= 12; ++e) {
                CHECK(powmod(a, e, m) == acc);
                acc = acc * a % m;
            }
            if (std::gcd(a, m) == 1) CHECK(invmod(a, m) * a % m == 1);
        }
}

TEST_CASE("Kronecker symbol") {
    for (i64 p : primes_up_to(200)) {
        if (p == 2) continue;
        for (i64 a = -60; a <= 60; ++a) CHECK(kronecker(a, p) == euler_legendre(a, p));
    }
    // (D/2) for D = 1 mod 4 by D mod 8
    for (i64 D = -99; D <= 101; D += 4) CHECK(kronecker(D, 2) == ((D % 8 + 8) % 8 == 1 ? 1 : -1));
    for (i64 n = 1; n <= 50; ++n) CHECK(kronecker(1, n) == 1);
    // complete multiplicativity in the bottom argument
    for (i64 a : {-23, -4, 5, 12, 229})
        for (i64 m = 1; m <= 30; ++m)
            for (i64 n = 1; n <= 30; ++n) CHECK(kronecker(a, m * n) == kronecker(a, m) * kronecker(a, n));
}

TEST_CASE("discriminants") {
    std::vector<i64> fund = {-3, -4, -7, -8, -11, -15, -19, -20, -23, -24, 5, 8, 12, 13, 17, 21, 24, 28, 29};
    for (i64 D : fund) CHECK(is_fundamental(D));
    for (i64 D : {-12, -16, -27, -28, 9, 16, 20, 25, 32, 2, 3, -1, 0})
        CHECK_FALSE(is_fundamental(D));
    CHECK(is_fundamental(1));
    auto neg = fundamental_discriminants(24, -1);
    CHECK(neg == std::vector<i64>{-3, -4, -7, -8, -11, -15, -19, -20, -23, -24});
    auto pos = fundamental_discriminants(29, 1);
    CHECK(pos == std::vector<i64>{5, 8, 12, 13, 17, 21, 24, 28, 29});
    for (i64 d = -2000; d <= 2000; ++d) {
        if (d == 0 || ((d % 4) + 4) % 4 > 1) continue;
        auto [D, f] = split_discriminant(d);
        CHECK(f * f * D == d);
        CHECK(is_fundamental(D));
    }
    CHECK(split_discriminant(49) == std::pair<i64, i64>{1, 7});
    CHECK(split_discriminant(-108) == std::pair<i64, i64>{-3, 6});
}
