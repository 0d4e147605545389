#pragma once

// Random valid (a, beta) pairs over a quadratic order.

#include <array>
#include <cmath>
#include <random>

#include "onth/eisenstein.hpp"

namespace oracle {

using namespace onth;

inline KElem random_elem(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return {mpq_class(d(rng)), mpq_class(d(rng))};
}

// Minkowski coordinates of an element
inline std::array<long double, 2> embed(i64 D, const KElem& x) {
    long double a = x.a.get_d(), b = x.b.get_d();
    long double s = std::sqrt((long double)(D < 0 ? -D : D));
    if (D < 0) return {a, b * s};
    if (D == 1) return {a - b, a + b};
    return {a + b * s, a - b * s};
}

// Lagrange-Gauss reduced basis of a lattice in k
inline std::pair<KElem, KElem> reduced_basis(i64 D, KElem u, KElem v) {
    auto n2 = [&](const KElem& x) {
        auto e = embed(D, x);
        return e[0] * e[0] + e[1] * e[1];
    };
    auto dot = [&](const KElem& x, const KElem& y) {
        auto e = embed(D, x), f = embed(D, y);
        return e[0] * f[0] + e[1] * f[1];
    };
    for (int it = 0; it < 200; ++it) {
        if (n2(u) > n2(v)) std::swap(u, v);
        long long m = std::llround(dot(u, v) / n2(u));
        if (m == 0) break;
        v = kadd(v, kscale(mpq_class((long)-m), u));
    }
    return {u, v};
}

inline IdealPair random_pair(std::mt19937_64& rng, const QuadOrder& O) {
    i64 D = O.k.D;
    QuadIdeal a = order_ideal(O);
    std::uniform_int_distribution<int> np(0, 2);
    auto primes = primes_up_to(13);
    int k = np(rng);
    for (int i = 0; i < k; ++i) {
        i64 p = primes[rng() % primes.size()];
        if (O.f % p == 0) continue;
        auto P = factor_prime(O, p);
        a = ideal_mul(a, P[rng() % P.size()]);
    }
    KElem rho;
    do rho = random_elem(rng, -3, 3);
    while (knorm(D, rho) == 0);
    a = ideal_scale(a, rho);
    QuadIdeal a3 = ideal_pow(a, 3, O);
    std::uniform_int_distribution<int> co(-2, 2);
    KElem beta;
    auto [e0, e1] = reduced_basis(D, a3.basis0(), a3.basis1());
    do beta = kadd(kscale(co(rng), e0), kscale(co(rng), e1));
    while (knorm(D, beta) == 0);
    return {O, a, beta};
}

}  // namespace oracle
