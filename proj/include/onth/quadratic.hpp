#pragma once

#include <string>
#include <vector>

#include "onth/arith.hpp"

namespace onth {

// Q(sqrt D) for a fundamental discriminant D, or Q + Q when D = 1.
struct QuadraticEtale {
    i64 D = 1;
    bool split() const { return D == 1; }
    bool real() const { return D > 1; }
    bool imaginary() const { return D < 0; }
    bool operator==(const QuadraticEtale&) const = default;
};

// O_{k,f} = Z + f O_k
struct QuadOrder {
    QuadraticEtale k;
    i64 f = 1;
    i64 disc() const { return f * f * k.D; }
    bool operator==(const QuadOrder&) const = default;
    std::string str() const;
};

QuadraticEtale make_etale(i64 D);  // validates D
QuadOrder make_order(i64 D, i64 f);

// a + b sqrt(D); for D = 1, sqrt(D) is the idempotent-free element (-1, 1) of Q + Q
struct KElem {
    mpq_class a, b;
    bool operator==(const KElem& o) const { return a == o.a && b == o.b; }
};

KElem kmul(i64 D, const KElem& x, const KElem& y);
KElem kadd(const KElem& x, const KElem& y);
KElem kconj(const KElem& x);  // tau
mpq_class knorm(i64 D, const KElem& x);
mpq_class ktrace(const KElem& x);
KElem kinv(i64 D, const KElem& x);
KElem kpow(i64 D, KElem x, i64 e);
KElem kscale(const mpq_class& q, const KElem& x);
// coordinates over {1, omega}, omega = (D + sqrt D)/2
std::pair<mpq_class, mpq_class> to_omega(i64 D, const KElem& x);
KElem from_omega(i64 D, const mpq_class& x, const mpq_class& y);
// (first, second) components of an element of Q + Q
std::pair<mpq_class, mpq_class> components(const KElem& x);
KElem from_components(const mpq_class& u, const mpq_class& v);
std::string kstr(const KElem& x);
// all rho in k with rho^3 = g, g invertible
std::vector<KElem> kcube_roots(i64 D, const KElem& g);

// scale * (Z a + Z (b + c omega)), a, c > 0, 0 <= b < a, gcd(a, b, c) = 1
struct QuadIdeal {
    i64 D = 1;
    mpq_class scale = 1;
    i64 a = 1, b = 0, c = 1;
    bool operator==(const QuadIdeal& o) const {
        return D == o.D && scale == o.scale && a == o.a && b == o.b && c == o.c;
    }
    bool operator<(const QuadIdeal& o) const;
    std::string str() const;
    KElem basis0() const;
    KElem basis1() const;
};

QuadIdeal ideal_from_generators(i64 D, const std::vector<KElem>& gens);
QuadIdeal order_ideal(const QuadOrder& O);  // O itself as a lattice
QuadIdeal principal(const QuadOrder& O, const KElem& alpha);
QuadIdeal ideal_mul(const QuadIdeal& x, const QuadIdeal& y);
QuadIdeal ideal_conj(const QuadIdeal& x);
QuadIdeal ideal_scale(const QuadIdeal& x, const KElem& alpha);
QuadIdeal ideal_pow(const QuadIdeal& x, int e, const QuadOrder& O);
bool ideal_contains(const QuadIdeal& x, const KElem& alpha);
bool ideal_subset(const QuadIdeal& x, const QuadIdeal& y);  // x inside y
mpq_class lattice_det(const QuadIdeal& x);                  // covolume in {1, omega} coordinates
// conductor of the multiplier ring {g : g x in x}
i64 multiplier_conductor(const QuadIdeal& x);
bool is_module_over(const QuadIdeal& x, const QuadOrder& O);
bool ideal_invertible(const QuadIdeal& x, const QuadOrder& O);
mpq_class ideal_norm(const QuadIdeal& x, const QuadOrder& O);
// x^{-1} = conj(x) / N(x) for invertible x
QuadIdeal ideal_inverse(const QuadIdeal& x, const QuadOrder& O);
// colon ideal (O : x) = {g : g x in O}
QuadIdeal colon(const QuadOrder& O, const QuadIdeal& x);
bool is_integral(const QuadIdeal& x, const QuadOrder& O);
// extension a -> a O' and contraction b -> b cap O
QuadIdeal extend(const QuadIdeal& x, const QuadOrder& Oprime);
QuadIdeal contract(const QuadIdeal& x, const QuadOrder& O);
// integral x with x + m O = O, where m defaults to the conductor of O
bool coprime_to_conductor(const QuadIdeal& x, const QuadOrder& O, i64 m = 0);

// primes of O above p (p not dividing the conductor)
std::vector<QuadIdeal> factor_prime(const QuadOrder& O, i64 p);

struct UnitData {
    QuadOrder order;
    int torsion = 2;
    i64 fundamental_unit_power = 0;  // real case: j with eps_k^j generating O^* mod +-1
    KElem eps;                       // generator of O^* modulo torsion (real case)
};

// fundamental unit of O_k for real k, exact
KElem fundamental_unit(i64 D);
UnitData unit_data(const QuadOrder& O);
i64 unit_index(const QuadOrder& Oprime, const QuadOrder& O);  // [O'^* : O^*]
// |O^* / O^{*3}| computed from the unit group
int unit_cube_quotient(const QuadOrder& O);

// primitive binary quadratic form A x^2 + B xy + C y^2 attached to an ideal
struct BinaryForm {
    i64 A, B, C;
    bool operator==(const BinaryForm&) const = default;
};
// x = s * (Z |A| + Z (-B + sqrt(disc O))/2), form primitive of discriminant disc(O)
std::pair<mpq_class, BinaryForm> ideal_to_form(const QuadIdeal& x, const QuadOrder& O);
QuadIdeal form_to_ideal(const BinaryForm& F, const QuadOrder& O);

}  // namespace onth
