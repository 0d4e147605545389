#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "onth/arith.hpp"

namespace onth {

// x0 u^3 + x1 u^2 v + x2 u v^2 + x3 v^3
struct CubicForm {
    i64 x0 = 0, x1 = 0, x2 = 0, x3 = 0;
    auto operator<=>(const CubicForm&) const = default;
    i64 operator[](int i) const { return i == 0 ? x0 : i == 1 ? x1 : i == 2 ? x2 : x3; }
    CubicForm operator-() const { return {-x0, -x1, -x2, -x3}; }
    std::string str() const;
};

// A u^2 + B u v + C v^2
struct QuadCovariant {
    i128 A = 0, B = 0, C = 0;
    bool operator==(const QuadCovariant&) const = default;
    i128 disc() const { return csub(cmul(B, B), cmul(4, cmul(A, C))); }
};

// (C0, 3C1, 3C2, C3) stored as C0..C3 (the unscaled middle coefficients)
struct JacobianCovariant {
    i128 C0 = 0, C1 = 0, C2 = 0, C3 = 0;
    bool operator==(const JacobianCovariant&) const = default;
};

// [[a, b], [c, d]] with ad - bc = 1. Acts by (g x)(u, v) = x((u, v) g).
struct Unimodular {
    i64 a = 1, b = 0, c = 0, d = 1;
    bool operator==(const Unimodular&) const = default;
    Unimodular operator*(const Unimodular& o) const;
    Unimodular inverse() const { return {d, -b, -c, a}; }
    static Unimodular identity() { return {}; }
    static Unimodular S() { return {0, 1, -1, 0}; }
    static Unimodular T(i64 k = 1) { return {1, k, 0, 1}; }
};

enum class Lattice { L, Ldual };
enum class Convention { L, Ldual };
enum class Sign { Pos, Neg };

struct OrbitRecord {
    CubicForm form;
    i64 disc = 0;
    int stabilizer = 1;
    bool operator==(const OrbitRecord&) const = default;
};

bool in_dual_lattice(const CubicForm& f);
i128 discriminant(const CubicForm& f);
CubicForm act(const Unimodular& g, const CubicForm& f);
QuadCovariant act(const Unimodular& g, const QuadCovariant& h);
JacobianCovariant act(const Unimodular& g, const JacobianCovariant& j);

QuadCovariant hessian(const CubicForm& f, Convention conv);
JacobianCovariant jacobian(const CubicForm& f);

// J^2 - disc(H) x^2 = 4 H^3 with x written as x0 u^3 + 3x1 u^2 v + 3x2 u v^2 + x3 v^3
bool check_syzygy(const CubicForm& f);
bool check_syzygy(const CubicForm& f, const JacobianCovariant& j);  // j supplied by caller
// J + d sqrt(D) x = (C0 + d sqrt(D) x0)(u + (B1 - d sqrt(D))/(2B0) v)^3, disc = -27 d^2 D
bool check_refined_syzygy(const CubicForm& f);
bool check_refined_syzygy(const CubicForm& f, const JacobianCovariant& j);

// first of T, T^2, ... (up to a fixed cap), then S, making B0 nonzero
Unimodular b0_fixing_translate(const CubicForm& f);

int stabilizer_order(const CubicForm& f);

struct Canonical {
    CubicForm form;
    Unimodular g;  // act(g, input) == form
};
Canonical canonicalize(const CubicForm& f);
bool is_weakly_reduced(const CubicForm& f);

// one record per orbit; sorted by |disc| then coefficients
std::vector<OrbitRecord> enumerate_orbits(Lattice lat, Sign sign, i64 bound);
// serial reference implementation of the same enumeration
std::vector<OrbitRecord> enumerate_orbits_serial(Lattice lat, Sign sign, i64 bound);

// f(u, v) mod p in [0, p)
i64 eval_mod(const CubicForm& f, i64 u, i64 v, i64 p);
// roots of f in P^1(F_p), as (u, v) with v in {0, 1}; f = 0 mod p gives all p + 1 points
std::vector<std::pair<i64, i64>> projective_roots(const CubicForm& f, i64 p);
// the cubic ring of f is maximal at p
bool is_maximal_at(const CubicForm& f, i64 p);
bool is_maximal(const CubicForm& f);

}  // namespace onth
