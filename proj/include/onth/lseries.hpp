#pragma once

#include <string>
#include <vector>

#include "onth/characters.hpp"
#include "onth/cubic_forms.hpp"
#include "onth/dirichlet.hpp"

namespace onth {

// sum over integral ideals b prime to the conductor of chi(b) N(b)^{-s}, by Euler product
DirichletCoeffs L_star_coeffs(const QuadOrder& O, const Character& chi, i64 N);
// sum over all integral invertible ideals, assembled from the L* series of the
// intermediate orders between the conductor of chi and O
DirichletCoeffs L_coeffs(const QuadOrder& O, const Character& chi, i64 N);
// inverse of L_coeffs: L* recovered from the L series of the intermediate orders
DirichletCoeffs L_star_from_L(const QuadOrder& O, const Character& chi, i64 N);

// counts[n][A] = number of integral invertible ideals of norm n in class A,
// restricted to ideals prime to the conductor when truncated
std::vector<std::vector<i64>> class_counts(const QuadOrder& O, i64 N, bool truncated);
// the full counts are assembled from the truncated counts of the overorders
// O_{m'}, m' | m, each shifted by (m/m')^2 and weighted by the unit index
DirichletCoeffs partial_zeta(const QuadOrder& O, int cls, i64 N, bool truncated);

struct SeriesCheck {
    bool pass = false;
    DirichletCoeffs lhs, rhs;
};

// sum_u |U(O_d, O_ud)| u^{-s}  against  zeta(s - 1) prod_{p not | d} (1 - (D/p) p^{-s})
SeriesCheck check_lemma56(i64 d, i64 D, i64 N);
bool verify_lemma56(i64 d, i64 D, i64 N);

// polynomial in X = p^{-s}, low degree first
using CycPoly = std::vector<Cyc>;
CycPoly poly_mul(const CycPoly& x, const CycPoly& y);
CycPoly poly_add(const CycPoly& x, const CycPoly& y);
bool poly_eq(const CycPoly& x, const CycPoly& y);
// prod over primes P above p of (1 - chi(P) X^{deg P}), p not dividing the conductor
CycPoly local_factor(const Character& chi, i64 p);

struct EulerFactorCheck {
    bool identity = false;  // the three-term identity in X
    bool a_p_form = false;  // local factor equals 1 - a_p X + (D/p) X^2
    Cyc a_p;
};
// throws for even-order chi or p dividing the conductor
EulerFactorCheck euler_factor_check(const Character& chi, i64 p);

// sum_d d^{-s} L(s, chi, O_{fd}) against zeta(s) zeta(3s - 1) L*(s) / L*(2s)
SeriesCheck check_thm51(const Character& chi, i64 N);
bool verify_thm51(const Character& chi, i64 N);

// number of roots of f in P^1(F_p), minus one
i64 a_p_point_count(const CubicForm& f, i64 p);
// some cubic character of the order of discriminant disc(f) matches the point
// counts of f at every prime p < pmax prime to the conductor; -1 when none does
struct PointCountMatch {
    i64 D = 0, f = 0;
    int character = -1;  // index into cubic_characters
};
PointCountMatch match_point_counts(const CubicForm& f, i64 pmax);

}  // namespace onth
