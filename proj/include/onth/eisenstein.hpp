#pragma once

#include <vector>

#include "onth/class_group.hpp"
#include "onth/cubic_forms.hpp"
#include "onth/dirichlet.hpp"

namespace onth {

// (a, beta) with a an invertible O_{k,c}-ideal, beta in a^3 and N(beta a^{-3}) = b
struct IdealPair {
    QuadOrder order;
    QuadIdeal a;
    KElem beta;
};

// b = N(beta a^{-3}); throws when the pair is invalid
i64 pair_b(const IdealPair& p);
void check_pair(const IdealPair& p);
// (rho a, rho^3 beta)
IdealPair pair_act(const IdealPair& p, const KElem& rho);
// same class under (a, beta) ~ (rho a, rho^3 beta)
bool pair_equivalent(const IdealPair& x, const IdealPair& y);
// the integral ideal beta a^{-3}
QuadIdeal pair_image(const IdealPair& p);

// the form Tr(beta (a1^tau u + a2^tau v)^3 / (c sqrt(D) N(a)^3)) before canonicalisation
CubicForm psi_raw(const IdealPair& p);
// canonical orbit representative
CubicForm psi(const IdealPair& p);
// pair of a form in the dual lattice with nonzero discriminant
IdealPair psi_inverse(const CubicForm& f);

// |Cl^(3)| |O^* / O^*3|
i64 fiber_size(const QuadOrder& O);
// classes of Cl that are cubes
std::vector<int> cube_classes(const ClassGroup& G);
// integral invertible ideals of norm b with class in Cl^3
i64 omega_count(const QuadOrder& O, i64 b);

struct Thm31Count {
    i64 orbits = 0;  // forms of discriminant -27 n up to equivalence
    i64 pairs = 0;   // sum over (b, c) of omega_count * fiber_size
};
Thm31Count thm31_counts(i64 n);
bool verify_thm31(i64 n);

// sum over k of the given discriminant sign (real fields weighted 3, Q + Q
// included for sign > 0) and c >= 1 of |D|^{-s} c^{-2s} sum_{chi^3 = 1} L(2s, chi, O_{k,c})
DirichletCoeffs xi_dual_rhs(int sign, i64 N);

}  // namespace onth
