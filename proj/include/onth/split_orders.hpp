#pragma once

#include <map>
#include <utility>
#include <vector>

#include "onth/dirichlet.hpp"
#include "onth/report.hpp"
#include "onth/shintani.hpp"

namespace onth {

using ZVec = std::vector<mpz_class>;

// full-rank lattice (1/den) H Z^r in Q^r, H in upper triangular Hermite form
struct SplitIdeal {
    std::vector<ZVec> rows;
    mpz_class den = 1;

    int rank() const { return (int)rows.size(); }
    bool operator==(const SplitIdeal& o) const { return den == o.den && rows == o.rows; }
    bool operator<(const SplitIdeal& o) const { return den != o.den ? den < o.den : rows < o.rows; }
};

// Z 1 + m Z^{n+1} in Q^{n+1}; with_infinity adds the real place to the modulus
struct SplitOrder {
    int n = 1;
    i64 m = 1;
    bool with_infinity = false;

    int rank() const { return n + 1; }
    SplitOrder with_conductor(i64 mp) const { return {n, mp, with_infinity}; }
};

// echelon Hermite form of the lattice spanned by the given rows (zero rows dropped)
std::vector<ZVec> hnf_rows(std::vector<ZVec> gens);
// basis of {y in Z^r : w_j . y = 0 mod M_j for all j}
std::vector<ZVec> congruence_kernel(int r, const std::vector<std::pair<ZVec, mpz_class>>& conds);

SplitIdeal lattice_from_generators(int r, const std::vector<ZVec>& gens, const mpz_class& den = 1);
SplitIdeal split_order_lattice(const SplitOrder& O);
SplitIdeal split_mul(const SplitIdeal& a, const SplitIdeal& b);
SplitIdeal split_add(const SplitIdeal& a, const SplitIdeal& b);
SplitIdeal split_scale(const SplitIdeal& a, const std::vector<mpq_class>& g);
bool split_contains(const SplitIdeal& a, const std::vector<mpq_class>& x);
bool split_is_module(const SplitIdeal& a, const SplitOrder& O);
bool split_is_integral(const SplitIdeal& a, const SplitOrder& O);
// (O : a) = {x : x a in O}
SplitIdeal split_colon(const SplitIdeal& a, const SplitOrder& O);
// a (O : a) = O
bool split_invertible(const SplitIdeal& a, const SplitOrder& O);
// [O : a] for integral a
i64 split_norm(const SplitIdeal& a, const SplitOrder& O);
// a + m O_A = O
bool split_coprime(const SplitIdeal& a, const SplitOrder& O);
// positive generators of the components of a O_A
std::vector<mpq_class> split_components(const SplitIdeal& a);
// the integral ideal prime to m under (a_0 Z, ..., a_n Z)
SplitIdeal split_contract(const SplitOrder& O, const std::vector<i64>& comps);
// generator gamma of a, equivariant modulo the infinite part, if a is such a principal ideal
bool split_principal(const SplitIdeal& a, const SplitOrder& O, std::vector<mpq_class>* gamma = nullptr);
bool split_equivalent(const SplitIdeal& a, const SplitIdeal& b, const SplitOrder& O);

// units of O equivariant modulo the infinite part, as sign vectors
std::vector<std::vector<int>> equivariant_units(const SplitOrder& O);

// product of n copies of Cl_Q(m), realised through Psi
struct NarrowClassGroup {
    SplitOrder order;
    std::vector<std::vector<i64>> elements;  // residues, canonical modulo +-1 without the infinite place
    std::map<std::vector<i64>, int> index;
    std::vector<SplitIdeal> reps;      // coprime representative with Psi(rep) = element
    std::vector<SplitIdeal> rep_invs;  // (O : rep)

    int size() const { return (int)elements.size(); }
    std::vector<i64> normalize(std::vector<i64> g) const;
    int mul(int x, int y) const;
    // Psi of an integral ideal prime to m
    int psi(const SplitIdeal& a) const;
    // class of an invertible ideal by testing principality of a rep^{-1}
    int class_of(const SplitIdeal& a) const;
};

// |Cl_Q(m)| for the given infinite part
i64 ray_class_number(i64 m, bool with_infinity);
// builds Psi and checks it is a well defined bijective homomorphism; throws otherwise
NarrowClassGroup narrow_class_group(const SplitOrder& O);

// chi_1 x ... x chi_n with chi_0 trivial
struct SplitCharacter {
    std::vector<DirichletChar> chi;
    RootOfUnity operator()(const std::vector<i64>& g) const;
    i64 conductor() const;  // lcm of the conductors of the chi_i
    bool is_trivial() const;
};

// characters of Cl_Q(m): all of (Z/m)^*, or the even ones without the infinite place
std::vector<DirichletChar> ray_class_characters(i64 m, bool with_infinity);
std::vector<SplitCharacter> split_characters(const SplitOrder& O);
// the character modulo m' | m with the same values, for conductor | m'
DirichletChar restrict_modulus(const DirichletChar& chi, i64 mp);
SplitCharacter restrict_modulus(const SplitCharacter& chi, i64 mp);

// sum over coprime integral ideals, enumerated through their components
DirichletCoeffs L_star_direct(const SplitOrder& O, const SplitCharacter& chi, i64 N);
// prod_i L(s, chi_i) L(s, chi_0 prod chi_i^{-1})
DirichletCoeffs L_star_dirichlet(const SplitOrder& O, const SplitCharacter& chi, i64 N);
// both paths; throws std::logic_error if they differ
DirichletCoeffs L_star_product(const SplitOrder& O, const SplitCharacter& chi, i64 N);

// |U(O_{m'}, O_m)| by the closed product and by unit index times class number ratio
i64 split_u_count_closed(const SplitOrder& O, i64 mp);
i64 split_u_count_index(const SplitOrder& O, i64 mp);

// L from the truncated series of the intermediate orders; throws if the conductor does not divide m
DirichletCoeffs L_from_truncated(const SplitOrder& O, const SplitCharacter& chi, i64 N);
// Moebius inversion of the above
DirichletCoeffs L_star_from_L_split(const SplitOrder& O, const SplitCharacter& chi, i64 N);

// (norm, class) -> count over integral invertible ideals of norm <= N
using SplitIdealCounts = std::map<std::pair<i64, int>, i64>;
SplitIdealCounts brute_force_ideals(const SplitOrder& O, const NarrowClassGroup& G, i64 N);
SplitIdealCounts brute_force_ideals(const SplitOrder& O, i64 N);
DirichletCoeffs L_from_counts(const NarrowClassGroup& G, const SplitCharacter& chi, const SplitIdealCounts& c,
                              i64 N);

// all identities for every character of the order; the oracle runs when within its cost guard
VerifyReport verify_appendix(const SplitOrder& O, i64 N);

}  // namespace onth
