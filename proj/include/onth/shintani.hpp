#pragma once

#include <vector>

#include "onth/characters.hpp"
#include "onth/cubic_forms.hpp"
#include "onth/dirichlet.hpp"
#include "onth/report.hpp"

namespace onth {

enum class XiVariant { XI1, XI2, XI1_DUAL, XI2_DUAL };

Lattice variant_lattice(XiVariant v);
Sign variant_sign(XiVariant v);
bool variant_dual(XiVariant v);

// coefficient at n = sum of weights of orbits with index n, where the index is
// |disc| (or |disc| / 27 in the dual lattice) and the weight 1/|Gamma_x| for
// positive discriminants, 1 otherwise
DirichletCoeffs xi_from_orbits(XiVariant v, const std::vector<OrbitRecord>& orbits, i64 N);
DirichletCoeffs xi_coeffs(XiVariant v, i64 N);

// zeta(2s) zeta(6s - 1) times the sum over k, f and primitive cubic chi of
// |D|^{-s} f^{-2s} L*(2s, chi) / L*(4s, chi); XI1 takes real fields plus a third
// of the Q + Q sum, XI2 takes imaginary fields
DirichletCoeffs xi_rhs_thm44(XiVariant v, i64 N);

// xi1_dual = xi2 and xi2_dual = 3 xi1
VerifyReport verify_on1(i64 N);
VerifyReport verify_on2(i64 N);
// dual series from orbits against the L-series assembly
VerifyReport verify_thm33(XiVariant v, i64 N);
VerifyReport verify_thm44(XiVariant v, i64 N);

// character of (Z/f)^* given by its values on residues coprime to f
struct DirichletChar {
    i64 modulus = 1;
    std::vector<RootOfUnity> values;  // indexed by residue; unused entries for gcd > 1
    RootOfUnity operator()(i64 t) const;
    bool is_even() const { return (*this)(modulus - 1).is_one(); }
    i64 conductor() const;
    i64 order() const;
    DirichletChar inverse() const;
};

// all characters of (Z/f)^*, from generators of the prime power factors
std::vector<DirichletChar> dirichlet_characters(i64 f);
// even characters: those of (Z/f)^* / {+-1}
std::vector<DirichletChar> even_dirichlet_characters(i64 f);
// sum over n prime to the modulus of chi(n) n^{-s}
DirichletCoeffs dirichlet_L(const DirichletChar& chi, i64 N);

// the ideal of O_{Q+Q, f} prime to f whose extension is Z + t Z
QuadIdeal split_ideal(i64 f, i64 t);

struct SplitDictionaryEntry {
    DirichletChar chi1;
    Character chi;
};
// chi(a) = chi1(a1 / a0) where a O_{Q+Q} = (a0 Z, a1 Z); throws if a value table is inconsistent
std::vector<SplitDictionaryEntry> split_character_dictionary(i64 f);

}  // namespace onth
