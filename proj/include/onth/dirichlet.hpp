#pragma once

#include <map>
#include <string>

#include "onth/cyclotomic.hpp"

namespace onth {

// truncated Dirichlet series sum_{n <= N} a_n n^{-s}, stored sparsely
struct DirichletCoeffs {
    i64 N = 0;
    std::map<i64, Cyc> a;

    DirichletCoeffs() = default;
    explicit DirichletCoeffs(i64 n) : N(n) {}
    Cyc at(i64 n) const;
    void add(i64 n, const Cyc& v);
    void set(i64 n, const Cyc& v);
    bool is_rational() const;
    std::string to_json() const;  // {"N":..., "coeffs": {"n": "p/q"}}, rational only
    std::string to_csv() const;   // n,value rows
};

bool operator==(const DirichletCoeffs& x, const DirichletCoeffs& y);

DirichletCoeffs one(i64 N);
DirichletCoeffs zeta(i64 N);
// zeta(k s - j): coefficient m^j at n = m^k
DirichletCoeffs zeta_shift(i64 N, int k, int j);
DirichletCoeffs zeta_shift3(i64 N);  // zeta(3s - 1)
DirichletCoeffs mobius_series(i64 N);

DirichletCoeffs dadd(const DirichletCoeffs& x, const DirichletCoeffs& y);
DirichletCoeffs dsub(const DirichletCoeffs& x, const DirichletCoeffs& y);
DirichletCoeffs dscale(const DirichletCoeffs& x, const Cyc& c);
DirichletCoeffs dmul(const DirichletCoeffs& x, const DirichletCoeffs& y);
DirichletCoeffs dinv(const DirichletCoeffs& x);  // needs a_1 invertible
DirichletCoeffs dilate(const DirichletCoeffs& x, i64 k);  // A(k s)
// multiply by m^{-s}: coefficient a_n moves to m n
DirichletCoeffs dshift(const DirichletCoeffs& x, i64 m);
DirichletCoeffs truncate(const DirichletCoeffs& x, i64 N);

}  // namespace onth
