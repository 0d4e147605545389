#include "onth/dirichlet.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace onth {

Cyc DirichletCoeffs::at(i64 n) const {
    auto it = a.find(n);
    return it == a.end() ? Cyc() : it->second;
}

void DirichletCoeffs::add(i64 n, const Cyc& v) {
    if (n < 1 || n > N) return;
    auto it = a.find(n);
    if (it == a.end()) {
        if (!v.is_zero()) a.emplace(n, v);
        return;
    }
    it->second += v;
    if (it->second.is_zero()) a.erase(it);
}

void DirichletCoeffs::set(i64 n, const Cyc& v) {
    if (n < 1 || n > N) return;
    if (v.is_zero())
        a.erase(n);
    else
        a[n] = v;
}

bool DirichletCoeffs::is_rational() const {
    for (const auto& [n, v] : a)
        if (!v.is_rational()) return false;
    return true;
}

std::string DirichletCoeffs::to_json() const {
    nlohmann::ordered_json j;
    j["N"] = N;
    nlohmann::ordered_json c = nlohmann::ordered_json::object();
    for (const auto& [n, v] : a) c[std::to_string(n)] = v.rational().get_str();
    j["coeffs"] = c;
    return j.dump();
}

std::string DirichletCoeffs::to_csv() const {
    std::ostringstream os;
    os << "n,value\n";
    for (const auto& [n, v] : a) os << n << "," << v.str() << "\n";
    return os.str();
}

bool operator==(const DirichletCoeffs& x, const DirichletCoeffs& y) {
    if (x.a.size() != y.a.size()) return false;
    for (auto i = x.a.begin(), j = y.a.begin(); i != x.a.end(); ++i, ++j)
        if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
}

DirichletCoeffs one(i64 N) {
    DirichletCoeffs r(N);
    r.set(1, Cyc(1));
    return r;
}

DirichletCoeffs zeta(i64 N) {
    DirichletCoeffs r(N);
    for (i64 n = 1; n <= N; ++n) r.a.emplace(n, Cyc(1));
    return r;
}

DirichletCoeffs zeta_shift(i64 N, int k, int j) {
    DirichletCoeffs r(N);
    for (i64 m = 1;; ++m) {
        i128 n = 1, w = 1;
        for (int i = 0; i < k; ++i) n *= m;
        if (n > N) break;
        for (int i = 0; i < j; ++i) w *= m;
        r.set((i64)n, Cyc(mpq_class(to_mpz(w))));
    }
    return r;
}

DirichletCoeffs zeta_shift3(i64 N) { return zeta_shift(N, 3, 1); }

DirichletCoeffs mobius_series(i64 N) {
    DirichletCoeffs r(N);
    for (i64 n = 1; n <= N; ++n) r.set(n, Cyc(mobius(n)));
    return r;
}

DirichletCoeffs dadd(const DirichletCoeffs& x, const DirichletCoeffs& y) {
    DirichletCoeffs r = x;
    r.N = std::min(x.N, y.N);
    for (auto it = r.a.begin(); it != r.a.end();) it = it->first > r.N ? r.a.erase(it) : std::next(it);
    for (const auto& [n, v] : y.a) r.add(n, v);
    return r;
}

DirichletCoeffs dscale(const DirichletCoeffs& x, const Cyc& c) {
    DirichletCoeffs r(x.N);
    for (const auto& [n, v] : x.a) r.set(n, v * c);
    return r;
}

DirichletCoeffs dsub(const DirichletCoeffs& x, const DirichletCoeffs& y) { return dadd(x, dscale(y, Cyc(-1))); }

DirichletCoeffs dmul(const DirichletCoeffs& x, const DirichletCoeffs& y) {
    DirichletCoeffs r(std::min(x.N, y.N));
    for (const auto& [i, u] : x.a) {
        if (i > r.N) break;
        for (const auto& [j, v] : y.a) {
            if ((i128)i * j > r.N) break;
            r.add(i * j, u * v);
        }
    }
    return r;
}

DirichletCoeffs dinv(const DirichletCoeffs& x) {
    Cyc a1 = x.at(1);
    if (a1.is_zero()) throw std::domain_error("Dirichlet inverse needs a_1 != 0");
    if (!a1.is_rational()) throw std::domain_error("Dirichlet inverse needs a rational a_1");
    mpq_class inv1 = 1 / a1.rational();
    DirichletCoeffs r(x.N);
    r.set(1, Cyc(inv1));
    // b_n = -(1/a_1) sum_{d | n, d > 1} a_d b_{n/d}
    std::vector<Cyc> b(x.N + 1);
    b[1] = Cyc(inv1);
    std::vector<Cyc> s(x.N + 1);
    for (i64 n = 1; n <= x.N; ++n) {
        if (n > 1) {
            b[n] = s[n] * Cyc(-inv1);
            r.set(n, b[n]);
        }
        if (b[n].is_zero()) continue;
        // push b_n a_d into s[n d] for d > 1
        for (const auto& [d, v] : x.a) {
            if (d == 1) continue;
            if ((i128)n * d > x.N) break;
            s[n * d] += v * b[n];
        }
    }
    return r;
}

DirichletCoeffs dilate(const DirichletCoeffs& x, i64 k) {
    DirichletCoeffs r(x.N);
    for (const auto& [n, v] : x.a) {
        i128 m = 1;
        for (i64 i = 0; i < k && m <= x.N; ++i) m *= n;
        if (m <= x.N) r.set((i64)m, v);
    }
    return r;
}

DirichletCoeffs dshift(const DirichletCoeffs& x, i64 m) {
    DirichletCoeffs r(x.N);
    for (const auto& [n, v] : x.a) {
        if ((i128)n * m > x.N) break;
        r.set(n * m, v);
    }
    return r;
}

DirichletCoeffs truncate(const DirichletCoeffs& x, i64 N) {
    DirichletCoeffs r(std::min(N, x.N));
    for (const auto& [n, v] : x.a) {
        if (n > r.N) break;
        r.a.emplace(n, v);
    }
    return r;
}

}  // namespace onth
