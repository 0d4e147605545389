#include "onth/split_orders.hpp"

#include <chrono>
#include <numeric>
#include <sstream>
#include <tuple>
#include <stdexcept>

namespace onth {

namespace {

mpz_class fdiv(const mpz_class& a, const mpz_class& b) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

mpz_class zlcm(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

i64 zi64(const mpz_class& z) { return narrow64(from_mpz(z)); }

void axpy(ZVec& y, const mpz_class& q, const ZVec& x) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= q * x[i];
}

SplitIdeal normalized(std::vector<ZVec> rows, mpz_class den) {
    if (den < 0) {
        den = -den;
        for (auto& r : rows)
            for (auto& x : r) x = -x;
    }
    mpz_class g = den;
    for (const auto& r : rows)
        for (const auto& x : r) g = zgcd(g, x);
    if (g > 1) {
        den /= g;
        for (auto& r : rows)
            for (auto& x : r) x /= g;
    }
    return {std::move(rows), den};
}

// residues prime to m, canonical modulo +-1 when asked
std::vector<i64> unit_residues(i64 m, bool plus_minus) {
    std::vector<i64> r;
    for (i64 t = 0; t < m; ++t) {
        if (std::gcd(t, m) != 1) continue;
        if (plus_minus && m - t < t) continue;
        r.push_back(t);
    }
    return r;
}

i64 inv_mod(i64 a, i64 m) {
    if (m == 1) return 0;
    a = ((a % m) + m) % m;
    for (i64 x = 1; x < m; ++x)
        if ((i128)a * x % m == 1) return x;
    throw std::invalid_argument("not invertible modulo m");
}

// residue of the positive rational q prime to m
i64 residue_of(const mpq_class& q, i64 m) {
    mpz_class num = q.get_num(), den = q.get_den();
    if (num < 0) num = -num;
    i64 a = zi64(num % m), b = zi64(den % m);
    if (std::gcd(a, m) != 1 || std::gcd(b, m) != 1) throw std::invalid_argument("component not prime to m");
    return (i64)((i128)a * inv_mod(b, m) % m);
}

i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

DirichletChar char_product(const DirichletChar& a, const DirichletChar& b) {
    DirichletChar r = a;
    for (i64 t = 0; t < a.modulus; ++t) r.values[t] = a.values[t] * b.values[t];
    return r;
}

DirichletChar trivial_dirichlet(i64 m) {
    DirichletChar r;
    r.modulus = m;
    r.values.assign(m, RootOfUnity{});
    return r;
}

}  // namespace

std::vector<ZVec> hnf_rows(std::vector<ZVec> a) {
    if (a.empty()) return {};
    std::size_t cols = a[0].size(), piv = 0;
    for (std::size_t c = 0; c < cols && piv < a.size(); ++c) {
        while (true) {
            std::size_t best = a.size();
            for (std::size_t i = piv; i < a.size(); ++i)
                if (a[i][c] != 0 && (best == a.size() || abs(a[i][c]) < abs(a[best][c]))) best = i;
            if (best == a.size()) break;
            std::swap(a[piv], a[best]);
            bool done = true;
            for (std::size_t i = piv + 1; i < a.size(); ++i) {
                if (a[i][c] == 0) continue;
                axpy(a[i], fdiv(a[i][c], a[piv][c]), a[piv]);
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (piv == a.size() || a[piv][c] == 0) continue;
        if (a[piv][c] < 0)
            for (auto& x : a[piv]) x = -x;
        for (std::size_t k = 0; k < piv; ++k) axpy(a[k], fdiv(a[k][c], a[piv][c]), a[piv]);
        ++piv;
    }
    a.resize(piv);
    return a;
}

std::vector<ZVec> congruence_kernel(int r, const std::vector<std::pair<ZVec, mpz_class>>& conds) {
    std::size_t k = conds.size();
    std::vector<ZVec> gens;
    for (int i = 0; i < r; ++i) {
        ZVec row(k + r, 0);
        for (std::size_t j = 0; j < k; ++j) row[j] = conds[j].first[i];
        row[k + i] = 1;
        gens.push_back(std::move(row));
    }
    for (std::size_t j = 0; j < k; ++j) {
        ZVec row(k + r, 0);
        row[j] = conds[j].second;
        gens.push_back(std::move(row));
    }
    std::vector<ZVec> out;
    for (auto& row : hnf_rows(std::move(gens))) {
        bool zero = true;
        for (std::size_t j = 0; j < k; ++j)
            if (row[j] != 0) zero = false;
        if (zero) out.emplace_back(row.begin() + k, row.end());
    }
    return out;
}

SplitIdeal lattice_from_generators(int r, const std::vector<ZVec>& gens, const mpz_class& den) {
    auto rows = hnf_rows(gens);
    if ((int)rows.size() != r) throw std::invalid_argument("generators do not span a full lattice");
    return normalized(std::move(rows), den);
}

SplitIdeal split_order_lattice(const SplitOrder& O) {
    int r = O.rank();
    std::vector<ZVec> g{ZVec(r, 1)};
    for (int i = 1; i < r; ++i) {
        ZVec v(r, 0);
        v[i] = O.m;
        g.push_back(v);
    }
    return lattice_from_generators(r, g);
}

SplitIdeal split_mul(const SplitIdeal& a, const SplitIdeal& b) {
    int r = a.rank();
    std::vector<ZVec> g;
    for (const auto& x : a.rows)
        for (const auto& y : b.rows) {
            ZVec v(r);
            for (int i = 0; i < r; ++i) v[i] = x[i] * y[i];
            g.push_back(std::move(v));
        }
    return lattice_from_generators(r, g, a.den * b.den);
}

SplitIdeal split_add(const SplitIdeal& a, const SplitIdeal& b) {
    int r = a.rank();
    mpz_class L = zlcm(a.den, b.den);
    std::vector<ZVec> g;
    for (const auto* s : {&a, &b}) {
        mpz_class f = L / s->den;
        for (const auto& x : s->rows) {
            ZVec v = x;
            for (auto& e : v) e *= f;
            g.push_back(std::move(v));
        }
    }
    return lattice_from_generators(r, g, L);
}

SplitIdeal split_scale(const SplitIdeal& a, const std::vector<mpq_class>& gam) {
    int r = a.rank();
    mpz_class L = 1;
    for (const auto& q : gam) L = zlcm(L, q.get_den());
    std::vector<ZVec> g;
    for (const auto& x : a.rows) {
        ZVec v(r);
        for (int i = 0; i < r; ++i) {
            mpq_class t = gam[i] * L;
            v[i] = x[i] * t.get_num();
        }
        g.push_back(std::move(v));
    }
    return lattice_from_generators(r, g, a.den * L);
}

bool split_contains(const SplitIdeal& a, const std::vector<mpq_class>& x) {
    int r = a.rank();
    ZVec y(r);
    for (int i = 0; i < r; ++i) {
        mpq_class t = x[i] * a.den;
        if (t.get_den() != 1) return false;
        y[i] = t.get_num();
    }
    for (int i = 0; i < r; ++i) {
        if (y[i] % a.rows[i][i] != 0) return false;
        axpy(y, y[i] / a.rows[i][i], a.rows[i]);
    }
    return true;
}

bool split_is_module(const SplitIdeal& a, const SplitOrder& O) {
    int r = a.rank();
    for (int j = 1; j < r; ++j)
        for (const auto& x : a.rows) {
            std::vector<mpq_class> v(r, 0);
            v[j] = qfrac(mpz_class(x[j] * (long)O.m), a.den);
            if (!split_contains(a, v)) return false;
        }
    return true;
}

bool split_is_integral(const SplitIdeal& a, const SplitOrder& O) {
    SplitIdeal o = split_order_lattice(O);
    for (const auto& x : a.rows) {
        std::vector<mpq_class> v;
        for (const auto& e : x) v.push_back(qfrac(e, a.den));
        if (!split_contains(o, v)) return false;
    }
    return true;
}

SplitIdeal split_colon(const SplitIdeal& a, const SplitOrder& O) {
    int r = a.rank();
    // a = A / d and (O : A) = Y / M with M = det A, since M Z^r lies in A
    mpz_class M = 1;
    for (int i = 0; i < r; ++i) M *= a.rows[i][i];
    std::vector<std::pair<ZVec, mpz_class>> conds;
    for (const auto& v : a.rows) {
        for (int i = 0; i < r; ++i) {
            ZVec w(r, 0);
            w[i] = v[i];
            conds.push_back({w, M});
        }
        for (int i = 1; i < r; ++i) {
            ZVec w(r, 0);
            w[i] = v[i];
            w[0] = -v[0];
            conds.push_back({w, M * O.m});
        }
    }
    auto Y = congruence_kernel(r, conds);
    for (auto& y : Y)
        for (auto& e : y) e *= a.den;
    return lattice_from_generators(r, Y, M);
}

bool split_invertible(const SplitIdeal& a, const SplitOrder& O) {
    return split_mul(a, split_colon(a, O)) == split_order_lattice(O);
}

i64 split_norm(const SplitIdeal& a, const SplitOrder& O) {
    int r = a.rank();
    mpz_class det = 1, dr = 1;
    for (int i = 0; i < r; ++i) {
        det *= a.rows[i][i];
        dr *= a.den;
    }
    mpq_class q = qfrac(det, dr * (long)ipow(O.m, O.n));
    if (q.get_den() != 1) throw std::invalid_argument("ideal is not integral");
    return zi64(q.get_num());
}

bool split_coprime(const SplitIdeal& a, const SplitOrder& O) {
    int r = a.rank();
    std::vector<ZVec> g;
    for (int i = 0; i < r; ++i) {
        ZVec v(r, 0);
        v[i] = O.m;
        g.push_back(v);
    }
    return split_add(a, lattice_from_generators(r, g)) == split_order_lattice(O);
}

std::vector<mpq_class> split_components(const SplitIdeal& a) {
    int r = a.rank();
    std::vector<mpq_class> c(r);
    for (int i = 0; i < r; ++i) {
        mpz_class g = 0;
        for (const auto& x : a.rows) g = zgcd(g, x[i]);
        c[i] = qfrac(g, a.den);
        c[i].canonicalize();
    }
    return c;
}

SplitIdeal split_contract(const SplitOrder& O, const std::vector<i64>& comps) {
    int r = O.rank();
    if ((int)comps.size() != r) throw std::invalid_argument("wrong number of components");
    std::vector<std::pair<ZVec, mpz_class>> conds;
    for (int i = 1; i < r; ++i) {
        ZVec w(r, 0);
        w[i] = comps[i];
        w[0] = -comps[0];
        conds.push_back({w, O.m});
    }
    auto U = congruence_kernel(r, conds);
    for (auto& u : U)
        for (int i = 0; i < r; ++i) u[i] *= comps[i];
    return lattice_from_generators(r, U);
}

bool split_principal(const SplitIdeal& a, const SplitOrder& O, std::vector<mpq_class>* gamma) {
    int r = a.rank();
    auto c = split_components(a);
    SplitIdeal o = split_order_lattice(O);
    // a generator is a signed version of the component generators, up to an overall sign
    for (int mask = 0; mask < (1 << (r - 1)); ++mask) {
        if (O.with_infinity && mask != 0) break;
        std::vector<mpq_class> g = c;
        for (int i = 1; i < r; ++i)
            if (mask >> (i - 1) & 1) g[i] = -g[i];
        if (split_scale(o, g) == a) {
            if (gamma) *gamma = g;
            return true;
        }
    }
    return false;
}

bool split_equivalent(const SplitIdeal& a, const SplitIdeal& b, const SplitOrder& O) {
    return split_principal(split_mul(b, split_colon(a, O)), O);
}

std::vector<std::vector<int>> equivariant_units(const SplitOrder& O) {
    int r = O.rank();
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << r); ++mask) {
        std::vector<int> e(r);
        for (int i = 0; i < r; ++i) e[i] = (mask >> i & 1) ? -1 : 1;
        bool ok = true;
        for (int i = 1; i < r; ++i) {
            if ((e[i] - e[0]) % O.m != 0) ok = false;
            if (O.with_infinity && e[i] != e[0]) ok = false;
        }
        if (ok) out.push_back(e);
    }
    return out;
}

i64 ray_class_number(i64 m, bool with_infinity) {
    if (with_infinity || m <= 2) return euler_phi(m);
    return euler_phi(m) / 2;
}

std::vector<i64> NarrowClassGroup::normalize(std::vector<i64> g) const {
    i64 m = order.m;
    for (auto& t : g) {
        t = ((t % m) + m) % m;
        if (!order.with_infinity && m - t < t) t = m - t;
    }
    return g;
}

int NarrowClassGroup::mul(int x, int y) const {
    std::vector<i64> g(order.n);
    for (int i = 0; i < order.n; ++i) g[i] = (i64)((i128)elements[x][i] * elements[y][i] % order.m);
    return index.at(normalize(g));
}

int NarrowClassGroup::psi(const SplitIdeal& a) const {
    auto c = split_components(a);
    std::vector<i64> g(order.n);
    for (int i = 1; i <= order.n; ++i) g[i - 1] = residue_of(c[i] / c[0], order.m);
    return index.at(normalize(g));
}

int NarrowClassGroup::class_of(const SplitIdeal& a) const {
    for (int x = 0; x < size(); ++x)
        if (split_principal(split_mul(a, rep_invs[x]), order)) return x;
    throw std::logic_error("ideal is in no class");
}

NarrowClassGroup narrow_class_group(const SplitOrder& O) {
    if (O.n < 1 || O.m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
    NarrowClassGroup G;
    G.order = O;
    auto res = unit_residues(O.m, !O.with_infinity);
    std::vector<i64> cur(O.n, 0);
    std::vector<std::size_t> ix(O.n, 0);
    while (true) {
        for (int i = 0; i < O.n; ++i) cur[i] = res[ix[i]];
        G.index[cur] = (int)G.elements.size();
        G.elements.push_back(cur);
        int i = 0;
        while (i < O.n && ++ix[i] == res.size()) ix[i++] = 0;
        if (i == O.n) break;
    }
    // identity first
    std::vector<i64> one = G.normalize(std::vector<i64>(O.n, 1));
    int e = G.index.at(one);
    std::swap(G.elements[0], G.elements[e]);
    G.index[G.elements[0]] = 0;
    G.index[G.elements[e]] = e;
    if (G.size() != ipow(ray_class_number(O.m, O.with_infinity), O.n))
        throw std::logic_error("narrow class group has the wrong order");
    for (const auto& g : G.elements) {
        std::vector<i64> comps{1};
        for (i64 t : g) comps.push_back(t == 0 ? 1 : t);
        SplitIdeal R = split_contract(O, comps);
        if (!split_coprime(R, O) || !split_invertible(R, O)) throw std::logic_error("bad class representative");
        G.reps.push_back(R);
        G.rep_invs.push_back(split_colon(R, O));
    }
    for (int x = 0; x < G.size(); ++x) {
        if (G.psi(G.reps[x]) != x) throw std::logic_error("Psi does not recover the representative");
        // injective: only the identity class is principal
        if (split_principal(G.reps[x], O) != (x == 0)) throw std::logic_error("Psi is not injective");
    }
    // homomorphism on products with single-component generators
    int checked = 0;
    for (int x = 0; x < G.size() && checked < 64; ++x, ++checked)
        for (int y = 0; y < G.size(); ++y) {
            int nz = 0;
            for (i64 t : G.elements[y]) nz += G.normalize({t}) != G.normalize({1});
            if (nz != 1) continue;
            SplitIdeal p = split_mul(G.reps[x], G.reps[y]);
            if (!split_principal(split_mul(p, G.rep_invs[G.mul(x, y)]), O))
                throw std::logic_error("Psi is not a homomorphism");
        }
    return G;
}

RootOfUnity SplitCharacter::operator()(const std::vector<i64>& g) const {
    RootOfUnity z;
    for (std::size_t i = 0; i < chi.size(); ++i) z = z * chi[i](g[i]);
    return z;
}

i64 SplitCharacter::conductor() const {
    i64 f = 1;
    for (const auto& c : chi) f = std::lcm(f, c.conductor());
    return f;
}

bool SplitCharacter::is_trivial() const {
    for (const auto& c : chi)
        if (c.order() != 1) return false;
    return true;
}

std::vector<DirichletChar> ray_class_characters(i64 m, bool with_infinity) {
    return with_infinity ? dirichlet_characters(m) : even_dirichlet_characters(m);
}

std::vector<SplitCharacter> split_characters(const SplitOrder& O) {
    auto base = ray_class_characters(O.m, O.with_infinity);
    std::vector<SplitCharacter> out;
    std::vector<std::size_t> ix(O.n, 0);
    while (true) {
        SplitCharacter c;
        for (int i = 0; i < O.n; ++i) c.chi.push_back(base[ix[i]]);
        out.push_back(std::move(c));
        int i = 0;
        while (i < O.n && ++ix[i] == base.size()) ix[i++] = 0;
        if (i == O.n) break;
    }
    return out;
}

DirichletChar restrict_modulus(const DirichletChar& chi, i64 mp) {
    if (chi.modulus % mp != 0 || mp % chi.conductor() != 0)
        throw std::invalid_argument("modulus must lie between the conductor and the modulus");
    DirichletChar r = trivial_dirichlet(mp);
    for (i64 t = 0; t < mp; ++t) {
        if (std::gcd(t, mp) != 1) continue;
        i64 u = t;
        while (std::gcd(u, chi.modulus) != 1) u += mp;
        r.values[t] = chi(u);
    }
    return r;
}

SplitCharacter restrict_modulus(const SplitCharacter& chi, i64 mp) {
    SplitCharacter r;
    for (const auto& c : chi.chi) r.chi.push_back(restrict_modulus(c, mp));
    return r;
}

DirichletCoeffs L_star_direct(const SplitOrder& O, const SplitCharacter& chi, i64 N) {
    int r = O.rank();
    // (n, den, num) -> number of tuples
    std::map<std::tuple<i64, i64, i64>, i64> acc;
    std::vector<i64> a(r);
    DirichletCoeffs out(N);
    // components a_0, ..., a_n prime to m with product <= N
    auto rec = [&](auto&& self, int i, i64 prod) -> void {
        if (i == r) {
            RootOfUnity z;
            for (int j = 1; j < r; ++j) z = z * chi.chi[j - 1](a[j]) * chi.chi[j - 1](a[0]).conj();
            acc[{prod, z.den, z.num}]++;
            return;
        }
        for (i64 t = 1; prod * t <= N; ++t) {
            if (std::gcd(t, O.m) != 1) continue;
            a[i] = t;
            self(self, i + 1, prod * t);
        }
    };
    rec(rec, 0, 1);
    for (const auto& [key, cnt] : acc) {
        auto [n, den, num] = key;
        out.add(n, Cyc::root(RootOfUnity::make(num, den)) * Cyc((long)cnt));
    }
    return out;
}

DirichletCoeffs L_star_dirichlet(const SplitOrder& O, const SplitCharacter& chi, i64 N) {
    DirichletCoeffs r = one(N);
    DirichletChar last = trivial_dirichlet(O.m);
    for (const auto& c : chi.chi) {
        r = dmul(r, dirichlet_L(c, N));
        last = char_product(last, c.inverse());
    }
    return dmul(r, dirichlet_L(last, N));
}

DirichletCoeffs L_star_product(const SplitOrder& O, const SplitCharacter& chi, i64 N) {
    DirichletCoeffs a = L_star_direct(O, chi, N), b = L_star_dirichlet(O, chi, N);
    if (!(a == b)) throw std::logic_error("truncated L-series paths disagree");
    return a;
}

i64 split_u_count_closed(const SplitOrder& O, i64 mp) {
    if (O.m % mp != 0) throw std::invalid_argument("m' must divide m");
    i64 c = O.m / mp;
    mpq_class v = c;
    for (i64 p : prime_divisors(O.m))
        if (mp % p != 0) v *= qfrac(p - 1, p);
    if (v.get_den() != 1) throw std::logic_error("closed form is not an integer");
    return ipow(zi64(v.get_num()), O.n);
}

i64 split_u_count_index(const SplitOrder& O, i64 mp) {
    if (O.m % mp != 0) throw std::invalid_argument("m' must divide m");
    i64 u = (i64)equivariant_units(O.with_conductor(mp)).size(), v = (i64)equivariant_units(O).size();
    i64 cl = ipow(ray_class_number(O.m, O.with_infinity), O.n);
    i64 clp = ipow(ray_class_number(mp, O.with_infinity), O.n);
    if (u % v != 0 || (u / v * cl) % clp != 0) throw std::logic_error("index quotient is not an integer");
    return u / v * cl / clp;
}

DirichletCoeffs L_from_truncated(const SplitOrder& O, const SplitCharacter& chi, i64 N) {
    i64 f = chi.conductor();
    if (O.m % f != 0) throw std::invalid_argument("conductor does not divide m");
    DirichletCoeffs r(N);
    for (i64 mp : divisors(O.m)) {
        if (mp % f != 0) continue;
        i64 c = O.m / mp, u = split_u_count_closed(O, mp);
        if (u != split_u_count_index(O, mp)) throw std::logic_error("unit count formulas disagree");
        i128 cn = 1;
        for (int i = 0; i < O.rank() && cn <= N; ++i) cn *= c;
        if (cn > N) continue;
        DirichletCoeffs Ls = L_star_product(O.with_conductor(mp), restrict_modulus(chi, mp), N / (i64)cn);
        Ls.N = N;
        r = dadd(r, dscale(dshift(Ls, (i64)cn), Cyc((long)u)));
    }
    return r;
}

DirichletCoeffs L_star_from_L_split(const SplitOrder& O, const SplitCharacter& chi, i64 N) {
    i64 f = chi.conductor();
    if (O.m % f != 0) throw std::invalid_argument("conductor does not divide m");
    DirichletCoeffs r(N);
    for (i64 mp : divisors(O.m)) {
        if (mp % f != 0) continue;
        i64 c = O.m / mp;
        int mu = mobius(c);
        if (mu == 0) continue;
        i128 cn = 1;
        for (int i = 0; i < O.rank() && cn <= N; ++i) cn *= c;
        if (cn > N) continue;
        DirichletCoeffs L = L_from_truncated(O.with_conductor(mp), restrict_modulus(chi, mp), N / (i64)cn);
        L.N = N;
        r = dadd(r, dscale(dshift(L, (i64)cn), Cyc((long)(mu * split_u_count_closed(O, mp)))));
    }
    return r;
}

SplitIdealCounts brute_force_ideals(const SplitOrder& O, const NarrowClassGroup& G, i64 N) {
    int r = O.rank();
    if (r > 3 || O.m > 6 || N > 60) throw std::invalid_argument("brute force ideal enumeration beyond its cost guard");
    // O-basis 1, m e_1, ..., m e_n
    std::vector<ZVec> basis{ZVec(r, 1)};
    for (int i = 1; i < r; ++i) {
        ZVec v(r, 0);
        v[i] = O.m;
        basis.push_back(v);
    }
    std::vector<std::vector<i64>> diags;
    std::vector<i64> d(r, 1);
    auto rec = [&](auto&& self, int i, i64 prod) -> void {
        if (i == r) {
            diags.push_back(d);
            return;
        }
        for (i64 t = 1; prod * t <= N; ++t) {
            d[i] = t;
            self(self, i + 1, prod * t);
        }
    };
    rec(rec, 0, 1);
    std::vector<SplitIdealCounts> parts(diags.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t k = 0; k < diags.size(); ++k) {
        const auto& dg = diags[k];
        i64 norm = 1;
        for (i64 t : dg) norm *= t;
        // off-diagonal entries x_{ij}, j < i, in [0, d_j)
        std::vector<std::pair<int, int>> slots;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < i; ++j) slots.push_back({i, j});
        std::vector<i64> x(slots.size(), 0);
        while (true) {
            std::vector<std::vector<i64>> coords(r, std::vector<i64>(r, 0));
            for (int i = 0; i < r; ++i) coords[i][i] = dg[i];
            for (std::size_t s = 0; s < slots.size(); ++s) coords[slots[s].first][slots[s].second] = x[s];
            std::vector<ZVec> gens;
            for (int i = 0; i < r; ++i) {
                ZVec v(r, 0);
                for (int j = 0; j < r; ++j)
                    for (int t = 0; t < r; ++t) v[t] += coords[i][j] * basis[j][t];
                gens.push_back(std::move(v));
            }
            SplitIdeal a = lattice_from_generators(r, gens);
            if (split_is_module(a, O) && split_invertible(a, O)) parts[k][{norm, G.class_of(a)}]++;
            std::size_t s = 0;
            while (s < slots.size() && ++x[s] == dg[slots[s].second]) x[s++] = 0;
            if (s == slots.size()) break;
        }
    }
    SplitIdealCounts out;
    for (const auto& p : parts)
        for (const auto& [key, cnt] : p) out[key] += cnt;
    return out;
}

SplitIdealCounts brute_force_ideals(const SplitOrder& O, i64 N) { return brute_force_ideals(O, narrow_class_group(O), N); }

DirichletCoeffs L_from_counts(const NarrowClassGroup& G, const SplitCharacter& chi, const SplitIdealCounts& c, i64 N) {
    DirichletCoeffs r(N);
    for (const auto& [key, cnt] : c)
        if (key.first <= N) r.add(key.first, Cyc::root(chi(G.elements[key.second])) * Cyc((long)cnt));
    return r;
}

VerifyReport verify_appendix(const SplitOrder& O, i64 N) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyReport rep;
    rep.identity = "appendix";
    rep.N = N;
    std::ostringstream detail;
    auto note = [&](const std::string& what, const VerifyReport& r) {
        if (r.pass()) return;
        rep.failed = true;
        detail << what << "; ";
        for (const auto& mm : r.mismatches)
            if (rep.mismatches.size() < 50) rep.mismatches.push_back(mm);
    };
    for (i64 mp : divisors(O.m))
        if (split_u_count_closed(O, mp) != split_u_count_index(O, mp)) {
            rep.failed = true;
            detail << "unit count m'=" << mp << "; ";
        }
    NarrowClassGroup G = narrow_class_group(O);
    bool oracle = O.rank() <= 3 && O.m <= 6 && N <= 60;
    SplitIdealCounts counts;
    if (oracle) counts = brute_force_ideals(O, G, N);
    auto chars = split_characters(O);
    for (std::size_t k = 0; k < chars.size(); ++k) {
        const auto& chi = chars[k];
        std::string tag = "chi " + std::to_string(k) + ": ";
        auto direct = L_star_direct(O, chi, N);
        note(tag + "L* paths", compare_series("L*", direct, L_star_dirichlet(O, chi, N), N));
        auto L = L_from_truncated(O, chi, N);
        if (oracle) note(tag + "L vs ideals", compare_series("L", L, L_from_counts(G, chi, counts, N), N));
        note(tag + "inversion", compare_series("L*", L_star_from_L_split(O, chi, N), direct, N));
    }
    rep.detail = detail.str();
    rep.wall_ms = (i64)std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace onth
