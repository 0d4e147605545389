#include "onth/lseries.hpp"

#include <stdexcept>

namespace onth {

namespace {

std::vector<i64> smallest_prime_factors(i64 N) {
    std::vector<i64> spf(N + 1, 0);
    for (i64 i = 2; i <= N; ++i)
        if (spf[i] == 0)
            for (i64 j = i; j <= N; j += i)
                if (spf[j] == 0) spf[j] = i;
    return spf;
}

// values of a multiplicative function on 1..N from its values on prime powers
template <class T, class Local, class Mul>
std::vector<T> multiplicative(i64 N, const T& unit, Local local, Mul mul) {
    std::vector<T> v(N + 1);
    if (N >= 1) v[1] = unit;
    auto spf = smallest_prime_factors(N);
    for (i64 n = 2; n <= N; ++n) {
        i64 p = spf[n], m = n, q = 1;
        int k = 0;
        while (m % p == 0) m /= p, q *= p, ++k;
        v[n] = m == 1 ? local(p, k) : mul(v[q], v[m]);
    }
    return v;
}

// primes above p with their values and degrees
struct LocalPrimes {
    std::vector<RootOfUnity> values;
    int deg = 1;
};

LocalPrimes local_primes(const Character& chi, i64 p) {
    const QuadOrder& O = chi.group->order;
    LocalPrimes r;
    for (const auto& P : factor_prime(O, p)) r.values.push_back(chi.on_ideal(P));
    r.deg = kronecker(O.disc(), p) == -1 ? 2 : 1;
    return r;
}

// sum_{i + j = k} x^i y^j
Cyc complete_sum(const RootOfUnity& x, const RootOfUnity& y, int k) {
    Cyc s;
    for (int i = 0; i <= k; ++i) s += Cyc::root(x.pow(i) * y.pow(k - i));
    return s;
}

using GroupVec = std::vector<std::pair<int, i64>>;  // sparse class -> count

GroupVec group_mul(const ClassGroup& G, const GroupVec& x, const GroupVec& y) {
    std::map<int, i64> acc;
    for (auto [a, u] : x)
        for (auto [b, v] : y) acc[G.mul(a, b)] += u * v;
    return GroupVec(acc.begin(), acc.end());
}

std::vector<std::vector<i64>> truncated_counts(const QuadOrder& O, i64 N) {
    auto G = class_group(O);
    auto local = [&](i64 p, int k) -> GroupVec {
        if (O.f % p == 0) return {};
        auto P = factor_prime(O, p);
        int deg = kronecker(O.disc(), p) == -1 ? 2 : 1;
        if (k % deg != 0) return {};
        int e = k / deg;
        std::map<int, i64> acc;
        if (P.size() == 2) {
            int a = G->class_of(P[0]), b = G->class_of(P[1]);
            for (int i = 0; i <= e; ++i) acc[G->mul(G->pow(a, i), G->pow(b, e - i))]++;
        } else {
            acc[G->pow(G->class_of(P[0]), e)]++;
        }
        return GroupVec(acc.begin(), acc.end());
    };
    auto mul = [&](const GroupVec& x, const GroupVec& y) { return group_mul(*G, x, y); };
    auto v = multiplicative<GroupVec>(N, GroupVec{{0, 1}}, local, mul);
    std::vector<std::vector<i64>> out(N + 1, std::vector<i64>(G->size(), 0));
    for (i64 n = 1; n <= N; ++n)
        for (auto [c, k] : v[n]) out[n][c] += k;
    return out;
}

void check_odd_order(const Character& chi) {
    if (chi.order() % 2 == 0) throw std::invalid_argument("character must have odd order");
}

}  // namespace

DirichletCoeffs L_star_coeffs(const QuadOrder& O, const Character& chi, i64 N) {
    if (!(chi.group->order == O)) throw std::invalid_argument("character is not defined on this order");
    auto local = [&](i64 p, int k) -> Cyc {
        if (O.f % p == 0) return Cyc();
        LocalPrimes lp = local_primes(chi, p);
        if (k % lp.deg != 0) return Cyc();
        int e = k / lp.deg;
        if (lp.values.size() == 2) return complete_sum(lp.values[0], lp.values[1], e);
        return Cyc::root(lp.values[0].pow(e));
    };
    auto mul = [](const Cyc& x, const Cyc& y) { return x.is_zero() || y.is_zero() ? Cyc() : x * y; };
    auto v = multiplicative<Cyc>(N, Cyc(1), local, mul);
    DirichletCoeffs r(N);
    for (i64 n = 1; n <= N; ++n) r.set(n, v[n]);
    return r;
}

DirichletCoeffs L_coeffs(const QuadOrder& O, const Character& chi, i64 N) {
    if (!(chi.group->order == O)) throw std::invalid_argument("character is not defined on this order");
    i64 m = O.f, f = character_conductor(chi);
    DirichletCoeffs r(N);
    for (i64 mp : divisors(m)) {
        if (mp % f != 0) continue;
        QuadOrder Op{O.k, mp};
        i64 c = m / mp;
        DirichletCoeffs Ls = L_star_coeffs(Op, restrict_to(chi, mp), N);
        r = dadd(r, dscale(dshift(Ls, c * c), Cyc((long)u_count_closed_form(Op, O))));
    }
    return r;
}

DirichletCoeffs L_star_from_L(const QuadOrder& O, const Character& chi, i64 N) {
    if (!(chi.group->order == O)) throw std::invalid_argument("character is not defined on this order");
    i64 m = O.f, f = character_conductor(chi);
    DirichletCoeffs r(N);
    for (i64 mp : divisors(m)) {
        if (mp % f != 0) continue;
        i64 c = m / mp;
        int mu = mobius(c);
        if (mu == 0) continue;
        QuadOrder Op{O.k, mp};
        DirichletCoeffs L = L_coeffs(Op, restrict_to(chi, mp), N);
        r = dadd(r, dscale(dshift(L, c * c), Cyc((long)(mu * u_count_closed_form(Op, O)))));
    }
    return r;
}

std::vector<std::vector<i64>> class_counts(const QuadOrder& O, i64 N, bool truncated) {
    if (truncated) return truncated_counts(O, N);
    auto G = class_group(O);
    std::vector<std::vector<i64>> out(N + 1, std::vector<i64>(G->size(), 0));
    for (i64 mp : divisors(O.f)) {
        i64 c = O.f / mp;
        if (c * c > N) continue;
        QuadOrder Op{O.k, mp};
        TransitionMap t = transition_map(O.k, mp, O.f);
        i64 idx = unit_index(Op, O);
        auto sub = truncated_counts(Op, N / (c * c));
        for (i64 n = 1; n < (i64)sub.size(); ++n)
            for (int A = 0; A < G->size(); ++A) out[n * c * c][A] += idx * sub[n][t.image[A]];
    }
    return out;
}

DirichletCoeffs partial_zeta(const QuadOrder& O, int cls, i64 N, bool truncated) {
    auto counts = class_counts(O, N, truncated);
    if (cls < 0 || cls >= (int)counts[0].size()) throw std::invalid_argument("no such class");
    DirichletCoeffs r(N);
    for (i64 n = 1; n <= N; ++n) r.set(n, Cyc((long)counts[n][cls]));
    return r;
}

SeriesCheck check_lemma56(i64 d, i64 D, i64 N) {
    QuadraticEtale k = make_etale(D);
    SeriesCheck s;
    s.lhs = DirichletCoeffs(N);
    for (i64 u = 1; u <= N; ++u) s.lhs.set(u, Cyc((long)u_count_closed_form(QuadOrder{k, d}, QuadOrder{k, u * d})));
    DirichletCoeffs b(N);
    for (i64 n = 1; n <= N; ++n)
        if (gcd(n, d) == 1) b.set(n, Cyc((long)(mobius(n) * kronecker(D, n))));
    s.rhs = dmul(zeta_shift(N, 1, 1), b);
    s.pass = s.lhs == s.rhs;
    return s;
}

bool verify_lemma56(i64 d, i64 D, i64 N) { return check_lemma56(d, D, N).pass; }

CycPoly poly_mul(const CycPoly& x, const CycPoly& y) {
    CycPoly r(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    return r;
}

CycPoly poly_add(const CycPoly& x, const CycPoly& y) {
    CycPoly r(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < x.size(); ++i) r[i] += x[i];
    for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
    return r;
}

bool poly_eq(const CycPoly& x, const CycPoly& y) {
    for (std::size_t i = 0; i < std::max(x.size(), y.size()); ++i) {
        Cyc a = i < x.size() ? x[i] : Cyc(), b = i < y.size() ? y[i] : Cyc();
        if (!(a == b)) return false;
    }
    return true;
}

CycPoly local_factor(const Character& chi, i64 p) {
    LocalPrimes lp = local_primes(chi, p);
    CycPoly r{Cyc(1)};
    for (const auto& v : lp.values) {
        CycPoly t(lp.deg + 1);
        t[0] = Cyc(1);
        t[lp.deg] = -Cyc::root(v);
        r = poly_mul(r, t);
    }
    return r;
}

EulerFactorCheck euler_factor_check(const Character& chi, i64 p) {
    check_odd_order(chi);
    const QuadOrder& O = chi.group->order;
    if (O.f % p == 0) throw std::invalid_argument("prime divides the conductor");
    long eps = kronecker(O.k.D, p);
    LocalPrimes lp = local_primes(chi, p);
    CycPoly prod = local_factor(chi, p);
    // same product with X replaced by X^2
    CycPoly prod2(2 * prod.size() - 1);
    for (std::size_t i = 0; i < prod.size(); ++i) prod2[2 * i] = prod[i];
    CycPoly lhs = poly_add(poly_mul({Cyc(1), Cyc(-1)}, {Cyc(1), Cyc(), Cyc(), Cyc(-eps)}),
                           poly_mul({Cyc(), Cyc(1)}, prod));
    EulerFactorCheck r;
    r.identity = poly_eq(lhs, prod2);
    r.a_p = lp.values.size() == 2 ? Cyc::root(lp.values[0]) + Cyc::root(lp.values[1]) : Cyc(1 + eps);
    r.a_p_form = poly_eq(prod, {Cyc(1), -r.a_p, Cyc(eps)});
    return r;
}

SeriesCheck check_thm51(const Character& chi, i64 N) {
    check_odd_order(chi);
    if (!is_primitive(chi)) throw std::invalid_argument("character must be primitive");
    const QuadOrder& O = chi.group->order;
    SeriesCheck s;
    s.lhs = DirichletCoeffs(N);
    for (i64 d = 1; d <= N; ++d) {
        QuadOrder Od{O.k, O.f * d};
        DirichletCoeffs L = L_coeffs(Od, d == 1 ? chi : induce(chi, O.f * d), N / d);
        for (const auto& [n, v] : L.a) s.lhs.add(n * d, v);
    }
    DirichletCoeffs Ls = L_star_coeffs(O, chi, N);
    s.rhs = dmul(dmul(zeta(N), zeta_shift3(N)), dmul(Ls, dinv(dilate(Ls, 2))));
    s.pass = s.lhs == s.rhs;
    return s;
}

bool verify_thm51(const Character& chi, i64 N) { return check_thm51(chi, N).pass; }

i64 a_p_point_count(const CubicForm& f, i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime");
    return (i64)projective_roots(f, p).size() - 1;
}

PointCountMatch match_point_counts(const CubicForm& F, i64 pmax) {
    auto [D, f] = split_discriminant(narrow64(discriminant(F)));
    PointCountMatch r{D, f, -1};
    auto chars = cubic_characters(class_group(make_order(D, f)));
    for (int i = 0; i < (int)chars.size() && r.character < 0; ++i) {
        bool ok = true;
        for (i64 p : primes_up_to(pmax - 1)) {
            if (f % p == 0) continue;
            CycPoly want{Cyc(1), Cyc(-a_p_point_count(F, p)), Cyc((long)kronecker(D, p))};
            if (!poly_eq(local_factor(chars[i], p), want)) {
                ok = false;
                break;
            }
        }
        if (ok) r.character = i;
    }
    return r;
}

}  // namespace onth
