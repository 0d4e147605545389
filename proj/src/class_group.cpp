#include "onth/class_group.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace onth {

namespace {

struct Form {
    i128 A, B, C;
};

// B into (-A, A], A > 0
void normalize_definite(Form& F, i128 disc) {
    i128 a2 = 2 * F.A;
    F.B = F.A - fmod(F.A - F.B, a2);
    F.C = (F.B * F.B - disc) / (4 * F.A);
}

Form reduce_definite(Form F, i128 disc) {
    if (F.A < 0) throw std::invalid_argument("negative definite form");
    normalize_definite(F, disc);
    while (F.A > F.C) {
        F = {F.C, -F.B, F.A};
        normalize_definite(F, disc);
    }
    if (F.A == F.C && F.B < 0) F.B = -F.B;
    return F;
}

void normalize_indefinite(Form& F, i128 disc, i128 s) {
    i128 a = iabs(F.A);
    if (a > s)
        F.B = a - fmod(a - F.B, 2 * a);
    else
        F.B = s - fmod(s - F.B, 2 * a);
    F.C = (F.B * F.B - disc) / (4 * F.A);
}

bool indefinite_reduced(const Form& F, i128 disc, i128 s) {
    i128 a2 = 2 * iabs(F.A);
    if (F.B <= 0 || F.B > s) return false;
    i128 hi = F.B + a2;
    if (hi * hi <= disc) return false;
    i128 lo = a2 - F.B;
    return lo < 0 || lo * lo < disc;
}

Form rho(const Form& F, i128 disc, i128 s) {
    Form G{F.C, -F.B, F.A};
    normalize_indefinite(G, disc, s);
    return G;
}

Form reduce_indefinite(Form F, i128 disc, i128 s) {
    normalize_indefinite(F, disc, s);
    int guard = 0;
    while (!indefinite_reduced(F, disc, s)) {
        F = rho(F, disc, s);
        if (++guard > 100000) throw std::logic_error("indefinite reduction did not terminate");
    }
    return F;
}

std::vector<std::pair<i64, i64>> indefinite_cycle(const Form& F, i128 disc, i128 s) {
    std::vector<std::pair<i64, i64>> out;
    Form G = F;
    do {
        out.emplace_back(narrow64(iabs(G.A)), narrow64(G.B));
        G = rho(G, disc, s);
    } while (!(G.A == F.A && G.B == F.B));
    return out;
}

// Smith normal form: returns the diagonal and the column transform V with U R V = diag
std::pair<std::vector<i128>, std::vector<std::vector<i128>>> smith(std::vector<std::vector<i128>> R) {
    std::size_t n = R.size();
    std::vector<std::vector<i128>> V(n, std::vector<i128>(n, 0));
    for (std::size_t i = 0; i < n; ++i) V[i][i] = 1;
    auto col_op = [&](std::size_t dst, std::size_t src, i128 q) {  // col dst -= q col src
        for (std::size_t i = 0; i < n; ++i) R[i][dst] = csub(R[i][dst], cmul(q, R[i][src]));
        for (std::size_t i = 0; i < n; ++i) V[i][dst] = csub(V[i][dst], cmul(q, V[i][src]));
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(R[i][x], R[i][y]);
            std::swap(V[i][x], V[i][y]);
        }
    };
    for (std::size_t k = 0; k < n; ++k) {
        while (true) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n; ++i)
                for (std::size_t j = k; j < n; ++j)
                    if (R[i][j] != 0 && (pi == n || iabs(R[i][j]) < iabs(R[pi][pj]))) pi = i, pj = j;
            if (pi == n) throw std::logic_error("relation matrix is singular");
            std::swap(R[k], R[pi]);
            col_swap(k, pj);
            bool clean = true;
            for (std::size_t i = k + 1; i < n; ++i) {
                i128 q = fdiv(R[i][k], R[k][k]);
                for (std::size_t j = k; j < n; ++j) R[i][j] = csub(R[i][j], cmul(q, R[k][j]));
                if (R[i][k] != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                col_op(j, k, fdiv(R[k][j], R[k][k]));
                if (R[k][j] != 0) clean = false;
            }
            if (!clean) continue;
            bool divides = true;
            for (std::size_t i = k + 1; i < n && divides; ++i)
                for (std::size_t j = k + 1; j < n; ++j)
                    if (R[i][j] % R[k][k] != 0) {
                        for (std::size_t c = k; c < n; ++c) R[k][c] = cadd(R[k][c], R[i][c]);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
    std::vector<i128> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = iabs(R[i][i]);
    return {d, V};
}

std::pair<i64, i64> split_key(const QuadIdeal& a, i64 m) {
    auto [p0, q0] = components(a.basis0());
    auto [p1, q1] = components(a.basis1());
    mpz_class L = 1;
    for (const mpq_class* x : {&p0, &q0, &p1, &q1}) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x->get_den_mpz_t());
    mpz_class P0 = mpq_class(p0 * L).get_num(), P1 = mpq_class(p1 * L).get_num();
    mpz_class Q0 = mpq_class(q0 * L).get_num(), Q1 = mpq_class(q1 * L).get_num();
    mpz_class g0, g1;
    mpz_gcd(g0.get_mpz_t(), P0.get_mpz_t(), P1.get_mpz_t());
    mpz_gcd(g1.get_mpz_t(), Q0.get_mpz_t(), Q1.get_mpz_t());
    P0 /= g0, P1 /= g0, Q0 /= g1, Q1 /= g1;
    mpz_class g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), P0.get_mpz_t(), P1.get_mpz_t());
    mpz_class tt = s * Q0 + t * Q1;
    mpz_class k0 = Q0 - P0 * tt, k1 = Q1 - P1 * tt, mm;
    mpz_gcd(mm.get_mpz_t(), k0.get_mpz_t(), k1.get_mpz_t());
    if (mm != m) throw std::logic_error("split ideal has the wrong index after normalisation");
    i64 r = narrow64(from_mpz(tt % m));
    r = (r % m + m) % m;
    return {std::min(r, (m - r) % m), 0};
}

QuadIdeal split_rep(i64 t, i64 m) {
    return ideal_from_generators(1, {from_components(1, t), from_components(0, m)});
}

std::pair<i64, i64> key_of(const ClassGroup& G, const QuadIdeal& a) {
    const QuadOrder& O = G.order;
    if (O.k.split()) return split_key(a, O.f);
    auto [s, F] = ideal_to_form(a, O);
    i128 disc = O.disc();
    if (disc < 0) return reduced_key(F, O.disc());
    i128 r = isqrt(disc);
    Form R = reduce_indefinite({F.A, F.B, F.C}, disc, r);
    return {narrow64(iabs(R.A)), narrow64(R.B)};
}

void build_structure(ClassGroup& G) {
    int h = G.size();
    auto mul_raw = [&](int i, int j) { return G.class_of(ideal_mul(G.reps[i], G.reps[j])); };
    std::vector<std::vector<i64>> expo(h);
    std::vector<char> in(h, 0);
    in[0] = 1;
    std::vector<int> members{0};
    std::vector<std::vector<i128>> rel;
    int r = 0;
    for (int cand = 0; cand < h; ++cand) {
        if (in[cand]) continue;
        std::vector<int> pw{0};
        int cur = cand;
        while (!in[cur]) {
            pw.push_back(cur);
            cur = mul_raw(cur, cand);
        }
        i64 n = (i64)pw.size();
        std::vector<i128> row(r + 1, 0);
        for (int j = 0; j < r; ++j) row[j] = -expo[cur][j];
        row[r] = n;
        for (auto& x : rel) x.push_back(0);
        rel.push_back(row);
        for (int x : members) expo[x].push_back(0);
        std::vector<int> added;
        for (i64 k = 1; k < n; ++k)
            for (int x : members) {
                int y = k == 1 ? mul_raw(x, cand) : mul_raw(x, pw[k]);
                if (in[y]) throw std::logic_error("class group closure is inconsistent");
                in[y] = 1;
                expo[y] = expo[x];
                expo[y][r] = k;
                added.push_back(y);
            }
        members.insert(members.end(), added.begin(), added.end());
        ++r;
    }
    if ((int)members.size() != h) throw std::logic_error("class group closure is incomplete");
    if (r == 0) {
        G.coords.assign(h, {});
        G.coord_index[{}] = 0;
        return;
    }
    auto [d, V] = smith(rel);
    std::vector<int> keep;
    for (int i = 0; i < r; ++i)
        if (d[i] > 1) keep.push_back(i);
    for (int i : keep) G.cyclic.push_back(narrow64(d[i]));
    G.coords.assign(h, {});
    for (int x = 0; x < h; ++x) {
        std::vector<i64> c;
        for (int i : keep) {
            i128 v = 0;
            for (int j = 0; j < r; ++j) v = cadd(v, cmul(expo[x][j], V[j][i]));
            c.push_back(narrow64(fmod(v, d[i])));
        }
        G.coords[x] = c;
        if (!G.coord_index.emplace(c, x).second) throw std::logic_error("class coordinates collide");
    }
    for (std::size_t i = 0; i < keep.size(); ++i) {
        std::vector<i64> e(keep.size(), 0);
        e[i] = 1;
        G.generators.push_back(G.coord_index.at(e));
    }
}

std::vector<std::pair<i64, i64>> field_keys(ClassGroup& G) {
    const QuadOrder& O = G.order;
    i128 disc = O.disc();
    std::vector<std::pair<i64, i64>> keys;
    if (disc < 0) {
        for (i128 A = 1; 3 * A * A <= -disc; ++A)
            for (i128 B = -A + 1; B <= A; ++B) {
                if (fmod(B - disc, 2) != 0) continue;
                i128 num = B * B - disc;
                if (num % (4 * A) != 0) continue;
                i128 C = num / (4 * A);
                if (C < A || (C == A && B < 0)) continue;
                if (gcd(gcd(A, B), C) != 1) continue;
                keys.emplace_back(narrow64(A), narrow64(B));
            }
        return keys;
    }
    i128 s = isqrt(disc);
    std::vector<std::pair<i64, i64>> reduced;
    for (i128 B = 1; B <= s; ++B) {
        if (fmod(B - disc, 2) != 0) continue;
        i64 n = narrow64((disc - B * B) / 4);
        for (i64 a : divisors(n)) {
            Form F{a, B, -n / a};
            if (!indefinite_reduced(F, disc, s)) continue;
            if (gcd(gcd(F.A, F.B), F.C) != 1) continue;
            reduced.emplace_back(a, narrow64(B));
        }
    }
    std::sort(reduced.begin(), reduced.end());
    std::map<std::pair<i64, i64>, std::pair<i64, i64>> canon;
    for (auto [a, b] : reduced) {
        if (canon.count({a, b})) continue;
        Form F{a, b, ((i128)b * b - disc) / (4 * a)};
        auto cyc = indefinite_cycle(F, disc, s);
        auto key = *std::min_element(cyc.begin(), cyc.end());
        for (auto p : cyc) canon[p] = key;
        keys.push_back(key);
    }
    return keys;
}

}  // namespace

std::pair<i64, i64> reduced_key(const BinaryForm& F, i64 disc) {
    Form G{F.A, F.B, F.C};
    if ((i128)F.B * F.B - 4 * (i128)F.A * F.C != disc) throw std::invalid_argument("form has the wrong discriminant");
    if (disc < 0) {
        if (G.A < 0) G = {-G.A, G.B, -G.C};
        Form R = reduce_definite(G, disc);
        return {narrow64(R.A), narrow64(R.B)};
    }
    i128 s = isqrt(disc);
    if (s * s == disc) throw std::invalid_argument("square discriminant");
    Form R = reduce_indefinite(G, disc, s);
    auto cyc = indefinite_cycle(R, disc, s);
    return *std::min_element(cyc.begin(), cyc.end());
}

bool is_reduced_form(const BinaryForm& F, i64 disc) {
    Form G{F.A, F.B, F.C};
    if (disc < 0) {
        return G.A > 0 && -G.A < G.B && G.B <= G.A && G.A <= G.C && !(G.A == G.C && G.B < 0);
    }
    return indefinite_reduced(G, disc, isqrt(disc));
}

int ClassGroup::from_coords(std::vector<i64> c) const {
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (i64)fmod(c[i], cyclic[i]);
    return coord_index.at(c);
}

int ClassGroup::mul(int i, int j) const {
    std::vector<i64> c = coords.at(i);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += coords.at(j)[k];
    return from_coords(c);
}

int ClassGroup::inv(int i) const {
    std::vector<i64> c = coords.at(i);
    for (auto& x : c) x = -x;
    return from_coords(c);
}

int ClassGroup::pow(int i, i64 e) const {
    std::vector<i64> c = coords.at(i);
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = (i64)fmod((i128)c[k] * fmod(e, cyclic[k]), cyclic[k]);
    return from_coords(c);
}

i64 ClassGroup::element_order(int i) const {
    i64 o = 1;
    for (std::size_t k = 0; k < cyclic.size(); ++k) o = lcm(o, cyclic[k] / gcd(coords.at(i)[k], cyclic[k]));
    return o;
}

int ClassGroup::class_of(const QuadIdeal& a) const {
    if (!ideal_invertible(a, order)) throw std::invalid_argument("ideal is not invertible over " + order.str());
    auto key = key_of(*this, a);
    auto it = key_index.find(key);
    if (it == key_index.end()) throw std::logic_error("class representative not found");
    return it->second;
}

mpq_class conductor_factor(i64 D, i64 f) {
    mpq_class r = f;
    for (i64 p : prime_divisors(f)) r *= 1 - qfrac(kronecker(D, p), p);
    return r;
}

ClassGroup build_class_group(const QuadOrder& O) {
    ClassGroup G;
    G.order = O;
    std::vector<std::pair<i64, i64>> keys;
    std::map<std::pair<i64, i64>, QuadIdeal> rep_of;
    if (O.k.split()) {
        i64 m = O.f;
        if (m == 1) keys.push_back({0, 0});
        for (i64 t = 1; 2 * t <= m; ++t)
            if (gcd(t, m) == 1) keys.push_back({t, 0});
        for (auto k : keys) rep_of[k] = split_rep(k.first == 0 ? 1 : k.first, m);
    } else {
        keys = field_keys(G);
        for (auto k : keys) {
            i64 disc = O.disc();
            i128 A = k.first, B = k.second;
            rep_of[k] = form_to_ideal(BinaryForm{k.first, k.second, narrow64((B * B - disc) / (4 * A))}, O);
        }
    }
    auto one = key_of(G, order_ideal(O));
    std::sort(keys.begin(), keys.end(), [&](auto x, auto y) {
        if ((x == one) != (y == one)) return x == one;
        return x < y;
    });
    for (auto k : keys) {
        G.key_index[k] = (int)G.reps.size();
        G.reps.push_back(rep_of.at(k));
    }
    if (O.k.real()) {
        // every reduced pair of a class maps to its index
        i128 disc = O.disc(), s = isqrt(disc);
        for (auto k : keys) {
            Form F{k.first, k.second, ((i128)k.second * k.second - disc) / (4 * k.first)};
            Form R = reduce_indefinite(F, disc, s);
            for (auto p : indefinite_cycle(R, disc, s)) G.key_index[p] = G.key_index.at(k);
        }
    }
    build_structure(G);
    if (O.f > 1) {
        auto Gk = class_group(QuadOrder{O.k, 1});
        mpq_class lhs = mpq_class(G.size()) * unit_index(QuadOrder{O.k, 1}, O);
        mpq_class rhs = mpq_class(Gk->size()) * conductor_factor(O.k.D, O.f);
        if (lhs != rhs) throw std::logic_error("class number consistency check failed for " + O.str());
    }
    return G;
}

std::shared_ptr<const ClassGroup> class_group(const QuadOrder& O) {
    static std::shared_mutex mu;
    static std::map<std::pair<i64, i64>, std::shared_ptr<const ClassGroup>> memo;
    std::pair<i64, i64> key{O.k.D, O.f};
    {
        std::shared_lock lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    auto G = std::make_shared<const ClassGroup>(build_class_group(O));
    std::unique_lock lock(mu);
    return memo.emplace(key, G).first->second;
}

i64 class_number(const QuadOrder& O) { return class_group(O)->size(); }

i64 u_count_from_class_numbers(const QuadOrder& Oprime, const QuadOrder& O) {
    i64 idx = unit_index(Oprime, O);
    i64 num = idx * class_number(O), den = class_number(Oprime);
    if (num % den != 0) throw std::logic_error("U count is not integral");
    return num / den;
}

i64 u_count_closed_form(const QuadOrder& Oprime, const QuadOrder& O) {
    if (!(Oprime.k == O.k) || O.f % Oprime.f != 0) throw std::invalid_argument("orders are not nested");
    i64 c = O.f, d = Oprime.f;
    mpq_class r(c / d);
    for (i64 p : prime_divisors(c))
        if (d % p != 0) r *= 1 - qfrac(kronecker(O.k.D, p), p);
    if (r.get_den() != 1) throw std::logic_error("closed U count is not integral");
    return narrow64(from_mpz(r.get_num()));
}

}  // namespace onth
