#include "onth/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace onth {

namespace {

using QVec = std::pair<mpq_class, mpq_class>;

struct IntHnf {
    mpz_class a, b, c;
};

// Z(a,0) + Z(b,c) spanning the same lattice as the rows of v
IntHnf int_hnf(const std::vector<std::pair<mpz_class, mpz_class>>& v) {
    mpz_class g = 0, vx = 0;
    for (const auto& [x, y] : v) {
        mpz_class ng, s, t;
        mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
        if (ng == 0) continue;
        vx = s * vx + t * x;
        g = ng;
    }
    if (g == 0) throw std::invalid_argument("lattice is not of full rank");
    mpz_class a = 0;
    for (const auto& [x, y] : v) {
        mpz_class k = x - (y / g) * vx;
        mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), k.get_mpz_t());
    }
    if (a == 0) throw std::invalid_argument("lattice is not of full rank");
    mpz_class b;
    mpz_fdiv_r(b.get_mpz_t(), vx.get_mpz_t(), a.get_mpz_t());
    return {a, b, g};
}

mpz_class lcm_den(const std::vector<QVec>& v) {
    mpz_class L = 1;
    for (const auto& [x, y] : v) {
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x.get_den_mpz_t());
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), y.get_den_mpz_t());
    }
    return L;
}

// scale, primitive (a, b, c) for the lattice spanned by v
struct ScaledHnf {
    mpq_class scale;
    i64 a, b, c;
};

ScaledHnf scaled_hnf(const std::vector<QVec>& v) {
    mpz_class L = lcm_den(v);
    std::vector<std::pair<mpz_class, mpz_class>> iv;
    iv.reserve(v.size());
    for (const auto& [x, y] : v) {
        mpq_class X = x * L, Y = y * L;
        iv.emplace_back(X.get_num(), Y.get_num());
    }
    IntHnf h = int_hnf(iv);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), h.a.get_mpz_t(), h.b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.c.get_mpz_t());
    ScaledHnf r;
    r.scale = qfrac(g, L);
    r.scale.canonicalize();
    r.a = narrow64(from_mpz(h.a / g));
    r.b = narrow64(from_mpz(h.b / g));
    r.c = narrow64(from_mpz(h.c / g));
    return r;
}

std::vector<QVec> omega_basis(const QuadIdeal& x) {
    return {{x.scale * x.a, mpq_class(0)}, {x.scale * x.b, x.scale * x.c}};
}

QuadIdeal from_omega_vectors(i64 D, const std::vector<QVec>& v) {
    ScaledHnf h = scaled_hnf(v);
    QuadIdeal r;
    r.D = D;
    r.scale = h.scale;
    r.a = h.a;
    r.b = h.b;
    r.c = h.c;
    return r;
}

// dual basis with respect to the standard pairing of coordinates
std::vector<QVec> dual_basis(const std::vector<QVec>& m) {
    const auto& [p, q] = m[0];
    const auto& [r, s] = m[1];
    mpq_class det = p * s - q * r;
    return {{s / det, -r / det}, {-q / det, p / det}};
}

QuadIdeal lattice_sum(const QuadIdeal& x, const QuadIdeal& y) {
    auto v = omega_basis(x);
    auto w = omega_basis(y);
    v.insert(v.end(), w.begin(), w.end());
    return from_omega_vectors(x.D, v);
}

QuadIdeal lattice_intersect(const QuadIdeal& x, const QuadIdeal& y) {
    auto dx = dual_basis(omega_basis(x));
    auto dy = dual_basis(omega_basis(y));
    dx.insert(dx.end(), dy.begin(), dy.end());
    QuadIdeal s = from_omega_vectors(x.D, dx);
    return from_omega_vectors(x.D, dual_basis(omega_basis(s)));
}

void same_algebra(const QuadIdeal& x, const QuadIdeal& y) {
    if (x.D != y.D) throw std::invalid_argument("ideals of different algebras");
}

void same_algebra(const QuadIdeal& x, const QuadOrder& O) {
    if (x.D != O.k.D) throw std::invalid_argument("ideal and order of different algebras");
}

// (x0 + y0 w)(x1 + y1 w) mod f in omega coordinates
std::pair<i128, i128> omega_mulmod(i64 D, std::pair<i128, i128> u, std::pair<i128, i128> v, i64 f) {
    i128 e = (i128(D) * D - D) / 4;
    i128 x = fmod(u.first * v.first - fmod(u.second * v.second, f) * fmod(e, f), f);
    i128 y = fmod(u.first * v.second + u.second * v.first + fmod(u.second * v.second, f) * fmod(D, f), f);
    return {x, y};
}

// smallest j >= 1 with eps^j in Z + f O_k
i64 unit_exponent(i64 D, const KElem& eps, i64 f) {
    if (f == 1) return 1;
    auto [ex, ey] = to_omega(D, eps);
    mpz_class fx = ex.get_num() % f, fy = ey.get_num() % f;
    std::pair<i128, i128> e{fmod(from_mpz(fx), f), fmod(from_mpz(fy), f)};
    std::pair<i128, i128> cur = e;
    i64 limit = 4 * f * f + 8;
    for (i64 j = 1; j <= limit; ++j) {
        if (cur.second == 0) return j;
        cur = omega_mulmod(D, cur, e, f);
    }
    throw std::logic_error("unit exponent search did not terminate");
}

}  // namespace

std::string QuadOrder::str() const {
    std::ostringstream os;
    os << "O(" << k.D << "," << f << ")";
    return os.str();
}

QuadraticEtale make_etale(i64 D) {
    if (!is_fundamental(D)) throw std::invalid_argument("not a fundamental discriminant: " + std::to_string(D));
    return QuadraticEtale{D};
}

QuadOrder make_order(i64 D, i64 f) {
    if (f < 1) throw std::invalid_argument("conductor must be positive");
    return QuadOrder{make_etale(D), f};
}

KElem kmul(i64 D, const KElem& x, const KElem& y) {
    return {x.a * y.a + D * x.b * y.b, x.a * y.b + x.b * y.a};
}
KElem kadd(const KElem& x, const KElem& y) { return {x.a + y.a, x.b + y.b}; }
KElem kconj(const KElem& x) { return {x.a, -x.b}; }
mpq_class knorm(i64 D, const KElem& x) { return x.a * x.a - D * x.b * x.b; }
mpq_class ktrace(const KElem& x) { return 2 * x.a; }
KElem kinv(i64 D, const KElem& x) {
    mpq_class n = knorm(D, x);
    if (n == 0) throw std::domain_error("element is not invertible");
    return {x.a / n, -x.b / n};
}
namespace {

bool rational_cbrt(const mpq_class& q, mpq_class& r) {
    mpz_class n = q.get_num(), d = q.get_den(), rn, rd;
    bool neg = n < 0;
    if (neg) n = -n;
    if (!mpz_root(rn.get_mpz_t(), n.get_mpz_t(), 3) || !mpz_root(rd.get_mpz_t(), d.get_mpz_t(), 3)) return false;
    r = mpq_class(neg ? mpz_class(-rn) : rn, rd);
    r.canonicalize();
    return true;
}

bool rational_sqrt(const mpq_class& q, mpq_class& r) {
    if (q < 0) return false;
    mpz_class rn, rd;
    if (!mpz_perfect_square_p(q.get_num().get_mpz_t()) || !mpz_perfect_square_p(q.get_den().get_mpz_t())) return false;
    mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
    r = mpq_class(rn, rd);
    r.canonicalize();
    return true;
}

}  // namespace

std::vector<KElem> kcube_roots(i64 D, const KElem& g) {
    std::vector<KElem> out;
    if (knorm(D, g) == 0) throw std::domain_error("element is not invertible");
    if (D == 1) {
        auto [u, v] = components(g);
        mpq_class ru, rv;
        if (rational_cbrt(u, ru) && rational_cbrt(v, rv)) out.push_back(from_components(ru, rv));
        return out;
    }
    // rho + rho^tau = T solves T^3 - 3 M T - Tr(g) = 0 with M = N(rho)
    mpq_class M, t = ktrace(g);
    if (!rational_cbrt(knorm(D, g), M)) return out;
    mpz_class L;
    mpz_lcm(L.get_mpz_t(), M.get_den_mpz_t(), t.get_den_mpz_t());
    std::vector<long double> approx;
    long double ga = g.a.get_d(), gb = g.b.get_d();
    if (D < 0) {
        std::complex<long double> z(ga, gb * std::sqrt((long double)-D));
        for (int j = 0; j < 3; ++j) {
            auto r = std::polar(std::cbrt(std::abs(z)), (std::arg(z) + 2 * std::numbers::pi_v<long double> * j) / 3);
            approx.push_back(2 * r.real());
        }
    } else {
        long double s = std::sqrt((long double)D);
        approx.push_back(std::cbrt(ga + gb * s) + std::cbrt(ga - gb * s));
    }
    for (long double T0 : approx) {
        mpz_class Y0((long)std::llround(T0 * L.get_d()));
        for (int dy = -1; dy <= 1; ++dy) {
            mpq_class T(Y0 + dy, L);
            T.canonicalize();
            if (T * T * T - 3 * M * T - t != 0) continue;
            mpq_class x = T / 2, y;
            if (!rational_sqrt((x * x - M) / D, y)) continue;
            for (int sg = -1; sg <= 1; sg += 2) {
                KElem r{x, sg * y};
                if (kpow(D, r, 3) == g && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(r);
            }
        }
    }
    return out;
}

KElem kpow(i64 D, KElem x, i64 e) {
    if (e < 0) {
        x = kinv(D, x);
        e = -e;
    }
    KElem r{1, 0};
    while (e) {
        if (e & 1) r = kmul(D, r, x);
        x = kmul(D, x, x);
        e >>= 1;
    }
    return r;
}
KElem kscale(const mpq_class& q, const KElem& x) { return {q * x.a, q * x.b}; }

std::pair<mpq_class, mpq_class> to_omega(i64 D, const KElem& x) {
    mpq_class y = 2 * x.b;
    return {x.a - x.b * D, y};
}
KElem from_omega(i64 D, const mpq_class& x, const mpq_class& y) {
    mpq_class a = x + y * D / 2;
    return {a, y / 2};
}
std::pair<mpq_class, mpq_class> components(const KElem& x) { return {x.a - x.b, x.a + x.b}; }
KElem from_components(const mpq_class& u, const mpq_class& v) { return {(u + v) / 2, (v - u) / 2}; }

std::string kstr(const KElem& x) {
    std::ostringstream os;
    os << x.a.get_str() << (x.b < 0 ? "-" : "+") << mpq_class(abs(x.b)).get_str() << "*r";
    return os.str();
}

bool QuadIdeal::operator<(const QuadIdeal& o) const {
    if (D != o.D) return D < o.D;
    if (scale != o.scale) return scale < o.scale;
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
}

std::string QuadIdeal::str() const {
    std::ostringstream os;
    os << scale.get_str() << "*[" << a << "," << b << "," << c << "]";
    return os.str();
}

KElem QuadIdeal::basis0() const { return from_omega(D, scale * a, 0); }
KElem QuadIdeal::basis1() const { return from_omega(D, scale * b, scale * c); }

QuadIdeal ideal_from_generators(i64 D, const std::vector<KElem>& gens) {
    std::vector<QVec> v;
    for (const auto& g : gens) v.push_back(to_omega(D, g));
    return from_omega_vectors(D, v);
}

QuadIdeal order_ideal(const QuadOrder& O) {
    return from_omega_vectors(O.k.D, {{1, 0}, {0, O.f}});
}

QuadIdeal principal(const QuadOrder& O, const KElem& alpha) {
    return ideal_scale(order_ideal(O), alpha);
}

QuadIdeal ideal_mul(const QuadIdeal& x, const QuadIdeal& y) {
    same_algebra(x, y);
    KElem xs[2] = {x.basis0(), x.basis1()}, ys[2] = {y.basis0(), y.basis1()};
    std::vector<KElem> g;
    for (const auto& u : xs)
        for (const auto& v : ys) g.push_back(kmul(x.D, u, v));
    return ideal_from_generators(x.D, g);
}

QuadIdeal ideal_conj(const QuadIdeal& x) {
    return ideal_from_generators(x.D, {kconj(x.basis0()), kconj(x.basis1())});
}

QuadIdeal ideal_scale(const QuadIdeal& x, const KElem& alpha) {
    if (knorm(x.D, alpha) == 0) throw std::domain_error("scaling by a zero divisor");
    return ideal_from_generators(x.D, {kmul(x.D, alpha, x.basis0()), kmul(x.D, alpha, x.basis1())});
}

QuadIdeal ideal_pow(const QuadIdeal& x, int e, const QuadOrder& O) {
    QuadIdeal base = e < 0 ? ideal_inverse(x, O) : x;
    int n = e < 0 ? -e : e;
    QuadIdeal r = order_ideal(O);
    for (int i = 0; i < n; ++i) r = ideal_mul(r, base);
    return r;
}

bool ideal_contains(const QuadIdeal& x, const KElem& alpha) {
    auto [u, v] = to_omega(x.D, alpha);
    mpq_class y = v / (x.scale * x.c);
    if (y.get_den() != 1) return false;
    mpq_class r = (u - y * x.scale * x.b) / (x.scale * x.a);
    return r.get_den() == 1;
}

bool ideal_subset(const QuadIdeal& x, const QuadIdeal& y) {
    same_algebra(x, y);
    return ideal_contains(y, x.basis0()) && ideal_contains(y, x.basis1());
}

mpq_class lattice_det(const QuadIdeal& x) { return x.scale * x.scale * x.a * x.c; }

i64 multiplier_conductor(const QuadIdeal& x) {
    // N(u a + v (b + c w)) / scale^2 is the form below, of discriminant (a c)^2 D
    mpz_class a = x.a, b = x.b, c = x.c, D = x.D;
    mpz_class A = a * a;
    mpz_class B = a * (2 * b + c * D);
    mpz_class C = b * b + b * c * D + c * c * ((D * D - D) / 4);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), C.get_mpz_t());
    // the primitive form N(.)/N(x) has discriminant f^2 D, so the content is a c / f
    mpz_class ac = a * c;
    if (ac % g != 0) throw std::logic_error("multiplier conductor is not integral");
    return narrow64(from_mpz(ac / g));
}

bool is_module_over(const QuadIdeal& x, const QuadOrder& O) {
    same_algebra(x, O);
    return O.f % multiplier_conductor(x) == 0;
}

bool ideal_invertible(const QuadIdeal& x, const QuadOrder& O) {
    same_algebra(x, O);
    return multiplier_conductor(x) == O.f;
}

mpq_class ideal_norm(const QuadIdeal& x, const QuadOrder& O) {
    if (!ideal_invertible(x, O)) throw std::invalid_argument("ideal is not invertible over " + O.str());
    return lattice_det(x) / O.f;
}

QuadIdeal ideal_inverse(const QuadIdeal& x, const QuadOrder& O) {
    mpq_class n = ideal_norm(x, O);
    QuadIdeal r = ideal_conj(x);
    r.scale /= n;
    return r;
}

QuadIdeal colon(const QuadOrder& O, const QuadIdeal& x) {
    same_algebra(x, O);
    QuadIdeal o = order_ideal(O);
    // a basis of units of the algebra; in Q + Q the second HNF vector may be a zero divisor
    KElem e0 = x.basis0(), e1 = x.basis1();
    while (knorm(x.D, e1) == 0) e1 = kadd(e1, e0);
    QuadIdeal l0 = ideal_scale(o, kinv(x.D, e0));
    QuadIdeal l1 = ideal_scale(o, kinv(x.D, e1));
    return lattice_intersect(l0, l1);
}

bool is_integral(const QuadIdeal& x, const QuadOrder& O) { return ideal_subset(x, order_ideal(O)); }

QuadIdeal extend(const QuadIdeal& x, const QuadOrder& Oprime) { return ideal_mul(x, order_ideal(Oprime)); }

QuadIdeal contract(const QuadIdeal& x, const QuadOrder& O) { return lattice_intersect(x, order_ideal(O)); }

bool coprime_to_conductor(const QuadIdeal& x, const QuadOrder& O, i64 m) {
    QuadIdeal o = order_ideal(O);
    if (!ideal_subset(x, o)) return false;
    QuadIdeal fo = o;
    fo.scale *= m ? m : O.f;
    return lattice_sum(x, fo) == o;
}

std::pair<mpq_class, BinaryForm> ideal_to_form(const QuadIdeal& x, const QuadOrder& O) {
    same_algebra(x, O);
    i64 disc = O.disc();
    // coordinates over {1, wO}, wO = (disc + sqrt(disc O))/2
    auto coords = [&](const KElem& e) -> QVec {
        mpq_class y = 2 * e.b / O.f;
        return {e.a - y * disc / 2, y};
    };
    ScaledHnf h = scaled_hnf({coords(x.basis0()), coords(x.basis1())});
    if (h.c != 1) throw std::invalid_argument("lattice is not an ideal of " + O.str());
    i128 A = h.a;
    i128 B = -(2 * i128(h.b) + disc);
    B = fmod(B + A, 2 * A) - A;
    i128 num = B * B - disc;
    if (num % (4 * A) != 0) throw std::invalid_argument("lattice is not an ideal of " + O.str());
    return {h.scale, BinaryForm{narrow64(A), narrow64(B), narrow64(num / (4 * A))}};
}

QuadIdeal form_to_ideal(const BinaryForm& F, const QuadOrder& O) {
    i64 A = F.A < 0 ? -F.A : F.A;
    return ideal_from_generators(O.k.D, {KElem{A, 0}, KElem{qfrac(-F.B, 2), qfrac(O.f, 2)}});
}

std::vector<QuadIdeal> factor_prime(const QuadOrder& O, i64 p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime");
    if (O.f % p == 0) throw std::invalid_argument("prime divides the conductor");
    i64 disc = O.disc();
    int chi = kronecker(disc, p);
    if (chi == -1) {
        QuadIdeal r = order_ideal(O);
        r.scale *= p;
        return {r};
    }
    std::vector<QuadIdeal> out;
    i128 m = 4 * i128(p);
    for (i64 b = 0; b < 2 * p; ++b) {
        if (((b - disc) % 2 + 2) % 2 != 0) continue;
        if (fmod(i128(b) * b - disc, m) != 0) continue;
        QuadIdeal P = form_to_ideal(BinaryForm{p, b, 0}, O);
        if (std::find(out.begin(), out.end(), P) == out.end()) out.push_back(P);
        QuadIdeal Q = form_to_ideal(BinaryForm{p, -b, 0}, O);
        if (std::find(out.begin(), out.end(), Q) == out.end()) out.push_back(Q);
    }
    std::sort(out.begin(), out.end());
    std::size_t want = chi == 1 ? 2 : 1;
    if (out.size() != want) throw std::logic_error("prime factorisation has the wrong shape");
    return out;
}

KElem fundamental_unit(i64 D) {
    if (D <= 1 || !is_fundamental(D)) throw std::invalid_argument("not a real quadratic discriminant");
    i64 m = D % 4 == 0 ? D / 4 : D;
    // continued fraction of sqrt(m)
    mpz_class a0 = to_mpz(isqrt(m));
    mpz_class mm = 0, d = 1, a = a0;
    mpz_class h0 = 1, h1 = a0, k0 = 0, k1 = 1;
    mpz_class M = m;
    while (true) {
        mpz_class n = h1 * h1 - M * k1 * k1;
        if (n == 1 || n == -1) break;
        mm = d * a - mm;
        d = (M - mm * mm) / d;
        a = (a0 + mm) / d;
        mpz_class h2 = a * h1 + h0, k2 = a * k1 + k0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
    }
    if (D % 4 == 0) return KElem{mpq_class(h1), qfrac(k1, 2)};
    // eps1 = X + Y sqrt D may be the cube of (t + u sqrt D)/2
    mpz_class X = h1, Y = k1;
    long nu = (h1 * h1 - M * k1 * k1) == 1 ? 1 : -1;
    auto solve = [](const mpz_class& coeff, long lin, const mpz_class& rhs) -> std::vector<mpz_class> {
        // coeff t^3 + lin t = rhs with t > 0
        mpz_class r;
        mpz_class q = rhs / coeff;
        mpz_root(r.get_mpz_t(), q.get_mpz_t(), 3);
        std::vector<mpz_class> out;
        for (long dlt = -3; dlt <= 3; ++dlt) {
            mpz_class t = r + dlt;
            if (t <= 0) continue;
            if (coeff * t * t * t + lin * t == rhs) out.push_back(t);
        }
        return out;
    };
    for (const auto& t : solve(1, -3 * nu, 2 * X))
        for (const auto& u : solve(M, 3 * nu, 2 * Y))
            if (t * t - M * u * u == 4 * nu) return KElem{qfrac(t, 2), qfrac(u, 2)};
    return KElem{mpq_class(X), mpq_class(Y)};
}

UnitData unit_data(const QuadOrder& O) {
    UnitData u;
    u.order = O;
    i64 D = O.k.D;
    if (D == 1) {
        u.torsion = O.f <= 2 ? 4 : 2;
    } else if (D < 0) {
        u.torsion = O.f == 1 && D == -3 ? 6 : O.f == 1 && D == -4 ? 4 : 2;
    } else {
        u.torsion = 2;
        KElem eps = fundamental_unit(D);
        u.fundamental_unit_power = unit_exponent(D, eps, O.f);
        u.eps = kpow(D, eps, u.fundamental_unit_power);
    }
    return u;
}

i64 unit_index(const QuadOrder& Oprime, const QuadOrder& O) {
    if (!(Oprime.k == O.k)) throw std::invalid_argument("orders of different algebras");
    if (O.f % Oprime.f != 0) throw std::invalid_argument("conductors are not nested");
    UnitData a = unit_data(Oprime), b = unit_data(O);
    if (O.k.D > 1) return b.fundamental_unit_power / a.fundamental_unit_power;
    return a.torsion / b.torsion;
}

int unit_cube_quotient(const QuadOrder& O) {
    if (O.k.D > 1) return 3;
    return unit_data(O).torsion == 6 ? 3 : 1;
}

}  // namespace onth
