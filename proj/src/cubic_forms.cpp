#include "onth/cubic_forms.hpp"

#include <algorithm>
#include <cmath>
#include <omp.h>

namespace onth {

namespace {

// binary forms as coefficient vectors u^n, u^(n-1) v, ..., v^n
template <class Z>
std::vector<Z> pmul(const std::vector<Z>& p, const std::vector<Z>& q) {
    std::vector<Z> r(p.size() + q.size() - 1, Z(0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

template <class Z>
void padd(std::vector<Z>& acc, const std::vector<Z>& p, const Z& k) {
    for (std::size_t i = 0; i < p.size(); ++i) acc[i] += k * p[i];
}

// g acting on a binary form of degree n
template <class Z>
std::vector<Z> act_poly(const Unimodular& g, const std::vector<Z>& f) {
    int n = int(f.size()) - 1;
    std::vector<Z> l1{Z(g.a), Z(g.c)}, l2{Z(g.b), Z(g.d)};
    std::vector<std::vector<Z>> p1(n + 1), p2(n + 1);
    p1[0] = p2[0] = {Z(1)};
    for (int k = 1; k <= n; ++k) {
        p1[k] = pmul(p1[k - 1], l1);
        p2[k] = pmul(p2[k - 1], l2);
    }
    std::vector<Z> r(n + 1, Z(0));
    for (int i = 0; i <= n; ++i) padd(r, pmul(p1[n - i], p2[i]), f[i]);
    return r;
}

std::vector<Ck> as_poly(const CubicForm& f) { return {f.x0, f.x1, f.x2, f.x3}; }

CubicForm from_poly(const std::vector<Ck>& p) {
    return {narrow64(p[0].v), narrow64(p[1].v), narrow64(p[2].v), narrow64(p[3].v)};
}

int sgn(i128 x) { return (x > 0) - (x < 0); }

const std::vector<Unimodular>& small_matrices() {
    static const std::vector<Unimodular> mats = [] {
        std::vector<Unimodular> out;
        for (int a = -1; a <= 1; ++a)
            for (int b = -1; b <= 1; ++b)
                for (int c = -1; c <= 1; ++c)
                    for (int d = -1; d <= 1; ++d)
                        if (a * d - b * c == 1) out.push_back({a, b, c, d});
        return out;
    }();
    return mats;
}

// sign of f(p, q) for q > 0, exact
int sign_at(const CubicForm& f, i128 p, i128 q) {
    try {
        Ck P(p), Q(q);
        Ck v = Ck(f.x0) * P * P * P + Ck(f.x1) * P * P * Q + Ck(f.x2) * P * Q * Q + Ck(f.x3) * Q * Q * Q;
        return sgn(v.v);
    } catch (const OverflowError&) {
        mpz_class P = to_mpz(p), Q = to_mpz(q);
        mpz_class v = f.x0 * P * P * P + f.x1 * P * P * Q + f.x2 * P * Q * Q + f.x3 * Q * Q * Q;
        return sgn(v);
    }
}

// For disc < 0 and x0 != 0: sign of (alpha - num/den) with alpha the real root of f(x, 1).
int cmp_root(const CubicForm& f, i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int s = sign_at(f, num, den);
    if (s == 0) return 0;
    // f(x, 1) has the sign of x0 to the right of its only real root
    return s == sgn(f.x0) ? -1 : 1;
}

long double real_root_approx(const CubicForm& f) {
    long double a = f.x0, b = f.x1, c = f.x2, d = f.x3;
    long double m = 1 + std::max({std::fabs(b), std::fabs(c), std::fabs(d)}) / std::fabs(a);
    long double lo = -m, hi = m;
    auto val = [&](long double x) { return ((a * x + b) * x + c) * x + d; };
    int slo = val(lo) > 0 ? 1 : -1;
    for (int it = 0; it < 200; ++it) {
        long double mid = (lo + hi) / 2;
        if (mid == lo || mid == hi) break;
        long double v = val(mid);
        if (v == 0) return mid;
        if ((v > 0 ? 1 : -1) == slo)
            lo = mid;
        else
            hi = mid;
    }
    return (lo + hi) / 2;
}

bool reduced_quad(i128 A, i128 B, i128 C) {
    return iabs(B) <= iabs(A) && iabs(A) <= iabs(C);
}

// negative discriminant, x0 != 0: |B| <= |A| for the real quadratic factor
bool neg_middle_ok(const CubicForm& f) {
    // -1 - x1/x0 <= alpha <= 1 - x1/x0
    return cmp_root(f, -f.x0 - f.x1, f.x0) >= 0 && cmp_root(f, f.x0 - f.x1, f.x0) <= 0;
}

bool neg_outer_ok(const CubicForm& f) {
    if (f.x3 == 0) return iabs(f.x0) <= iabs(f.x2);
    // alpha lies between 0 and -x3/x0
    int s0 = cmp_root(f, 0, 1);
    int s1 = cmp_root(f, -f.x3, f.x0);
    return s0 * s1 <= 0;
}

struct Reducer {
    CubicForm f;
    Unimodular g;
    void apply(const Unimodular& h) {
        f = act(h, f);
        g = h * g;
    }
};

// t with -|A| < B + 2|A|t ... for integer quadratics; returns t for (u,v) -> (u + t v, v)
i128 translate_for(i128 A, i128 B) {
    i128 aa = iabs(A);
    i128 t = fdiv(aa - B, 2 * aa);
    return A > 0 ? t : -t;
}

void reduce_positive(Reducer& r) {
    for (;;) {
        QuadCovariant h = hessian(r.f, Convention::L);
        if (iabs(h.B) > h.A) {
            r.apply(Unimodular{1, 0, narrow64(translate_for(h.A, h.B)), 1});
        } else if (h.A > h.C) {
            r.apply(Unimodular::S());
        } else {
            return;
        }
    }
}

void reduce_negative(Reducer& r) {
    for (;;) {
        const CubicForm& f = r.f;
        if (f.x0 == 0) {
            // f = v * (x1 u^2 + x2 u v + x3 v^2)
            if (iabs(f.x2) > iabs(f.x1)) {
                r.apply(Unimodular{1, 0, narrow64(translate_for(f.x1, f.x2)), 1});
            } else if (iabs(f.x1) > iabs(f.x3)) {
                r.apply(Unimodular::S());
            } else {
                return;
            }
            continue;
        }
        if (!neg_middle_ok(f)) {
            // y = alpha + x1/x0; pick t with -1 < y + 2t <= 1
            long double y = real_root_approx(f) + (long double)f.x1 / f.x0;
            i128 t = (i128)std::floor((1 - y) / 2);
            // exact correction: y + 2t <= 1  <=>  alpha <= (x0 - x1 - 2 x0 t)/x0
            for (;;) {
                if (cmp_root(f, f.x0 - f.x1 - 2 * (i128)f.x0 * t, f.x0) > 0) {
                    --t;
                } else if (cmp_root(f, -f.x0 - f.x1 - 2 * (i128)f.x0 * t, f.x0) <= 0) {
                    ++t;
                } else {
                    break;
                }
            }
            r.apply(Unimodular{1, 0, narrow64(t), 1});
        } else if (!neg_outer_ok(f)) {
            r.apply(Unimodular::S());
        } else {
            return;
        }
    }
}

Reducer reduce(const CubicForm& f) {
    i128 D = discriminant(f);
    if (D == 0) throw std::invalid_argument("zero discriminant");
    Reducer r{f, Unimodular::identity()};
    if (D > 0)
        reduce_positive(r);
    else
        reduce_negative(r);
    return r;
}

bool is_canonical_reduced(const CubicForm& f) {
    for (const auto& m : small_matrices()) {
        CubicForm h = act(m, f);
        if (h < f && is_weakly_reduced(h)) return false;
    }
    return true;
}

}  // namespace

std::string CubicForm::str() const {
    return "(" + std::to_string(x0) + "," + std::to_string(x1) + "," + std::to_string(x2) + "," +
           std::to_string(x3) + ")";
}

Unimodular Unimodular::operator*(const Unimodular& o) const {
    return {narrow64(cadd(cmul(a, o.a), cmul(b, o.c))), narrow64(cadd(cmul(a, o.b), cmul(b, o.d))),
            narrow64(cadd(cmul(c, o.a), cmul(d, o.c))), narrow64(cadd(cmul(c, o.b), cmul(d, o.d)))};
}

bool in_dual_lattice(const CubicForm& f) { return f.x1 % 3 == 0 && f.x2 % 3 == 0; }

i128 discriminant(const CubicForm& f) {
    Ck a(f.x0), b(f.x1), c(f.x2), d(f.x3);
    Ck r = b * b * c * c + Ck(18) * a * b * c * d - Ck(4) * a * c * c * c - Ck(4) * b * b * b * d -
           Ck(27) * a * a * d * d;
    return r.v;
}

CubicForm act(const Unimodular& g, const CubicForm& f) {
    if ((i128)g.a * g.d - (i128)g.b * g.c != 1) throw std::invalid_argument("matrix not in SL(2,Z)");
    return from_poly(act_poly(g, as_poly(f)));
}

QuadCovariant act(const Unimodular& g, const QuadCovariant& h) {
    if ((i128)g.a * g.d - (i128)g.b * g.c != 1) throw std::invalid_argument("matrix not in SL(2,Z)");
    auto p = act_poly<Ck>(g, {h.A, h.B, h.C});
    return {p[0].v, p[1].v, p[2].v};
}

JacobianCovariant act(const Unimodular& g, const JacobianCovariant& j) {
    if ((i128)g.a * g.d - (i128)g.b * g.c != 1) throw std::invalid_argument("matrix not in SL(2,Z)");
    auto p = act_poly<Ck>(g, {j.C0, cmul(3, j.C1), cmul(3, j.C2), j.C3});
    return {p[0].v, p[1].v / 3, p[2].v / 3, p[3].v};
}

QuadCovariant hessian(const CubicForm& f, Convention conv) {
    if (conv == Convention::L) {
        Ck a(f.x0), b(f.x1), c(f.x2), d(f.x3);
        return {(b * b - Ck(3) * a * c).v, (b * c - Ck(9) * a * d).v, (c * c - Ck(3) * b * d).v};
    }
    if (!in_dual_lattice(f)) throw std::invalid_argument("form not in the dual lattice");
    Ck y0(f.x0), y1(f.x1 / 3), y2(f.x2 / 3), y3(f.x3);
    return {(y1 * y1 - y0 * y2).v, (y1 * y2 - y0 * y3).v, (y2 * y2 - y1 * y3).v};
}

JacobianCovariant jacobian(const CubicForm& f) {
    QuadCovariant h = hessian(f, Convention::Ldual);
    Ck y0(f.x0), y1(f.x1 / 3), y2(f.x2 / 3), y3(f.x3);
    Ck B0(h.A), B1(h.B), B2(h.C);
    return {(y0 * B1 - Ck(2) * y1 * B0).v, (-y1 * B1 + Ck(2) * y0 * B2).v, (y2 * B1 - Ck(2) * y3 * B0).v,
            (-y3 * B1 + Ck(2) * y2 * B2).v};
}

namespace {

template <class Z>
bool syzygy_holds(const CubicForm& f, const QuadCovariant& h, const JacobianCovariant& j) {
    auto z = [](i128 v) {
        if constexpr (std::is_same_v<Z, Ck>)
            return Ck(v);
        else
            return to_mpz(v);
    };
    std::vector<Z> J{z(j.C0), z(3) * z(j.C1), z(3) * z(j.C2), z(j.C3)};
    std::vector<Z> x{z(f.x0), z(f.x1), z(f.x2), z(f.x3)};
    std::vector<Z> H{z(h.A), z(h.B), z(h.C)};
    Z dH = z(h.B) * z(h.B) - z(4) * z(h.A) * z(h.C);
    auto lhs = pmul(J, J);
    padd(lhs, pmul(x, x), Z(-dH));
    auto rhs = pmul(pmul(H, H), H);
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (!(lhs[i] == z(4) * rhs[i])) return false;
    return true;
}

// elements x + y sqrt(D) of Z[sqrt(D)]
template <class Z>
struct KElt {
    Z x, y;
};

template <class Z>
bool refined_holds(const CubicForm& f, const QuadCovariant& h, const JacobianCovariant& j, i64 D, i64 d) {
    auto z = [](i128 v) {
        if constexpr (std::is_same_v<Z, Ck>)
            return Ck(v);
        else
            return to_mpz(v);
    };
    using E = KElt<Z>;
    auto mul = [&](const E& p, const E& q) {
        return E{p.x * q.x + z(D) * p.y * q.y, p.x * q.y + p.y * q.x};
    };
    auto add = [](const E& p, const E& q) { return E{p.x + q.x, p.y + q.y}; };
    auto pm = [&](const std::vector<E>& p, const std::vector<E>& q) {
        std::vector<E> r(p.size() + q.size() - 1, E{z(0), z(0)});
        for (std::size_t a = 0; a < p.size(); ++a)
            for (std::size_t b = 0; b < q.size(); ++b) r[a + b] = add(r[a + b], mul(p[a], q[b]));
        return r;
    };
    Z B0 = z(h.A), B1 = z(h.B);
    Z eight_b03 = z(8) * B0 * B0 * B0;
    // (2B0)^3 (J + d sqrt(D) x)
    std::vector<Z> J{z(j.C0), z(3) * z(j.C1), z(3) * z(j.C2), z(j.C3)};
    std::vector<Z> x{z(f.x0), z(f.x1), z(f.x2), z(f.x3)};
    std::vector<E> lhs;
    for (int i = 0; i < 4; ++i) lhs.push_back(E{eight_b03 * J[i], eight_b03 * z(d) * x[i]});
    // (C0 + d sqrt(D) x0) (2B0 u + (B1 - d sqrt(D)) v)^3
    std::vector<E> lin{E{z(2) * B0, z(0)}, E{B1, z(-d)}};
    std::vector<E> rhs = pm(pm(pm({E{z(j.C0), z(d) * z(f.x0)}}, lin), lin), lin);
    for (int i = 0; i < 4; ++i)
        if (!(lhs[i].x == rhs[i].x) || !(lhs[i].y == rhs[i].y)) return false;
    return true;
}

}  // namespace

bool check_syzygy(const CubicForm& f, const JacobianCovariant& j) {
    QuadCovariant h = hessian(f, Convention::Ldual);
    try {
        return syzygy_holds<Ck>(f, h, j);
    } catch (const OverflowError&) {
        return syzygy_holds<mpz_class>(f, h, j);
    }
}

bool check_syzygy(const CubicForm& f) { return check_syzygy(f, jacobian(f)); }

bool check_refined_syzygy(const CubicForm& f, const JacobianCovariant& j) {
    QuadCovariant h = hessian(f, Convention::Ldual);
    if (h.A == 0) throw std::invalid_argument("B0 = 0; apply b0_fixing_translate first");
    i128 n = h.disc();
    auto [D, d] = split_discriminant(narrow64(n));
    try {
        return refined_holds<Ck>(f, h, j, D, d);
    } catch (const OverflowError&) {
        return refined_holds<mpz_class>(f, h, j, D, d);
    }
}

bool check_refined_syzygy(const CubicForm& f) { return check_refined_syzygy(f, jacobian(f)); }

Unimodular b0_fixing_translate(const CubicForm& f) {
    QuadCovariant h = hessian(f, Convention::Ldual);
    if (h.A != 0) return Unimodular::identity();
    // B0 of T^j f is H(1, j); a nondegenerate H vanishes at most twice
    for (i64 j = 1; j <= 3; ++j)
        if (h.A + h.B * j + h.C * j * j != 0) return Unimodular::T(j);
    return Unimodular::S();
}

bool is_weakly_reduced(const CubicForm& f) {
    i128 D = discriminant(f);
    if (D > 0) {
        QuadCovariant h = hessian(f, Convention::L);
        return reduced_quad(h.A, h.B, h.C);
    }
    if (D == 0) return false;
    if (f.x0 == 0) return reduced_quad(f.x1, f.x2, f.x3);
    return neg_middle_ok(f) && neg_outer_ok(f);
}

Canonical canonicalize(const CubicForm& f) {
    Reducer r = reduce(f);
    Canonical best{r.f, r.g};
    for (const auto& m : small_matrices()) {
        CubicForm h = act(m, r.f);
        if (h < best.form && is_weakly_reduced(h)) best = {h, m * r.g};
    }
    return best;
}

int stabilizer_order(const CubicForm& f) {
    i128 D = discriminant(f);
    if (D == 0) throw std::invalid_argument("zero discriminant");
    if (D < 0) return 1;
    CubicForm c = canonicalize(f).form;
    int n = 0;
    for (const auto& m : small_matrices())
        if (act(m, c) == c) ++n;
    return n;
}

namespace {

bool lattice_ok(Lattice lat, const CubicForm& f) { return lat == Lattice::L || in_dual_lattice(f); }

// every form whose L-Hessian is a weakly reduced (P,Q,R) within the bound, x0 fixed
void positive_candidates(Lattice lat, i64 bound, i64 P1, std::vector<OrbitRecord>& out) {
    // Ldual Hessians are 9 times an integral form whose discriminant is -disc/27
    const i128 s = lat == Lattice::Ldual ? 9 : 1;
    const i128 M = lat == Lattice::Ldual ? bound : 3 * (i128)bound;
    for (i128 Q1 = -P1; Q1 <= P1; ++Q1) {
        i128 rlo = std::max<i128>(P1, fdiv(Q1 * Q1, 4 * P1) + 1);
        i128 rhi = fdiv(M + Q1 * Q1, 4 * P1);
        for (i128 R1 = rlo; R1 <= rhi; ++R1) {
            i128 v = 4 * P1 * R1 - Q1 * Q1;
            if (v <= 0 || v > M) continue;
            i128 D;
            if (lat == Lattice::Ldual) {
                D = 27 * v;
            } else {
                if (v % 3) continue;
                D = v / 3;
            }
            i128 P = s * P1, Q = s * Q1, R = s * R1;
            i128 amax = isqrt(4 * P * P * P / (27 * D));
            for (i128 a = -amax; a <= amax; ++a) {
                i128 w = 4 * P * P * P - 27 * a * a * D;
                i128 sq;
                if (w < 0 || !is_square(w, &sq)) continue;
                for (int pm = -1; pm <= 1; pm += 2) {
                    if (sq == 0 && pm == 1) continue;
                    i128 num = 3 * a * Q + pm * sq;
                    if (num % (2 * P)) continue;
                    i128 b = num / (2 * P), c, d;
                    if (a != 0) {
                        if ((b * b - P) % (3 * a)) continue;
                        c = (b * b - P) / (3 * a);
                        if ((b * c - Q) % (9 * a)) continue;
                        d = (b * c - Q) / (9 * a);
                    } else {
                        if (b == 0 || Q % b) continue;
                        c = Q / b;
                        if ((c * c - R) % (3 * b)) continue;
                        d = (c * c - R) / (3 * b);
                    }
                    CubicForm f{(i64)a, (i64)b, (i64)c, (i64)d};
                    if (!lattice_ok(lat, f)) continue;
                    QuadCovariant h = hessian(f, Convention::L);
                    if (h.A != P || h.B != Q || h.C != R || discriminant(f) != D) continue;
                    if (is_canonical_reduced(f)) out.push_back({f, (i64)D, stabilizer_order(f)});
                }
            }
        }
    }
}

// weakly reduced negative-discriminant forms with x0 = -a < 0
void negative_candidates_a(Lattice lat, i64 X, i64 a, std::vector<OrbitRecord>& out) {
    long double Xl = X;
    long double Mmax = std::sqrt(Xl / (3.0L * a * a));
    long double r = std::sqrt(Mmax / a);
    long double alpha_max = 0.5L + r;
    i64 bmax = (i64)std::floor(a * (1.5L + r)) + 1;
    i64 cmax = (i64)std::floor(std::cbrt(16.0L * Xl / (27.0L * a)) + alpha_max * a) + 1;
    i64 step = lat == Lattice::Ldual ? 3 : 1;
    i64 b0 = -(bmax / step) * step, c0 = -(cmax / step) * step;
    for (i64 b = b0; b <= bmax; b += step) {
        for (i64 c = c0; c <= cmax; c += step) {
            // disc(a,b,c,d) = -27a^2 d^2 + (18abc - 4b^3) d + b^2c^2 - 4ac^3 >= -X
            i128 A2 = 27 * (i128)a * a;
            i128 beta = 18 * (i128)a * b * c - 4 * (i128)b * b * b;
            i128 gam = (i128)b * b * c * c - 4 * (i128)a * c * c * c + X;
            i128 disc = beta * beta + 4 * A2 * gam;
            if (disc < 0) continue;
            i128 sq = isqrt(disc);
            i128 dlo = fdiv(beta - sq - 1, 2 * A2) - 1;
            i128 dhi = fdiv(beta + sq + 1, 2 * A2) + 1;
            for (i128 d = dlo; d <= dhi; ++d) {
                CubicForm g{a, b, c, (i64)d};
                i128 D = discriminant(g);
                if (D >= 0 || D < -(i128)X) continue;
                CubicForm f = -g;
                if (!is_weakly_reduced(f)) continue;
                if (is_canonical_reduced(f)) out.push_back({f, (i64)D, 1});
            }
        }
    }
}

// x0 = 0, x1 < 0: f = v (x1 u^2 + x2 u v + x3 v^2) with |x2| <= |x1| <= |x3|
void negative_candidates_zero(Lattice lat, i64 X, std::vector<OrbitRecord>& out) {
    i64 bmax = (i64)iroot(X / 3, 4) + 1;
    for (i64 b = -bmax; b < 0; ++b) {
        if (lat == Lattice::Ldual && b % 3) continue;
        for (i64 c = b; c <= -b; ++c) {
            if (lat == Lattice::Ldual && c % 3) continue;
            // |D| = b^2 (4bd - c^2), d < 0
            for (i64 d = b;; --d) {
                i128 K = 4 * (i128)b * d - (i128)c * c;
                if ((i128)b * b * K > X) break;
                CubicForm f{0, b, c, d};
                i128 D = discriminant(f);
                if (D >= 0) continue;
                if (is_weakly_reduced(f) && is_canonical_reduced(f)) out.push_back({f, (i64)D, 1});
            }
        }
    }
}

void sort_records(std::vector<OrbitRecord>& v) {
    std::sort(v.begin(), v.end(), [](const OrbitRecord& p, const OrbitRecord& q) {
        i64 ap = p.disc < 0 ? -p.disc : p.disc, aq = q.disc < 0 ? -q.disc : q.disc;
        if (ap != aq) return ap < aq;
        return p.form < q.form;
    });
}

std::vector<OrbitRecord> enumerate_impl(Lattice lat, Sign sign, i64 bound, bool parallel) {
    std::vector<OrbitRecord> out;
    if (bound < 1) return out;
    if (sign == Sign::Pos) {
        i64 M = lat == Lattice::Ldual ? bound : 3 * bound;
        i64 pmax = (i64)isqrt(M / 3);
#pragma omp parallel if (parallel)
        {
            std::vector<OrbitRecord> local;
#pragma omp for schedule(dynamic, 1) nowait
            for (i64 P1 = 1; P1 <= pmax; ++P1) positive_candidates(lat, bound, P1, local);
#pragma omp critical
            out.insert(out.end(), local.begin(), local.end());
        }
    } else {
        i64 X = lat == Lattice::Ldual ? 27 * bound : bound;
        i64 amax = (i64)std::floor(std::pow(16.0L * X / 27.0L, 0.25L)) + 1;
#pragma omp parallel if (parallel)
        {
            std::vector<OrbitRecord> local;
#pragma omp for schedule(dynamic, 1) nowait
            for (i64 a = 0; a <= amax; ++a) {
                if (a == 0)
                    negative_candidates_zero(lat, X, local);
                else
                    negative_candidates_a(lat, X, a, local);
            }
#pragma omp critical
            out.insert(out.end(), local.begin(), local.end());
        }
    }
    sort_records(out);
    return out;
}

}  // namespace

std::vector<OrbitRecord> enumerate_orbits(Lattice lat, Sign sign, i64 bound) {
    return enumerate_impl(lat, sign, bound, true);
}

std::vector<OrbitRecord> enumerate_orbits_serial(Lattice lat, Sign sign, i64 bound) {
    return enumerate_impl(lat, sign, bound, false);
}

i64 eval_mod(const CubicForm& f, i64 u, i64 v, i64 p) {
    i128 U = fmod(u, p), V = fmod(v, p);
    i128 r = fmod(f.x0, p) * U % p * U % p * U % p;
    r += fmod(f.x1, p) * U % p * U % p * V % p;
    r += fmod(f.x2, p) * U % p * V % p * V % p;
    r += fmod(f.x3, p) * V % p * V % p * V % p;
    return (i64)(r % p);
}

std::vector<std::pair<i64, i64>> projective_roots(const CubicForm& f, i64 p) {
    std::vector<std::pair<i64, i64>> out;
    if (eval_mod(f, 1, 0, p) == 0) out.push_back({1, 0});
    for (i64 u = 0; u < p; ++u)
        if (eval_mod(f, u, 1, p) == 0) out.push_back({u, 1});
    return out;
}

bool is_maximal_at(const CubicForm& f, i64 p) {
    if (f.x0 % p == 0 && f.x1 % p == 0 && f.x2 % p == 0 && f.x3 % p == 0) return false;
    // non-maximal iff some root mod p is multiple and f vanishes there mod p^2;
    // at a multiple root the value mod p^2 does not depend on the lift
    i64 p2 = p * p;
    for (auto [u, v] : projective_roots(f, p)) {
        i128 fu = fmod(3 * (i128)f.x0 * u * u + 2 * (i128)f.x1 * u * v + (i128)f.x2 * v * v, p);
        i128 fv = fmod((i128)f.x1 * u * u + 2 * (i128)f.x2 * u * v + 3 * (i128)f.x3 * v * v, p);
        if (fu == 0 && fv == 0 && eval_mod(f, u, v, p2) == 0) return false;
    }
    return true;
}

bool is_maximal(const CubicForm& f) {
    i128 d = discriminant(f);
    if (d == 0) return false;
    for (auto [p, e] : factor(narrow64(iabs(d))))
        if (e >= 2 && !is_maximal_at(f, p)) return false;
    return true;
}

}  // namespace onth
