#include "onth/eisenstein.hpp"

#include <set>
#include <stdexcept>

#include "onth/lseries.hpp"

namespace onth {

namespace {

i64 to_i64(const mpq_class& q, const char* what) {
    if (q.get_den() != 1) throw std::invalid_argument(std::string(what) + " is not an integer");
    return narrow64(from_mpz(q.get_num()));
}

const KElem sqrt_disc{0, 1};

}  // namespace

i64 pair_b(const IdealPair& p) {
    const QuadOrder& O = p.order;
    if (p.a.D != O.k.D) throw std::invalid_argument("ideal and order of different algebras");
    if (!ideal_invertible(p.a, O)) throw std::invalid_argument("ideal is not invertible");
    if (!ideal_contains(ideal_pow(p.a, 3, O), p.beta)) throw std::invalid_argument("beta is not in a^3");
    mpq_class Na = ideal_norm(p.a, O);
    mpq_class nb = knorm(O.k.D, p.beta);
    if (nb == 0) throw std::invalid_argument("beta is a zero divisor");
    return to_i64(abs(nb) / (Na * Na * Na), "N(beta a^-3)");
}

void check_pair(const IdealPair& p) { (void)pair_b(p); }

IdealPair pair_act(const IdealPair& p, const KElem& rho) {
    i64 D = p.order.k.D;
    return {p.order, ideal_scale(p.a, rho), kmul(D, kpow(D, rho, 3), p.beta)};
}

bool pair_equivalent(const IdealPair& x, const IdealPair& y) {
    if (!(x.order == y.order)) return false;
    i64 D = x.order.k.D;
    for (const auto& rho : kcube_roots(D, kmul(D, y.beta, kinv(D, x.beta))))
        if (ideal_scale(x.a, rho) == y.a) return true;
    return false;
}

QuadIdeal pair_image(const IdealPair& p) {
    return ideal_mul(principal(p.order, p.beta), ideal_pow(p.a, -3, p.order));
}

CubicForm psi_raw(const IdealPair& p) {
    check_pair(p);
    const QuadOrder& O = p.order;
    i64 D = O.k.D;
    KElem a1 = p.a.basis0(), a2 = p.a.basis1();
    // a1 a2^tau - a2 a1^tau = t sqrt(D)
    KElem w = kadd(kmul(D, a1, kconj(a2)), kscale(-1, kmul(D, a2, kconj(a1))));
    if (knorm(D, p.beta) * w.b > 0) std::swap(a1, a2);
    mpq_class Na = ideal_norm(p.a, O);
    KElem g = kmul(D, p.beta, kinv(D, kscale(O.f * Na * Na * Na, sqrt_disc)));
    KElem x = kconj(a1), y = kconj(a2);
    auto tr = [&](const KElem& e) { return ktrace(kmul(D, g, e)); };
    KElem x2 = kmul(D, x, x), y2 = kmul(D, y, y);
    mpq_class c0 = tr(kmul(D, x2, x)), c1 = 3 * tr(kmul(D, x2, y)), c2 = 3 * tr(kmul(D, x, y2)),
              c3 = tr(kmul(D, y2, y));
    return {to_i64(c0, "form coefficient"), to_i64(c1, "form coefficient"), to_i64(c2, "form coefficient"),
            to_i64(c3, "form coefficient")};
}

CubicForm psi(const IdealPair& p) { return canonicalize(psi_raw(p)).form; }

IdealPair psi_inverse(const CubicForm& f0) {
    if (discriminant(f0) == 0) throw std::invalid_argument("zero discriminant");
    if (!in_dual_lattice(f0)) throw std::invalid_argument("form not in the dual lattice");
    CubicForm f = act(b0_fixing_translate(f0), f0);
    QuadCovariant H = hessian(f, Convention::Ldual);
    JacobianCovariant J = jacobian(f);
    i64 n = narrow64(H.disc());
    auto [D, d] = split_discriminant(n);
    i64 b = narrow64(gcd(gcd(H.A, H.B), H.C));
    if (d % b != 0) throw std::logic_error("content does not divide d");
    i64 c = d / b;
    mpz_class b0 = to_mpz(H.A / b), b1 = to_mpz(H.B / b);
    KElem alpha{qfrac(b1, 2 * b0), qfrac(mpz_class(c), 2 * b0)};
    mpz_class den = 2 * mpz_class(b) * b0 * b0 * b0;
    KElem beta{qfrac(to_mpz(J.C0), den), qfrac(mpz_class(d) * f.x0, den)};
    QuadOrder O = make_order(D, c);
    return {O, ideal_from_generators(D, {KElem{1, 0}, alpha}), beta};
}

std::vector<int> cube_classes(const ClassGroup& G) {
    std::set<int> s;
    for (int x = 0; x < G.size(); ++x) s.insert(G.pow(x, 3));
    return {s.begin(), s.end()};
}

i64 fiber_size(const QuadOrder& O) {
    auto G = class_group(O);
    i64 tors = 0;
    for (int x = 0; x < G->size(); ++x)
        if (G->pow(x, 3) == 0) ++tors;
    return tors * unit_cube_quotient(O);
}

i64 omega_count(const QuadOrder& O, i64 b) {
    auto G = class_group(O);
    auto counts = class_counts(O, b, false);
    i64 s = 0;
    for (int A : cube_classes(*G)) s += counts[b][A];
    return s;
}

Thm31Count thm31_counts(i64 n) {
    if (n == 0) throw std::invalid_argument("n must be nonzero");
    Thm31Count r;
    for (const auto& o : enumerate_orbits(Lattice::Ldual, n < 0 ? Sign::Pos : Sign::Neg, n < 0 ? -n : n))
        if (o.disc == -27 * n) ++r.orbits;
    i64 m4 = ((n % 4) + 4) % 4;
    if (m4 > 1) return r;
    auto [D, d] = split_discriminant(n);
    for (i64 c : divisors(d)) {
        QuadOrder O = make_order(D, c);
        r.pairs += omega_count(O, d / c) * fiber_size(O);
    }
    return r;
}

bool verify_thm31(i64 n) {
    auto r = thm31_counts(n);
    return r.orbits == r.pairs;
}

DirichletCoeffs xi_dual_rhs(int sign, i64 N) {
    struct Job {
        i64 D, c, weight;
    };
    std::vector<Job> jobs;
    std::vector<i64> ks = fundamental_discriminants(N, sign < 0 ? -1 : 1);
    if (sign > 0) ks.insert(ks.begin(), 1);
    for (i64 D : ks) {
        i64 w = D > 1 ? 3 : 1;
        i64 aD = D < 0 ? -D : D;
        for (i64 c = 1; aD * c * c <= N; ++c) jobs.push_back({D, c, w});
    }
    std::vector<DirichletCoeffs> parts(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        const Job& job = jobs[j];
        i64 scale = (job.D < 0 ? -job.D : job.D) * job.c * job.c;
        i64 M = (i64)isqrt(N / scale);
        QuadOrder O = make_order(job.D, job.c);
        DirichletCoeffs S(M);
        for (const auto& chi : cubic_characters(class_group(O))) S = dadd(S, L_coeffs(O, chi, M));
        DirichletCoeffs out(N);
        for (const auto& [m, v] : S.a) out.add(scale * m * m, v * Cyc((long)job.weight));
        parts[j] = out;
    }
    DirichletCoeffs r(N);
    for (const auto& p : parts) r = dadd(r, p);
    if (!r.is_rational()) throw std::logic_error("assembled series is not rational");
    return r;
}

}  // namespace onth
