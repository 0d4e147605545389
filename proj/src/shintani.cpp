#include "onth/shintani.hpp"

#include <chrono>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "onth/eisenstein.hpp"
#include "onth/lseries.hpp"

namespace onth {

Lattice variant_lattice(XiVariant v) { return variant_dual(v) ? Lattice::Ldual : Lattice::L; }

Sign variant_sign(XiVariant v) {
    return (v == XiVariant::XI1 || v == XiVariant::XI1_DUAL) ? Sign::Pos : Sign::Neg;
}

bool variant_dual(XiVariant v) { return v == XiVariant::XI1_DUAL || v == XiVariant::XI2_DUAL; }

namespace {

i64 orbit_index(XiVariant v, i64 disc) {
    i64 a = disc < 0 ? -disc : disc;
    if (!variant_dual(v)) return a;
    if (a % 27 != 0) throw std::logic_error("dual lattice discriminant not divisible by 27");
    return a / 27;
}

const char* variant_name(XiVariant v) {
    switch (v) {
        case XiVariant::XI1: return "xi1";
        case XiVariant::XI2: return "xi2";
        case XiVariant::XI1_DUAL: return "xi1_dual";
        case XiVariant::XI2_DUAL: return "xi2_dual";
    }
    return "";
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// forms whose index is one of the mismatched n
std::string offending_orbits(const VerifyReport& r, const std::vector<std::pair<XiVariant, std::vector<OrbitRecord>>>& sides) {
    std::ostringstream os;
    std::size_t shown = 0;
    for (const auto& m : r.mismatches)
        for (const auto& [v, orbits] : sides)
            for (const auto& o : orbits) {
                if (orbit_index(v, o.disc) != m.n) continue;
                if (shown++ >= 50) return os.str() + " ...";
                const auto& f = o.form;
                os << (shown > 1 ? "; " : "") << variant_name(v) << " n=" << m.n << " (" << f.x0 << "," << f.x1 << ","
                   << f.x2 << "," << f.x3 << ") stab=" << o.stabilizer;
            }
    return os.str();
}

VerifyReport verify_on_impl(const std::string& name, XiVariant lv, XiVariant rv, i64 scale, i64 N) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<OrbitRecord> lo, ro;
#pragma omp parallel sections
    {
#pragma omp section
        lo = enumerate_orbits(variant_lattice(lv), variant_sign(lv), N);
#pragma omp section
        ro = enumerate_orbits(variant_lattice(rv), variant_sign(rv), N);
    }
    DirichletCoeffs lhs = xi_from_orbits(lv, lo, N);
    DirichletCoeffs rhs = dscale(xi_from_orbits(rv, ro, N), Cyc((long)scale));
    VerifyReport r = compare_series(name, lhs, rhs, N);
    if (!r.pass()) r.detail = offending_orbits(r, {{lv, lo}, {rv, ro}});
    r.wall_ms = (i64)elapsed_ms(t0);
    return r;
}

}  // namespace

DirichletCoeffs xi_from_orbits(XiVariant v, const std::vector<OrbitRecord>& orbits, i64 N) {
    DirichletCoeffs r(N);
    bool weighted = variant_sign(v) == Sign::Pos;
    for (const auto& o : orbits) {
        i64 n = orbit_index(v, o.disc);
        if (n < 1 || n > N) continue;
        r.add(n, weighted ? Cyc(mpq_class(1, o.stabilizer)) : Cyc(1));
    }
    return r;
}

DirichletCoeffs xi_coeffs(XiVariant v, i64 N) {
    if (N < 1) throw std::invalid_argument("N must be positive");
    return xi_from_orbits(v, enumerate_orbits(variant_lattice(v), variant_sign(v), N), N);
}

DirichletCoeffs xi_rhs_thm44(XiVariant v, i64 N) {
    if (v != XiVariant::XI1 && v != XiVariant::XI2) throw std::invalid_argument("the character expansion covers xi1 and xi2 only");
    struct Job {
        i64 D, f;
        mpq_class weight;
    };
    std::vector<Job> jobs;
    std::vector<i64> ks = fundamental_discriminants(N, v == XiVariant::XI2 ? -1 : 1);
    if (v == XiVariant::XI1) ks.insert(ks.begin(), 1);
    for (i64 D : ks) {
        mpq_class w = D == 1 ? mpq_class(1, 3) : mpq_class(1);
        i64 aD = D < 0 ? -D : D;
        for (i64 f = 1; aD * f * f <= N; ++f) jobs.push_back({D, f, w});
    }
    std::vector<DirichletCoeffs> parts(jobs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        const Job& job = jobs[j];
        i64 scale = (job.D < 0 ? -job.D : job.D) * job.f * job.f;
        i64 M = (i64)isqrt(N / scale);
        QuadOrder O = make_order(job.D, job.f);
        DirichletCoeffs S(M);
        for (const auto& chi : cubic_characters(class_group(O))) {
            if (!is_primitive(chi)) continue;
            DirichletCoeffs Ls = L_star_coeffs(O, chi, M);
            // L*(s) / L*(2s)
            S = dadd(S, dmul(Ls, dinv(dilate(Ls, 2))));
        }
        DirichletCoeffs out(N);
        for (const auto& [m, c] : S.a) out.add(scale * m * m, c * Cyc(job.weight));
        parts[j] = out;
    }
    DirichletCoeffs sum(N);
    for (const auto& p : parts) sum = dadd(sum, p);
    DirichletCoeffs r = dmul(dmul(dilate(zeta(N), 2), zeta_shift(N, 6, 1)), sum);
    if (!r.is_rational()) throw std::logic_error("assembled series is not rational");
    return r;
}

VerifyReport verify_on1(i64 N) { return verify_on_impl("on1", XiVariant::XI1_DUAL, XiVariant::XI2, 1, N); }

VerifyReport verify_on2(i64 N) { return verify_on_impl("on2", XiVariant::XI2_DUAL, XiVariant::XI1, 3, N); }

VerifyReport verify_thm33(XiVariant v, i64 N) {
    if (!variant_dual(v)) throw std::invalid_argument("the ideal-pair expansion covers the dual series only");
    auto t0 = std::chrono::steady_clock::now();
    DirichletCoeffs lhs = xi_coeffs(v, N);
    // disc > 0 in the dual lattice means n < 0 under disc = -27 n, i.e. imaginary k
    DirichletCoeffs rhs = xi_dual_rhs(v == XiVariant::XI1_DUAL ? -1 : 1, N);
    VerifyReport r = compare_series(std::string("thm33_") + variant_name(v), lhs, rhs, N);
    r.wall_ms = (i64)elapsed_ms(t0);
    return r;
}

VerifyReport verify_thm44(XiVariant v, i64 N) {
    auto t0 = std::chrono::steady_clock::now();
    DirichletCoeffs lhs = xi_coeffs(v, N);
    DirichletCoeffs rhs = xi_rhs_thm44(v, N);
    VerifyReport r = compare_series(std::string("thm44_") + variant_name(v), lhs, rhs, N);
    r.wall_ms = (i64)elapsed_ms(t0);
    return r;
}

RootOfUnity DirichletChar::operator()(i64 t) const {
    i64 r = ((t % modulus) + modulus) % modulus;
    if (std::gcd(r, modulus) != 1) throw std::invalid_argument("argument not prime to the modulus");
    return values[r];
}

i64 DirichletChar::order() const {
    i64 o = 1;
    for (i64 t = 0; t < modulus; ++t)
        if (std::gcd(t, modulus) == 1) o = std::lcm(o, values[t].den);
    return o;
}

i64 DirichletChar::conductor() const {
    for (i64 d : divisors(modulus)) {
        bool ok = true;
        for (i64 t = 1; t < modulus && ok; t += d)
            if (std::gcd(t, modulus) == 1 && !values[t].is_one()) ok = false;
        if (ok) return d;
    }
    return modulus;
}

DirichletChar DirichletChar::inverse() const {
    DirichletChar r = *this;
    for (auto& z : r.values) z = z.conj();
    return r;
}

std::vector<DirichletChar> dirichlet_characters(i64 f) {
    if (f < 1) throw std::invalid_argument("modulus must be positive");
    // cyclic generators of (Z/f)^* as (element, order)
    std::vector<std::pair<i64, i64>> gens;
    auto crt_lift = [&](i64 g, i64 q) {
        // x = g mod q, x = 1 mod f / q
        i64 r = f / q;
        for (i64 x = g; x < f; x += q)
            if (x % r == 1 % r) return x;
        return g;
    };
    for (auto [p, e] : factor(f)) {
        i64 q = 1;
        for (int i = 0; i < e; ++i) q *= p;
        if (p == 2) {
            if (e >= 2) gens.push_back({crt_lift(q - 1, q), 2});
            if (e >= 3) gens.push_back({crt_lift(5, q), q / 4});
            continue;
        }
        i64 phi = q / p * (p - 1);
        for (i64 g = 2; g < q; ++g) {
            if (g % p == 0) continue;
            bool prim = true;
            for (i64 r : prime_divisors(phi))
                if (powmod(g, phi / r, q) == 1) prim = false;
            if (prim) {
                gens.push_back({crt_lift(g, q), phi});
                break;
            }
        }
    }
    // discrete logs by walking the exponent box
    std::vector<std::vector<i64>> logs(f);
    std::vector<i64> ex(gens.size(), 0);
    while (true) {
        i64 x = 1 % f;
        for (std::size_t i = 0; i < gens.size(); ++i) x = (i64)((i128)x * powmod(gens[i].first, ex[i], f) % f);
        logs[x] = ex;
        std::size_t i = 0;
        while (i < gens.size() && ++ex[i] == gens[i].second) ex[i++] = 0;
        if (i == gens.size()) break;
    }
    std::vector<DirichletChar> out;
    std::vector<i64> k(gens.size(), 0);
    while (true) {
        DirichletChar c;
        c.modulus = f;
        c.values.assign(f, RootOfUnity{});
        for (i64 t = 0; t < f; ++t) {
            if (std::gcd(t, f) != 1) continue;
            RootOfUnity z;
            for (std::size_t i = 0; i < gens.size(); ++i) z = z * RootOfUnity::make(k[i] * logs[t][i], gens[i].second);
            c.values[t] = z;
        }
        out.push_back(std::move(c));
        std::size_t i = 0;
        while (i < gens.size() && ++k[i] == gens[i].second) k[i++] = 0;
        if (i == gens.size()) break;
    }
    return out;
}

std::vector<DirichletChar> even_dirichlet_characters(i64 f) {
    std::vector<DirichletChar> r;
    for (auto& c : dirichlet_characters(f))
        if (c.is_even()) r.push_back(std::move(c));
    return r;
}

DirichletCoeffs dirichlet_L(const DirichletChar& chi, i64 N) {
    DirichletCoeffs r(N);
    for (i64 n = 1; n <= N; ++n)
        if (std::gcd(n, chi.modulus) == 1) r.set(n, Cyc::root(chi(n)));
    return r;
}

QuadIdeal split_ideal(i64 f, i64 t) {
    if (std::gcd(t, f) != 1) throw std::invalid_argument("t must be prime to f");
    QuadIdeal x = ideal_from_generators(1, {from_components(1, 0), from_components(0, t)});
    return contract(x, make_order(1, f));
}

std::vector<SplitDictionaryEntry> split_character_dictionary(i64 f) {
    if (f < 1) throw std::invalid_argument("f must be positive");
    auto G = class_group(make_order(1, f));
    // class of Z + t Z for each residue prime to f
    std::vector<int> cls(f, -1);
    for (i64 t = 1; t <= f; ++t)
        if (std::gcd(t, f) == 1) cls[t % f] = G->class_of(split_ideal(f, t));
    std::vector<i64> rep(G->size(), -1);
    for (i64 t = 0; t < f; ++t)
        if (cls[t] >= 0 && rep[cls[t]] < 0) rep[cls[t]] = t;
    for (i64 r : rep)
        if (r < 0) throw std::logic_error("residues do not cover the class group");
    std::vector<SplitDictionaryEntry> out;
    for (auto& chi1 : even_dirichlet_characters(f)) {
        std::vector<RootOfUnity> gv;
        for (int g : G->generators) gv.push_back(chi1(rep[g]));
        Character chi = character_from_generator_values(G, gv);
        for (i64 t = 0; t < f; ++t)
            if (cls[t] >= 0 && !(chi(cls[t]) == chi1(t)))
                throw std::logic_error("character values disagree on the split class group");
        out.push_back({std::move(chi1), std::move(chi)});
    }
    return out;
}

}  // namespace onth
