// One pass/fail line per acceptance criterion. All comparisons are exact
// (rational or cyclotomic equality); no floating point tolerances.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "oracles/cubic_oracle.hpp"
#include "oracles/ideal_oracle.hpp"
#include "oracles/random_pairs.hpp"
#include "onth/eisenstein.hpp"
#include "onth/lseries.hpp"
#include "onth/shintani.hpp"
#include "onth/split_orders.hpp"

using namespace onth;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream info;
    void fail(const std::string& why) {
        if (pass) info << "first failure: " << why << "; ";
        pass = false;
    }
};

int failures = 0;

void criterion(int k, const std::string& name, const std::function<void(Outcome&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("criterion %2d: %s  %s  [%s%.1f s]\n", k, o.pass ? "PASS" : "FAIL", name.c_str(), o.info.str().c_str(),
                s);
    std::fflush(stdout);
}

std::string order_str(i64 D, i64 f) { return "(" + std::to_string(D) + "," + std::to_string(f) + ")"; }

// primitive characters of odd order used for criteria 4 and 7
struct CharCase {
    i64 D, f;
    Character chi;
};

std::vector<CharCase> thm51_cases() {
    std::vector<CharCase> out;
    const std::vector<std::pair<i64, i64>> orders = {{-23, 1}, {1, 7}, {5, 1},  {1, 1},   {-3, 1}, {-4, 1},
                                                     {-31, 1}, {229, 1}, {1, 9}, {-11, 2}, {-59, 1}, {-87, 1}, {-4, 9}};
    for (auto [D, f] : orders) {
        QuadOrder O;
        try {
            O = make_order(D, f);
        } catch (const std::exception&) {
            continue;
        }
        Character pick;
        bool found = false;
        for (const auto& chi : all_characters(class_group(O))) {
            if (!is_primitive(chi) || chi.order() % 2 == 0) continue;
            // prefer a nontrivial character, except where the trivial one is asked for
            bool want_trivial = (D == 5 || D == 1 || D == -3 || D == -4) && f == 1;
            if (want_trivial != chi.is_trivial()) continue;
            pick = chi;
            found = true;
            break;
        }
        if (found) out.push_back({D, f, pick});
    }
    return out;
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(ONTH_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

int main() {
    std::printf("acceptance run, %d worker thread(s)\n", omp_get_max_threads());

    criterion(1, "xi1_dual = xi2 and xi2_dual = 3 xi1, N = 2000, exact", [](Outcome& o) {
        auto a = verify_on1(2000), b = verify_on2(2000);
        if (!a.pass()) o.fail(a.to_json());
        if (!b.pass()) o.fail(b.to_json());
        o.info << "on1 " << a.wall_ms << " ms, on2 " << b.wall_ms << " ms; ";
    });

    criterion(2, "dual series from L-series of cubic characters, both signs, N = 500, exact", [](Outcome& o) {
        for (XiVariant v : {XiVariant::XI1_DUAL, XiVariant::XI2_DUAL}) {
            auto r = verify_thm33(v, 500);
            if (!r.pass()) o.fail(r.to_json());
        }
    });

    criterion(3, "xi1 and xi2 from primitive cubic characters, N = 500, exact", [](Outcome& o) {
        for (XiVariant v : {XiVariant::XI1, XiVariant::XI2}) {
            auto r = verify_thm44(v, 500);
            if (!r.pass()) o.fail(r.to_json());
        }
    });

    auto cases = thm51_cases();

    criterion(4, "sum_d L(O_fd) d^-s against zeta zeta(3s-1) L*(s)/L*(2s), N = 120, exact", [&](Outcome& o) {
        int n = 0;
        bool split7 = false, im23 = false, real5 = false;
        for (const auto& c : cases) {
            i64 N = c.D == 1 && c.f > 1 ? 100 : 120;
            auto r = check_thm51(c.chi, N);
            if (!r.pass) o.fail("order " + order_str(c.D, c.f));
            ++n;
            o.info << order_str(c.D, c.f) << " order " << c.chi.order() << ", ";
            split7 |= c.D == 1 && c.f == 7 && c.chi.order() == 3;
            im23 |= c.D == -23 && c.chi.order() == 3;
            real5 |= c.D == 5 && c.chi.is_trivial();
        }
        if (n < 10) o.fail("fewer than 10 triples");
        if (!split7 || !im23 || !real5) o.fail("required triple missing");
        o.info << "total " << n << " triples; ";
    });

    criterion(5, "L of the trivial character against brute-force ideal counts, |f^2 D| <= 200, N = 100", [](Outcome& o) {
        int orders = 0, chars = 0;
        std::vector<std::pair<i64, i64>> list;
        for (int s : {-1, 1})
            for (i64 D : fundamental_discriminants(200, s))
                for (i64 f = 1; f * f * (D < 0 ? -D : D) <= 200; ++f) list.push_back({D, f});
        for (i64 f = 1; f * f <= 200; ++f) list.push_back({1, f});
        for (auto [D, f] : list) {
            QuadOrder O = make_order(D, f);
            auto G = class_group(O);
            auto brute = oracle::brute_force_invertible_ideals(O, 100);
            DirichletCoeffs b(100);
            for (const auto& [key, cnt] : brute) b.add(key.first, Cyc((long)cnt));
            if (!(L_coeffs(O, trivial_character(G), 100) == b)) o.fail("L vs oracle at " + order_str(D, f));
            for (const auto& chi : all_characters(G)) {
                if (!(L_star_from_L(O, chi, 100) == L_star_coeffs(O, chi, 100)))
                    o.fail("round trip at " + order_str(D, f));
                ++chars;
            }
            ++orders;
        }
        o.info << orders << " orders, " << chars << " round trips; ";
    });

    criterion(6, "sum_u |U(O_d,O_ud)| u^-s, d <= 20, N = 500; unit count formulas for f' | f <= 60", [](Outcome& o) {
        const std::vector<i64> deltas = {-23, -4, -3, 1, 5, 8, 12};
        for (i64 D : deltas)
            for (i64 d = 1; d <= 20; ++d)
                if (!verify_lemma56(d, D, 500)) o.fail("series at D=" + std::to_string(D) + " d=" + std::to_string(d));
        int pairs = 0;
        for (i64 D : deltas)
            for (i64 f = 1; f <= 60; ++f)
                for (i64 fp : divisors(f)) {
                    QuadOrder Op = make_order(D, fp), O = make_order(D, f);
                    if (u_count_from_class_numbers(Op, O) != u_count_closed_form(Op, O))
                        o.fail("unit count at " + order_str(D, f) + " f'=" + std::to_string(fp));
                    ++pairs;
                }
        o.info << pairs << " (f', f) pairs; ";
    });

    criterion(7, "Euler factor identity for p < 100 on the criterion 4 characters; point counts at p < 50", [&](Outcome& o) {
        int checks = 0;
        for (const auto& c : cases)
            for (i64 p : primes_up_to(99)) {
                if (c.f % p == 0) continue;
                auto r = euler_factor_check(c.chi, p);
                if (!r.identity || !r.a_p_form) o.fail(order_str(c.D, c.f) + " p=" + std::to_string(p));
                ++checks;
            }
        int forms = 0;
        for (Sign s : {Sign::Neg, Sign::Pos})
            for (const auto& r : enumerate_orbits(Lattice::L, s, 400)) {
                if (!is_maximal(r.form)) continue;
                if (match_point_counts(r.form, 50).character < 0) o.fail("no character for " + r.form.str());
                ++forms;
            }
        if (forms < 5) o.fail("fewer than 5 maximal forms");
        o.info << checks << " local factors, " << forms << " maximal forms; ";
    });

    criterion(8, "orbits = ideal pairs for 0 < |n| <= 100; psi round trips on 1000 random pairs", [](Outcome& o) {
        for (i64 n = -100; n <= 100; ++n)
            if (n != 0 && !verify_thm31(n)) o.fail("n=" + std::to_string(n));
        const std::vector<std::pair<i64, i64>> orders = {{1, 1},  {1, 2},  {1, 5},   {-3, 1}, {-3, 2},
                                                         {-4, 1}, {-4, 3}, {-23, 1}, {-23, 2}, {5, 1},
                                                         {5, 3},  {12, 1}, {-84, 1}, {229, 1}};
        std::mt19937_64 rng(2024);
        for (int t = 0; t < 1000; ++t) {
            auto [D, f] = orders[t % orders.size()];
            QuadOrder O = make_order(D, f);
            IdealPair p = oracle::random_pair(rng, O);
            CubicForm x = psi(p);
            IdealPair back = psi_inverse(x);
            if (!(back.order == O) || !pair_equivalent(back, p) || !(psi(back) == x))
                o.fail("pair " + std::to_string(t));
        }
    });

    criterion(9, "syzygy and refined syzygy on 10^4 random dual forms in [-50,50]; controls rejected", [](Outcome& o) {
        std::mt19937_64 rng(9);
        std::uniform_int_distribution<i64> u(-50, 50);
        int refined = 0;
        for (int i = 0; i < 10000; ++i) {
            CubicForm x{u(rng), u(rng), u(rng), u(rng)};
            x.x1 -= x.x1 % 3;
            x.x2 -= x.x2 % 3;
            if (!check_syzygy(x)) o.fail("syzygy " + x.str());
            JacobianCovariant bad = jacobian(x);
            bad.C1 += 1;
            if (check_syzygy(x, bad)) o.fail("control accepted " + x.str());
            if (discriminant(x) == 0) continue;
            CubicForm y = act(b0_fixing_translate(x), x);
            if (!check_refined_syzygy(y)) o.fail("refined " + y.str());
            JacobianCovariant bad2 = jacobian(y);
            bad2.C0 += 1;
            if (check_refined_syzygy(y, bad2)) o.fail("refined control accepted " + y.str());
            ++refined;
        }
        o.info << refined << " refined checks; ";
    });

    criterion(10, "Q^(n+1) orders, n in {1,2}, m <= 6, N = 60: L* two ways, L vs ideals, inversion, Psi, unit counts",
              [](Outcome& o) {
                  for (int n : {1, 2})
                      for (i64 m = 1; m <= 6; ++m)
                          for (bool inf : {false, true}) {
                              SplitOrder O{n, m, inf};
                              std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                                (inf ? " with infinity" : "");
                              auto r = verify_appendix(O, 60);
                              if (!r.pass()) o.fail(tag + " " + r.detail);
                              auto G = narrow_class_group(O);
                              for (int x = 0; x < G.size(); ++x)
                                  for (int y = 0; y < G.size(); ++y)
                                      if (G.class_of(split_mul(G.reps[x], G.reps[y])) != G.mul(x, y))
                                          o.fail(tag + " Psi not multiplicative");
                              for (i64 mp : divisors(m))
                                  if (split_u_count_closed(O, mp) != split_u_count_index(O, mp))
                                      o.fail(tag + " unit count");
                          }
              });

    criterion(11, "canonical forms vs BFS on [-3,3]^4; enumeration across thread counts; CLI exit codes", [](Outcome& o) {
        std::vector<CubicForm> forms;
        for (i64 a = -3; a <= 3; ++a)
            for (i64 b = -3; b <= 3; ++b)
                for (i64 c = -3; c <= 3; ++c)
                    for (i64 d = -3; d <= 3; ++d)
                        if (discriminant({a, b, c, d}) != 0) forms.push_back({a, b, c, d});
        auto comp = oracle::bfs_components(forms, 200);
        std::map<CubicForm, int> canon_to_comp;
        std::map<int, CubicForm> comp_to_canon;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            CubicForm c = canonicalize(forms[i]).form;
            if (canon_to_comp.emplace(c, comp[i]).first->second != comp[i]) o.fail("canonical form splits an orbit");
            if (!(comp_to_canon.emplace(comp[i], c).first->second == c)) o.fail("orbit has two canonical forms");
        }
        int saved = omp_get_max_threads();
        for (Lattice lat : {Lattice::L, Lattice::Ldual})
            for (Sign s : {Sign::Pos, Sign::Neg}) {
                omp_set_num_threads(1);
                auto one = enumerate_orbits(lat, s, 1000);
                omp_set_num_threads(8);
                auto eight = enumerate_orbits(lat, s, 1000);
                if (!(one == eight) || !(one == enumerate_orbits_serial(lat, s, 1000)))
                    o.fail("enumeration differs across thread counts");
            }
        omp_set_num_threads(saved);
        struct Call {
            std::string args;
            int rc;
        };
        const std::vector<Call> calls = {{"verify on1 --bound 50", 0},
                                         {"verify on2 --bound 50 --negative-control", 1},
                                         {"verify nosuch", 2},
                                         {"verify thm51 --delta -12 --f 1", 2},
                                         {"verify on1 --bound 0", 2},
                                         {"enumerate --bound 10 --lattice X", 2},
                                         {"verify lemma56 --delta -4 --d 2 --terms 200", 0},
                                         {"verify thm51 --delta -23 --f 1 --char 1 --terms 100", 0},
                                         {"classgroup --delta -23", 0}};
        for (const auto& c : calls) {
            int rc = run_cli(c.args);
            if (rc != c.rc) o.fail("'" + c.args + "' exited " + std::to_string(rc));
        }
        o.info << forms.size() << " forms, " << comp_to_canon.size() << " orbits; ";
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
