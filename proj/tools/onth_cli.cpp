// Command-line front end: orbit tables, class groups, xi tables and identity checks.
// Exit codes: 0 pass, 1 identity failure, 2 usage or input error.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "onth/eisenstein.hpp"
#include "onth/lseries.hpp"
#include "onth/shintani.hpp"
#include "onth/split_orders.hpp"

using namespace onth;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    i64 bound = 100;
    i64 terms = 100;
    i64 delta = -23;
    i64 f = 1;
    i64 d = 1;
    int chr = 0;
    int n = 1;
    i64 m = 1;
    bool infinity = false;
    bool negative_control = false;
    std::string variant = "xi2";
    std::string lattice = "L";
    std::string sign = "neg";
    std::string format = "json";
    int threads = 0;
    std::string out;
    std::string identity;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot open " + o.out);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

Lattice parse_lattice(const std::string& s) {
    if (s == "L") return Lattice::L;
    if (s == "Ldual") return Lattice::Ldual;
    throw UsageError("lattice must be L or Ldual");
}

Sign parse_sign(const std::string& s) {
    if (s == "pos") return Sign::Pos;
    if (s == "neg") return Sign::Neg;
    throw UsageError("sign must be pos or neg");
}

XiVariant parse_variant(const std::string& s) {
    if (s == "xi1") return XiVariant::XI1;
    if (s == "xi2") return XiVariant::XI2;
    if (s == "xi1_dual") return XiVariant::XI1_DUAL;
    if (s == "xi2_dual") return XiVariant::XI2_DUAL;
    throw UsageError("variant must be xi1, xi2, xi1_dual or xi2_dual");
}

QuadOrder parse_order(const Options& o) {
    if (o.delta != 1 && !is_fundamental(o.delta)) throw UsageError("delta must be a fundamental discriminant or 1");
    if (o.f < 1) throw UsageError("f must be positive");
    return make_order(o.delta, o.f);
}

Character parse_character(const Options& o, const QuadOrder& O) {
    auto chars = all_characters(class_group(O));
    if (o.chr < 0 || o.chr >= (int)chars.size())
        throw UsageError("char must lie in [0, " + std::to_string(chars.size()) + ")");
    return chars[o.chr];
}

void require_positive(i64 v, const char* what) {
    if (v < 1) throw UsageError(std::string(what) + " must be positive");
}

std::string orbit_table(const std::vector<OrbitRecord>& orbits, const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        os << "x0,x1,x2,x3,disc,stabilizer\n";
        for (const auto& r : orbits)
            os << r.form.x0 << "," << r.form.x1 << "," << r.form.x2 << "," << r.form.x3 << "," << r.disc << ","
               << r.stabilizer << "\n";
        return os.str();
    }
    ordered_json j = ordered_json::array();
    for (const auto& r : orbits)
        j.push_back({{"form", {r.form.x0, r.form.x1, r.form.x2, r.form.x3}},
                     {"disc", r.disc},
                     {"stabilizer", r.stabilizer}});
    return j.dump(2);
}

std::string series_table(const DirichletCoeffs& s, const std::string& format) {
    return format == "csv" ? s.to_csv() : s.to_json();
}

std::string class_group_table(const QuadOrder& O, const std::string& format) {
    auto G = class_group(O);
    if (format == "csv") {
        std::ostringstream os;
        os << "class,a,b,c,coords\n";
        for (int i = 0; i < G->size(); ++i) {
            const auto& r = G->reps[i];
            os << i << "," << r.a << "," << r.b << "," << r.c << ",";
            for (std::size_t k = 0; k < G->coords[i].size(); ++k) os << (k ? " " : "") << G->coords[i][k];
            os << "\n";
        }
        return os.str();
    }
    ordered_json reps = ordered_json::array();
    for (int i = 0; i < G->size(); ++i) {
        const auto& r = G->reps[i];
        reps.push_back({{"class", i},
                        {"scale", r.scale.get_str()},
                        {"basis_hnf", {r.a, r.b, r.c}},
                        {"coords", G->coords[i]}});
    }
    ordered_json j = {{"delta", O.k.D}, {"f", O.f},         {"disc", O.disc()},
                      {"order", G->size()}, {"cyclic", G->cyclic}, {"representatives", reps}};
    return j.dump(2);
}

VerifyReport verify_thm31_range(i64 B) {
    VerifyReport r;
    r.identity = "thm31";
    r.N = B;
    for (i64 n = -B; n <= B; ++n) {
        if (n == 0) continue;
        auto c = thm31_counts(n);
        if (c.orbits != c.pairs) r.mismatches.push_back({n, std::to_string(c.orbits), std::to_string(c.pairs)});
    }
    return r;
}

VerifyReport verify_lemma57(const Options& o) {
    QuadOrder O = parse_order(o);
    Character chi = parse_character(o, O);
    if (chi.order() % 2 == 0) throw UsageError("character must have odd order");
    VerifyReport r;
    r.identity = "lemma57";
    r.N = o.bound;
    for (i64 p : primes_up_to(o.bound - 1)) {
        if (O.f % p == 0) continue;
        auto c = euler_factor_check(chi, p);
        if (!c.identity || !c.a_p_form)
            r.mismatches.push_back({p, c.identity ? "identity holds" : "identity fails",
                                    c.a_p_form ? "a_p form holds" : "a_p form fails"});
    }
    return r;
}

VerifyReport verify_thm54(const Options& o) {
    QuadOrder O = parse_order(o);
    Character chi = parse_character(o, O);
    i64 N = o.terms;
    auto G = class_group(O);
    // L against the class-wise counts, then L* recovered from L
    DirichletCoeffs lhs = L_coeffs(O, chi, N), rhs(N);
    auto counts = class_counts(O, N, false);
    for (i64 n = 1; n <= N; ++n)
        for (int A = 0; A < G->size(); ++A)
            if (counts[n][A]) rhs.add(n, Cyc::root(chi(A)) * Cyc((long)counts[n][A]));
    VerifyReport r = compare_series("thm54", lhs, rhs, N);
    VerifyReport back = compare_series("thm54", L_star_from_L(O, chi, N), L_star_coeffs(O, chi, N), N);
    for (const auto& m : back.mismatches) r.mismatches.push_back(m);
    if (!back.pass()) r.detail = "round trip to the truncated series fails";
    return r;
}

VerifyReport verify_on_with_control(const Options& o, bool first) {
    if (!o.negative_control) return first ? verify_on1(o.bound) : verify_on2(o.bound);
    // one orbit counted twice on the right-hand side
    XiVariant lv = first ? XiVariant::XI1_DUAL : XiVariant::XI2_DUAL, rv = first ? XiVariant::XI2 : XiVariant::XI1;
    auto ro = enumerate_orbits(variant_lattice(rv), variant_sign(rv), o.bound);
    if (ro.empty()) throw UsageError("bound too small for the negative control");
    ro.push_back(ro[ro.size() / 2]);
    auto rhs = xi_from_orbits(rv, ro, o.bound);
    if (!first) rhs = dscale(rhs, Cyc(3));
    return compare_series(first ? "on1" : "on2", xi_coeffs(lv, o.bound), rhs, o.bound);
}

VerifyReport run_verify(const Options& o) {
    const std::string& id = o.identity;
    if (id == "on1" || id == "on2") {
        require_positive(o.bound, "bound");
        return verify_on_with_control(o, id == "on1");
    }
    if (id == "thm31") {
        require_positive(o.bound, "bound");
        return verify_thm31_range(o.bound);
    }
    if (id == "thm33" || id == "thm44") {
        require_positive(o.bound, "bound");
        XiVariant v = parse_variant(o.variant);
        if (id == "thm33" && !variant_dual(v)) throw UsageError("thm33 takes xi1_dual or xi2_dual");
        if (id == "thm44" && variant_dual(v)) throw UsageError("thm44 takes xi1 or xi2");
        return id == "thm33" ? verify_thm33(v, o.bound) : verify_thm44(v, o.bound);
    }
    if (id == "thm51") {
        require_positive(o.terms, "terms");
        QuadOrder O = parse_order(o);
        Character chi = parse_character(o, O);
        if (!is_primitive(chi) || chi.order() % 2 == 0) throw UsageError("thm51 needs a primitive character of odd order");
        auto c = check_thm51(chi, o.terms);
        return compare_series("thm51", c.lhs, c.rhs, o.terms);
    }
    if (id == "thm54") {
        require_positive(o.terms, "terms");
        return verify_thm54(o);
    }
    if (id == "lemma56") {
        require_positive(o.terms, "terms");
        require_positive(o.d, "d");
        parse_order(o);
        auto c = check_lemma56(o.d, o.delta, o.terms);
        return compare_series("lemma56", c.lhs, c.rhs, o.terms);
    }
    if (id == "lemma57") {
        require_positive(o.bound, "bound");
        return verify_lemma57(o);
    }
    if (id == "appendix") {
        require_positive(o.terms, "terms");
        if (o.n < 1 || o.m < 1) throw UsageError("n and m must be positive");
        return verify_appendix({o.n, o.m, o.infinity}, o.terms);
    }
    throw UsageError("unknown identity " + id);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shintani zeta functions, cubic forms and L-series of quadratic orders"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        c->add_option("--threads", o.threads, "worker threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
        c->add_option("--out", o.out, "output file (default stdout)");
    };

    auto* en = app.add_subcommand("enumerate", "orbit representatives with |disc| (or |disc|/27) up to the bound");
    en->add_option("--lattice", o.lattice, "L or Ldual");
    en->add_option("--sign", o.sign, "pos or neg");
    en->add_option("--bound", o.bound, "discriminant bound");
    add_common(en);

    auto* ve = app.add_subcommand("verify", "check one identity");
    ve->add_option("identity", o.identity,
                   "on1, on2, thm31, thm33, thm44, thm51, thm54, lemma56, lemma57 or appendix")
        ->required();
    ve->add_option("--bound", o.bound, "coefficient or |n| bound (on1, on2, thm31, thm33, thm44, lemma57 primes)");
    ve->add_option("--terms", o.terms, "number of Dirichlet coefficients (thm51, thm54, lemma56, appendix)");
    ve->add_option("--delta", o.delta, "fundamental discriminant, or 1 for Q + Q");
    ve->add_option("--f", o.f, "conductor of the order");
    ve->add_option("--d", o.d, "the d of lemma56");
    ve->add_option("--char", o.chr, "index into the characters of the class group, trivial first");
    ve->add_option("--variant", o.variant, "xi1, xi2, xi1_dual or xi2_dual");
    ve->add_option("--n", o.n, "appendix: the algebra is Q^(n+1)");
    ve->add_option("--m", o.m, "appendix: conductor m");
    ve->add_flag("--infinity", o.infinity, "appendix: include the real place in the modulus");
    ve->add_flag("--negative-control", o.negative_control, "on1, on2: corrupt one orbit on the right-hand side");
    add_common(ve);

    auto* cg = app.add_subcommand("classgroup", "class group of the order of conductor f in Q(sqrt delta)");
    cg->add_option("--delta", o.delta, "fundamental discriminant, or 1 for Q + Q")->required();
    cg->add_option("--f", o.f, "conductor");
    add_common(cg);

    auto* xi = app.add_subcommand("xi", "coefficients of a Shintani zeta function");
    xi->add_option("--variant", o.variant, "xi1, xi2, xi1_dual or xi2_dual");
    xi->add_option("--bound", o.bound, "coefficient bound");
    add_common(xi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (o.threads > 0) omp_set_num_threads(o.threads);
        if (*en) {
            require_positive(o.bound, "bound");
            emit(o, orbit_table(enumerate_orbits(parse_lattice(o.lattice), parse_sign(o.sign), o.bound), o.format));
            return 0;
        }
        if (*cg) {
            emit(o, class_group_table(parse_order(o), o.format));
            return 0;
        }
        if (*xi) {
            require_positive(o.bound, "bound");
            emit(o, series_table(xi_coeffs(parse_variant(o.variant), o.bound), o.format));
            return 0;
        }
        VerifyReport r = run_verify(o);
        r.workers = o.threads > 0 ? o.threads : omp_get_max_threads();
        emit(o, o.format == "csv" ? r.to_csv() : r.to_json());
        return r.pass() ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
