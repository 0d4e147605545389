#include "onth/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace onth {

namespace {

std::vector<i64> poly_div_exact(std::vector<i64> num, const std::vector<i64>& den) {
    std::size_t dn = den.size() - 1;
    std::vector<i64> q(num.size() - dn, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        i64 coef = num[i + dn] / den[dn];
        q[i] = coef;
        for (std::size_t j = 0; j <= dn; ++j) num[i + j] -= coef * den[j];
    }
    return q;
}

// x^k reduced modulo Phi_e, as a dense vector of length phi(e)
std::vector<mpq_class> reduce(std::vector<mpq_class> v, i64 e) {
    const auto& phi = cyclotomic_poly(e);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = v.size(); i-- > deg;) {
        if (v[i] == 0) continue;
        mpq_class t = v[i];
        for (std::size_t j = 0; j <= deg; ++j) v[i - deg + j] -= t * phi[j];
    }
    v.resize(deg, 0);
    return v;
}

}  // namespace

RootOfUnity RootOfUnity::make(i64 num, i64 den) {
    if (den <= 0) throw std::invalid_argument("root of unity needs a positive denominator");
    num = (i64)fmod(num, den);
    i64 g = gcd(num, den);
    if (num == 0) return {0, 1};
    return {num / g, den / g};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    i64 L = lcm(den, o.den);
    return make(num * (L / den) + o.num * (L / o.den), L);
}

RootOfUnity RootOfUnity::pow(i64 e) const { return make((i64)fmod((i128)num * e, den), den); }

const std::vector<i64>& cyclotomic_poly(i64 n) {
    static std::mutex mu;
    static std::map<i64, std::vector<i64>> memo;
    {
        std::lock_guard lock(mu);
        auto it = memo.find(n);
        if (it != memo.end()) return it->second;
    }
    std::vector<i64> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (i64 d : divisors(n))
        if (d < n) num = poly_div_exact(num, cyclotomic_poly(d));
    std::lock_guard lock(mu);
    return memo.emplace(n, num).first->second;
}

Cyc Cyc::root(const RootOfUnity& z) {
    Cyc r;
    r.e = z.den;
    std::vector<mpq_class> v(z.num + 1, 0);
    v[z.num] = 1;
    r.c = reduce(v, r.e);
    return r;
}

bool Cyc::is_zero() const {
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_rational() const {
    for (std::size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) return false;
    return true;
}

mpq_class Cyc::rational() const {
    if (!is_rational()) throw std::domain_error("cyclotomic value is not rational: " + str());
    return c[0];
}

Cyc Cyc::lift(i64 L) const {
    if (L == e) return *this;
    if (L % e != 0) throw std::invalid_argument("cannot lift to a non-multiple");
    i64 step = L / e;
    std::vector<mpq_class> v(c.size() * step + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) v[i * step] = c[i];
    Cyc r;
    r.e = L;
    r.c = reduce(v, L);
    return r;
}

Cyc Cyc::conj() const {
    // zeta^i -> zeta^(e - i)
    std::vector<mpq_class> v(e + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) v[i == 0 ? 0 : e - i] += c[i];
    Cyc r;
    r.e = e;
    r.c = reduce(v, e);
    return r;
}

std::string Cyc::str() const {
    if (is_rational()) return c[0].get_str();
    std::ostringstream os;
    os << "[e=" << e;
    for (const auto& x : c) os << "," << x.get_str();
    os << "]";
    return os.str();
}

Cyc operator+(const Cyc& x, const Cyc& y) {
    i64 L = lcm(x.e, y.e);
    Cyc a = x.lift(L), b = y.lift(L);
    for (std::size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
}

Cyc operator-(const Cyc& x) {
    Cyc a = x;
    for (auto& v : a.c) v = -v;
    return a;
}

Cyc operator-(const Cyc& x, const Cyc& y) { return x + (-y); }

Cyc operator*(const Cyc& x, const Cyc& y) {
    if (x.e == 1 && y.e == 1) return Cyc(x.c[0] * y.c[0]);
    i64 L = lcm(x.e, y.e);
    Cyc a = x.lift(L), b = y.lift(L);
    std::vector<mpq_class> v(a.c.size() + b.c.size(), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    }
    Cyc r;
    r.e = L;
    r.c = reduce(v, L);
    return r;
}

bool operator==(const Cyc& x, const Cyc& y) {
    i64 L = lcm(x.e, y.e);
    return x.lift(L).c == y.lift(L).c;
}

}  // namespace onth
