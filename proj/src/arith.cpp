#include "onth/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace onth {

std::string to_string(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    // careful with the most negative value
    unsigned __int128 u = neg ? (unsigned __int128)(-(x + 1)) + 1 : (unsigned __int128)x;
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

mpz_class to_mpz(i128 x) { return mpz_class(to_string(x)); }

i128 from_mpz(const mpz_class& z) {
    static const mpz_class hi = to_mpz((i128)(((unsigned __int128)1 << 127) - 1));
    static const mpz_class lo = -hi - 1;
    if (z > hi || z < lo) throw OverflowError();
    mpz_class a = abs(z);
    i128 r = 0;
    std::string s = a.get_str();
    for (char ch : s) r = r * 10 + (ch - '0');
    return z < 0 ? -r : r;
}

i64 narrow64(i128 x) {
    if (x > INT64_MAX || x < INT64_MIN) throw OverflowError();
    return (i64)x;
}

i128 gcd(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 gcd(i64 a, i64 b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 isqrt(i128 n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n < 2) return n;
    i128 x = (i128)std::sqrt((long double)n);
    while (x > 0 && x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

bool is_square(i128 n, i128* root) {
    if (n < 0) return false;
    i128 r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

i128 iroot(i128 n, int k) {
    if (n < 0) throw std::domain_error("iroot of negative");
    if (n < 2 || k == 1) return n;
    auto pw = [&](i128 x) {
        i128 r = 1;
        for (int i = 0; i < k; ++i) {
            if (r > n / x) return n + 1;
            r *= x;
        }
        return r;
    };
    i128 x = (i128)std::pow((long double)n, 1.0L / k);
    if (x < 1) x = 1;
    while (x > 1 && pw(x) > n) --x;
    while (pw(x + 1) <= n) ++x;
    return x;
}

i64 powmod(i64 b, i64 e, i64 m) {
    i128 r = 1 % m, x = ((b % m) + m) % m;
    while (e > 0) {
        if (e & 1) r = r * x % m;
        x = x * x % m;
        e >>= 1;
    }
    return (i64)r;
}

i64 invmod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1) {
        i64 q = g / a1;
        std::tie(g, a1) = std::make_pair(a1, g - q * a1);
        std::tie(x, x1) = std::make_pair(x1, x - q * x1);
    }
    if (g != 1) throw std::domain_error("invmod: not invertible");
    return ((x % m) + m) % m;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13}) {
        if (n % p == 0) return n == p;
    }
    for (i64 d = 17; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<i64> primes_up_to(i64 n) {
    std::vector<i64> out;
    if (n < 2) return out;
    std::vector<char> comp(n + 1, 0);
    for (i64 i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (i64 j = i * i; j <= n; j += i) comp[j] = 1;
    }
    return out;
}

std::vector<std::pair<i64, int>> factor(i64 n) {
    std::vector<std::pair<i64, int>> out;
    if (n < 0) n = -n;
    for (i64 p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (auto [p, e] : factor(n)) {
        std::size_t sz = out.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<i64> prime_divisors(i64 n) {
    std::vector<i64> out;
    for (auto [p, e] : factor(n)) out.push_back(p);
    return out;
}

int mobius(i64 n) {
    int s = 1;
    for (auto [p, e] : factor(n)) {
        if (e > 1) return 0;
        s = -s;
    }
    return s;
}

i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto [p, e] : factor(n)) r = r / p * (p - 1);
    return r;
}

bool is_squarefree(i64 n) {
    for (auto [p, e] : factor(n))
        if (e > 1) return false;
    return true;
}

int kronecker(i64 a, i64 n) {
    if (a == 1) return 1;
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int r = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) r = -r;
    }
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v > 0) {
        if (a % 2 == 0) return 0;
        i64 am8 = ((a % 8) + 8) % 8;
        if ((v & 1) && (am8 == 3 || am8 == 5)) r = -r;
    }
    // Jacobi symbol (a/n) for odd n > 0
    i64 x = ((a % n) + n) % n, y = n;
    while (x != 0) {
        while (x % 2 == 0) {
            x /= 2;
            i64 y8 = y % 8;
            if (y8 == 3 || y8 == 5) r = -r;
        }
        std::swap(x, y);
        if (x % 4 == 3 && y % 4 == 3) r = -r;
        x %= y;
    }
    return y == 1 ? r : 0;
}

bool is_fundamental(i64 d) {
    if (d == 1) return true;
    if (d == 0) return false;
    i64 m4 = ((d % 4) + 4) % 4;
    if (m4 == 1) return is_squarefree(d);
    if (m4 != 0) return false;
    i64 q = d / 4;
    i64 q4 = ((q % 4) + 4) % 4;
    return (q4 == 2 || q4 == 3) && is_squarefree(q);
}

std::vector<i64> fundamental_discriminants(i64 bound, int sign) {
    std::vector<i64> out;
    for (i64 a = 2; a <= bound; ++a) {
        i64 d = sign < 0 ? -a : a;
        if (is_fundamental(d)) out.push_back(d);
    }
    return out;
}

std::pair<i64, i64> split_discriminant(i64 d) {
    i64 m4 = ((d % 4) + 4) % 4;
    if (d == 0 || m4 > 1) throw std::invalid_argument("not a discriminant: " + std::to_string(d));
    i64 f = 1;
    for (auto [p, e] : factor(d < 0 ? -d : d))
        for (int i = 0; i < e / 2; ++i) f *= p;
    // f^2 d' with d' squarefree part; fix the 2-part so d / f^2 is a discriminant
    for (i64 g : divisors(f)) {
        i64 h = f / g;
        i64 D = d / (h * h);
        if (is_fundamental(D)) return {D, h};
    }
    throw std::logic_error("no fundamental part found");
}

}  // namespace onth
