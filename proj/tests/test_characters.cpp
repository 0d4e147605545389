#include <algorithm>
#include <set>

#include "doctest.h"
#include "onth/characters.hpp"

using namespace onth;

namespace {

std::shared_ptr<const ClassGroup> grp(i64 D, i64 f) { return class_group({QuadraticEtale{D}, f}); }

}  // namespace

TEST_CASE("roots of unity and cyclotomic arithmetic") {
    CHECK(RootOfUnity::make(4, 6) == RootOfUnity{2, 3});
    CHECK(RootOfUnity::make(-1, 3) == RootOfUnity{2, 3});
    CHECK((RootOfUnity{1, 2} * RootOfUnity{1, 2}).is_one());
    CHECK(RootOfUnity{1, 3} * RootOfUnity{1, 6} == RootOfUnity{1, 2});
    Cyc w = Cyc::root({1, 3});
    CHECK(Cyc(1) + w + w * w == Cyc(0));
    CHECK(w.conj() == w * w);
    CHECK(Cyc::root({1, 4}) * Cyc::root({1, 4}) == Cyc(-1));
    CHECK((w * w * w).is_rational());
    CHECK(w.lift(12) == Cyc::root({4, 12}));
    CHECK(cyclotomic_poly(6) == std::vector<i64>{1, -1, 1});
    CHECK(cyclotomic_poly(12) == std::vector<i64>{1, 0, -1, 0, 1});
    CHECK_THROWS(w.rational());
    // sum of all primitive n-th roots of unity is mobius(n)
    for (i64 n : {1, 2, 5, 6, 9, 10, 12, 30}) {
        Cyc s;
        for (i64 a = 0; a < n; ++a)
            if (gcd(a, n) == 1) s += Cyc::root(RootOfUnity::make(a, n));
        CHECK(s == Cyc(mobius(n)));
    }
}

TEST_CASE("characters are homomorphisms") {
    for (auto [D, f] : std::vector<std::pair<i64, i64>>{{-23, 1}, {-84, 1}, {-23, 6}, {-3, 7}, {229, 2}, {1, 13}, {-4, 15}}) {
        auto G = grp(D, f);
        for (const auto& chi : all_characters(G)) {
            for (int a = 0; a < G->size(); ++a)
                for (int b = 0; b < G->size(); ++b) CHECK(chi(G->mul(a, b)) == chi(a) * chi(b));
            i64 n = 1;
            while (true) {
                bool triv = true;
                for (int a = 0; a < G->size(); ++a) triv &= chi(a).pow(n).is_one();
                if (triv) break;
                ++n;
            }
            CHECK(chi.order() == n);
            CHECK((chi * chi.conj()).is_trivial());
        }
        CHECK((i64)all_characters(G).size() == G->size());
    }
}

TEST_CASE("cubic characters") {
    for (auto [D, f] : std::vector<std::pair<i64, i64>>{{-23, 1}, {-4, 1}, {-3, 7}, {-23, 3}, {1, 7}, {1, 9}, {229, 1}, {-107, 1}, {-3299, 1}}) {
        auto G = grp(D, f);
        int three_torsion = 0;
        for (int a = 0; a < G->size(); ++a) three_torsion += G->pow(a, 3) == 0;
        auto cc = cubic_characters(G);
        CHECK((int)cc.size() == three_torsion);
        CHECK(cc[0].is_trivial());
        for (const auto& chi : cc) {
            CHECK((chi * chi * chi).is_trivial());
            CHECK(std::find(cc.begin(), cc.end(), chi.conj()) != cc.end());
            for (int a = 0; a < G->size(); ++a) CHECK(chi.conj()(a) == chi(a).conj());
        }
    }
    CHECK(cubic_characters(grp(-23, 1)).size() == 3);
    CHECK(cubic_characters(grp(-4, 1)).size() == 1);
    CHECK(cubic_characters(grp(-47, 1)).size() == 1);
}

TEST_CASE("transition maps") {
    QuadraticEtale k{-23};
    auto id = transition_map(k, 6, 6);
    for (int i = 0; i < (int)id.image.size(); ++i) CHECK(id.image[i] == i);
    auto t62 = transition_map(k, 2, 6), t21 = transition_map(k, 1, 2), t61 = transition_map(k, 1, 6);
    for (int i = 0; i < (int)t62.image.size(); ++i) CHECK(t21.image[t62.image[i]] == t61.image[i]);
    for (auto [D, m] : std::vector<std::pair<i64, i64>>{{-23, 6}, {5, 12}, {1, 15}, {-3, 9}}) {
        for (i64 d : divisors(m)) {
            auto t = transition_map(QuadraticEtale{D}, d, m);
            std::set<int> img(t.image.begin(), t.image.end());
            CHECK((int)img.size() == t.target->size());
            for (int a = 0; a < t.source->size(); ++a)
                for (int b = 0; b < t.source->size(); ++b)
                    CHECK(t.image[t.source->mul(a, b)] == t.target->mul(t.image[a], t.image[b]));
        }
    }
    CHECK_THROWS(transition_map(k, 4, 6));
}

TEST_CASE("conductors by divisor scan") {
    for (auto [D, m] : std::vector<std::pair<i64, i64>>{{-3, 9}, {-4, 12}, {5, 12}, {1, 9}, {-23, 4}}) {
        auto G = grp(D, m);
        for (const auto& chi : all_characters(G)) {
            // divisors d whose kernel is killed by chi are exactly the multiples of the conductor
            std::vector<i64> good;
            for (i64 d : divisors(m)) {
                bool ok = true;
                for (int x : transition_map(QuadraticEtale{D}, d, m).kernel()) ok &= chi(x).is_one();
                if (ok) good.push_back(d);
            }
            i64 c = character_conductor(chi);
            CHECK(c == good.front());
            for (i64 d : divisors(m)) CHECK((d % c == 0) == (std::find(good.begin(), good.end(), d) != good.end()));
            CHECK(is_primitive(chi) == (c == m));
        }
        CHECK(character_conductor(trivial_character(G)) == 1);
    }
    CHECK(is_primitive(trivial_character(grp(-23, 1))));
    CHECK_FALSE(is_primitive(trivial_character(grp(-23, 2))));
}

TEST_CASE("kernel products collapse to the gcd level") {
    for (i64 D : {-3, -4, 5})
        for (i64 m = 1; m <= 12; ++m) {
            auto G = grp(D, m);
            auto ker = [&](i64 d) {
                auto v = transition_map(QuadraticEtale{D}, d, m).kernel();
                return std::set<int>(v.begin(), v.end());
            };
            for (i64 c : divisors(m))
                for (i64 d : divisors(m)) {
                    std::set<int> prod;
                    for (int x : ker(c))
                        for (int y : ker(d)) prod.insert(G->mul(x, y));
                    CHECK(prod == ker(gcd(c, d)));
                }
        }
}

TEST_CASE("induction and restriction") {
    for (auto [D, m] : std::vector<std::pair<i64, i64>>{{-3, 9}, {-23, 6}, {1, 12}, {5, 6}, {-4, 10}}) {
        auto G = grp(D, m);
        for (const auto& chi : all_characters(G)) {
            int count = 0;
            for (i64 d : divisors(m))
                for (const auto& psi : all_characters(grp(D, d)))
                    if (is_primitive(psi) && induce(psi, m) == chi) ++count;
            CHECK(count == 1);
            Character p = primitive_of(chi);
            CHECK(is_primitive(p));
            CHECK(induce(p, m) == chi);
        }
        for (i64 d : divisors(m))
            for (const auto& psi : all_characters(grp(D, d))) {
                Character up = induce(psi, m);
                CHECK(restrict_to(up, d) == psi);
                CHECK(character_conductor(up) == character_conductor(psi));
                CHECK(up.order() == psi.order());
            }
    }
    auto G = grp(-3, 9);
    for (const auto& chi : all_characters(G))
        if (character_conductor(chi) == 9) CHECK_THROWS(restrict_to(chi, 3));
}
