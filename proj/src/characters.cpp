#include "onth/characters.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace onth {

RootOfUnity Character::operator()(int cls) const {
    const auto& c = group->coords.at(cls);
    i64 L = group->exponent();
    i128 s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i128)e[i] * c[i] * (L / group->cyclic[i]);
    return RootOfUnity::make((i64)fmod(s, L), L);
}

i64 Character::order() const {
    i64 o = 1;
    for (std::size_t i = 0; i < e.size(); ++i) o = lcm(o, group->cyclic[i] / gcd(e[i], group->cyclic[i]));
    return o;
}

bool Character::is_trivial() const {
    for (i64 x : e)
        if (x != 0) return false;
    return true;
}

Character Character::conj() const {
    Character r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = (i64)fmod(-e[i], group->cyclic[i]);
    return r;
}

Character Character::operator*(const Character& o) const {
    if (group != o.group) throw std::invalid_argument("characters of different groups");
    Character r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = (i64)fmod(e[i] + o.e[i], group->cyclic[i]);
    return r;
}

Character trivial_character(std::shared_ptr<const ClassGroup> G) {
    return Character{G, std::vector<i64>(G->cyclic.size(), 0)};
}

std::vector<Character> all_characters(std::shared_ptr<const ClassGroup> G) {
    std::vector<Character> out{trivial_character(G)};
    for (std::size_t i = 0; i < G->cyclic.size(); ++i) {
        std::vector<Character> next;
        for (const auto& chi : out)
            for (i64 x = 0; x < G->cyclic[i]; ++x) {
                Character c = chi;
                c.e[i] = x;
                next.push_back(c);
            }
        out = next;
    }
    return out;
}

std::vector<Character> cubic_characters(std::shared_ptr<const ClassGroup> G) {
    std::vector<Character> out{trivial_character(G)};
    for (std::size_t i = 0; i < G->cyclic.size(); ++i) {
        i64 d = G->cyclic[i];
        if (d % 3 != 0) continue;
        std::vector<Character> next;
        for (const auto& chi : out)
            for (i64 x = 0; x < 3; ++x) {
                Character c = chi;
                c.e[i] = x * (d / 3);
                next.push_back(c);
            }
        out = next;
    }
    return out;
}

Character character_from_generator_values(std::shared_ptr<const ClassGroup> G, const std::vector<RootOfUnity>& v) {
    Character chi = trivial_character(G);
    for (std::size_t i = 0; i < G->cyclic.size(); ++i) {
        i64 d = G->cyclic[i];
        if (d % v[i].den != 0) throw std::invalid_argument("value is not a d-th root of unity");
        chi.e[i] = v[i].num * (d / v[i].den);
    }
    return chi;
}

std::vector<int> TransitionMap::kernel() const {
    std::vector<int> k;
    for (int i = 0; i < (int)image.size(); ++i)
        if (image[i] == 0) k.push_back(i);
    return k;
}

TransitionMap transition_map(const QuadraticEtale& k, i64 mprime, i64 m) {
    if (mprime < 1 || m % mprime != 0) throw std::invalid_argument("transition map needs m' | m");
    static std::shared_mutex mu;
    static std::map<std::tuple<i64, i64, i64>, TransitionMap> memo;
    auto key = std::make_tuple(k.D, mprime, m);
    {
        std::shared_lock lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    TransitionMap t;
    QuadOrder O{k, m}, Op{k, mprime};
    t.source = class_group(O);
    t.target = class_group(Op);
    for (const auto& a : t.source->reps) t.image.push_back(t.target->class_of(extend(a, Op)));
    std::unique_lock lock(mu);
    return memo.emplace(key, t).first->second;
}

i64 character_conductor(const Character& chi) {
    i64 m = chi.modulus();
    for (i64 d : divisors(m)) {
        TransitionMap t = transition_map(chi.group->order.k, d, m);
        bool ok = true;
        for (int x : t.kernel())
            if (!chi(x).is_one()) {
                ok = false;
                break;
            }
        if (ok) return d;
    }
    return m;
}

bool is_primitive(const Character& chi) { return character_conductor(chi) == chi.modulus(); }

Character induce(const Character& chi, i64 m) {
    TransitionMap t = transition_map(chi.group->order.k, chi.modulus(), m);
    std::vector<RootOfUnity> v;
    for (int g : t.source->generators) v.push_back(chi(t.image[g]));
    return character_from_generator_values(t.source, v);
}

Character restrict_to(const Character& chi, i64 mprime) {
    TransitionMap t = transition_map(chi.group->order.k, mprime, chi.modulus());
    for (int x : t.kernel())
        if (!chi(x).is_one()) throw std::invalid_argument("character is not trivial on the kernel");
    std::vector<int> pre(t.target->size(), -1);
    for (int x = 0; x < (int)t.image.size(); ++x)
        if (pre[t.image[x]] < 0) pre[t.image[x]] = x;
    std::vector<RootOfUnity> v;
    for (int g : t.target->generators) {
        if (pre[g] < 0) throw std::logic_error("transition map is not surjective");
        v.push_back(chi(pre[g]));
    }
    return character_from_generator_values(t.target, v);
}

Character primitive_of(const Character& chi) { return restrict_to(chi, character_conductor(chi)); }

}  // namespace onth
