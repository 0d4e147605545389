#pragma once

#include <memory>
#include <vector>

#include "onth/class_group.hpp"
#include "onth/cyclotomic.hpp"

namespace onth {

// chi(class with coordinates c) = exp(2 pi i sum e_i c_i / d_i)
struct Character {
    std::shared_ptr<const ClassGroup> group;
    std::vector<i64> e;

    RootOfUnity operator()(int cls) const;
    RootOfUnity on_ideal(const QuadIdeal& a) const { return (*this)(group->class_of(a)); }
    i64 order() const;
    bool is_trivial() const;
    i64 modulus() const { return group->order.f; }
    Character conj() const;
    Character operator*(const Character& o) const;
    bool operator==(const Character& o) const { return group == o.group && e == o.e; }
};

Character trivial_character(std::shared_ptr<const ClassGroup> G);
std::vector<Character> all_characters(std::shared_ptr<const ClassGroup> G);
// characters with chi^3 = 1, trivial first
std::vector<Character> cubic_characters(std::shared_ptr<const ClassGroup> G);
// character with the given values on the cyclic generators of G
Character character_from_generator_values(std::shared_ptr<const ClassGroup> G, const std::vector<RootOfUnity>& v);

// [a] -> [a O_{k,m'}] from Cl_{k,m} to Cl_{k,m'}
struct TransitionMap {
    std::shared_ptr<const ClassGroup> source, target;
    std::vector<int> image;
    std::vector<int> kernel() const;
};

TransitionMap transition_map(const QuadraticEtale& k, i64 mprime, i64 m);
i64 character_conductor(const Character& chi);
bool is_primitive(const Character& chi);
Character induce(const Character& chi, i64 m);
Character restrict_to(const Character& chi, i64 mprime);
// restrict to the conductor
Character primitive_of(const Character& chi);

}  // namespace onth
