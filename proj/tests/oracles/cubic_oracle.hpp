#pragma once

// Slow, independent references for cubic form equivalence and orbit counting.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "onth/cubic_forms.hpp"

namespace oracle {

using onth::CubicForm;
using onth::i64;

inline i64 height(const CubicForm& f) {
    return std::max({std::llabs(f.x0), std::llabs(f.x1), std::llabs(f.x2), std::llabs(f.x3)});
}

// Breadth-first search from f under S and T^{+-1}, discarding states above cap.
inline std::set<CubicForm> bfs_ball(const CubicForm& f, i64 cap) {
    static const onth::Unimodular gens[] = {onth::Unimodular::S(), onth::Unimodular::T(1),
                                            onth::Unimodular::T(-1)};
    std::set<CubicForm> seen{f};
    std::deque<CubicForm> todo{f};
    while (!todo.empty()) {
        CubicForm x = todo.front();
        todo.pop_front();
        for (const auto& g : gens) {
            CubicForm y = onth::act(g, x);
            if (height(y) > cap || seen.count(y)) continue;
            seen.insert(y);
            todo.push_back(y);
        }
    }
    return seen;
}

inline bool bfs_equivalent(const CubicForm& f, const CubicForm& g, i64 cap) {
    auto ball = bfs_ball(f, cap);
    return ball.count(g) > 0;
}

// Partition of a list of forms into BFS components (component ids per input index).
inline std::vector<int> bfs_components(const std::vector<CubicForm>& forms, i64 cap) {
    std::map<CubicForm, int> index;
    for (int i = 0; i < (int)forms.size(); ++i) index[forms[i]] = i;
    std::vector<int> comp(forms.size(), -1);
    int next = 0;
    for (int i = 0; i < (int)forms.size(); ++i) {
        if (comp[i] >= 0) continue;
        for (const auto& y : bfs_ball(forms[i], cap)) {
            auto it = index.find(y);
            if (it != index.end()) comp[it->second] = next;
        }
        ++next;
    }
    return comp;
}

// Orbit counts keyed by discriminant for forms in the box [-B, B]^4 with
// 0 < |disc| <= bound (scaled by 1/27 for the dual lattice) of the given sign.
inline std::map<i64, int> box_orbit_counts(onth::Lattice lat, onth::Sign sign, i64 bound, i64 B, i64 cap) {
    std::vector<CubicForm> forms;
    for (i64 a = -B; a <= B; ++a)
        for (i64 b = -B; b <= B; ++b)
            for (i64 c = -B; c <= B; ++c)
                for (i64 d = -B; d <= B; ++d) {
                    CubicForm f{a, b, c, d};
                    if (lat == onth::Lattice::Ldual && !onth::in_dual_lattice(f)) continue;
                    i64 D = (i64)onth::discriminant(f);
                    if (D == 0 || (D > 0) != (sign == onth::Sign::Pos)) continue;
                    i64 n = lat == onth::Lattice::Ldual ? D / 27 : D;
                    if (std::llabs(n) > bound) continue;
                    forms.push_back(f);
                }
    auto comp = bfs_components(forms, cap);
    std::map<int, i64> comp_disc;
    for (std::size_t i = 0; i < forms.size(); ++i) comp_disc[comp[i]] = (i64)onth::discriminant(forms[i]);
    std::map<i64, int> counts;
    for (auto [c, D] : comp_disc) counts[D]++;
    return counts;
}

// Brute-force automorph count: matrices with entries bounded by K fixing f.
inline int automorph_count(const CubicForm& f, i64 K) {
    int n = 0;
    for (i64 a = -K; a <= K; ++a)
        for (i64 b = -K; b <= K; ++b)
            for (i64 c = -K; c <= K; ++c)
                for (i64 d = -K; d <= K; ++d)
                    if (a * d - b * c == 1 && onth::act(onth::Unimodular{a, b, c, d}, f) == f) ++n;
    return n;
}

}  // namespace oracle
