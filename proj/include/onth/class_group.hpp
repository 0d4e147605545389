#pragma once

#include <map>
#include <memory>
#include <vector>

#include "onth/quadratic.hpp"

namespace onth {

// Wide ideal class group of a quadratic order with a fixed cyclic decomposition.
struct ClassGroup {
    QuadOrder order;
    std::vector<QuadIdeal> reps;           // canonical representatives, index 0 is the principal class
    std::vector<i64> cyclic;               // invariant factors d_1 | d_2 | ..., all > 1
    std::vector<std::vector<i64>> coords;  // coordinates of each class in prod Z/d_i
    std::vector<int> generators;           // class with i-th unit coordinate vector

    int size() const { return (int)reps.size(); }
    i64 exponent() const { return cyclic.empty() ? 1 : cyclic.back(); }
    int mul(int i, int j) const;
    int inv(int i) const;
    int pow(int i, i64 e) const;
    int from_coords(std::vector<i64> c) const;
    int class_of(const QuadIdeal& a) const;  // a invertible over order
    i64 element_order(int i) const;

    // lookup data
    std::map<std::pair<i64, i64>, int> key_index;
    std::map<std::vector<i64>, int> coord_index;
};

// uncached construction; runs the class number consistency check for f > 1
ClassGroup build_class_group(const QuadOrder& O);
// process-wide memo keyed by (D, f), safe for concurrent use
std::shared_ptr<const ClassGroup> class_group(const QuadOrder& O);
i64 class_number(const QuadOrder& O);

// reduction key of a primitive form of discriminant disc(O), exposed for tests
std::pair<i64, i64> reduced_key(const BinaryForm& F, i64 disc);
bool is_reduced_form(const BinaryForm& F, i64 disc);

// |U(O', O)| from class numbers and unit index, and from the closed product formula
i64 u_count_from_class_numbers(const QuadOrder& Oprime, const QuadOrder& O);
i64 u_count_closed_form(const QuadOrder& Oprime, const QuadOrder& O);
// f prod_{p | f} (1 - (D/p)/p) as an exact rational
mpq_class conductor_factor(i64 D, i64 f);

}  // namespace onth
