#pragma once

#include <string>
#include <vector>

#include "onth/dirichlet.hpp"

namespace onth {

struct Mismatch {
    i64 n = 0;
    std::string lhs, rhs;
};

struct VerifyReport {
    std::string identity;
    i64 N = 0;
    std::vector<Mismatch> mismatches;
    i64 wall_ms = 0;
    int workers = 1;
    bool failed = false;  // set for failures that are not coefficient mismatches
    std::string detail;

    bool pass() const { return mismatches.empty() && !failed; }
    std::string to_json() const;
    std::string to_csv() const;
};

// coefficientwise comparison for n <= N, keeping at most max_kept mismatches
// (with failed set when more exist)
VerifyReport compare_series(const std::string& identity, const DirichletCoeffs& lhs, const DirichletCoeffs& rhs,
                            i64 N, std::size_t max_kept = 50);

}  // namespace onth
