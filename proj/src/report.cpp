#include "onth/report.hpp"

#include <set>
#include <sstream>

#include "json.hpp"

namespace onth {

std::string VerifyReport::to_json() const {
    nlohmann::ordered_json j;
    j["identity"] = identity;
    j["N"] = N;
    j["status"] = pass() ? "pass" : "fail";
    nlohmann::ordered_json ms = nlohmann::ordered_json::array();
    for (const auto& m : mismatches) ms.push_back({{"n", m.n}, {"lhs", m.lhs}, {"rhs", m.rhs}});
    j["mismatches"] = ms;
    j["wall_ms"] = wall_ms;
    j["workers"] = workers;
    if (!detail.empty()) j["detail"] = detail;
    return j.dump();
}

std::string VerifyReport::to_csv() const {
    std::ostringstream os;
    os << "identity,N,status,wall_ms,workers\n";
    os << identity << "," << N << "," << (pass() ? "pass" : "fail") << "," << wall_ms << "," << workers << "\n";
    os << "n,lhs,rhs\n";
    for (const auto& m : mismatches) os << m.n << "," << m.lhs << "," << m.rhs << "\n";
    return os.str();
}

VerifyReport compare_series(const std::string& identity, const DirichletCoeffs& lhs, const DirichletCoeffs& rhs,
                            i64 N, std::size_t max_kept) {
    VerifyReport r;
    r.identity = identity;
    r.N = N;
    std::set<i64> support;
    for (const auto& [n, v] : lhs.a)
        if (n <= N) support.insert(n);
    for (const auto& [n, v] : rhs.a)
        if (n <= N) support.insert(n);
    for (i64 n : support) {
        Cyc a = lhs.at(n), b = rhs.at(n);
        if (a == b) continue;
        if (r.mismatches.size() >= max_kept) {
            r.failed = true;
            r.detail = "mismatch list truncated";
            break;
        }
        r.mismatches.push_back({n, a.str(), b.str()});
    }
    return r;
}

}  // namespace onth
