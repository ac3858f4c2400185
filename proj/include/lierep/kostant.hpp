#pragma once

#include <map>
#include <vector>

#include "lierep/root_system.hpp"

namespace lierep {

// Kostant partition function: the number of ways to write a root-lattice
// vector as a nonnegative integer combination of positive roots. Memoized
// recursion over the root list; exponential in rank, so callers guard.
class KostantPartition {
  public:
    explicit KostantPartition(const RootSystem& rs) : rs_(rs) {
        for (const auto& rc : rs.positive_root_coords()) {
            std::vector<int> v(rc.begin(), rc.end());
            roots_.push_back(std::move(v));
        }
    }

    Int count(const std::vector<long long>& target) {
        std::vector<int> t(target.begin(), target.end());
        for (int v : t)
            if (v < 0) return 0;
        return rec(t, 0);
    }

  private:
    const RootSystem& rs_;
    std::vector<std::vector<int>> roots_;
    std::map<std::pair<std::vector<int>, size_t>, Int> memo_;

    Int rec(std::vector<int>& t, size_t i) {
        bool zero = true;
        for (int v : t)
            if (v) { zero = false; break; }
        if (zero) return 1;
        if (i == roots_.size()) return 0;
        auto key = std::make_pair(std::vector<int>(t.begin(), t.end()), i);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Int total = 0;
        // use root i zero or more times
        std::vector<int> cur = t;
        for (;;) {
            total += rec(cur, i + 1);
            bool ok = true;
            for (size_t j = 0; j < cur.size(); ++j) {
                cur[j] -= roots_[i][j];
                if (cur[j] < 0) ok = false;
            }
            if (!ok) break;
        }
        memo_.emplace(std::move(key), total);
        return memo_[std::make_pair(std::vector<int>(t.begin(), t.end()), i)];
    }
};

// Weight multiplicity by Kostant's formula:
// sum_{w in W} sign(w) P(w(lambda+rho) - (mu+rho)).
// The Weyl sum runs over the signed orbit of lambda+rho, so the cost is
// |W| partition-function evaluations; guarded by rank by default.
inline Int kostant_multiplicity(const RootSystem& rs, const Wt& lambda, const Wt& mu, int max_rank = 6) {
    if (rs.rank() > max_rank) throw std::length_error("kostant_multiplicity rank guard exceeded");
    if (!rs.is_dominant(lambda)) throw std::invalid_argument("kostant_multiplicity wants dominant lambda");
    KostantPartition part(rs);
    const Wt shifted = lambda + rs.rho();
    const Wt target_shift = mu + rs.rho();
    // Signed orbit by BFS: lambda+rho is regular, so parity is per element.
    std::unordered_map<Wt, int, WtHash> sign{{shifted, 1}};
    std::vector<Wt> stack{shifted};
    Int total = 0;
    while (!stack.empty()) {
        Wt cur = stack.back();
        stack.pop_back();
        int s = sign[cur];
        Wt diff = cur - target_shift;
        if (rs.in_positive_root_cone(diff)) total += s * part.count(rs.root_coords(diff));
        for (int i = 0; i < rs.rank(); ++i) {
            Wt nx = rs.reflect(cur, i);
            if (sign.emplace(nx, -s).second) stack.push_back(nx);
        }
    }
    return total;
}

}  // namespace lierep
