#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "lierep/rational.hpp"

namespace lierep {

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> xs) : parts(xs) { normalize(); }
    explicit Partition(std::vector<int> xs) : parts(std::move(xs)) { normalize(); }

    void normalize() {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (size_t i = 0; i + 1 < parts.size(); ++i)
            if (parts[i] < parts[i + 1]) throw std::invalid_argument("not weakly decreasing");
        for (int p : parts)
            if (p < 0) throw std::invalid_argument("negative part");
    }
    int size() const {
        int s = 0;
        for (int p : parts) s += p;
        return s;
    }
    int rows() const { return static_cast<int>(parts.size()); }
    int row(int i) const { return i >= 0 && i < rows() ? parts[i] : 0; }
    bool contains(const Partition& o) const {
        for (int i = 0; i < o.rows(); ++i)
            if (row(i) < o.row(i)) return false;
        return true;
    }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator!=(const Partition& o) const { return parts != o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
        return s + ")";
    }

    static std::vector<Partition> all(int k, int max_rows = 1 << 20) {
        std::vector<Partition> out;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int rem, int mx) {
            if (rem == 0) { out.push_back(Partition(cur)); return; }
            if (static_cast<int>(cur.size()) >= max_rows) return;
            for (int p = std::min(rem, mx); p >= 1; --p) {
                cur.push_back(p);
                rec(rem - p, p);
                cur.pop_back();
            }
        };
        rec(k, k);
        return out;
    }

    // Number of standard tableaux (hook length formula): the dimension of
    // the symmetric-group irreducible of this shape.
    Int dim_symmetric_group() const {
        int k = size();
        Int num = 1;
        for (int i = 2; i <= k; ++i) num *= i;
        Int hooks = 1;
        for (int i = 0; i < rows(); ++i)
            for (int j = 0; j < parts[i]; ++j) {
                int arm = parts[i] - j - 1;
                int leg = 0;
                for (int r = i + 1; r < rows(); ++r)
                    if (parts[r] > j) ++leg;
                hooks *= arm + leg + 1;
            }
        return num / hooks;
    }
};

// Conjugacy class of S_k: cycle type plus class size.
struct CycleType {
    Partition cycles;
    Int class_size;
};

inline std::vector<CycleType> cycle_types(int k) {
    std::vector<CycleType> out;
    Int kfact = 1;
    for (int i = 2; i <= k; ++i) kfact *= i;
    for (const Partition& p : Partition::all(k)) {
        Int z = 1;  // centralizer order: prod c_i * prod m_j!
        std::map<int, int> mult;
        for (int c : p.parts) { z *= c; mult[c]++; }
        for (auto& [c, m] : mult)
            for (int i = 2; i <= m; ++i) z *= i;
        out.push_back({p, kfact / z});
    }
    return out;
}

namespace detail {

// Murnaghan-Nakayama on beta-sets: removing a border strip of length L is
// subtracting L from one beta-number, provided the result is fresh; the
// height is the number of beta-numbers jumped over.
inline long long mn_beta(std::vector<int>& beta, const std::vector<int>& cycles, size_t ci) {
    if (ci == cycles.size()) return 1;
    int L = cycles[ci];
    long long total = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
        int b = beta[j] - L;
        if (b < 0) continue;
        bool clash = false;
        int height = 0;
        for (size_t i = 0; i < beta.size(); ++i) {
            if (i == j) continue;
            if (beta[i] == b) { clash = true; break; }
            if (beta[i] > b && beta[i] < beta[j]) ++height;
        }
        if (clash) continue;
        int old = beta[j];
        beta[j] = b;
        long long sub = mn_beta(beta, cycles, ci + 1);
        beta[j] = old;
        total += (height % 2 ? -sub : sub);
    }
    return total;
}

}  // namespace detail

inline long long mn_character(const Partition& shape, const Partition& cycles) {
    if (shape.size() != cycles.size()) throw std::invalid_argument("size mismatch in character value");
    int n = std::max(shape.rows(), 1);
    std::vector<int> beta(n);
    for (int i = 0; i < n; ++i) beta[i] = shape.row(i) + (n - 1 - i);
    return detail::mn_beta(beta, cycles.parts, 0);
}

// Character table of S_k, computed once and cached.
struct SymGroupCharTable {
    int k = 0;
    std::vector<Partition> shapes;
    std::vector<CycleType> classes;
    std::vector<std::vector<long long>> chi;  // [shape][class]

    static const SymGroupCharTable& get(int k) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<SymGroupCharTable>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[k];
        if (!slot) {
            auto t = std::make_unique<SymGroupCharTable>();
            t->k = k;
            t->shapes = Partition::all(k);
            t->classes = cycle_types(k);
            for (const auto& s : t->shapes) {
                std::vector<long long> row;
                for (const auto& c : t->classes) row.push_back(mn_character(s, c.cycles));
                t->chi.push_back(std::move(row));
            }
            slot = std::move(t);
        }
        return *slot;
    }

    long long value(const Partition& shape, int class_idx) const {
        for (size_t i = 0; i < shapes.size(); ++i)
            if (shapes[i] == shape) return chi[i][class_idx];
        throw std::invalid_argument("unknown shape " + shape.str());
    }
};

}  // namespace lierep
