#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lierep/root_system.hpp"

namespace lierep {

// Multiset of (dominant weight -> signed multiplicity). Virtual (negative)
// entries are allowed when explicitly flagged by the caller.
struct Decomposition {
    const RootSystem* rs = nullptr;
    std::map<Wt, long long> terms;

    bool empty() const { return terms.empty(); }
    void add(const Wt& w, long long m) {
        if (!m) return;
        auto it = terms.find(w);
        if (it == terms.end())
            terms.emplace(w, m);
        else if ((it->second += m) == 0)
            terms.erase(it);
    }
    bool has_negative() const {
        for (auto& [w, m] : terms)
            if (m < 0) return true;
        return false;
    }
    Int total_dim() const {
        Int d = 0;
        for (auto& [w, m] : terms) d += m * rs->weyl_dimension(w);
        return d;
    }
    bool operator==(const Decomposition& o) const { return terms == o.terms; }
    Decomposition operator-(const Decomposition& o) const {
        Decomposition r = *this;
        for (auto& [w, m] : o.terms) r.add(w, -m);
        return r;
    }
    Decomposition operator+(const Decomposition& o) const {
        Decomposition r = *this;
        for (auto& [w, m] : o.terms) r.add(w, m);
        return r;
    }
    // Sorted by decreasing height, lexicographic tie-break.
    std::vector<std::pair<Wt, long long>> sorted_terms() const {
        std::vector<std::pair<Wt, long long>> v(terms.begin(), terms.end());
        std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
            Rat ha = rs->height(a.first), hb = rs->height(b.first);
            if (ha != hb) return ha > hb;
            return b.first < a.first;
        });
        return v;
    }
    std::string str() const {
        std::string s;
        for (auto& [w, m] : sorted_terms()) {
            if (!s.empty()) s += " + ";
            if (m != 1) s += std::to_string(m) + "*";
            s += w.str();
        }
        return s.empty() ? "0" : s;
    }
};

// Weyl-symmetric formal character, stored on dominant representatives.
// Signed coefficients appear transiently during subtraction.
class Character {
  public:
    const RootSystem* rs = nullptr;
    std::unordered_map<Wt, long long, WtHash> dom;

    Character() = default;
    explicit Character(const RootSystem& r) : rs(&r) {}

    static Character unit(const RootSystem& r) {
        Character c(r);
        c.dom[r.zero()] = 1;
        return c;
    }

    bool empty() const { return dom.empty(); }
    void add(const Wt& w, long long m) {
        if (!m) return;
        auto it = dom.find(w);
        if (it == dom.end())
            dom.emplace(w, m);
        else if ((it->second += m) == 0)
            dom.erase(it);
    }
    long long mult(const Wt& any_weight) const {
        auto it = dom.find(rs->dominantize(any_weight).first);
        return it == dom.end() ? 0 : it->second;
    }

    // Total mass (signed): sum of multiplicities over all Weyl translates.
    Int mass() const {
        Int s = 0;
        for (auto& [w, m] : dom) s += m * rs->orbit_size(w);
        return s;
    }

    // Full orbit expansion, for convolution inputs.
    std::vector<std::pair<Wt, long long>> full() const {
        std::vector<std::pair<Wt, long long>> out;
        for (auto& [w, m] : dom)
            for (const Wt& x : rs->weyl_orbit(w)) out.emplace_back(x, m);
        return out;
    }

    Character operator+(const Character& o) const {
        Character r = *this;
        for (auto& [w, m] : o.dom) r.add(w, m);
        return r;
    }
    Character operator-(const Character& o) const {
        Character r = *this;
        for (auto& [w, m] : o.dom) r.add(w, -m);
        return r;
    }
    Character& operator+=(const Character& o) {
        for (auto& [w, m] : o.dom) add(w, m);
        return *this;
    }
    Character scaled(long long k) const {
        Character r(*rs);
        if (!k) return r;
        for (auto& [w, m] : dom) r.dom[w] = m * k;
        return r;
    }
    // Exact division; throws if any coefficient is not divisible.
    Character divided(long long k) const {
        Character r(*rs);
        for (auto& [w, m] : dom) {
            if (m % k) throw std::logic_error("character coefficient not divisible by " + std::to_string(k));
            r.dom[w] = m / k;
        }
        return r;
    }
    bool operator==(const Character& o) const {
        if (dom.size() != o.dom.size()) return false;
        for (auto& [w, m] : dom) {
            auto it = o.dom.find(w);
            if (it == o.dom.end() || it->second != m) return false;
        }
        return true;
    }
};

// Product of Weyl-symmetric characters; only dominant sums are recorded,
// which determines the product completely.
inline Character mul(const Character& a, const Character& b) {
    if (a.rs != b.rs) throw std::invalid_argument("character product across root systems");
    const auto& big = a.dom.size() >= b.dom.size() ? a : b;
    const auto& small = a.dom.size() >= b.dom.size() ? b : a;
    auto sf = small.full();
    auto bf = big.full();
    Character out(*a.rs);
    const int n = a.rs->rank();
    for (const auto& [x, mx] : bf) {
        for (const auto& [y, my] : sf) {
            Wt s = x;
            bool dominant = true;
            for (int i = 0; i < n; ++i) {
                s[i] += y[i];
                if (s[i] < 0) dominant = false;
            }
            if (dominant) out.add(s, mx * my);
        }
    }
    return out;
}

namespace detail {

// All weights of V_lambda lie in the convex hull of the Weyl orbit of
// lambda; membership test for candidates reached by simple-root lowering.
inline bool in_hull(const RootSystem& rs, const Wt& lambda, const Wt& w) {
    Wt d = lambda - rs.dominantize(w).first;
    return rs.in_positive_root_cone(d);
}

}  // namespace detail

// Irreducible character by the Freudenthal recursion, computed on dominant
// weights only. Costs grow with the weight support, guarded by max_support.
inline Character irr_character_uncached(const RootSystem& rs, const Wt& lambda, size_t max_support = 50000000) {
    if (!rs.is_dominant(lambda)) throw std::invalid_argument("irr_character wants a dominant weight");
    // Enumerate the weight support by BFS lowering, keep dominant points.
    std::unordered_set<Wt, WtHash> seen{lambda};
    std::vector<Wt> stack{lambda}, dominant;
    const int n = rs.rank();
    while (!stack.empty()) {
        Wt cur = stack.back();
        stack.pop_back();
        if (rs.is_dominant(cur)) dominant.push_back(cur);
        for (int i = 0; i < n; ++i) {
            Wt nx = cur;
            for (int j = 0; j < n; ++j) nx[j] -= rs.cartan()[i][j];
            if (seen.count(nx)) continue;
            if (!detail::in_hull(rs, lambda, nx)) continue;
            if (seen.size() >= max_support) throw std::length_error("character support exceeds budget");
            seen.insert(nx);
            stack.push_back(nx);
        }
    }
    std::sort(dominant.begin(), dominant.end(), [&](const Wt& a, const Wt& b) {
        Rat ha = rs.height(a), hb = rs.height(b);
        if (ha != hb) return ha > hb;
        return a < b;
    });

    Character ch(rs);
    const Wt rho = rs.rho();
    const Wt lr = lambda + rho;
    const long long c0 = rs.inner_num(lr, lr);
    ch.dom[lambda] = 1;
    for (size_t idx = 1; idx < dominant.size(); ++idx) {
        const Wt& mu = dominant[idx];
        // m(mu) * ((l+r,l+r) - (m+r,m+r)) = 2 sum_{b>0} sum_{k>=1} m(mu+kb)(mu+kb, b)
        long long rhs = 0;
        for (const Wt& beta : rs.positive_roots()) {
            Wt v = mu;
            for (;;) {
                for (int i = 0; i < n; ++i) v[i] += beta[i];
                auto it = ch.dom.find(rs.dominantize(v).first);
                if (it == ch.dom.end()) break;  // weights along a root string are contiguous
                rhs += it->second * rs.inner_num(v, beta);
            }
        }
        Wt mr = mu + rho;
        long long denom = c0 - rs.inner_num(mr, mr);
        long long num = 2 * rhs;
        if (denom <= 0 || num % denom) throw std::logic_error("freudenthal division failure");
        if (num) ch.dom[mu] = num / denom;
    }
    return ch;
}

// Process-wide cache; root systems are shared immutable singletons.
inline const Character& irr_character(const RootSystem& rs, const Wt& lambda, size_t max_support = 50000000) {
    static std::mutex mu;
    static std::map<std::pair<std::string, Wt>, std::unique_ptr<Character>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(rs.type().str(), lambda);
    auto& slot = cache[key];
    if (!slot) slot = std::make_unique<Character>(irr_character_uncached(rs, lambda, max_support));
    return *slot;
}

inline Character character_of(const RootSystem& rs, const Decomposition& d) {
    Character c(rs);
    for (auto& [w, m] : d.terms) {
        const Character& ch = irr_character(rs, w);
        for (auto& [x, k] : ch.dom) c.add(x, k * m);
    }
    return c;
}

// Greedy decomposition by subtracting the character of a maximal dominant
// entry ("maximal" = greatest height, ties broken lexicographically).
// Signed inputs yield virtual decompositions.
inline Decomposition decompose_character(Character chi, size_t max_iter = 1000000) {
    Decomposition out;
    out.rs = chi.rs;
    const RootSystem& rs = *chi.rs;
    size_t iter = 0;
    while (!chi.empty()) {
        if (++iter > max_iter) throw std::length_error("decomposition did not terminate");
        auto best = chi.dom.begin();
        Rat besth = rs.height(best->first);
        for (auto it = std::next(chi.dom.begin()); it != chi.dom.end(); ++it) {
            Rat h = rs.height(it->first);
            if (h > besth || (h == besth && best->first < it->first)) { best = it; besth = h; }
        }
        Wt tau = best->first;
        long long mult = best->second;
        out.add(tau, mult);
        const Character& ch = irr_character(rs, tau);
        for (auto& [x, k] : ch.dom) chi.add(x, -k * mult);
    }
    return out;
}

// Tensor product decomposition: Klimyk's formula, iterating the full weight
// set of the smaller factor over rho-shifted dominant conjugation.
inline Decomposition tensor(const RootSystem& rs, const Wt& lambda, const Wt& mu) {
    if (!rs.is_dominant(lambda) || !rs.is_dominant(mu)) throw std::invalid_argument("tensor wants dominant weights");
    Wt big = lambda, small = mu;
    if (rs.weyl_dimension(big) < rs.weyl_dimension(small)) std::swap(big, small);
    const Character& ch = irr_character(rs, small);
    Decomposition out;
    out.rs = &rs;
    const Wt shift = big + rs.rho();
    for (auto& [w, m] : ch.dom) {
        for (const Wt& nu : rs.weyl_orbit(w)) {
            Wt t = shift + nu;
            auto [d, sign] = rs.dominantize(t);
            if (sign == 0) continue;
            bool wall = false;
            for (int i = 0; i < rs.rank(); ++i)
                if (d[i] == 0) { wall = true; break; }
            if (wall) continue;
            out.add(d - rs.rho(), sign * m);
        }
    }
    if (out.has_negative()) throw std::logic_error("tensor produced negative multiplicities");
    return out;
}

inline Decomposition tensor(const RootSystem& rs, const Decomposition& a, const Decomposition& b) {
    Decomposition out;
    out.rs = &rs;
    for (auto& [w1, m1] : a.terms)
        for (auto& [w2, m2] : b.terms) {
            Decomposition t = tensor(rs, w1, w2);
            for (auto& [w, m] : t.terms) out.add(w, m * m1 * m2);
        }
    return out;
}

}  // namespace lierep
