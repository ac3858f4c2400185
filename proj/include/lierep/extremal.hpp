#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "lierep/plethysm.hpp"

namespace lierep {

enum class CasimirNorm { HighestRoot, Killing };

inline Rat casimir(const RootSystem& rs, const Wt& lambda, CasimirNorm norm) {
    return norm == CasimirNorm::HighestRoot ? rs.casimir_hr(lambda) : rs.casimir_killing(lambda);
}

// Simple root at the single marked node of a fundamental weight.
inline Wt marked_simple_root(const RootSystem& rs, const Wt& lambda) {
    auto supp = lambda.support();
    if (supp.size() != 1 || lambda[supp[0]] != 1)
        throw std::invalid_argument("expected a fundamental weight, got " + lambda.str());
    Wt alpha(rs.rank());
    for (int j = 0; j < rs.rank(); ++j) alpha[j] = rs.cartan()[supp[0]][j];
    return alpha;
}

// Predicted Casimir eigenvalue of the extremal subspace of L^k V:
// k theta_V + k(k-1) [(lambda,lambda) - (alpha,alpha)].
inline Rat theta_vk(const RootSystem& rs, const Wt& lambda, int k, CasimirNorm norm) {
    Wt alpha = marked_simple_root(rs, lambda);
    Rat t = Rat(k) * rs.casimir_hr(lambda) +
            Rat(k) * (k - 1) * (rs.inner(lambda, lambda) - rs.inner(alpha, alpha));
    if (norm == CasimirNorm::Killing) t /= 2 * Rat(rs.dual_coxeter_common());
    return t;
}

// The full weight list of V_lambda with multiplicities.
inline std::vector<std::pair<Wt, long long>> weight_list(const RootSystem& rs, const Wt& lambda) {
    return irr_character(rs, lambda).full();
}

// A subset of the weights of a fixed V_lambda is complete when adding any
// positive root to a member lands either outside the weight set or back in
// the subset. Closure under single positive roots; equivalence with sums
// of positive roots is asserted on the test battery.
inline bool is_complete(const RootSystem& rs, const Character& chi, const std::vector<Wt>& subset) {
    std::unordered_set<Wt, WtHash> in(subset.begin(), subset.end());
    for (const Wt& mu : subset)
        for (const Wt& beta : rs.positive_roots()) {
            Wt up = mu + beta;
            if (in.count(up)) continue;
            if (chi.mult(up) != 0) return false;
        }
    return true;
}

// Minimal integer d with |mu - mu'|^2 <= d (alpha, alpha) over all pairs.
inline int diameter(const RootSystem& rs, const Wt& lambda, const std::vector<Wt>& subset) {
    Wt alpha = marked_simple_root(rs, lambda);
    long long aa = rs.inner_num(alpha, alpha);
    long long worst = 0;
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j) {
            Wt d = subset[i] - subset[j];
            worst = std::max(worst, rs.inner_num(d, d));
        }
    return static_cast<int>((worst + aa - 1) / aa);
}

struct DichotomyReport {
    bool holds = true;
    std::string detail;
};

// For minuscule V: any two distinct weights differ either by a root of the
// marked length (squared distance exactly (alpha,alpha)) or by a non-root
// of squared distance >= 2 (alpha,alpha).
inline DichotomyReport minuscule_dichotomy_check(const RootSystem& rs, const Wt& lambda) {
    if (!rs.is_minuscule(lambda)) throw std::invalid_argument(lambda.str() + " is not minuscule");
    Wt alpha = marked_simple_root(rs, lambda);
    long long aa = rs.inner_num(alpha, alpha);
    std::unordered_set<Wt, WtHash> roots;
    for (const Wt& b : rs.positive_roots()) {
        roots.insert(b);
        roots.insert(-b);
    }
    auto wts = rs.weyl_orbit(lambda);
    DichotomyReport rep;
    for (size_t i = 0; i < wts.size() && rep.holds; ++i)
        for (size_t j = i + 1; j < wts.size(); ++j) {
            Wt d = wts[i] - wts[j];
            long long n2 = rs.inner_num(d, d);
            bool is_root = roots.count(d) > 0;
            bool ok = (n2 == aa && is_root) || (n2 >= 2 * aa && !is_root);
            if (!ok) {
                rep.holds = false;
                rep.detail = "pair " + wts[i].str() + ", " + wts[j].str();
                break;
            }
        }
    return rep;
}

// Enumerates complete cardinality-k weight subsets of diameter at most 2,
// with the B-type proviso excluding pairs differing by a root strictly
// longer than the marked simple root. Each subset contributes its weight
// sum; the result collects multiplicities per dominant sum. Valid for
// minuscule weights and, for fundamental weights on an A-chain, for k up
// to the chain reach; callers outside that range get the enumeration as an
// exploratory answer.
inline Decomposition vk_components(const RootSystem& rs, const Wt& lambda, int k) {
    const Character& chi = irr_character(rs, lambda);
    Wt alpha = marked_simple_root(rs, lambda);
    long long aa = rs.inner_num(alpha, alpha);
    // B-type proviso: differences may not be roots strictly longer than
    // the marked simple root.
    std::unordered_set<Wt, WtHash> long_roots;
    if (rs.type().simple() && rs.type().factors[0].family == Family::B)
        for (const Wt& b : rs.positive_roots())
            if (rs.inner_num(b, b) > aa) {
                long_roots.insert(b);
                long_roots.insert(-b);
            }

    // Weight list, multiplicity-expanded, sorted by decreasing height so a
    // complete subset can be built by scanning downward: whenever a weight
    // enters, everything reachable upward is already present.
    auto wl = weight_list(rs, lambda);
    std::stable_sort(wl.begin(), wl.end(), [&](const auto& a, const auto& b) {
        Rat ha = rs.height(a.first), hb = rs.height(b.first);
        if (ha != hb) return ha > hb;
        return a.first < b.first;
    });
    std::vector<Wt> elems;
    for (auto& [w, m] : wl)
        for (long long c = 0; c < m; ++c) elems.push_back(w);

    Decomposition out;
    out.rs = &rs;
    std::vector<Wt> subset;
    std::unordered_map<Wt, int, WtHash> in_subset;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (static_cast<int>(subset.size()) == k) {
            Wt sum(rs.rank());
            for (const Wt& w : subset) sum = sum + w;
            if (!rs.is_dominant(sum)) throw std::logic_error("complete subset sum not dominant");
            out.add(sum, 1);
            return;
        }
        if (idx >= elems.size()) return;
        if (elems.size() - idx < k - subset.size()) return;
        const Wt& cand = elems[idx];
        // feasibility of adding cand: closure upward, diameter, proviso
        bool ok = true;
        int copies_present = in_subset.count(cand) ? in_subset[cand] : 0;
        long long mult_avail = chi.mult(cand);
        if (copies_present >= mult_avail) ok = false;
        if (ok && copies_present == 0) {
            for (const Wt& beta : rs.positive_roots()) {
                Wt up = cand + beta;
                if (chi.mult(up) != 0 && !in_subset.count(up)) { ok = false; break; }
            }
        }
        if (ok)
            for (const Wt& w : subset) {
                Wt d = cand - w;
                if (d.is_zero()) continue;
                long long n2 = rs.inner_num(d, d);
                if (n2 > 2 * aa || long_roots.count(d)) { ok = false; break; }
            }
        if (ok) {
            subset.push_back(cand);
            in_subset[cand]++;
            rec(idx + 1);
            if (--in_subset[cand] == 0) in_subset.erase(cand);
            subset.pop_back();
        }
        rec(idx + 1);
    };
    rec(0);
    return out;
}

struct MaxCasimirResult {
    Rat eigenvalue;          // maximal Casimir among components (0 if empty)
    Decomposition components;  // all components attaining it
    bool empty = false;
};

// Maximal Casimir eigenvalue of L^k V and its eigenspace. The dominance
// order bounds the Casimir strictly, so the top eigenspace is read off the
// maximal elements of the dominant support of the character; this agrees
// with fully decomposing and is checked against it on small cases.
inline MaxCasimirResult max_casimir_bruteforce(const RootSystem& rs, const Wt& lambda, int k, CasimirNorm norm,
                                               Int mass_budget = 8000000) {
    const Character& chi = irr_character(rs, lambda);
    Int dim = rs.weyl_dimension(lambda);
    // Predicted mass C(dim, k); guard before computing.
    Int mass = 1;
    for (int i = 0; i < k; ++i) mass = mass * (dim - i) / (i + 1);
    if (mass > mass_budget) throw std::length_error("exterior power mass exceeds budget");
    MaxCasimirResult res;
    res.components.rs = &rs;
    if (mass == 0) {
        res.empty = true;
        return res;
    }
    Character ext = ext_power(chi, k);
    // Maximal elements of the dominant support.
    std::vector<Wt> keys;
    for (auto& [w, m] : ext.dom) keys.push_back(w);
    std::vector<Wt> maximal;
    for (const Wt& w : keys) {
        bool dominated = false;
        for (const Wt& v : keys) {
            if (v == w) continue;
            if (rs.in_positive_root_cone(v - w)) { dominated = true; break; }
        }
        if (!dominated) maximal.push_back(w);
    }
    std::optional<Rat> best;
    for (const Wt& w : maximal) {
        Rat t = casimir(rs, w, norm);
        if (!best || t > *best) best = t;
    }
    res.eigenvalue = *best;
    for (const Wt& w : maximal)
        if (casimir(rs, w, norm) == res.eigenvalue) res.components.add(w, ext.dom.at(w));
    return res;
}

struct IrreducibilityReport {
    bool irreducible = false;
    Wt weight;
    long long multiplicity = 0;
    Rat eigenvalue;
};

// Top Casimir eigenspace of L^2 V must be a single irreducible.
inline IrreducibilityReport v2_irreducibility_check(const RootSystem& rs, const Wt& lambda,
                                                    Int mass_budget = 8000000) {
    auto top = max_casimir_bruteforce(rs, lambda, 2, CasimirNorm::HighestRoot, mass_budget);
    IrreducibilityReport rep;
    rep.eigenvalue = top.eigenvalue;
    if (top.empty) {  // L^2 of a 1-dimensional module
        rep.irreducible = true;
        rep.multiplicity = 0;
        return rep;
    }
    rep.irreducible = top.components.terms.size() == 1 && top.components.terms.begin()->second == 1;
    rep.weight = top.components.terms.begin()->first;
    rep.multiplicity = top.components.terms.begin()->second;
    return rep;
}

}  // namespace lierep
