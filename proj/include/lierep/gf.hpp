#pragma once

#include <vector>

#include <set>

#include "lierep/character.hpp"

namespace lierep {

// One geometric factor 1/(1 - t^deg V_w) of a Cartan-product generating
// function; weights are representatives, expanded over a symmetry group at
// readout when one is declared.
struct GFGenerator {
    int deg;
    Wt w;
};

// A polynomial numerator factor contributes terms (sign, deg, weight).
struct GFNumeratorTerm {
    int sign;
    int deg;
    Wt w;
};

// Inclusion-exclusion branch: extra generators with a global sign.
struct GFBranch {
    int sign = 1;
    std::vector<GFGenerator> gens;
};

struct GFSpec {
    const RootSystem* rs = nullptr;
    std::vector<GFGenerator> common;
    std::vector<GFNumeratorTerm> numerator;       // besides the implicit +1
    std::vector<GFBranch> branches;               // empty means one trivial branch
    std::vector<std::vector<int>> symmetry;       // coordinate permutations for phi
    int truncation = 6;

    void validate() const {
        if (truncation < 1) throw std::invalid_argument("truncation must be >= 1");
        for (const auto& g : common)
            if (g.deg <= 0) throw std::invalid_argument("generator degrees must be positive");
        for (const auto& b : branches)
            for (const auto& g : b.gens)
                if (g.deg <= 0) throw std::invalid_argument("generator degrees must be positive");
    }
};

namespace detail {

using GFLayer = std::vector<std::unordered_map<Wt, long long, WtHash>>;  // [deg][weight]

inline void gf_multiply_in(GFLayer& dp, const GFGenerator& g, int maxdeg) {
    // dp *= 1/(1 - t^d w): ascending-degree in-place recurrence.
    for (int d = g.deg; d <= maxdeg; ++d)
        for (auto& [w, m] : dp[d - g.deg]) dp[d][w + g.w] += m;
    // note: iterating dp[d-deg] while inserting into dp[d] is safe, the
    // recurrence reads only lower layers except when deg divides; the
    // in-place form is the standard unbounded-knapsack update and the read
    // layer d-deg is complete before layer d is written because d ascends.
}

}  // namespace detail

// Per-degree coefficients of the generating function, as decompositions
// under Cartan-product semantics. With a symmetry group, every term is
// expanded over its orbit of distinct images.
inline std::vector<Decomposition> expand_gf(const GFSpec& spec, int maxdeg) {
    spec.validate();
    const RootSystem& rs = *spec.rs;
    detail::GFLayer common(maxdeg + 1);
    common[0][rs.zero()] = 1;
    for (const auto& g : spec.common) detail::gf_multiply_in(common, g, maxdeg);

    detail::GFLayer total(maxdeg + 1);
    std::vector<GFBranch> branches = spec.branches;
    if (branches.empty()) branches.push_back(GFBranch{});
    for (const auto& br : branches) {
        detail::GFLayer layer = common;
        for (const auto& g : br.gens) detail::gf_multiply_in(layer, g, maxdeg);
        for (int d = 0; d <= maxdeg; ++d)
            for (auto& [w, m] : layer[d]) total[d][w] += br.sign * m;
    }
    if (!spec.numerator.empty()) {
        detail::GFLayer adjusted(maxdeg + 1);
        for (int d = 0; d <= maxdeg; ++d) {
            for (auto& [w, m] : total[d]) adjusted[d][w] += m;
            for (const auto& nt : spec.numerator) {
                if (d + nt.deg > maxdeg) continue;
                for (auto& [w, m] : total[d]) adjusted[d + nt.deg][w + nt.w] += nt.sign * m;
            }
        }
        total = std::move(adjusted);
    }

    std::vector<Decomposition> out(maxdeg + 1);
    for (int d = 0; d <= maxdeg; ++d) {
        out[d].rs = &rs;
        for (auto& [w, m] : total[d]) {
            if (!m) continue;
            if (spec.symmetry.empty()) {
                if (!rs.is_dominant(w)) throw std::logic_error("gf term not dominant: " + w.str());
                out[d].add(w, m);
            } else {
                std::set<Wt> orbit;
                for (const auto& perm : spec.symmetry) {
                    Wt img(rs.rank());
                    for (int i = 0; i < rs.rank(); ++i) img[perm[i]] = w[i];
                    orbit.insert(img);
                }
                for (const Wt& img : orbit) {
                    if (!rs.is_dominant(img)) throw std::logic_error("gf term not dominant: " + img.str());
                    out[d].add(img, m);
                }
            }
        }
    }
    return out;
}

}  // namespace lierep
