#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "lierep/character.hpp"
#include "lierep/partitions.hpp"

namespace lierep {

// Adams operation: scales every weight by j, multiplicities unchanged.
inline Character adams(const Character& chi, int j) {
    if (j < 1) throw std::invalid_argument("adams wants j >= 1");
    Character out(*chi.rs);
    for (auto& [w, m] : chi.dom) out.dom[w * j] = m;
    return out;
}

// Newton recurrences: k S^k = sum_{j=1..k} S^{k-j} psi^j and the
// sign-alternating analogue for exterior powers.
inline std::vector<Character> sym_power_tower(const Character& chi, int k) {
    std::vector<Character> s{Character::unit(*chi.rs)};
    for (int d = 1; d <= k; ++d) {
        Character acc(*chi.rs);
        for (int j = 1; j <= d; ++j) acc += mul(s[d - j], adams(chi, j));
        s.push_back(acc.divided(d));
    }
    return s;
}

inline std::vector<Character> ext_power_tower(const Character& chi, int k) {
    std::vector<Character> e{Character::unit(*chi.rs)};
    for (int d = 1; d <= k; ++d) {
        Character acc(*chi.rs);
        for (int j = 1; j <= d; ++j) {
            Character t = mul(e[d - j], adams(chi, j));
            acc += (j % 2 ? t : t.scaled(-1));
        }
        e.push_back(acc.divided(d));
    }
    return e;
}

inline Character sym_power(const Character& chi, int k) { return sym_power_tower(chi, k).back(); }
inline Character ext_power(const Character& chi, int k) { return ext_power_tower(chi, k).back(); }

// Schur power via the symmetric-group character expansion:
// ch S_P(V) = (1/k!) sum_classes |class| chi_P(class) prod_i psi^{c_i}(ch V).
inline Character schur_power(const Character& chi, const Partition& p) {
    int k = p.size();
    if (k == 0) return Character::unit(*chi.rs);
    if (k == 1) return chi;
    const auto& table = SymGroupCharTable::get(k);
    Character acc(*chi.rs);
    for (size_t ci = 0; ci < table.classes.size(); ++ci) {
        long long coeff = to_int64(table.classes[ci].class_size) * table.value(p, ci);
        if (!coeff) continue;
        Character prod = Character::unit(*chi.rs);
        for (int c : table.classes[ci].cycles.parts) prod = mul(prod, adams(chi, c));
        acc += prod.scaled(coeff);
    }
    Int kfact = detail::factorial(k);
    return acc.divided(to_int64(kfact));
}

// Littlewood-Richardson coefficient c^lam_{mu,nu}: the number of
// semistandard skew tableaux of shape lam/mu and content nu whose reverse
// reading word is a lattice word.
inline long long lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
    if (lam.size() != mu.size() + nu.size() || !lam.contains(mu)) return 0;
    if (nu.rows() == 0) return lam == mu ? 1 : 0;
    int rows = lam.rows();
    // filled[r][entry] = number of cells with value `entry` in row r.
    // Fill row by row; track column heights for semistandardness via the
    // rightmost occupied column per (row, value).
    // Simpler cell-by-cell backtracking: iterate cells in row-major order,
    // assigning values 1..len(nu), maintaining:
    //  - column strictness: value at (r,c) > value at (r-1,c)
    //  - row weakness: value at (r,c) >= value at (r,c-1)
    //  - lattice condition on the reverse reading word (right to left, top
    //    to bottom): counts of i never fall behind counts of i+1.
    struct Cell { int r, c; };
    std::vector<Cell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = mu.row(r); c < lam.row(r); ++c) cells.push_back({r, c});
    // Reading order for the lattice condition: rows top to bottom, each row
    // right to left. Our fill order is row-major left to right, so enforce
    // the lattice condition incrementally per completed prefix in reading
    // order; equivalent to checking at assignment time when we fill rows
    // left to right but count only cells already in reading-prefix. To keep
    // it simple, fill cells in reading order directly (right to left).
    std::vector<Cell> order;
    for (int r = 0; r < rows; ++r)
        for (int c = lam.row(r) - 1; c >= mu.row(r); --c) order.push_back({r, c});
    int nvals = nu.rows();
    std::vector<int> remaining(nu.parts.begin(), nu.parts.end());
    std::vector<int> counts(nvals + 1, 0);
    std::map<std::pair<int, int>, int> value_at;
    long long total = 0;
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == order.size()) { ++total; return; }
        auto [r, c] = order[idx];
        for (int v = 1; v <= nvals; ++v) {
            if (!remaining[v - 1]) continue;
            // lattice: after placing v, #v <= #(v-1)
            if (v > 1 && counts[v] + 1 > counts[v - 1]) continue;
            // row weakness with right neighbor (already placed): value(r,c) <= value(r,c+1)
            auto itr = value_at.find({r, c + 1});
            if (itr != value_at.end() && v > itr->second) continue;
            // column strictness with cell above (placed earlier: row r-1 is
            // fully placed before row r): value(r,c) > value(r-1,c)
            auto itc = value_at.find({r - 1, c});
            if (itc != value_at.end() && v <= itc->second) continue;
            // cell above inside mu (empty) is fine; cell above outside lam
            // cannot happen for skew shapes.
            remaining[v - 1]--;
            counts[v]++;
            value_at[{r, c}] = v;
            rec(idx + 1);
            value_at.erase({r, c});
            counts[v]--;
            remaining[v - 1]++;
        }
    };
    rec(0);
    return total;
}

// Multiplies two GL Schur functors: S_mu . S_nu = sum c^lam S_lam,
// truncated to at most max_rows rows.
inline std::map<Partition, long long> lr_product(const Partition& mu, const Partition& nu, int max_rows) {
    std::map<Partition, long long> out;
    // Enumerate candidate lam containing mu with |lam| = |mu|+|nu| and at
    // most max_rows rows, each row bounded by mu.row(r-1) padding... simply
    // enumerate all partitions of the right size that contain mu.
    for (Partition lam : Partition::all(mu.size() + nu.size(), max_rows)) {
        if (!lam.contains(mu)) continue;
        long long c = lr_coefficient(lam, mu, nu);
        if (c) out[lam] += c;
    }
    return out;
}

// Symmetric powers of a tensor product of two or three factors by the
// Cauchy formula; three factors iterate Cauchy and expand Schur powers of
// the pair via Jacobi-Trudi into h-products, multiplied out with the
// Littlewood-Richardson rule. Returns (tuple of partitions) -> multiplicity.
inline std::map<std::vector<Partition>, long long> cauchy_sym(int k, const std::vector<int>& dims) {
    std::map<std::vector<Partition>, long long> out;
    if (dims.size() == 2) {
        for (const Partition& p : Partition::all(k, std::min(dims[0], dims[1]))) out[{p, p}] = 1;
        return out;
    }
    if (dims.size() != 3) throw std::invalid_argument("cauchy_sym wants 2 or 3 factors");
    // S^k(A (x) B (x) C) = sum_P S_P(A) (x) S_P(B (x) C); then S_P(B (x) C)
    // by Jacobi-Trudi: S_P = det(h_{P_i - i + j}), each h_a(B (x) C) =
    // sum_{|Q|=a} S_Q B (x) S_Q C.
    for (const Partition& p : Partition::all(k, dims[0])) {
        int n = p.rows();
        if (n == 0) n = 1;
        // Expand the determinant over permutations.
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::map<std::pair<Partition, Partition>, long long> pair_terms;
        do {
            int sign = 1;
            {
                std::vector<int> t = perm;
                for (int i = 0; i < n; ++i)
                    while (t[i] != i) { std::swap(t[i], t[t[i]]); sign = -sign; }
            }
            std::vector<int> hs;
            bool zero = false;
            for (int i = 0; i < n; ++i) {
                int a = p.row(i) - i + perm[i];
                if (a < 0) { zero = true; break; }
                if (a > 0) hs.push_back(a);
            }
            if (zero) continue;
            // Product over hs of sum_{|Q|=a} S_Q B (x) S_Q C.
            std::map<std::pair<Partition, Partition>, long long> acc{{{Partition{}, Partition{}}, 1}};
            for (int a : hs) {
                std::map<std::pair<Partition, Partition>, long long> nxt;
                for (const Partition& q : Partition::all(a, dims[1] < dims[2] ? dims[1] : dims[2])) {
                    for (auto& [bc, m] : acc) {
                        auto bprod = lr_product(bc.first, q, dims[1]);
                        auto cprod = lr_product(bc.second, q, dims[2]);
                        for (auto& [pb, mb] : bprod)
                            for (auto& [pc, mc] : cprod) nxt[{pb, pc}] += m * mb * mc;
                    }
                }
                acc = std::move(nxt);
            }
            for (auto& [bc, m] : acc) pair_terms[bc] += sign * m;
        } while (std::next_permutation(perm.begin(), perm.end()));
        for (auto& [bc, m] : pair_terms) {
            if (!m) continue;
            out[{p, bc.first, bc.second}] += m;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else {
            if (it->second < 0) throw std::logic_error("negative Cauchy multiplicity");
            ++it;
        }
    }
    return out;
}

// Restriction of the two-row GL_n Schur power S_{l,m} to so_n:
// S_{l,m} = sum over even mu = (2a,2b) and two-row [p,q] of
// c^{(l,m)}_{(2a,2b),(p,q)} S_{[p,q]}, valid in the stable range.
// Returns a Decomposition over the B/D root system of so_n.
inline Decomposition gl_to_so_two_row(int l, int m, int n) {
    if (l < m || m < 0) throw std::invalid_argument("gl_to_so_two_row wants l >= m >= 0");
    if (n < 5 || n == 6) throw std::invalid_argument("so_n two-row branching needs stable n (>= 5, not 6)");
    const RootSystem& rs = n % 2 ? RootSystem::get(AlgebraType(Family::B, n / 2))
                                 : RootSystem::get(AlgebraType(Family::D, n / 2));
    auto so_weight = [&](int p, int q) {
        // [p,q] has highest weight p e_1 + q e_2.
        Wt w(rs.rank());
        w[0] = p - q;
        if (rs.rank() >= 2) w[1] = q;
        if (rs.type().factors[0].family == Family::B && rs.rank() == 2) {
            // so_5: e_1 + e_2 = 2 w_2.
            w[1] = 2 * q;
        }
        return w;
    };
    Decomposition out;
    out.rs = &rs;
    Partition lm{l, m};
    for (int a = 0; 2 * a <= l + m; ++a)
        for (int b = 0; b <= a && 2 * a + 2 * b <= l + m; ++b) {
            int rest = l + m - 2 * a - 2 * b;
            if (rest < 0) continue;
            for (int q = 0; 2 * q <= rest; ++q) {
                int p = rest - q;
                if (p < q) continue;
                long long c = lr_coefficient(lm, Partition{2 * a, 2 * b}, Partition{p, q});
                if (c) out.add(so_weight(p, q), c);
            }
        }
    return out;
}

}  // namespace lierep
