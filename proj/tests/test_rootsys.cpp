#include <catch2/catch_amalgamated.hpp>

#include "lierep/root_system.hpp"

using namespace lierep;

namespace {

// Classical positive-root counts, independent of the closure algorithm.
long long classical_root_count(Family f, int n) {
    switch (f) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::G: return 6;
        case Family::F: return 24;
        case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    }
    return -1;
}

}  // namespace

TEST_CASE("positive root counts match the classical values") {
    for (const char* name : {"A1", "A2", "A5", "B2", "B3", "B4", "C3", "C6", "D4", "D5", "D6",
                             "G2", "F4", "E6", "E7", "E8"}) {
        const RootSystem& rs = RootSystem::get(name);
        auto t = rs.type().factors[0];
        INFO(name);
        CHECK(static_cast<long long>(rs.positive_roots().size()) == classical_root_count(t.family, t.rank));
    }
    const RootSystem& prod = RootSystem::get("A1xA1xA1");
    CHECK(prod.positive_roots().size() == 3);
    CHECK(RootSystem::get("A2xA2").positive_roots().size() == 6);
}

TEST_CASE("invalid algebra types are rejected") {
    CHECK_THROWS(AlgebraType(Family::E, 5));
    CHECK_THROWS(AlgebraType(Family::F, 3));
    CHECK_THROWS(AlgebraType(Family::G, 3));
    CHECK_THROWS(AlgebraType(Family::D, 2));
    CHECK_THROWS(AlgebraType::parse("H3"));
    CHECK_THROWS(AlgebraType::parse("A"));
    CHECK_NOTHROW(AlgebraType::parse("D3"));
}

TEST_CASE("highest root has squared length 2 and form reproduces the Cartan matrix") {
    for (const char* name : {"A1", "A3", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8", "A1xB3"}) {
        const RootSystem& rs = RootSystem::get(name);
        INFO(name);
        for (int f = 0; f < rs.num_factors(); ++f) CHECK(rs.norm2(rs.highest_root(f)) == 2);
        for (int i = 0; i < rs.rank(); ++i) {
            Wt ai(rs.rank());
            for (int j = 0; j < rs.rank(); ++j) ai[j] = rs.cartan()[i][j];
            for (int j = 0; j < rs.rank(); ++j) {
                Wt aj(rs.rank());
                for (int k = 0; k < rs.rank(); ++k) aj[k] = rs.cartan()[j][k];
                CHECK(2 * rs.inner(ai, aj) / rs.inner(aj, aj) == rs.cartan()[i][j]);
            }
        }
    }
}

TEST_CASE("rank-1 basics") {
    const RootSystem& a1 = RootSystem::get("A1");
    CHECK(a1.positive_roots().size() == 1);
    CHECK(a1.inner(a1.fundamental(0), a1.fundamental(0)) == Rat(1, 2));
}

TEST_CASE("G2 short root norm and root count") {
    const RootSystem& g2 = RootSystem::get("G2");
    CHECK(g2.positive_roots().size() == 6);
    CHECK(g2.simple_root_norm2(0) == Rat(2, 3));  // alpha_1 short
    CHECK(g2.simple_root_norm2(1) == 2);
    CHECK(g2.dual_coxeter(0) == 4);
}

TEST_CASE("E8 invariants") {
    const RootSystem& e8 = RootSystem::get("E8");
    CHECK(e8.positive_roots().size() == 120);
    CHECK(e8.dual_coxeter(0) == 30);
    CHECK(e8.weyl_dimension(e8.adjoint_weight()) == 248);
}

TEST_CASE("inner products: A2 fundamental norms, zero weight, mismatch") {
    const RootSystem& a2 = RootSystem::get("A2");
    CHECK(a2.inner(a2.fundamental(0), a2.fundamental(0)) == Rat(2, 3));
    CHECK(a2.inner(a2.zero(), a2.fundamental(1)) == 0);
    CHECK_THROWS(a2.inner(Wt{1}, a2.fundamental(0)));
    // Weyl invariance on an orbit
    Wt w = a2.fundamental(0) + a2.fundamental(1) * 2;
    for (const Wt& x : a2.weyl_orbit(w)) CHECK(a2.norm2(x) == a2.norm2(w));
    // symmetry
    Wt u{3, -1};
    CHECK(a2.inner(w, u) == a2.inner(u, w));
}

TEST_CASE("coordinates are recovered by pairing with simple coroots") {
    for (const char* name : {"A3", "B3", "C3", "G2", "F4", "E6"}) {
        const RootSystem& rs = RootSystem::get(name);
        Wt lam(rs.rank());
        for (int i = 0; i < rs.rank(); ++i) lam[i] = (i * 7 + 3) % 5 - 1;
        for (int i = 0; i < rs.rank(); ++i) {
            Wt ai(rs.rank());
            for (int j = 0; j < rs.rank(); ++j) ai[j] = rs.cartan()[i][j];
            CHECK(2 * rs.inner(lam, ai) / rs.inner(ai, ai) == lam[i]);
        }
    }
}

TEST_CASE("two_rho equals the sum of positive roots and has all coordinates 2") {
    for (const char* name : {"B4", "D5", "F4", "E7", "A2xA2"}) {
        const RootSystem& rs = RootSystem::get(name);
        Wt sum(rs.rank());
        for (const Wt& b : rs.positive_roots()) sum = sum + b;
        CHECK(sum == rs.two_rho());
    }
}

TEST_CASE("dominant_conjugate") {
    const RootSystem& a1 = RootSystem::get("A1");
    SECTION("dominant weights are fixed with sign +1") {
        auto [w, s] = a1.dominant_conjugate(Wt{3});
        CHECK(w == Wt{3});
        CHECK(s == 1);
    }
    SECTION("A1 lambda = -2 omega reflects to 0 with sign -1") {
        auto [w, s] = a1.dominant_conjugate(Wt{-2});
        CHECK(w == Wt{0});
        CHECK(s == -1);
    }
    SECTION("A1 lambda = -omega lies on the wall") {
        auto [w, s] = a1.dominant_conjugate(Wt{-1});
        CHECK(s == 0);
        (void)w;
    }
    SECTION("idempotent on the first output, sign flips under one more reflection") {
        const RootSystem& b2 = RootSystem::get("B2");
        for (int x = -3; x <= 3; ++x)
            for (int y = -3; y <= 3; ++y) {
                Wt lam{x, y};
                auto [d, s] = b2.dominant_conjugate(lam);
                if (s == 0) continue;
                auto [d2, s2] = b2.dominant_conjugate(d);
                CHECK(d2 == d);
                CHECK(s2 == 1);
                for (int i = 0; i < 2; ++i) {
                    Wt refl = b2.reflect(lam + b2.rho(), i) - b2.rho();
                    auto [dr, sr] = b2.dominant_conjugate(refl);
                    if (b2.reflect(lam + b2.rho(), i) == lam + b2.rho()) continue;
                    CHECK(dr == d);
                    CHECK(sr == -s);
                }
            }
    }
}

TEST_CASE("weyl orbits") {
    const RootSystem& a2 = RootSystem::get("A2");
    CHECK(a2.weyl_orbit(a2.zero()).size() == 1);
    CHECK(a2.weyl_orbit(a2.fundamental(0)).size() == 3);
    const RootSystem& d4 = RootSystem::get("D4");
    CHECK(d4.weyl_orbit(d4.fundamental(0)).size() == 8);
    SECTION("orbit sizes equal |W| / |stabilizer| from parabolic generators") {
        for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
            const RootSystem& rs = RootSystem::get(name);
            std::vector<Wt> battery{rs.rho(), rs.fundamental(0), rs.fundamental(rs.rank() - 1)};
            Wt mixed(rs.rank());
            mixed[0] = 1;
            mixed[rs.rank() - 1] = 2;
            battery.push_back(mixed);
            for (const Wt& w : battery) {
                INFO(name << " " << w.str());
                CHECK(Int(rs.weyl_orbit(w).size()) == rs.weyl_order() / rs.stabilizer_order(w));
            }
        }
    }
    SECTION("orbit bound is enforced") { CHECK_THROWS(RootSystem::get("E8").weyl_orbit(RootSystem::get("E8").rho(), 100)); }
}

TEST_CASE("weyl dimension formula on known representations") {
    CHECK(RootSystem::get("A1").weyl_dimension(Wt{0}) == 1);
    CHECK(RootSystem::get("E7").weyl_dimension(Wt{0, 0, 0, 0, 0, 0, 1}) == 56);
    CHECK(RootSystem::get("E6").weyl_dimension(Wt{1, 0, 0, 0, 0, 0}) == 27);
    CHECK(RootSystem::get("G2").weyl_dimension(Wt{1, 0}) == 7);
    CHECK(RootSystem::get("F4").weyl_dimension(Wt{0, 0, 0, 1}) == 26);
    CHECK(RootSystem::get("F4").weyl_dimension(Wt{1, 0, 0, 0}) == 52);
    CHECK(RootSystem::get("B3").weyl_dimension(Wt{0, 0, 1}) == 8);
    CHECK(RootSystem::get("C3").weyl_dimension(Wt{0, 0, 1}) == 14);
    CHECK(RootSystem::get("D6").weyl_dimension(Wt{0, 0, 0, 0, 0, 1}) == 32);
    CHECK(RootSystem::get("A5").weyl_dimension(Wt{0, 0, 1, 0, 0}) == 20);
    CHECK(RootSystem::get("A1xA1xA1").weyl_dimension(Wt{1, 1, 1}) == 8);
    CHECK_THROWS(RootSystem::get("A2").weyl_dimension(Wt{-1, 0}));
}

TEST_CASE("casimir eigenvalues") {
    const RootSystem& e7 = RootSystem::get("E7");
    CHECK(e7.casimir_hr(Wt{0, 0, 0, 0, 0, 0, 1}) == Rat(57, 2));
    CHECK(Rat(57, 2) == Rat(36) * Rat(19, 24));
    const RootSystem& c3 = RootSystem::get("C3");
    CHECK(c3.casimir_killing(Wt{0, 0, 1}) == Rat(15, 16));
    CHECK(c3.casimir_hr(c3.zero()) == 0);
    // adjoint eigenvalue is 1 in the Killing normalization, 2 h-dual otherwise
    for (const char* name : {"A2", "B3", "G2", "F4", "E6"}) {
        const RootSystem& rs = RootSystem::get(name);
        CHECK(rs.casimir_killing(rs.adjoint_weight()) == 1);
        CHECK(rs.casimir_hr(rs.adjoint_weight()) == 2 * Rat(rs.dual_coxeter(0)));
    }
    SECTION("killing normalization needs a common dual Coxeter number") {
        CHECK(RootSystem::get("A1xA1xA1").casimir_killing(Wt{1, 1, 1}) == Rat(9, 8));
        CHECK_THROWS(RootSystem::get("A1xB3").casimir_killing(Wt{1, 0, 0, 0}));
    }
    SECTION("bilinear expansion of the quadratic form") {
        const RootSystem& f4 = RootSystem::get("F4");
        Wt l{1, 0, 0, 1}, m{0, 1, 0, 0};
        CHECK(f4.casimir_hr(l + m) == f4.casimir_hr(l) + f4.casimir_hr(m) + 2 * f4.inner(l, m));
    }
}

TEST_CASE("duality and diagram automorphisms") {
    const RootSystem& a2 = RootSystem::get("A2");
    CHECK(a2.dual_weight(a2.fundamental(0)) == a2.fundamental(1));
    const RootSystem& e6 = RootSystem::get("E6");
    CHECK(e6.dual_weight(e6.fundamental(0)) == e6.fundamental(5));
    CHECK(e6.dual_weight(e6.fundamental(1)) == e6.fundamental(1));
    const RootSystem& d5 = RootSystem::get("D5");
    CHECK(d5.dual_weight(d5.fundamental(3)) == d5.fundamental(4));
    CHECK(RootSystem::get("D6").dual_weight(RootSystem::get("D6").fundamental(5)) ==
          RootSystem::get("D6").fundamental(5));
    CHECK(RootSystem::get("A5").diagram_automorphisms().size() == 2);
    CHECK(RootSystem::get("D4").diagram_automorphisms().size() == 6);
    CHECK(RootSystem::get("A1xA1xA1").diagram_automorphisms().size() == 6);
    CHECK(RootSystem::get("A2xA2").diagram_automorphisms().size() == 8);
    CHECK(RootSystem::get("E6").diagram_automorphisms().size() == 2);
    CHECK(RootSystem::get("F4").diagram_automorphisms().size() == 1);
}

TEST_CASE("minuscule recognition") {
    CHECK(RootSystem::get("E6").is_minuscule(Wt{1, 0, 0, 0, 0, 0}));
    CHECK(RootSystem::get("E7").is_minuscule(Wt{0, 0, 0, 0, 0, 0, 1}));
    CHECK(RootSystem::get("B3").is_minuscule(Wt{0, 0, 1}));
    CHECK_FALSE(RootSystem::get("B3").is_minuscule(Wt{1, 0, 0}));
    CHECK_FALSE(RootSystem::get("G2").is_minuscule(Wt{1, 0}));
    CHECK_FALSE(RootSystem::get("A2").is_minuscule(Wt{2, 0}));
}
