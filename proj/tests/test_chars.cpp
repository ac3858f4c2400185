#include <catch2/catch_amalgamated.hpp>

#include "lierep/character.hpp"
#include "lierep/kostant.hpp"

using namespace lierep;

TEST_CASE("minuscule characters have all multiplicities 1") {
    const RootSystem& a3 = RootSystem::get("A3");
    const Character& ch = irr_character(a3, Wt{0, 1, 0});
    for (auto& [w, m] : ch.dom) {
        (void)w;
        CHECK(m == 1);
    }
    CHECK(ch.mass() == 6);
}

TEST_CASE("character mass equals the Weyl dimension") {
    struct Case {
        const char* alg;
        Wt w;
    };
    for (const Case& c : {Case{"A2", {1, 1}}, Case{"G2", {0, 1}}, Case{"F4", {0, 0, 0, 1}},
                          Case{"C3", {0, 2, 0}}, Case{"E6", {1, 0, 0, 0, 0, 0}}, Case{"B4", {0, 0, 0, 1}},
                          Case{"A1xA1xA1", {1, 2, 3}}, Case{"E7", {0, 0, 0, 0, 0, 1, 0}},
                          Case{"D6", {0, 0, 0, 1, 0, 0}}}) {
        const RootSystem& rs = RootSystem::get(c.alg);
        INFO(c.alg << " " << c.w.str());
        CHECK(irr_character(rs, c.w).mass() == rs.weyl_dimension(c.w));
    }
}

TEST_CASE("zero-weight multiplicities") {
    const RootSystem& a2 = RootSystem::get("A2");
    CHECK(irr_character(a2, Wt{1, 1}).mult(a2.zero()) == 2);
    const RootSystem& g2 = RootSystem::get("G2");
    CHECK(irr_character(g2, Wt{1, 0}).mult(g2.zero()) == 1);
    CHECK(irr_character(g2, Wt{0, 1}).mult(g2.zero()) == 2);
}

TEST_CASE("kostant multiplicity formula") {
    const RootSystem& a2 = RootSystem::get("A2");
    Wt adj{1, 1};
    CHECK(kostant_multiplicity(a2, adj, adj) == 1);
    CHECK(kostant_multiplicity(a2, adj, a2.zero()) == 2);
    Wt above = adj;
    above[0] += 2;
    above[1] -= 1;  // adj + alpha_1
    CHECK(kostant_multiplicity(a2, adj, above) == 0);
    CHECK_THROWS(kostant_multiplicity(RootSystem::get("E7"), Wt{1, 0, 0, 0, 0, 0, 0}, Wt(7)));
}

TEST_CASE("freudenthal agrees with kostant on small algebras") {
    for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
        const RootSystem& rs = RootSystem::get(name);
        // dominant weights with small coordinates and dimension <= 500
        std::vector<Wt> lams;
        std::function<void(Wt, int)> gen = [&](Wt w, int i) {
            if (i == rs.rank()) {
                if (!w.is_zero() && rs.weyl_dimension(w) <= 500) lams.push_back(w);
                return;
            }
            for (int v = 0; v <= 2; ++v) {
                w[i] = v;
                gen(w, i + 1);
            }
        };
        gen(Wt(rs.rank()), 0);
        for (const Wt& lam : lams) {
            const Character& ch = irr_character(rs, lam);
            for (auto& [mu, m] : ch.dom) {
                INFO(name << " lambda=" << lam.str() << " mu=" << mu.str());
                CHECK(Int(m) == kostant_multiplicity(rs, lam, mu));
            }
        }
    }
}

TEST_CASE("decompose of an irreducible character is a single term") {
    const RootSystem& f4 = RootSystem::get("F4");
    Wt lam{0, 0, 0, 1};
    Decomposition d = decompose_character(irr_character(f4, lam));
    REQUIRE(d.terms.size() == 1);
    CHECK(d.terms.begin()->first == lam);
    CHECK(d.terms.begin()->second == 1);
}

TEST_CASE("A1 Clebsch-Gordan by character product and subtraction") {
    const RootSystem& a1 = RootSystem::get("A1");
    Character v = irr_character(a1, Wt{1});
    Decomposition d = decompose_character(mul(v, v));
    CHECK(d.terms.size() == 2);
    CHECK(d.terms.at(Wt{2}) == 1);
    CHECK(d.terms.at(Wt{0}) == 1);
}

TEST_CASE("round trip: decompose of an assembled character") {
    const RootSystem& b3 = RootSystem::get("B3");
    Decomposition in;
    in.rs = &b3;
    in.add(Wt{1, 0, 0}, 2);
    in.add(Wt{0, 0, 1}, 1);
    in.add(Wt{0, 1, 0}, 3);
    in.add(b3.zero(), 1);
    CHECK(decompose_character(character_of(b3, in)) == in);
}

TEST_CASE("virtual inputs decompose to signed results") {
    const RootSystem& a1 = RootSystem::get("A1");
    Character c = irr_character(a1, Wt{4}) - irr_character(a1, Wt{2}).scaled(2);
    Decomposition d = decompose_character(c);
    CHECK(d.terms.at(Wt{4}) == 1);
    CHECK(d.terms.at(Wt{2}) == -2);
}

namespace {
Decomposition single(const RootSystem& rs, const Wt& w) {
    Decomposition d;
    d.rs = &rs;
    d.add(w, 1);
    return d;
}
}  // namespace

TEST_CASE("tensor decomposition") {
    SECTION("tensor with the trivial module") {
        const RootSystem& g2 = RootSystem::get("G2");
        Decomposition d = tensor(g2, Wt{1, 0}, g2.zero());
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms.at(Wt{1, 0}) == 1);
    }
    SECTION("E6: adjoint times the 27-dimensional module") {
        const RootSystem& e6 = RootSystem::get("E6");
        Wt v{1, 0, 0, 0, 0, 0};
        Decomposition d = tensor(e6, e6.adjoint_weight(), v);
        CHECK(d.total_dim() == 78 * 27);
        REQUIRE(d.terms.size() == 3);
        CHECK(d.terms.at(v) == 1);
        CHECK(d.terms.at(Wt{1, 1, 0, 0, 0, 0}) == 1);
        CHECK(e6.weyl_dimension(Wt{1, 1, 0, 0, 0, 0}) == 1728);
        for (auto& [w, m] : d.terms)
            if (w != v && w != Wt{1, 1, 0, 0, 0, 0}) {
                CHECK(m == 1);
                CHECK(e6.weyl_dimension(w) == 351);
            }
    }
    SECTION("symplectic pairing: C3 omega_3 tensor itself contains one trivial") {
        const RootSystem& c3 = RootSystem::get("C3");
        Decomposition d = tensor(c3, Wt{0, 0, 1}, Wt{0, 0, 1});
        CHECK(d.terms.at(c3.zero()) == 1);
        CHECK(d.total_dim() == 14 * 14);
    }
    SECTION("commutativity and associativity on small triples") {
        const RootSystem& b2 = RootSystem::get("B2");
        std::vector<Wt> ws{{1, 0}, {0, 1}, {1, 1}};
        for (const Wt& a : ws)
            for (const Wt& b : ws) {
                CHECK(tensor(b2, a, b) == tensor(b2, b, a));
                for (const Wt& c : ws) {
                    Decomposition left = tensor(b2, tensor(b2, a, b), single(b2, c));
                    Decomposition right = tensor(b2, single(b2, a), tensor(b2, b, c));
                    CHECK(left == right);
                }
            }
    }
    SECTION("mass conservation") {
        const RootSystem& d5 = RootSystem::get("D5");
        Wt a{0, 0, 0, 0, 1}, b{1, 0, 0, 0, 0};
        CHECK(tensor(d5, a, b).total_dim() == d5.weyl_dimension(a) * d5.weyl_dimension(b));
    }
}

TEST_CASE("irr_character budget guard") {
    const RootSystem& e7 = RootSystem::get("E7");
    CHECK_THROWS_AS(irr_character_uncached(e7, Wt{2, 2, 2, 2, 2, 2, 2}, 1000), std::length_error);
}
