#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "csw/root_datum.hpp"

using namespace csw;

TEST_CASE("root counts and Weyl orders") {
    struct Row {
        const char* name;
        std::size_t npos;
        std::size_t worder;
    };
    for (const Row& r : std::initializer_list<Row>{
             {"A1-adjoint", 1, 2},
             {"A2-sc", 3, 6},
             {"A3-adjoint", 6, 24},
             {"A4-sc", 10, 120},
             {"B2-adjoint", 4, 8},
             {"B3-sc", 9, 48},
             {"C3-adjoint", 9, 48},
             {"C4-sc", 16, 384},
             {"D3-adjoint", 6, 24},
             {"D4-sc", 12, 192},
             {"G2-adjoint", 6, 12},
             {"BC1", 2, 2},
             {"BC2", 6, 8}}) {
        auto d = RootDatum::catalog(r.name);
        CHECK(d.positive_roots().size() == r.npos);
        CHECK(d.weyl().size() == r.worder);
    }
}

TEST_CASE("pairings and reflections") {
    for (const auto& name : RootDatum::catalog_names()) {
        auto d = RootDatum::catalog(name);
        for (std::size_t i = 0; i < d.positive_roots().size(); ++i)
            CHECK(RootDatum::pairing(d.positive_roots()[i],
                                     d.positive_coroots()[i]) == 2);
        // mult defaults to 1 everywhere
        for (std::size_t i = 0; i < d.positive_roots().size(); ++i)
            CHECK(d.mult(i) >= 1);
    }
}

TEST_CASE("longest element length equals number of reduced positive roots") {
    for (const char* name : {"A2-sc", "B2-adjoint", "G2-sc", "BC2"}) {
        auto d = RootDatum::catalog(name);
        std::size_t longest_len = 0;
        for (const auto& el : d.weyl().elements())
            longest_len = std::max(longest_len, el.length);
        // For BC types the Weyl group is that of the non-divisible
        // subsystem (type B), with one positive root per reflection class.
        std::size_t expect =
            d.nonreduced() ? d.nd_positive().size() : d.positive_roots().size();
        CHECK(longest_len == expect);
    }
}

TEST_CASE("coweight lattice for A1") {
    auto sc = RootDatum::catalog("A1-sc");
    // X_* = Z alpha^vee; coweights are half-integers.
    REQUIRE(sc.coweight_lattice().size() == 1);
    CHECK(sc.coweight_lattice()[0][0] == Rational(1, 2));

    auto ad = RootDatum::catalog("A1-adjoint");
    REQUIRE(ad.coweight_lattice().size() == 1);
    CHECK(ad.coweight_lattice()[0][0] == Rational(1));
}

TEST_CASE("rho_vee") {
    auto a2 = RootDatum::catalog("A2-sc");
    // rho^vee = alpha_1^vee + alpha_2^vee in sc coordinates.
    auto r = a2.rho_vee_in_lattice();
    REQUIRE(r);
    CHECK(*r == LatticePoint{1, 1});

    auto a1ad = RootDatum::catalog("A1-adjoint");
    // half of alpha^vee = 2 omega^vee: integral in the adjoint lattice.
    auto r2 = a1ad.rho_vee_in_lattice();
    REQUIRE(r2);
    CHECK(*r2 == LatticePoint{1});

    auto a1sc = RootDatum::catalog("A1-sc");
    CHECK_FALSE(a1sc.rho_vee_in_lattice());
    CHECK(a1sc.rho_vee_rational()[0] == Rational(1, 2));

    auto bc1 = RootDatum::catalog("BC1");
    auto r3 = bc1.rho_vee_in_lattice();
    REQUIRE(r3);
    CHECK(*r3 == LatticePoint{1});
}

TEST_CASE("BC1 structure") {
    auto d = RootDatum::catalog("BC1");
    CHECK(d.nonreduced());
    std::set<CoordVec> roots(d.positive_roots().begin(),
                             d.positive_roots().end());
    CHECK(roots == std::set<CoordVec>{{1}, {2}});
    CHECK(d.nd_positive().size() == 1);
    CHECK(d.positive_roots()[d.nd_positive()[0]] == CoordVec{1});
    // Coweight lattice of the non-divisible system B1 = {±e_1}: Z itself.
    REQUIRE(d.coweight_lattice().size() == 1);
    CHECK(d.coweight_lattice()[0][0] == Rational(1));
}

TEST_CASE("dual datum of A1 variants") {
    // sc A1 (SL2): X = Z*(1/2)alpha^vee, dual root alpha^vee has coords 2.
    auto sc = RootDatum::catalog("A1-sc");
    const auto& dsc = sc.dual_datum();
    REQUIRE(dsc.rank() == 1);
    CHECK(dsc.x_basis[0][0] == Rational(1, 2));
    CHECK(dsc.positive_roots[0] == CoordVec{2});
    CHECK(dsc.positive_coroots[0] == CoordVec{1});
    CHECK(dsc.rho_vee == LatticePoint{1});

    // adjoint A1 (PGL2): X = X_* = Z omega^vee, dual root has coords 2.
    auto ad = RootDatum::catalog("A1-adjoint");
    const auto& dad = ad.dual_datum();
    CHECK(dad.x_basis[0][0] == Rational(1));
    CHECK(dad.positive_roots[0] == CoordVec{2});
    CHECK(dad.positive_coroots[0] == CoordVec{1});
    CHECK(dad.inc.matrix[0][0] == 1);

    // BC1: X = Z, dual group is Sp(2) simply connected.
    auto bc = RootDatum::catalog("BC1");
    const auto& dbc = bc.dual_datum();
    CHECK(dbc.x_basis[0][0] == Rational(1));
    CHECK(dbc.positive_roots[0] == CoordVec{2});
    CHECK(dbc.positive_coroots[0] == CoordVec{1});
}

TEST_CASE("dual datum axioms across the catalog") {
    for (const auto& name : RootDatum::catalog_names()) {
        auto d = RootDatum::catalog(name);
        const auto& dd = d.dual_datum();
        REQUIRE(dd.positive_roots.size() == dd.positive_coroots.size());
        for (std::size_t i = 0; i < dd.positive_roots.size(); ++i)
            CHECK(dd.pairing(i, dd.positive_roots[i]) == 2);
        CHECK(dd.dominant(dd.rho_vee));
        CHECK(dd.strictly_dominant(dd.rho_vee));
        // rho^vee pairs to exactly 1 with every simple coroot.
        for (auto s : dd.simple_indices)
            CHECK(dd.pairing(s, dd.rho_vee) == 1);
        // The invariant form is W-invariant and positive on roots.
        for (std::size_t i = 0; i < dd.positive_roots.size(); ++i) {
            RatVec r = dd.to_rational(dd.positive_roots[i]);
            CHECK(dd.form(r, r) > 0);
        }
        // Simple reflections preserve the lattice and have order 2.
        for (const auto& s : dd.simple_reflections) {
            for (std::size_t k = 0; k < dd.rank(); ++k) {
                LatticePoint e(dd.rank(), 0);
                e[k] = 1;
                LatticePoint once(dd.rank(), 0), twice(dd.rank(), 0);
                for (std::size_t i = 0; i < dd.rank(); ++i)
                    for (std::size_t j = 0; j < dd.rank(); ++j)
                        once[i] += s[i][j] * e[j];
                for (std::size_t i = 0; i < dd.rank(); ++i)
                    for (std::size_t j = 0; j < dd.rank(); ++j)
                        twice[i] += s[i][j] * once[j];
                CHECK(twice == e);
            }
        }
    }
}

TEST_CASE("straighten") {
    auto a2 = RootDatum::catalog("A2-sc");
    const auto& dd = a2.dual_datum();
    // Strictly dominant points are fixed with sign +1.
    auto res = dd.straighten(dd.rho_vee);
    REQUIRE(res);
    CHECK(res->first == 1);
    CHECK(res->second == dd.rho_vee);
    // A reflection of rho^vee straightens back with sign -1.
    LatticePoint refl(dd.rank(), 0);
    const auto& s = dd.simple_reflections[0];
    for (std::size_t i = 0; i < dd.rank(); ++i)
        for (std::size_t j = 0; j < dd.rank(); ++j)
            refl[i] += s[i][j] * dd.rho_vee[j];
    auto res2 = dd.straighten(refl);
    REQUIRE(res2);
    CHECK(res2->first == -1);
    CHECK(res2->second == dd.rho_vee);
    // Points on a wall return nullopt.
    CHECK_FALSE(dd.straighten(LatticePoint(dd.rank(), 0)));
}

TEST_CASE("alt and symmetry") {
    auto a2 = RootDatum::catalog("A2-sc");
    auto rho = a2.rho_vee_in_lattice();
    REQUIRE(rho);
    auto alt_rho = a2.alt(a2.monomial(*rho));
    CHECK(alt_rho.size() == 6);
    CHECK(a2.is_alternating(alt_rho));
    CHECK_FALSE(a2.is_symmetric(alt_rho));
    GroupAlgebraElement sym(a2.tag());
    for (std::size_t w = 0; w < a2.weyl().size(); ++w)
        sym += a2.weyl_act(w, a2.monomial(*rho));
    CHECK(a2.is_symmetric(sym));
    // alt of a wall point vanishes: <alpha_1, (1,2)> = 2*1 - 1*2 = 0.
    CHECK(a2.alt(a2.monomial({1, 2})).is_zero());
}

TEST_CASE("mult overrides propagate over W-orbits") {
    CartanSpec spec;
    spec.type = "B2";
    spec.lattice.kind = LatticeChoice::Adjoint;
    spec.mult[0] = 3;  // first simple root (long in our B2 convention)
    auto d = RootDatum::build(spec);
    // B2 has two root lengths; the orbit of a simple root has two positive
    // members, so exactly two positive roots carry multiplicity 3.
    std::size_t threes = 0;
    for (std::size_t i = 0; i < d.positive_roots().size(); ++i)
        if (d.mult(i) == 3) ++threes;
    CHECK(threes == 2);

    CartanSpec bad = spec;
    bad.mult[0] = 3;
    // Find the other positive root in the same orbit and set a conflicting
    // value: indices 0 and the long positive non-simple root share an orbit.
    for (std::size_t i = 1; i < d.positive_roots().size(); ++i)
        if (d.mult(i) == 3) bad.mult[i] = 5;
    CHECK_THROWS_AS(RootDatum::build(bad), std::invalid_argument);
}

TEST_CASE("central torus factor") {
    // adjoint A1 with an extra Z factor of the center.
    CartanSpec spec;
    spec.type = "A1";
    spec.lattice.kind = LatticeChoice::Adjoint;
    spec.torus_rank = 1;
    auto d = RootDatum::build(spec);
    CHECK(d.rank() == 2);
    CHECK(d.positive_roots()[0] == CoordVec{1, 0});
    CHECK(d.positive_coroots()[0] == CoordVec{2, 0});
    CHECK(d.weyl().size() == 2);
    // central directions are W-fixed
    CHECK(d.weyl().act(1, {0, 5}) == LatticePoint{0, 5});
}

TEST_CASE("isogeny decomposition") {
    // sc A1 -> adjoint A1 x trivial torus.
    auto sc = RootDatum::catalog("A1-sc");
    auto dec = sc.isogeny_decomposition();
    CHECK(dec.torus_rank == 0);
    REQUIRE(dec.pi_star.matrix.size() == 1);
    CHECK(dec.pi_star.matrix[0][0] == 2);
    CHECK(dec.pi_star.injective);
    CHECK(dec.adjoint->positive_coroots()[0] == CoordVec{2});
    CHECK(dec.adjoint->positive_roots()[0] == CoordVec{1});

    // A1 with an extra central torus: X_*(T) has rank 1.
    CartanSpec spec;
    spec.type = "A1";
    spec.lattice.kind = LatticeChoice::SimplyConnected;
    spec.torus_rank = 1;
    auto d = RootDatum::build(spec);
    auto dec2 = d.isogeny_decomposition();
    CHECK(dec2.torus_rank == 1);
    CHECK(dec2.pi_star.injective);
    // The A-component of a coroot is the coroot of the adjoint datum and
    // the T-component vanishes.
    auto img = dec2.pi_star.apply({1, 0});
    CHECK(img[0] == 2);
    CHECK(img[1] == 0);
}

TEST_CASE("catalog errors") {
    CHECK_THROWS_AS(RootDatum::catalog("E8-sc"), std::invalid_argument);
    CHECK_THROWS_AS(RootDatum::catalog("A1"), std::invalid_argument);
    CHECK_THROWS_AS(RootDatum::catalog("BC1-sc"), std::invalid_argument);
    CartanSpec bc_sc;
    bc_sc.type = "BC1";
    bc_sc.lattice.kind = LatticeChoice::SimplyConnected;
    CHECK_THROWS_AS(RootDatum::build(bc_sc), std::invalid_argument);
}
