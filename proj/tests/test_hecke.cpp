#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "csw/hecke.hpp"

using namespace csw;

TEST_CASE("parameter ring") {
    ParamPoly q = ParamPoly::q(0);
    ParamPoly one = ParamPoly::one();
    CHECK((q - q).is_zero());
    CHECK((q * q).terms().size() == 1);
    CHECK(((q - one) * (q + one)) == (q * q - one));
    ParamPoly qg = ParamPoly::q(ParamPoly::kSplitSymbol);
    CHECK(ParamPoly::qj(0, 1).split_specialized() == (qg - one));
    CHECK(ParamPoly::q(1).split_specialized() == qg);
    CHECK((qg - one).to_string() == "q-1");
    CHECK(q.to_laurent() == LaurentScalar::v_power(2));
    CHECK((q - one).to_string() == "q(s1)-1");
    CHECK_THROWS_AS(ParamPoly::qj(0, 0).to_laurent(), std::invalid_argument);
}

TEST_CASE("theta multiplication") {
    auto d = RootDatum::catalog("A1-adjoint");
    HeckeAlgebra h(d);
    CHECK(h.theta_mul({1}, {2}) == h.theta({3}));
    CHECK(h.theta_mul({5}, {0}) == h.theta({5}));
    CHECK(h.theta_mul({4}, {-4}) == h.one());
    CHECK(h.mul(h.theta({1}), h.theta({2})) == h.theta({3}));
}

TEST_CASE("Bernstein relation cases in rank 1") {
    auto d = RootDatum::catalog("A1-adjoint");
    HeckeAlgebra h(d);
    // <alpha, 1> = 2 on the adjoint lattice: lambda = 1 is the weight with
    // pairing 2; there is no pairing-1 weight here, so check both shapes.
    SUBCASE("pairing 0 has no correction") {
        auto sc = RootDatum::catalog("A2-sc");
        HeckeAlgebra h2(sc);
        // <alpha_1, (0,0)> = 0
        auto r = h2.ts_theta(0, {0, 0});
        REQUIRE(r.terms.size() == 1);
        CHECK(r.terms.begin()->first.first != 0);  // a T_s term
    }
    SUBCASE("pairing 1: single correction term") {
        auto r = h.ts_theta(0, {1});
        CHECK(r.terms.size() == 2);
        CHECK(r == h.parse("T[s1]*th[-1] + q0(s1)*th[1]"));
    }
    SUBCASE("pairing -1 mirrors pairing 1") {
        auto r = h.ts_theta(0, {-1});
        CHECK(r == h.parse("T[s1]*th[1] - q0(s1)*th[1]"));
    }
    SUBCASE("pairing 2 picks up q0 and q1") {
        auto r = h.ts_theta(0, {2});
        CHECK(r == h.parse("T[s1]*th[-2] + q0(s1)*th[2] + q1(s1)*th[0]"));
    }
}

TEST_CASE("quadratic relation and printing") {
    auto d = RootDatum::catalog("A1-adjoint");
    HeckeAlgebra h(d);
    auto prod = h.mul(h.t_simple(0), h.t_simple(0));
    CHECK(h.to_string(prod) == "(q(s1)-1)*T[s1] + q(s1)");
    CHECK(prod == h.parse("(q(s1)-1)*T[s1] + q(s1)"));
    CHECK(h.parse("T[s1]*T[s1]") == prod);
}

TEST_CASE("CommId: T_s commutes with theta_lam + theta_slam") {
    for (const char* name : {"A1-adjoint", "A2-sc", "B2-adjoint", "BC2"}) {
        auto d = RootDatum::catalog(name);
        HeckeAlgebra h(d);
        std::mt19937 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            LatticePoint lam(d.rank());
            for (auto& x : lam)
                x = std::uniform_int_distribution<int>(-4, 4)(rng);
            for (std::size_t s = 0; s < d.semisimple_rank(); ++s) {
                auto sym = h.theta(lam) + h.theta(d.reflect(s, lam));
                auto lhs = h.mul(h.t_simple(s), sym);
                auto rhs = h.mul(sym, h.t_simple(s));
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("braid relations through the rewriting engine") {
    for (const char* name : {"A2-adjoint", "B2-sc", "G2-adjoint"}) {
        auto d = RootDatum::catalog(name);
        HeckeAlgebra h(d);
        // T for the longest word computed along two different reduced words
        // must agree; spot check via s,t alternations of the braid length.
        std::size_t mst = 0;
        {
            // order of s0 s1 in W
            auto prod = h.mul(h.t_simple(0), h.t_simple(1));
            (void)prod;
            // determine braid length from the Weyl group size of rank 2
            std::size_t order = d.weyl().size();
            mst = order / 2;  // dihedral group W = I2(m), |W| = 2m
        }
        std::vector<std::size_t> w1, w2;
        for (std::size_t i = 0; i < mst; ++i) {
            w1.push_back(i % 2 == 0 ? 0 : 1);
            w2.push_back(i % 2 == 0 ? 1 : 0);
        }
        CHECK(h.t_word(w1) == h.t_word(w2));
    }
}

TEST_CASE("associativity under split specialization") {
    auto d = RootDatum::catalog("A2-sc");
    HeckeAlgebra h(d);
    std::mt19937 rng(17);
    auto rnd_elem = [&]() {
        BernsteinElement e;
        for (int i = 0; i < 2; ++i) {
            LatticePoint lam(d.rank());
            for (auto& x : lam)
                x = std::uniform_int_distribution<int>(-2, 2)(rng);
            std::size_t w =
                std::uniform_int_distribution<std::size_t>(0, 5)(rng);
            e.add(w, lam, ParamPoly::one());
        }
        return e;
    };
    for (int trial = 0; trial < 25; ++trial) {
        auto a = rnd_elem(), b = rnd_elem(), c = rnd_elem();
        auto lhs = h.split_specialize(h.mul(h.mul(a, b), c));
        auto rhs = h.split_specialize(h.mul(a, h.mul(b, c)));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("savin and whittaker projections") {
    auto d = RootDatum::catalog("A2-adjoint");
    SUBCASE("identity on theta_0") {
        SavinModule h0 = d.monomial(LatticePoint(d.rank(), 0));
        CHECK(savin_transform(h0) == h0);
    }
    SUBCASE("kernel elements die") {
        std::mt19937 rng(5);
        for (int trial = 0; trial < 30; ++trial) {
            LatticePoint lam(d.rank());
            for (auto& x : lam)
                x = std::uniform_int_distribution<int>(-3, 3)(rng);
            std::size_t w = std::uniform_int_distribution<std::size_t>(
                0, d.weyl().size() - 1)(rng);
            const auto& el = d.weyl().elements()[w];
            SavinModule h = d.monomial(lam);
            LaurentScalar sgn(Rational(el.sign));
            h -= d.monomial(d.weyl().act(w, lam)).scaled(sgn);
            CHECK(project_to_whittaker(d, h).coords.empty());
        }
    }
    SUBCASE("strictly dominant points map to phi with coordinate 1") {
        auto rho = d.rho_vee_in_lattice();
        REQUIRE(rho);
        auto m = project_to_whittaker(d, d.monomial(*rho));
        REQUIRE(m.coords.size() == 1);
        CHECK(m.coords.at(*rho) == LaurentScalar::one());
        CHECK(m.j(d) == d.alt(d.monomial(*rho)));
    }
    SUBCASE("reflection-fixed points map to zero") {
        // lambda with <alpha_1, lambda> = 0
        LatticePoint lam{0, 1};
        REQUIRE(RootDatum::pairing(d.simple_root(0), lam) == 0);
        CHECK(project_to_whittaker(d, d.monomial(lam)).coords.empty());
    }
}

TEST_CASE("phi_action") {
    auto d = RootDatum::catalog("A1-adjoint");
    SUBCASE("lambda = 0 fixes phi") {
        auto m = phi_action(d, {2}, {0});
        REQUIRE(m.coords.size() == 1);
        CHECK(m.coords.at({2}) == LaurentScalar::one());
    }
    SUBCASE("rho shift") {
        auto rho = d.rho_vee_in_lattice();
        REQUIRE(rho);
        auto m = phi_action(d, *rho, {2});
        REQUIRE(m.coords.size() == 1);
        CHECK(m.coords.at({3}) == LaurentScalar::one());
    }
    SUBCASE("A1 adjoint mu=2 lambda=2") {
        auto m = phi_action(d, {2}, {2});
        REQUIRE(m.coords.size() == 2);
        CHECK(m.coords.at({4}) == LaurentScalar::one());
        CHECK(m.coords.at({2}) == LaurentScalar::one());
    }
    SUBCASE("module homomorphism property") {
        for (const char* name : {"A1-adjoint", "A2-adjoint"}) {
            auto dd = RootDatum::catalog(name);
            const auto& dual = dd.dual_datum();
            auto rho = dd.rho_vee_in_lattice();
            REQUIRE(rho);
            for (const auto& lam :
                 dominant_with_dim_limit(dual, 20)) {
                // use lam as a base-lattice point (inc = identity shape for
                // adjoint data where X = X_*)
                if (!dd.dominant(lam)) continue;
                auto m = phi_action(dd, *rho, lam);
                auto lhs = m.j(dd);
                auto rhs = weyl_character(dual, dual.inc.apply(lam)).element *
                           alt_x(dual, dual.inc.apply(*rho));
                // compare through the inclusion into X-coordinates
                GroupAlgebraElement lhs_x(dual.tag);
                for (const auto& [p, c] : lhs.terms())
                    lhs_x.add_term(dual.inc.apply(p), c);
                CHECK(lhs_x == rhs);
            }
        }
    }
}

TEST_CASE("parser errors") {
    auto d = RootDatum::catalog("A1-adjoint");
    HeckeAlgebra h(d);
    CHECK_THROWS_AS(h.parse("T[s9]"), HeckeParseError);
    CHECK_THROWS_AS(h.parse("th[1,2]"), HeckeParseError);
    CHECK_THROWS_AS(h.parse("T[s1"), HeckeParseError);
    CHECK_THROWS_AS(h.parse("zz"), HeckeParseError);
    CHECK(h.parse("v^2*th[1] - v^2*th[1]").is_zero());
    CHECK(h.parse("3/2*th[0]") == h.theta({0}, ParamPoly(Rational(3, 2))));
}
