#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csw/whittaker.hpp"

using namespace csw;

TEST_CASE("delta_half") {
    auto d = RootDatum::catalog("A1-adjoint");
    CHECK(delta_half(d, {0}) == LaurentScalar::one());
    CHECK(delta_half(d, {1}) == LaurentScalar::v_power(-2));
    CHECK(delta_half(d, {3}) * delta_half(d, {-3}) == LaurentScalar::one());
    // BC1: positive roots e and 2e contribute 1 + 2 per unit of lambda
    auto bc = RootDatum::catalog("BC1");
    CHECK(delta_half(bc, {1}) == LaurentScalar::v_power(-6));
    // multiplicities weight the exponent
    CartanSpec spec;
    spec.type = "A1";
    spec.mult[0] = 4;
    auto dm = RootDatum::build(spec);
    CHECK(delta_half(dm, {1}) == LaurentScalar::v_power(-8));
}

TEST_CASE("cs_value at rho and the product identity") {
    auto d = RootDatum::catalog("A1-adjoint");
    const auto& dual = d.dual_datum();
    auto at_rho = cs_value(d, {1});
    GroupAlgebraElement expect(dual.tag);
    expect.add_term({1}, LaurentScalar::v_power(-2));
    expect.add_term({-1}, -LaurentScalar::v_power(-2));
    CHECK(at_rho == expect);
    CHECK_THROWS_AS(cs_value(d, {0}), NonStrictlyDominant);

    for (const char* name : {"A1-adjoint", "A2-adjoint", "B2-adjoint"}) {
        auto dd = RootDatum::catalog(name);
        const auto& du = dd.dual_datum();
        auto rho = dd.rho_vee_in_lattice();
        REQUIRE(rho);
        for (const auto& lam : dominant_box(dd, 0, 2)) {
            LatticePoint mu = lattice_add(lam, *rho);
            // cs(mu) = delta(mu) chV_{mu-rho} alt(e^rho)
            auto lhs = cs_value(dd, mu);
            auto rhs = (weyl_character(du, du.inc.apply(lam)).element *
                        alt_x(du, du.inc.apply(*rho)))
                           .scaled(delta_half(dd, mu));
            CHECK(lhs == rhs);
            // ratio form: cs(lam+rho)/cs(rho) = delta(lam) chV_lam
            auto ratio = exact_divide(lhs, cs_value(dd, *rho));
            CHECK(ratio == weyl_character(du, du.inc.apply(lam))
                               .element.scaled(delta_half(dd, lam)));
        }
    }
}

TEST_CASE("recursion residual vanishes on cs tables") {
    for (const char* name : {"A1-adjoint", "A2-adjoint", "BC1"}) {
        auto d = RootDatum::catalog(name);
        auto box = dominant_box(d, 1, 6);
        auto table = cs_table(d, box);
        std::size_t checked = 0;
        for (const auto& lam : dominant_box(d, 0, 2)) {
            for (const auto& mu : dominant_box(d, 1, 3)) {
                try {
                    auto res = recursion_residual(d, lam, mu, table);
                    CHECK(res.is_zero());
                    ++checked;
                } catch (const MissingTableEntry&) {
                    // eta escaped the box; fine at desk scale
                }
            }
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("recursion residual detects perturbations") {
    auto d = RootDatum::catalog("A1-adjoint");
    auto box = dominant_box(d, 1, 6);
    auto table = cs_table(d, box);
    table.values[{2}] = table.values[{2}].scaled(LaurentScalar::v_power(1));
    auto res = recursion_residual(d, {1}, {1}, table);
    CHECK(!res.is_zero());
    // lambda = 0 stays zero even on a perturbed table
    CHECK(recursion_residual(d, {0}, {2}, table).is_zero());
    // missing entry is reported
    table.values.erase({2});
    CHECK_THROWS_AS(recursion_residual(d, {1}, {1}, table),
                    MissingTableEntry);
}

TEST_CASE("uniqueness rank") {
    SUBCASE("A1 adjoint box 1..6") {
        auto d = RootDatum::catalog("A1-adjoint");
        auto rep = uniqueness_rank(d, dominant_box(d, 1, 6), {{1}, {2}});
        CHECK(rep.solution_dim == 1);
        CHECK(rep.rank == 5);
        CHECK(rep.skipped > 0);
    }
    SUBCASE("tiny box has no usable constraints") {
        auto d = RootDatum::catalog("A1-adjoint");
        CHECK_THROWS_AS(uniqueness_rank(d, {{1}}, {{2}}),
                        EmptyConstraintSet);
    }
    SUBCASE("A2 adjoint desk box") {
        auto d = RootDatum::catalog("A2-adjoint");
        auto box = strict_box_by_height(d, 5);
        REQUIRE(box.size() == 10);
        auto rep = uniqueness_rank(d, box, {{1, 0}, {0, 1}});
        CHECK(rep.solution_dim == 1);
        CHECK(rep.rank == 9);
    }
}

TEST_CASE("conductor O values and the swap") {
    auto d = RootDatum::catalog("A1-adjoint");
    const auto& dual = d.dual_datum();
    SUBCASE("lambda = 1 example") {
        auto v = conductor_O_value(d, {1});
        GroupAlgebraElement expect(dual.tag);
        expect.add_term({1}, LaurentScalar::v_power(-2));
        expect.add_term({-1}, LaurentScalar::v_power(-2));
        CHECK(v == expect);
        CHECK(conductor_O_value(d, {0}) ==
              GroupAlgebraElement::monomial(dual.tag, {0}));
        CHECK_THROWS_AS(conductor_O_value(d, {-1}), NonDominant);
    }
    SUBCASE("sc datum has no conductor-O theory") {
        auto sc = RootDatum::catalog("A1-sc");
        CHECK_THROWS_AS(conductor_O_value(sc, {1}), RhoNotInLattice);
    }
    SUBCASE("swap shifts keys and satisfies the p-recursion") {
        auto table_o = conductor_O_table(d, dominant_box(d, 0, 5));
        auto table_p = conductor_swap(d, table_o);
        CHECK(table_p.conductor == WhittakerTable::Conductor::P);
        CHECK(table_p.values.count({1}) == 1);  // key 0 -> key rho_vee
        CHECK(table_p.values.at({1}) == table_o.values.at({0}));
        std::size_t checked = 0;
        for (Coord lam = 1; lam <= 2; ++lam)
            for (Coord mu = 1; mu <= 3; ++mu) {
                try {
                    CHECK(recursion_residual(d, {lam}, {mu}, table_p)
                              .is_zero());
                    ++checked;
                } catch (const MissingTableEntry&) {
                }
            }
        CHECK(checked >= 4);
        // swapped values differ from cs values only by the constant
        // normalization delta(rho) alt(e^rho)
        auto rho_factor =
            alt_x(dual, dual.inc.apply({1})).scaled(delta_half(d, {1}));
        for (Coord mu = 1; mu <= 5; ++mu)
            CHECK(cs_value(d, {mu}) ==
                  table_p.values.at({mu}) * rho_factor);
        CHECK_THROWS_AS(conductor_swap(d, table_p), std::invalid_argument);
    }
}

TEST_CASE("general cs value through an isogeny") {
    SUBCASE("adjoint source reduces to cs_value") {
        auto d = RootDatum::catalog("A2-adjoint");
        auto dec = d.isogeny_decomposition();
        CHECK(dec.torus_rank == 0);
        auto rho = d.rho_vee_in_lattice();
        REQUIRE(rho);
        for (const auto& mu : dominant_box(d, 1, 2)) {
            auto g = general_cs_value(dec, mu);
            // the default normalization is cs at rho_vee, so the reduction
            // picks up the constant delta_half(rho_vee)
            auto c = cs_value(d, mu).scaled(delta_half(d, *rho));
            REQUIRE(g.size() == c.size());
            auto it = g.terms().begin();
            for (const auto& [p, coef] : c.terms()) {
                CHECK(it->first == p);
                CHECK(it->second == coef);
                ++it;
            }
        }
    }
    SUBCASE("A1-sc value in R'' and membership") {
        auto d = RootDatum::catalog("A1-sc");
        auto dec = d.isogeny_decomposition();
        auto g = general_cs_value(dec, {1});
        GroupAlgebraElement expect(r2_tag(dec));
        expect.add_term({2}, LaurentScalar::v_power(-6));
        expect.add_term({-2}, -LaurentScalar::v_power(-6));
        CHECK(g == expect);
        CHECK_THROWS_AS(general_cs_value(dec, {0}), NonStrictlyDominant);
    }
    SUBCASE("intrinsic recursion for A1-sc") {
        auto d = RootDatum::catalog("A1-sc");
        auto dec = d.isogeny_decomposition();
        std::vector<LatticePoint> box;
        for (Coord m = 1; m <= 6; ++m) box.push_back({m});
        auto table = general_cs_table(dec, box);
        std::size_t checked = 0;
        for (Coord lam = 1; lam <= 2; ++lam)
            for (Coord mu = 1; mu <= 3; ++mu) {
                try {
                    CHECK(recursion_residual(d, {lam}, {mu}, table)
                              .is_zero());
                    ++checked;
                } catch (const MissingTableEntry&) {
                }
            }
        CHECK(checked >= 4);
    }
}

TEST_CASE("specialization") {
    auto d = RootDatum::catalog("A1-adjoint");
    const auto& dual = d.dual_datum();
    SatakeSpecialization s{{Rational(2)}, Rational(9)};
    CHECK(specialize(GroupAlgebraElement::monomial(dual.tag, {0}), s) ==
          Rational(1));
    auto ch = weyl_character(dual, {2}).element;
    CHECK(specialize(ch, s) == Rational(21, 4));
    SatakeSpecialization ones{{Rational(1)}, Rational(4)};
    CHECK(specialize(ch, ones) == Rational(3));
    SatakeSpecialization bad{{Rational(2)}, Rational(2)};
    CHECK_THROWS_AS(specialize(ch, bad), IrrationalSqrt);

    // Schur-sum closed form against the cs ratio for split A1
    for (Coord lam = 0; lam <= 4; ++lam) {
        auto ratio = exact_divide(cs_value(d, {lam + 1}), cs_value(d, {1}));
        Rational z(3, 2), t(5, 3);
        SatakeSpecialization sp{{z}, t * t};
        Rational expect(0);
        for (Coord k = 0; k <= lam; ++k)
            expect += rational_pow(z, static_cast<long>(lam - 2 * k));
        expect *= rational_pow(t, static_cast<long>(-2 * lam));
        CHECK(specialize(ratio, sp) == expect);
    }
}

TEST_CASE("flat matrix rank") {
    auto row = [](std::vector<long> v) {
        std::vector<FlatPoly> r;
        for (long x : v) {
            FlatPoly p;
            if (x) flat_add_term(p, {0, 0}, Rational(x));
            r.push_back(p);
        }
        return r;
    };
    CHECK(flat_matrix_rank({row({1, 0}), row({0, 1})}) == 2);
    CHECK(flat_matrix_rank({row({1, 2}), row({2, 4})}) == 1);
    CHECK(flat_matrix_rank({row({0, 0}), row({0, 0})}) == 0);
    // genuinely polynomial entries: [[x, 1], [x^2, x]] has rank 1
    FlatPoly x, x2, one;
    flat_add_term(x, {1, 0}, Rational(1));
    flat_add_term(x2, {2, 0}, Rational(1));
    flat_add_term(one, {0, 0}, Rational(1));
    CHECK(flat_matrix_rank({{x, one}, {x2, x}}) == 1);
}

TEST_CASE("dominant_box") {
    auto d = RootDatum::catalog("A1-adjoint");
    auto b = dominant_box(d, 1, 6);
    REQUIRE(b.size() == 6);
    CHECK(b.front() == LatticePoint{1});
    CHECK(b.back() == LatticePoint{6});
    auto a2 = RootDatum::catalog("A2-adjoint");
    for (const auto& p : dominant_box(a2, 1, 3))
        CHECK(a2.strictly_dominant(p));
    // sc base = coroot lattice: only 0 and rho_vee have pairings in [0,1]^2
    auto sc = RootDatum::catalog("A2-sc");
    CHECK(dominant_box(sc, 0, 1).size() == 2);
}
