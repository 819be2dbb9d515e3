#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "csw/characters.hpp"

using namespace csw;

namespace {

Integer spec_at_one(const GroupAlgebraElement& e) {
    Rational acc(0);
    for (const auto& [p, c] : e.terms()) acc += c.evaluate(Rational(1));
    REQUIRE(is_integral(acc));
    return acc.get_num();
}

bool character_invariants(const DualGroupDatum& dual, const Character& ch) {
    // W-symmetric, highest weight coefficient 1, support below hw.
    for (const auto& s : dual.simple_reflections)
        if (ch.element.mapped_support(s, dual.tag) != ch.element) return false;
    if (ch.element.coeff(ch.highest_weight) != LaurentScalar::one())
        return false;
    return true;
}

}  // namespace

TEST_CASE("trivial character") {
    for (const char* name : {"A1-adjoint", "BC1", "G2-sc"}) {
        auto d = RootDatum::catalog(name);
        const auto& dual = d.dual_datum();
        LatticePoint zero(dual.rank(), 0);
        auto ch = weyl_character(dual, zero);
        CHECK(ch.element == GroupAlgebraElement::monomial(dual.tag, zero));
        CHECK(dimension(dual, zero) == 1);
        auto fm = freudenthal_multiplicities(dual, zero);
        REQUIRE(fm.size() == 1);
        CHECK(fm.at(zero) == 1);
    }
}

TEST_CASE("A1 adjoint side: three-dimensional representation") {
    auto d = RootDatum::catalog("A1-adjoint");
    const auto& dual = d.dual_datum();
    auto ch = weyl_character(dual, {2});
    GroupAlgebraElement expect(dual.tag);
    expect.add_term({2}, LaurentScalar::one());
    expect.add_term({0}, LaurentScalar::one());
    expect.add_term({-2}, LaurentScalar::one());
    CHECK(ch.element == expect);
    CHECK(dimension(dual, {2}) == 3);
    auto fm = freudenthal_multiplicities(dual, {2});
    CHECK(fm == std::map<LatticePoint, Integer>{
                    {{2}, Integer(1)}, {{0}, Integer(1)}, {{-2}, Integer(1)}});
}

TEST_CASE("BC1 dual: standard Sp(2) representation") {
    auto d = RootDatum::catalog("BC1");
    const auto& dual = d.dual_datum();
    // fundamental weight: pairing 1 with the simple coroot
    LatticePoint fund{1};
    CHECK(dual.pairing(dual.simple_indices[0], fund) == 1);
    auto ch = weyl_character(dual, fund);
    CHECK(ch.element.size() == 2);
    CHECK(dimension(dual, fund) == 2);
}

TEST_CASE("A2 adjoint representation has zero weight twice") {
    auto d = RootDatum::catalog("A2-sc");
    const auto& dual = d.dual_datum();
    // highest root of the dual system = sum of the two simple roots...
    // the adjoint rep's highest weight pairs to 1 with both simple coroots.
    LatticePoint hw = dual.rho_vee;
    auto fm = freudenthal_multiplicities(dual, hw);
    LatticePoint zero(dual.rank(), 0);
    CHECK(fm.at(zero) == 2);
    CHECK(dimension(dual, hw) == 8);
    auto ch = weyl_character(dual, hw);
    CHECK(character_invariants(dual, ch));
    CHECK(spec_at_one(ch.element) == 8);
}

TEST_CASE("oracle equivalence at desk scale") {
    for (const char* name : {"A1-sc", "A2-adjoint", "B2-sc", "BC2"}) {
        auto d = RootDatum::catalog(name);
        const auto& dual = d.dual_datum();
        for (const auto& lam : dominant_with_dim_limit(dual, 60)) {
            auto ch = weyl_character(dual, lam);
            CHECK(character_invariants(dual, ch));
            auto fm = freudenthal_multiplicities(dual, lam);
            REQUIRE(fm.size() == ch.element.size());
            for (const auto& [w, mult] : fm) {
                auto c = ch.element.coeff(w);
                REQUIRE(c.terms().size() == 1);
                CHECK(c.terms().begin()->second == Rational(mult));
            }
            CHECK(spec_at_one(ch.element) == dimension(dual, lam));
        }
    }
}

TEST_CASE("tensor coefficients") {
    auto d = RootDatum::catalog("A1-adjoint");
    const auto& dual = d.dual_datum();

    SUBCASE("mu = rho_vee gives a single term") {
        auto tc = tensor_coeffs(dual, {2}, dual.rho_vee);
        REQUIRE(tc.coeffs.size() == 1);
        CHECK(tc.coeffs.begin()->first ==
              lattice_add(dual.inc.apply({2}), dual.rho_vee));
        CHECK(tc.coeffs.begin()->second == 1);
    }
    SUBCASE("lambda = 0 is the identity") {
        auto tc = tensor_coeffs(dual, {0}, {3});
        REQUIRE(tc.coeffs.size() == 1);
        CHECK(tc.coeffs.at({3}) == 1);
    }
    SUBCASE("chV_1 * chV_2 = chV_3 + chV_1") {
        auto tc = tensor_coeffs(dual, {2}, {2});
        REQUIRE(tc.coeffs.size() == 2);
        CHECK(tc.coeffs.at({4}) == 1);
        CHECK(tc.coeffs.at({2}) == 1);
    }
    SUBCASE("dominance errors") {
        CHECK_THROWS_AS(tensor_coeffs(dual, {-1}, {2}), NonDominant);
        CHECK_THROWS_AS(tensor_coeffs(dual, {2}, {0}), NonStrictlyDominant);
    }
}

TEST_CASE("tensor product identity and dimension count") {
    for (const char* name : {"A2-sc", "B2-adjoint", "BC1"}) {
        auto d = RootDatum::catalog(name);
        const auto& dual = d.dual_datum();
        auto doms = dominant_with_dim_limit(dual, 30);
        std::size_t tried = 0;
        for (const auto& lam_x : doms) {
            // need lambda in the base lattice: invert inc
            // inc is identity-shaped only when X_*(A) = 𝒳; search instead.
            for (const auto& mu0 : doms) {
                LatticePoint mu = lattice_add(mu0, dual.rho_vee);
                // lam_x must come from the base lattice through inc
                // (test base points directly below)
                auto ch_l = weyl_character(dual, lam_x);
                auto ch_m = weyl_character(dual, mu0);
                // expansion through straightening, independent of
                // tensor_coeffs' lambda-via-inc plumbing:
                std::map<LatticePoint, Integer> c;
                for (const auto& [nu, cf] : ch_l.element.terms()) {
                    auto st = dual.straighten(lattice_add(mu, nu));
                    if (!st) continue;
                    REQUIRE(cf.terms().size() == 1);
                    Integer add = cf.terms().begin()->second.get_num();
                    c[st->second] += Integer(st->first) * add;
                }
                // Sum rule: dim V_lam * dim V_mu0 = sum c * dim V_{eta-rho}
                Integer lhs = dimension(dual, lam_x) * dimension(dual, mu0);
                Integer rhs(0);
                for (const auto& [eta, cc] : c) {
                    CHECK(cc >= 0);
                    LatticePoint shifted =
                        lattice_add(eta, lattice_neg(dual.rho_vee));
                    rhs += cc * dimension(dual, shifted);
                }
                CHECK(lhs == rhs);
                if (++tried >= 12) break;
            }
            if (tried >= 12) break;
        }
    }
}

TEST_CASE("straightening consistency") {
    auto d = RootDatum::catalog("B2-adjoint");
    const auto& dual = d.dual_datum();
    for (const auto& el : dual.weyl->elements()) {
        LatticePoint xi = lattice_add(dual.rho_vee, dual.rho_vee);
        LatticePoint img(xi.size(), 0);
        for (std::size_t i = 0; i < xi.size(); ++i)
            for (std::size_t j = 0; j < xi.size(); ++j)
                img[i] += el.matrix[i][j] * xi[j];
        auto st = dual.straighten(img);
        REQUIRE(st);
        CHECK(st->first == el.sign);
        CHECK(alt_x(dual, img) ==
              (el.sign > 0 ? alt_x(dual, st->second)
                           : -alt_x(dual, st->second)));
    }
}
