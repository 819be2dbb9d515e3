#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "csw/characters.hpp"
#include "csw/root_datum.hpp"

namespace csw {

/// Monomial in the commuting indeterminates v^{±1}, q(s), q_j(s).
/// Symbol key: (simple index s, j) with j = -1 standing for q(s).
struct ParamMonomial {
    long v_exp = 0;
    std::map<std::pair<std::size_t, int>, long> syms;

    friend bool operator<(const ParamMonomial& a, const ParamMonomial& b) {
        if (a.v_exp != b.v_exp) return a.v_exp < b.v_exp;
        return a.syms < b.syms;
    }
    friend bool operator==(const ParamMonomial& a, const ParamMonomial& b) {
        return a.v_exp == b.v_exp && a.syms == b.syms;
    }
};

/// Element of the parameter ring: finite sum of monomials with exact
/// rational coefficients.
class ParamPoly {
public:
    /// Symbol index of the single parameter q used by the split
    /// specialization (all q(s) coincide for a split group).
    static constexpr std::size_t kSplitSymbol = static_cast<std::size_t>(-1);

    ParamPoly() = default;
    explicit ParamPoly(const Rational& c) {
        if (c != 0) terms_[ParamMonomial{}] = c;
    }
    static ParamPoly one() { return ParamPoly(Rational(1)); }
    static ParamPoly v_power(long k, const Rational& c = Rational(1));
    static ParamPoly q(std::size_t s);
    static ParamPoly qj(std::size_t s, int j);

    const std::map<ParamMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ParamMonomial& m, const Rational& c);

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) {
        a += b;
        return a;
    }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) {
        a -= b;
        return a;
    }
    friend ParamPoly operator-(const ParamPoly& a);
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) {
        return !(a == b);
    }

    /// Substitute q_j(s) := q(s) - 1 for every j (split specialization).
    ParamPoly split_specialized() const;

    /// Substitute q(s) := v^2 for every s; fails if any q_j survives.
    LaurentScalar to_laurent() const;

    std::string to_string() const;

private:
    std::map<ParamMonomial, Rational> terms_;
};

/// Normal form in the Bernstein basis {T_w * theta_lambda}.
struct BernsteinElement {
    // key: (Weyl element index, lambda)
    std::map<std::pair<std::size_t, LatticePoint>, ParamPoly> terms;

    bool is_zero() const { return terms.empty(); }
    void add(std::size_t w, const LatticePoint& lam, const ParamPoly& c);
    BernsteinElement& operator+=(const BernsteinElement& o);
    BernsteinElement& operator-=(const BernsteinElement& o);
    friend BernsteinElement operator+(BernsteinElement a,
                                      const BernsteinElement& b) {
        a += b;
        return a;
    }
    friend BernsteinElement operator-(BernsteinElement a,
                                      const BernsteinElement& b) {
        a -= b;
        return a;
    }
    friend bool operator==(const BernsteinElement& a,
                           const BernsteinElement& b) {
        return a.terms == b.terms;
    }
};

class HeckeParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The Iwahori-Hecke algebra of a datum in Bernstein presentation, with
/// fully symbolic unequal parameters.
class HeckeAlgebra {
public:
    explicit HeckeAlgebra(const RootDatum& datum);

    const RootDatum& datum() const { return datum_; }

    BernsteinElement zero() const { return {}; }
    BernsteinElement one() const;
    BernsteinElement theta(const LatticePoint& lam,
                           ParamPoly c = ParamPoly::one()) const;
    BernsteinElement t_simple(std::size_t s) const;
    BernsteinElement t_word(const std::vector<std::size_t>& word) const;
    /// 1_K = sum over W of T_w.
    BernsteinElement one_K() const;

    /// theta_lam * theta_mu = theta_{lam+mu}.
    BernsteinElement theta_mul(const LatticePoint& lam,
                               const LatticePoint& mu) const;

    /// T_{s_alpha} * theta_lam expanded by the three-case Bernstein
    /// relation.
    BernsteinElement ts_theta(std::size_t s, const LatticePoint& lam) const;

    BernsteinElement mul(const BernsteinElement& a,
                         const BernsteinElement& b) const;

    BernsteinElement split_specialize(const BernsteinElement& a) const;

    std::string to_string(const BernsteinElement& a) const;

    /// Term language, e.g. "T[s1]*th[1,-2] + (q0(s1))*th[0,0]".
    BernsteinElement parse(const std::string& input) const;

private:
    // theta_lam * T_{word} as a normal form (word must be reduced).
    BernsteinElement theta_past_word(const LatticePoint& lam,
                                     const std::vector<std::size_t>& word)
        const;
    // left multiplication T_s * T_w
    void left_mul_basis(std::size_t s, std::size_t w, BernsteinElement& out,
                        const LatticePoint& lam, const ParamPoly& c) const;
    // pure-theta correction terms of ts_theta (everything but the leading
    // theta_{s lam} T_s term)
    BernsteinElement ts_correction(std::size_t s,
                                   const LatticePoint& lam) const;

    const RootDatum& datum_;
    std::vector<std::vector<std::size_t>> left_mul_;  // [s][w] -> index of sw
    std::vector<std::size_t> simple_w_;  // Weyl index of each simple refl
};

/// Model of H_IK: an element of C[X_*(A)] in the basis {theta_lambda^K}.
using SavinModule = GroupAlgebraElement;

/// theta_lambda^K -> e^lambda (identification of bases).
GroupAlgebraElement savin_transform(const SavinModule& h);

/// Coordinates in the basis {phi_mu : mu strictly dominant}; j sends
/// phi_mu to alt(e^mu).
struct WhittakerModuleModel {
    std::map<LatticePoint, LaurentScalar> coords;

    GroupAlgebraElement j(const RootDatum& datum) const;

    friend bool operator==(const WhittakerModuleModel& a,
                           const WhittakerModuleModel& b) {
        return a.coords == b.coords;
    }
};

WhittakerModuleModel project_to_whittaker(const RootDatum& datum,
                                          const SavinModule& h);

/// phi_mu * A_lam = sum_eta c^eta_{mu,lam} phi_eta, through tensor_coeffs
/// of the dual datum restricted to the base lattice.
WhittakerModuleModel phi_action(const RootDatum& datum, const LatticePoint& mu,
                                const LatticePoint& lam);

}  // namespace csw
