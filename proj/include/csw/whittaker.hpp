#pragma once

#include <map>
#include <string>
#include <vector>

#include "csw/characters.hpp"
#include "csw/flatpoly.hpp"
#include "csw/root_datum.hpp"

namespace csw {

class MissingTableEntry : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyConstraintSet : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class RhoNotInLattice : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IrrationalSqrt : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotInImageOfRprime : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Table of Whittaker values W(m_mu), keyed by points of X_*(A).
/// Values live in a group algebra whose lattice is reached from 𝒳 by
/// support_map (identity for plain tables; for values in
/// R'' = C[X_*(A) + X_*(T)] it is the extension of pi_*).
struct WhittakerTable {
    enum class Conductor { P, O };
    Conductor conductor = Conductor::P;
    std::string value_tag;
    std::vector<CoordVec> support_map;  // 𝒳-coords -> value-lattice coords
    std::map<LatticePoint, GroupAlgebraElement> values;
    GroupAlgebraElement r;  // normalization factor
};

/// v^{-sum_{alpha>0} d_alpha <alpha, lam>}; multiplicative in lam.
LaurentScalar delta_half(const RootDatum& datum, const LatticePoint& lam);

/// r * delta_half(mu) * alt(e^mu) over 𝒳 (equal to
/// r * delta_half(mu) * chV_{mu-rho_vee} * alt(e^{rho_vee})).
GroupAlgebraElement cs_value(const RootDatum& datum, const LatticePoint& mu,
                             const GroupAlgebraElement& r);
GroupAlgebraElement cs_value(const RootDatum& datum, const LatticePoint& mu);

WhittakerTable cs_table(const RootDatum& datum,
                        const std::vector<LatticePoint>& box);

/// LHS - RHS of
///   delta_half(mu)^{-1} chV_lam * W(m_mu)
///     = sum_eta c^eta_{mu,lam} delta_half(eta)^{-1} W(m_eta).
GroupAlgebraElement recursion_residual(const RootDatum& datum,
                                       const LatticePoint& lam,
                                       const LatticePoint& mu,
                                       const WhittakerTable& table);

struct UniquenessReport {
    std::size_t solution_dim = 0;  // expected 1
    std::size_t rank = 0;
    std::size_t used = 0;     // constraints retained
    std::size_t skipped = 0;  // constraints whose eta-support escapes the box
};

/// Exact dimension (over the fraction field in v and the lattice
/// generators) of the solution space of the retained recursion constraints
/// on the unknowns {W(m_mu) : mu in box}.
UniquenessReport uniqueness_rank(const RootDatum& datum,
                                 const std::vector<LatticePoint>& box,
                                 const std::vector<LatticePoint>& lam_set);

/// delta_half(lam) * chV_lam * norm over 𝒳 (conductor-O value).
GroupAlgebraElement conductor_O_value(const RootDatum& datum,
                                      const LatticePoint& lam,
                                      const GroupAlgebraElement& norm);
GroupAlgebraElement conductor_O_value(const RootDatum& datum,
                                      const LatticePoint& lam);

WhittakerTable conductor_O_table(const RootDatum& datum,
                                 const std::vector<LatticePoint>& keys);

/// W_p(m_mu) = W_O(m_{mu - rho_vee}): keys shift by +rho_vee, values kept.
WhittakerTable conductor_swap(const RootDatum& datum,
                              const WhittakerTable& table_o);

/// Lattice tag of R'' = C[X_*(A) + X_*(T)] attached to a decomposition.
std::string r2_tag(const IsogenyDecomposition& dec);

/// Extension of pi_* to the dual lattice 𝒳' of the source datum, as a
/// matrix from 𝒳'-coords into R''-coords.
std::vector<CoordVec> intrinsic_support_map(const IsogenyDecomposition& dec);

/// e^{-lam_T} * delta_half(mu) * chV_{mu - rho_vee} * norm in R'', where
/// pi_*(mu') = (mu, lam_T); checked to lie in the image of pi_*.
GroupAlgebraElement general_cs_value(const IsogenyDecomposition& dec,
                                     const LatticePoint& mu_prime,
                                     const GroupAlgebraElement& norm);
GroupAlgebraElement general_cs_value(const IsogenyDecomposition& dec,
                                     const LatticePoint& mu_prime);

WhittakerTable general_cs_table(const IsogenyDecomposition& dec,
                                const std::vector<LatticePoint>& box);

struct SatakeSpecialization {
    RatVec point;      // nonzero value per lattice basis vector
    Rational q_value;  // must be a perfect square of a rational
};

Rational specialize(const GroupAlgebraElement& elem,
                    const SatakeSpecialization& s);

/// Exact rank over the fraction field; Bareiss fraction-free elimination.
std::size_t flat_matrix_rank(std::vector<std::vector<FlatPoly>> m);

/// All lattice points lam of a full-rank semisimple datum with
/// lo <= <alpha_i, lam> <= hi for every simple root, sorted.
std::vector<LatticePoint> dominant_box(const RootDatum& datum, Coord lo,
                                       Coord hi);

/// Strictly dominant points with sum of simple-root pairings <= hi. Shaped
/// so that recursion constraints for small lambda keep their eta-support
/// inside the box (unlike a coordinate cube, which orphans its corners).
std::vector<LatticePoint> strict_box_by_height(const RootDatum& datum,
                                               Coord hi);

}  // namespace csw
