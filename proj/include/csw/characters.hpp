#pragma once

#include <map>
#include <vector>

#include "csw/root_datum.hpp"

namespace csw {

class NonDominant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonStrictlyDominant : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// W-symmetric element of the group algebra of 𝒳 with highest weight
/// coefficient 1.
struct Character {
    GroupAlgebraElement element;
    LatticePoint highest_weight;
};

/// c^eta_{mu,lambda}: decomposition of chV_lambda * chV_{mu-rho_vee} in the
/// shifted basis, keyed by strictly dominant eta.
struct TensorCoefficients {
    LatticePoint mu;      // strictly dominant, 𝒳-coords
    LatticePoint lambda;  // dominant, 𝒳-coords (image of inc)
    std::map<LatticePoint, Integer> coeffs;
};

/// alt(e^xi) over 𝒳.
GroupAlgebraElement alt_x(const DualGroupDatum& dual, const LatticePoint& xi);

Character weyl_character(const DualGroupDatum& dual, const LatticePoint& lam);

/// Independent multiplicity oracle (Freudenthal recursion with the
/// W-averaged invariant form); returns the full weight diagram.
std::map<LatticePoint, Integer> freudenthal_multiplicities(
    const DualGroupDatum& dual, const LatticePoint& lam);

Integer dimension(const DualGroupDatum& dual, const LatticePoint& lam);

/// lambda given in X_*(A)-coords (mapped through dual.inc); mu strictly
/// dominant in 𝒳-coords.
TensorCoefficients tensor_coeffs(const DualGroupDatum& dual,
                                 const LatticePoint& lambda_base,
                                 const LatticePoint& mu);

/// All dominant lattice points of 𝒳 whose Weyl dimension is <= limit.
std::vector<LatticePoint> dominant_with_dim_limit(const DualGroupDatum& dual,
                                                  long limit);

/// Dominant representative of the W-orbit of x in 𝒳-coords.
LatticePoint dominant_rep(const DualGroupDatum& dual, const LatticePoint& x);

}  // namespace csw
