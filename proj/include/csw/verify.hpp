#pragma once

#include <string>
#include <vector>

#include "csw/root_datum.hpp"

namespace csw {

/// One verification sweep: a named check against one datum, with the case
/// count and a (hopefully empty) list of failure descriptions.
struct VerifyReport {
    std::string check;
    std::string datum;
    std::size_t cases = 0;
    std::vector<std::string> failures;
    long elapsed_ms = 0;

    bool ok() const { return failures.empty(); }
};

/// weyl_character against the Freudenthal oracle and the dimension formula,
/// for every dominant weight of dimension <= dim_limit.
VerifyReport verify_characters(const RootDatum& d, long dim_limit);

/// Dual-datum invariants: transposed Cartan pairings, rho_vee, simply
/// connected dual lattice for semisimple data, C_n shape for BC_n.
VerifyReport verify_dual(const RootDatum& d);

/// T_s commutes with theta_lam + theta_{s lam}, fully symbolic, for all
/// simple s and all |coords| <= bound.
VerifyReport verify_commid(const RootDatum& d, Coord bound);

/// Associativity of random triples under the split specialization.
VerifyReport verify_split_assoc(const RootDatum& d, std::size_t trials,
                                unsigned seed);

/// Kernel/image exactness of the whittaker projection on the box
/// |coords| <= bound, plus the pointwise kernel and onto statements.
VerifyReport verify_savin(const RootDatum& d, Coord bound);

/// j(phi_mu * A_lam) = chV_lam * alt(e^mu) and phi_action = tensor_coeffs
/// on pairing boxes <= bound.
VerifyReport verify_module_iso(const RootDatum& d, Coord bound);

/// recursion_residual = 0 on a cs table over the height-<=height box, and
/// nonzero on a perturbed table.
VerifyReport verify_recursion(const RootDatum& d, Coord height,
                              Coord lambda_max);

/// cs_value(lam+rho)/cs_value(rho) = delta_half(lam) chV_lam (adjoint-type
/// data only).
VerifyReport verify_cs_ratio(const RootDatum& d, Coord bound);

/// conductor_O_table -> conductor_swap -> conductor-p recursion.
VerifyReport verify_conductor(const RootDatum& d, Coord bound);

/// uniqueness_rank == 1 on the height box with generator lambdas.
VerifyReport verify_uniqueness(const RootDatum& d, Coord height);

/// general_cs_value membership plus the intrinsic recursion on the source
/// datum (rank-1 data, mu' = 1..mu_max).
VerifyReport verify_general(const RootDatum& d, Coord mu_max);

/// Split-A1 sanity: cs ratios at seeded rational points against the
/// independent Schur-sum closed form.
VerifyReport verify_schur(std::size_t points, unsigned seed);

/// Every sweep, over the standard datum sets.
std::vector<VerifyReport> verify_all(unsigned seed);

}  // namespace csw
