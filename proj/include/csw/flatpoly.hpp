#pragma once

#include <map>
#include <optional>
#include <vector>

#include "csw/lattice_algebra.hpp"
#include "csw/rational.hpp"

namespace csw {

/// Multivariate Laurent polynomial with rational coefficients, keyed by
/// exponent vectors under lexicographic order. Internal workhorse behind
/// exact_divide and the exact rank computation; the v-exponent of a
/// GroupAlgebraElement coefficient is flattened into the last slot.
using FlatPoly = std::map<CoordVec, Rational>;

void flat_add_term(FlatPoly& p, const CoordVec& e, const Rational& c);
FlatPoly flat_mul(const FlatPoly& a, const FlatPoly& b);
FlatPoly flat_sub(FlatPoly a, const FlatPoly& b);
FlatPoly flat_neg(FlatPoly a);

/// Exact quotient under lex-leading-term elimination; nullopt when the
/// division does not terminate with zero remainder.
std::optional<FlatPoly> flat_divide(const FlatPoly& num, const FlatPoly& den,
                                    std::size_t max_steps = 1000000);

FlatPoly flatten(const GroupAlgebraElement& e);
GroupAlgebraElement unflatten(const FlatPoly& p, const std::string& tag,
                              std::size_t lattice_rank);

}  // namespace csw
