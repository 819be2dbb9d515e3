#pragma once

#include <optional>
#include <vector>

#include "csw/rational.hpp"

namespace csw {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;
using Coord = long long;
using CoordVec = std::vector<Coord>;

RatMat rat_identity(std::size_t n);
RatMat rat_mul(const RatMat& a, const RatMat& b);
RatVec rat_apply(const RatMat& a, const RatVec& x);
RatMat rat_transpose(const RatMat& a);
std::optional<RatMat> rat_inverse(const RatMat& a);
std::size_t rat_rank(RatMat a);

/// Solve a * x = b; nullopt when inconsistent. For underdetermined systems
/// returns one solution (free variables set to zero).
std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b);

struct SmithResult {
    IntMat u;  // unimodular, rows x rows
    IntMat d;  // diagonal (rows x cols), d[i][i] | d[i+1][i+1]
    IntMat v;  // unimodular, cols x cols;  u * a * v = d
    std::size_t rank = 0;
};

SmithResult smith_normal_form(IntMat a);

IntMat int_mul(const IntMat& a, const IntMat& b);
IntMat int_identity(std::size_t n);

/// Basis (as rows) of the lattice generated by the given rational row
/// vectors, computed by scaling to an integer matrix and reducing to row
/// Hermite form. Rows of the result are linearly independent.
RatMat lattice_row_basis(const RatMat& generators);

/// Coordinates of x in the given row basis, if x lies in the spanned
/// Q-vector space; second flag reports whether the coordinates are integral.
std::optional<RatVec> coords_in_basis(const RatMat& basis_rows, const RatVec& x);

std::optional<CoordVec> integral_coords_in_basis(const RatMat& basis_rows,
                                                 const RatVec& x);

/// Solve m * y = x over the integers (m given by rows-of-columns? m is a
/// matrix with `m.size()` rows; x has the same length). nullopt when no
/// integer solution exists.
std::optional<IntVec> integer_solve(const IntMat& m, const IntVec& x);

RatVec to_rat_vec(const CoordVec& v);

}  // namespace csw
