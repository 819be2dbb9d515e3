#include "csw/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace csw {

RatMat rat_identity(std::size_t n) {
    RatMat m(n, RatVec(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

RatMat rat_mul(const RatMat& a, const RatMat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    RatMat r(n, RatVec(m, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

RatVec rat_apply(const RatMat& a, const RatVec& x) {
    RatVec r(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

RatMat rat_transpose(const RatMat& a) {
    if (a.empty()) return {};
    RatMat r(a[0].size(), RatVec(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

namespace {

// Gaussian elimination; returns pivot columns. Mutates m (and rhs if given).
std::vector<std::size_t> row_reduce(RatMat& m, RatMat* rhs) {
    std::vector<std::size_t> pivots;
    std::size_t rows = m.size();
    if (rows == 0) return pivots;
    std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        if (rhs) std::swap((*rhs)[p], (*rhs)[r]);
        Rational inv = Rational(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        if (rhs)
            for (auto& x : (*rhs)[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
            if (rhs)
                for (std::size_t j = 0; j < (*rhs)[i].size(); ++j)
                    (*rhs)[i][j] -= f * (*rhs)[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rat_rank(RatMat a) { return row_reduce(a, nullptr).size(); }

std::optional<RatMat> rat_inverse(const RatMat& a) {
    std::size_t n = a.size();
    RatMat m = a, rhs = rat_identity(n);
    auto pivots = row_reduce(m, &rhs);
    if (pivots.size() != n) return std::nullopt;
    return rhs;
}

std::optional<RatVec> rat_solve(const RatMat& a, const RatVec& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    RatMat m = a;
    RatMat rhs(rows, RatVec(1));
    for (std::size_t i = 0; i < rows; ++i) rhs[i][0] = b[i];
    auto pivots = row_reduce(m, &rhs);
    // Consistency: zero rows of m must have zero rhs.
    for (std::size_t i = pivots.size(); i < rows; ++i)
        if (rhs[i][0] != 0) return std::nullopt;
    RatVec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i][0];
    return x;
}

IntMat int_identity(std::size_t n) {
    IntMat m(n, IntVec(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat int_mul(const IntMat& a, const IntMat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    IntMat r(n, IntVec(m, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

SmithResult smith_normal_form(IntMat a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    SmithResult res;
    res.u = int_identity(rows);
    res.v = int_identity(cols);

    auto row_op = [&](std::size_t i, std::size_t j, const Integer& f) {
        // row_i -= f * row_j
        for (std::size_t c = 0; c < cols; ++c) a[i][c] -= f * a[j][c];
        for (std::size_t c = 0; c < rows; ++c)
            res.u[i][c] -= f * res.u[j][c];
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Integer& f) {
        // col_i -= f * col_j
        for (std::size_t r = 0; r < rows; ++r) a[r][i] -= f * a[r][j];
        for (std::size_t r = 0; r < cols; ++r)
            res.v[r][i] -= f * res.v[r][j];
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(res.u[i], res.u[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(res.v[r][i], res.v[r][j]);
    };
    auto negate_row = [&](std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : res.u[i]) x = -x;
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Find a nonzero pivot.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows && !found; ++i)
            for (std::size_t j = t; j < cols && !found; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                Integer q = a[i][t] / a[t][t];
                row_op(i, t, q);
                if (a[i][t] != 0) {
                    swap_rows(t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                Integer q = a[t][j] / a[t][t];
                col_op(j, t, q);
                if (a[t][j] != 0) {
                    swap_cols(t, j);
                    clean = false;
                }
            }
        }
        if (a[t][t] < 0) negate_row(t);
        ++t;
    }
    // Enforce the divisibility chain.
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < t; ++i) {
            if (a[i + 1][i + 1] % a[i][i] != 0) {
                // Classic fixup: add col i+1 to col i, then re-clean the 2x2
                // block with row/col ops.
                col_op(i, i + 1, Integer(-1));
                Integer q = a[i + 1][i] / a[i][i];
                row_op(i + 1, i, q);
                while (a[i + 1][i] != 0) {
                    swap_rows(i, i + 1);
                    q = a[i + 1][i] / a[i][i];
                    row_op(i + 1, i, q);
                }
                q = a[i][i + 1] / a[i][i];
                col_op(i + 1, i, q);
                while (a[i][i + 1] != 0) {
                    swap_cols(i, i + 1);
                    q = a[i][i + 1] / a[i][i];
                    col_op(i + 1, i, q);
                }
                if (a[i][i] < 0) negate_row(i);
                if (a[i + 1][i + 1] < 0) negate_row(i + 1);
                changed = true;
            }
        }
    }
    res.d = std::move(a);
    res.rank = t;
    return res;
}

RatMat lattice_row_basis(const RatMat& generators) {
    if (generators.empty()) return {};
    std::size_t cols = generators[0].size();
    // Common denominator.
    Integer den(1);
    for (const auto& row : generators)
        for (const auto& x : row) {
            Integer d = x.get_den();
            den = lcm(den, d);
        }
    IntMat a;
    for (const auto& row : generators) {
        IntVec r(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Rational scaled = row[j] * Rational(den);
            r[j] = scaled.get_num();
        }
        a.push_back(std::move(r));
    }
    // Row Hermite form via integer row reduction.
    std::size_t rows = a.size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // gcd elimination in column c below row r
        while (true) {
            std::size_t p = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (a[i][c] != 0 &&
                    (p == rows || abs(a[i][c]) < abs(a[p][c])))
                    p = i;
            if (p == rows) break;
            std::swap(a[p], a[r]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                Integer q = a[i][c] / a[r][c];
                for (std::size_t j = 0; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (a[r][c] != 0) {
            if (a[r][c] < 0)
                for (auto& x : a[r]) x = -x;
            ++r;
        }
    }
    a.resize(r);
    // Reduce entries above pivots for a canonical form.
    for (std::size_t i = r; i-- > 0;) {
        std::size_t c = 0;
        while (c < cols && a[i][c] == 0) ++c;
        if (c == cols) continue;
        for (std::size_t k = 0; k < i; ++k) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a[k][c].get_mpz_t(), a[i][c].get_mpz_t());
            if (q != 0)
                for (std::size_t j = 0; j < cols; ++j) a[k][j] -= q * a[i][j];
        }
    }
    RatMat out;
    for (const auto& row : a) {
        RatVec rr(cols);
        for (std::size_t j = 0; j < cols; ++j)
            rr[j] = make_rational(row[j], den);
        out.push_back(std::move(rr));
    }
    return out;
}

std::optional<RatVec> coords_in_basis(const RatMat& basis_rows,
                                      const RatVec& x) {
    // Solve basis^T * c = x.
    return rat_solve(rat_transpose(basis_rows), x);
}

std::optional<CoordVec> integral_coords_in_basis(const RatMat& basis_rows,
                                                 const RatVec& x) {
    auto c = coords_in_basis(basis_rows, x);
    if (!c) return std::nullopt;
    CoordVec out;
    out.reserve(c->size());
    for (const auto& v : *c) {
        if (!is_integral(v)) return std::nullopt;
        if (!v.get_num().fits_slong_p())
            throw std::overflow_error("lattice coordinate overflow");
        out.push_back(v.get_num().get_si());
    }
    return out;
}

std::optional<IntVec> integer_solve(const IntMat& m, const IntVec& x) {
    if (m.empty()) {
        for (const auto& v : x)
            if (v != 0) return std::nullopt;
        return IntVec{};
    }
    auto snf = smith_normal_form(m);
    std::size_t rows = m.size(), cols = m[0].size();
    // m*y = x  =>  u*m*v * (v^-1 y) = u*x  =>  d*z = u*x.
    IntVec ux(rows, Integer(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) ux[i] += snf.u[i][j] * x[j];
    IntVec z(cols, Integer(0));
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
        if (snf.d[i][i] == 0) {
            if (ux[i] != 0) return std::nullopt;
        } else {
            if (ux[i] % snf.d[i][i] != 0) return std::nullopt;
            z[i] = ux[i] / snf.d[i][i];
        }
    }
    for (std::size_t i = cols; i < rows; ++i)
        if (ux[i] != 0) return std::nullopt;
    IntVec y(cols, Integer(0));
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) y[i] += snf.v[i][j] * z[j];
    return y;
}

RatVec to_rat_vec(const CoordVec& v) {
    RatVec r;
    r.reserve(v.size());
    for (auto x : v) r.emplace_back(static_cast<long>(x));
    return r;
}

}  // namespace csw
