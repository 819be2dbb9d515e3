#include "csw/characters.hpp"

#include <algorithm>
#include <functional>

namespace csw {

namespace {

LatticePoint apply_mat(const std::vector<CoordVec>& m, const LatticePoint& p) {
    LatticePoint out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) out[i] += m[i][j] * p[j];
    return out;
}

// Weyl dimension formula evaluated at a rational lam+rho (ambient coords).
Rational dim_from_shifted(const DualGroupDatum& dual,
                          const RatVec& lam_rho_amb) {
    RatVec rho_amb = dual.to_rational(dual.rho_vee);
    Rational num(1), den(1);
    for (std::size_t i = 0; i < dual.positive_roots.size(); ++i) {
        RatVec alpha = dual.to_rational(dual.positive_roots[i]);
        num *= dual.form(lam_rho_amb, alpha);
        den *= dual.form(rho_amb, alpha);
    }
    return num / den;
}

Integer coeff_as_integer(const LaurentScalar& c) {
    if (c.is_zero()) return Integer(0);
    if (c.terms().size() != 1 || c.terms().begin()->first != 0 ||
        !is_integral(c.terms().begin()->second))
        throw std::logic_error("character coefficient is not an integer");
    return c.terms().begin()->second.get_num();
}

}  // namespace

GroupAlgebraElement alt_x(const DualGroupDatum& dual, const LatticePoint& xi) {
    GroupAlgebraElement acc(dual.tag);
    for (const auto& el : dual.weyl->elements()) {
        LatticePoint img = apply_mat(el.matrix, xi);
        acc.add_term(img, el.sign > 0 ? LaurentScalar::one()
                                      : LaurentScalar(Rational(-1)));
    }
    return acc;
}

LatticePoint dominant_rep(const DualGroupDatum& dual, const LatticePoint& x) {
    LatticePoint cur = x;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t k = 0; k < dual.simple_indices.size(); ++k) {
            if (dual.pairing(dual.simple_indices[k], cur) < 0) {
                cur = apply_mat(dual.simple_reflections[k], cur);
                moved = true;
            }
        }
    }
    return cur;
}

Character weyl_character(const DualGroupDatum& dual, const LatticePoint& lam) {
    if (!dual.dominant(lam))
        throw NonDominant("weyl_character: weight is not dominant");
    GroupAlgebraElement num = alt_x(dual, lattice_add(lam, dual.rho_vee));
    GroupAlgebraElement den = alt_x(dual, dual.rho_vee);
    Character ch{exact_divide(num, den), lam};
    return ch;
}

Integer dimension(const DualGroupDatum& dual, const LatticePoint& lam) {
    if (!dual.dominant(lam))
        throw NonDominant("dimension: weight is not dominant");
    RatVec shifted = dual.to_rational(lattice_add(lam, dual.rho_vee));
    Rational d = dim_from_shifted(dual, shifted);
    if (!is_integral(d) || d <= 0)
        throw std::logic_error("Weyl dimension is not a positive integer");
    return d.get_num();
}

std::map<LatticePoint, Integer> freudenthal_multiplicities(
    const DualGroupDatum& dual, const LatticePoint& lam) {
    if (!dual.dominant(lam))
        throw NonDominant("freudenthal: weight is not dominant");
    std::size_t n = dual.simple_indices.size();

    // Lowest weight w0(lam): the antidominant orbit element.
    LatticePoint lowest = lam;
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t k = 0; k < n; ++k)
            if (dual.pairing(dual.simple_indices[k], lowest) > 0) {
                lowest = apply_mat(dual.simple_reflections[k], lowest);
                moved = true;
            }
    }

    // lam - lowest = sum c_i alpha_i with c_i nonnegative integers; every
    // weight lam - sum k_i alpha_i has 0 <= k_i <= c_i.
    std::size_t m = dual.rank();
    RatMat simple_cols(m, RatVec(n));
    for (std::size_t j = 0; j < n; ++j) {
        const auto& a = dual.positive_roots[dual.simple_indices[j]];
        for (std::size_t i = 0; i < m; ++i)
            simple_cols[i][j] = Rational(static_cast<long>(a[i]));
    }
    auto in_simple_basis = [&](const LatticePoint& p) -> CoordVec {
        RatVec rhs(m);
        for (std::size_t i = 0; i < m; ++i)
            rhs[i] = Rational(static_cast<long>(p[i]));
        auto sol = rat_solve(simple_cols, rhs);
        if (!sol) throw std::logic_error("point outside the root span");
        CoordVec out(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_integral((*sol)[j]))
                throw std::logic_error("non-integral root coordinates");
            out[j] = (*sol)[j].get_num().get_si();
        }
        return out;
    };
    CoordVec bound = in_simple_basis(
        lattice_add(lam, lattice_neg(lowest)));
    for (auto b : bound)
        if (b < 0) throw std::logic_error("negative depth bound");

    // Positive roots expressed in the simple-root basis (nonnegative).
    std::vector<CoordVec> root_k;
    for (const auto& a : dual.positive_roots) root_k.push_back(in_simple_basis(a));

    // Enumerate the k-box, grouped by level sum(k).
    std::map<CoordVec, LatticePoint> box;  // k -> weight
    {
        CoordVec k(n, 0);
        while (true) {
            LatticePoint mu = lam;
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < m; ++i)
                    mu[i] -= k[j] * dual.positive_roots[dual.simple_indices[j]][i];
            box.emplace(k, mu);
            std::size_t pos = 0;
            while (pos < n && k[pos] == bound[pos]) k[pos++] = 0;
            if (pos == n) break;
            ++k[pos];
        }
    }
    std::vector<std::pair<CoordVec, LatticePoint>> by_level(box.begin(),
                                                            box.end());
    std::stable_sort(by_level.begin(), by_level.end(),
                     [](const auto& a, const auto& b) {
                         Coord sa = 0, sb = 0;
                         for (auto x : a.first) sa += x;
                         for (auto x : b.first) sb += x;
                         return sa < sb;
                     });

    RatVec lam_rho = dual.to_rational(lattice_add(lam, dual.rho_vee));
    Rational lam_norm = dual.form(lam_rho, lam_rho);

    std::map<LatticePoint, Integer> dominant_mult;
    dominant_mult[lam] = 1;
    for (const auto& [k, mu] : by_level) {
        if (mu == lam || !dual.dominant(mu)) continue;
        Rational numer(0);
        for (std::size_t a = 0; a < dual.positive_roots.size(); ++a) {
            for (Coord j = 1;; ++j) {
                CoordVec kj(n);
                bool ok = true;
                for (std::size_t t = 0; t < n; ++t) {
                    kj[t] = k[t] - j * root_k[a][t];
                    if (kj[t] < 0) ok = false;
                }
                if (!ok) break;
                auto it = box.find(kj);
                if (it == box.end()) break;
                const LatticePoint& nu = it->second;
                auto dm = dominant_mult.find(dominant_rep(dual, nu));
                if (dm == dominant_mult.end()) continue;
                RatVec nu_amb = dual.to_rational(nu);
                RatVec alpha_amb = dual.to_rational(dual.positive_roots[a]);
                numer += Rational(dm->second) * dual.form(nu_amb, alpha_amb);
            }
        }
        if (numer == 0) continue;
        RatVec mu_rho = dual.to_rational(lattice_add(mu, dual.rho_vee));
        Rational denom = lam_norm - dual.form(mu_rho, mu_rho);
        if (denom <= 0)
            throw std::logic_error("Freudenthal denominator not positive");
        Rational mult = Rational(2) * numer / denom;
        if (!is_integral(mult) || mult < 0)
            throw std::logic_error("Freudenthal multiplicity not integral");
        if (mult > 0) dominant_mult[mu] = mult.get_num();
    }

    // Spread over W-orbits.
    std::map<LatticePoint, Integer> out;
    for (const auto& [mu, c] : dominant_mult)
        for (const auto& el : dual.weyl->elements())
            out[apply_mat(el.matrix, mu)] = c;
    return out;
}

TensorCoefficients tensor_coeffs(const DualGroupDatum& dual,
                                 const LatticePoint& lambda_base,
                                 const LatticePoint& mu) {
    LatticePoint lam = dual.inc.apply(lambda_base);
    if (!dual.dominant(lam))
        throw NonDominant("tensor_coeffs: lambda is not dominant");
    if (!dual.strictly_dominant(mu))
        throw NonStrictlyDominant("tensor_coeffs: mu is not strictly dominant");
    Character ch = weyl_character(dual, lam);
    TensorCoefficients tc;
    tc.mu = mu;
    tc.lambda = lam;
    std::map<LatticePoint, Integer> acc;
    for (const auto& [nu, c] : ch.element.terms()) {
        auto st = dual.straighten(lattice_add(mu, nu));
        if (!st) continue;
        acc[st->second] += Integer(st->first) * coeff_as_integer(c);
    }
    for (const auto& [eta, c] : acc) {
        if (c < 0)
            throw std::logic_error("negative tensor coefficient");
        if (c != 0) tc.coeffs.emplace(eta, c);
    }
    return tc;
}

std::vector<LatticePoint> dominant_with_dim_limit(const DualGroupDatum& dual,
                                                  long limit) {
    std::size_t n = dual.simple_indices.size();
    std::size_t m = dual.rank();
    if (n != m)
        throw std::invalid_argument(
            "dominant enumeration needs a semisimple datum");
    // Pairing matrix: u = P * lam with rows the simple coroots.
    RatMat p(n, RatVec(m));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t j = 0; j < m; ++j)
            p[s][j] = Rational(static_cast<long>(
                dual.positive_coroots[dual.simple_indices[s]][j]));
    auto pinv = rat_inverse(p);
    if (!pinv) throw std::logic_error("degenerate simple pairing matrix");

    std::vector<LatticePoint> out;
    CoordVec u(n, 0);
    auto dim_of = [&]() {
        RatVec shifted(n);
        for (std::size_t i = 0; i < n; ++i)
            shifted[i] = Rational(static_cast<long>(u[i] + 1));
        RatVec lam_rho_x = rat_apply(*pinv, shifted);
        // to ambient coordinates through the 𝒳-basis
        RatVec amb(dual.x_basis[0].size(), Rational(0));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < amb.size(); ++k)
                amb[k] += lam_rho_x[j] * dual.x_basis[j][k];
        return dim_from_shifted(dual, amb);
    };
    std::function<void(std::size_t)> dfs = [&](std::size_t pos) {
        if (pos == n) {
            RatVec uq(n);
            for (std::size_t i = 0; i < n; ++i)
                uq[i] = Rational(static_cast<long>(u[i]));
            RatVec lam = rat_apply(*pinv, uq);
            LatticePoint pt(n);
            for (std::size_t i = 0; i < n; ++i) {
                if (!is_integral(lam[i])) return;
                pt[i] = lam[i].get_num().get_si();
            }
            out.push_back(pt);
            return;
        }
        for (u[pos] = 0;; ++u[pos]) {
            if (dim_of() > limit) break;
            dfs(pos + 1);
        }
        u[pos] = 0;
    };
    dfs(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace csw
