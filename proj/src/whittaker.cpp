#include "csw/whittaker.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace csw {

namespace {

std::string point_str(const LatticePoint& p) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < p.size(); ++i)
        os << (i ? "," : "") << p[i];
    os << ")";
    return os.str();
}

std::vector<CoordVec> identity_map(std::size_t n) {
    std::vector<CoordVec> m(n, CoordVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// Points of 𝒳 supporting tensor coefficients always come from X_*(A):
/// they differ from inc(lam + mu) by an integer sum of coroots.
LatticePoint base_coords(const DualGroupDatum& dual, const LatticePoint& x) {
    RatVec amb = dual.to_rational(x);
    LatticePoint out(amb.size());
    for (std::size_t i = 0; i < amb.size(); ++i) {
        if (!is_integral(amb[i]))
            throw std::logic_error("dual-lattice point outside X_*(A)");
        out[i] = static_cast<Coord>(amb[i].get_num().get_si());
    }
    return out;
}

const GroupAlgebraElement& table_value(const WhittakerTable& table,
                                       const LatticePoint& key) {
    auto it = table.values.find(key);
    if (it == table.values.end())
        throw MissingTableEntry("missing table entry at " + point_str(key));
    return it->second;
}

}  // namespace

LaurentScalar delta_half(const RootDatum& datum, const LatticePoint& lam) {
    // q-exponent -sum d_alpha <alpha, lam>, written in v = q^{1/2}. Root
    // pairings are isogeny-invariant, so tables built through an isogeny
    // decomposition stay consistent with the source datum's delta.
    long e = 0;
    const auto& roots = datum.positive_roots();
    for (std::size_t i = 0; i < roots.size(); ++i)
        e += static_cast<long>(datum.mult(i) *
                               RootDatum::pairing(roots[i], lam));
    return LaurentScalar::v_power(-2 * e);
}

GroupAlgebraElement cs_value(const RootDatum& datum, const LatticePoint& mu,
                             const GroupAlgebraElement& r) {
    if (!datum.strictly_dominant(mu))
        throw NonStrictlyDominant("cs_value: mu not strictly dominant");
    const auto& dual = datum.dual_datum();
    return (alt_x(dual, dual.inc.apply(mu)) * r).scaled(delta_half(datum, mu));
}

GroupAlgebraElement cs_value(const RootDatum& datum, const LatticePoint& mu) {
    const auto& dual = datum.dual_datum();
    return cs_value(datum, mu,
                    GroupAlgebraElement::monomial(
                        dual.tag, LatticePoint(dual.rank(), 0)));
}

WhittakerTable cs_table(const RootDatum& datum,
                        const std::vector<LatticePoint>& box) {
    const auto& dual = datum.dual_datum();
    WhittakerTable t;
    t.conductor = WhittakerTable::Conductor::P;
    t.value_tag = dual.tag;
    t.support_map = identity_map(dual.rank());
    t.r = GroupAlgebraElement::monomial(dual.tag,
                                        LatticePoint(dual.rank(), 0));
    for (const auto& mu : box) t.values[mu] = cs_value(datum, mu);
    return t;
}

GroupAlgebraElement recursion_residual(const RootDatum& datum,
                                       const LatticePoint& lam,
                                       const LatticePoint& mu,
                                       const WhittakerTable& table) {
    const auto& dual = datum.dual_datum();
    if (!datum.dominant(lam))
        throw NonDominant("recursion_residual: lam not dominant");
    if (!datum.strictly_dominant(mu))
        throw NonStrictlyDominant("recursion_residual: mu not strictly "
                                  "dominant");
    const GroupAlgebraElement& w_mu = table_value(table, mu);
    GroupAlgebraElement chv =
        weyl_character(dual, dual.inc.apply(lam))
            .element.mapped_support(table.support_map, table.value_tag);
    GroupAlgebraElement lhs =
        (chv * w_mu).scaled(delta_half(datum, mu).inverse_of_monomial());
    GroupAlgebraElement rhs(table.value_tag);
    auto tc = tensor_coeffs(dual, lam, dual.inc.apply(mu));
    for (const auto& [eta, c] : tc.coeffs) {
        LatticePoint eta_base = base_coords(dual, eta);
        rhs += table_value(table, eta_base)
                   .scaled(delta_half(datum, eta_base).inverse_of_monomial() *
                           LaurentScalar(Rational(c)));
    }
    return lhs - rhs;
}

UniquenessReport uniqueness_rank(const RootDatum& datum,
                                 const std::vector<LatticePoint>& box,
                                 const std::vector<LatticePoint>& lam_set) {
    const auto& dual = datum.dual_datum();
    std::map<LatticePoint, std::size_t> index;
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (!datum.strictly_dominant(box[i]))
            throw NonStrictlyDominant("uniqueness_rank: box point not "
                                      "strictly dominant");
        index[box[i]] = i;
    }
    UniquenessReport report;
    std::vector<std::vector<FlatPoly>> rows;
    for (const auto& lam : lam_set) {
        GroupAlgebraElement chv =
            weyl_character(dual, dual.inc.apply(lam)).element;
        for (const auto& mu : box) {
            auto tc = tensor_coeffs(dual, lam, dual.inc.apply(mu));
            std::vector<std::pair<std::size_t, LaurentScalar>> rhs_terms;
            bool inside = true;
            for (const auto& [eta, c] : tc.coeffs) {
                LatticePoint eta_base = base_coords(dual, eta);
                auto it = index.find(eta_base);
                if (it == index.end()) {
                    inside = false;
                    break;
                }
                rhs_terms.emplace_back(
                    it->second,
                    delta_half(datum, eta_base).inverse_of_monomial() *
                        LaurentScalar(Rational(c)));
            }
            if (!inside) {
                ++report.skipped;
                continue;
            }
            std::vector<FlatPoly> row(box.size());
            row[index.at(mu)] = flatten(
                chv.scaled(delta_half(datum, mu).inverse_of_monomial()));
            for (const auto& [idx, sc] : rhs_terms) {
                row[idx] = flat_sub(
                    row[idx],
                    flatten(GroupAlgebraElement::monomial(
                        dual.tag, LatticePoint(dual.rank(), 0), sc)));
            }
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty())
        throw EmptyConstraintSet("uniqueness_rank: no usable constraints");
    report.used = rows.size();
    report.rank = flat_matrix_rank(std::move(rows));
    report.solution_dim = box.size() - report.rank;
    return report;
}

GroupAlgebraElement conductor_O_value(const RootDatum& datum,
                                      const LatticePoint& lam,
                                      const GroupAlgebraElement& norm) {
    if (!datum.rho_vee_in_lattice())
        throw RhoNotInLattice("conductor_O_value: rho_vee outside X_*(A)");
    if (!datum.dominant(lam))
        throw NonDominant("conductor_O_value: lam not dominant");
    const auto& dual = datum.dual_datum();
    return (weyl_character(dual, dual.inc.apply(lam)).element * norm)
        .scaled(delta_half(datum, lam));
}

GroupAlgebraElement conductor_O_value(const RootDatum& datum,
                                      const LatticePoint& lam) {
    const auto& dual = datum.dual_datum();
    return conductor_O_value(datum, lam,
                             GroupAlgebraElement::monomial(
                                 dual.tag, LatticePoint(dual.rank(), 0)));
}

WhittakerTable conductor_O_table(const RootDatum& datum,
                                 const std::vector<LatticePoint>& keys) {
    const auto& dual = datum.dual_datum();
    WhittakerTable t;
    t.conductor = WhittakerTable::Conductor::O;
    t.value_tag = dual.tag;
    t.support_map = identity_map(dual.rank());
    t.r = GroupAlgebraElement::monomial(dual.tag,
                                        LatticePoint(dual.rank(), 0));
    for (const auto& lam : keys) t.values[lam] = conductor_O_value(datum, lam);
    return t;
}

WhittakerTable conductor_swap(const RootDatum& datum,
                              const WhittakerTable& table_o) {
    if (table_o.conductor != WhittakerTable::Conductor::O)
        throw std::invalid_argument("conductor_swap: expected conductor O");
    auto rho = datum.rho_vee_in_lattice();
    if (!rho)
        throw RhoNotInLattice("conductor_swap: rho_vee outside X_*(A)");
    WhittakerTable t;
    t.conductor = WhittakerTable::Conductor::P;
    t.value_tag = table_o.value_tag;
    t.support_map = table_o.support_map;
    t.r = table_o.r;
    for (const auto& [lam, val] : table_o.values)
        t.values[lattice_add(lam, *rho)] = val;
    return t;
}

std::string r2_tag(const IsogenyDecomposition& dec) {
    return dec.source->tag() + ":R''";
}

std::vector<CoordVec> intrinsic_support_map(const IsogenyDecomposition& dec) {
    const auto& dual = dec.source->dual_datum();
    std::size_t target = dec.pi_star.target_rank;
    std::vector<CoordVec> m(target, CoordVec(dual.rank(), 0));
    for (std::size_t j = 0; j < dual.rank(); ++j) {
        // pi_* extends Q-linearly from X_*(A') to all of 𝒳' with integer
        // values: the A-part preserves root pairings, the T-part kills the
        // coroot span.
        const RatVec& b = dual.x_basis[j];
        for (std::size_t i = 0; i < target; ++i) {
            Rational acc(0);
            for (std::size_t k = 0; k < b.size(); ++k)
                acc += Rational(static_cast<long>(dec.pi_star.matrix[i][k])) * b[k];
            if (!is_integral(acc))
                throw std::logic_error("pi_* not integral on dual lattice");
            m[i][j] = static_cast<Coord>(acc.get_num().get_si());
        }
    }
    return m;
}

GroupAlgebraElement general_cs_value(const IsogenyDecomposition& dec,
                                     const LatticePoint& mu_prime,
                                     const GroupAlgebraElement& norm) {
    const RootDatum& src = *dec.source;
    if (!src.strictly_dominant(mu_prime))
        throw NonStrictlyDominant("general_cs_value: mu' not strictly "
                                  "dominant");
    const RootDatum& ad = *dec.adjoint;
    const auto& add = ad.dual_datum();
    auto rho = ad.rho_vee_in_lattice();
    if (!rho)
        throw RhoNotInLattice("general_cs_value: adjoint rho_vee outside "
                              "its lattice");

    LatticePoint image = dec.pi_star.apply(mu_prime);
    LatticePoint mu(image.begin(), image.begin() + ad.rank());
    LatticePoint lam_t(image.begin() + ad.rank(), image.end());

    GroupAlgebraElement value_x =
        (weyl_character(add, add.inc.apply(lattice_add(mu, lattice_neg(*rho))))
             .element *
         norm)
            .scaled(delta_half(ad, mu));

    // embed 𝒳 of the adjoint datum (= X_*(A)) into the A-block of R''
    std::string tag = r2_tag(dec);
    std::size_t target = dec.pi_star.target_rank;
    std::vector<CoordVec> embed(target, CoordVec(add.rank(), 0));
    for (std::size_t j = 0; j < add.rank(); ++j)
        for (std::size_t i = 0; i < ad.rank(); ++i) {
            const Rational& c = add.x_basis[j][i];
            if (!is_integral(c))
                throw std::logic_error("adjoint dual lattice not integral");
            embed[i][j] = static_cast<Coord>(c.get_num().get_si());
        }
    GroupAlgebraElement out = value_x.mapped_support(embed, tag);

    LatticePoint xi_shift(target, 0);
    for (std::size_t i = 0; i < lam_t.size(); ++i)
        xi_shift[ad.rank() + i] = -lam_t[i];
    out = out * GroupAlgebraElement::monomial(tag, xi_shift);

    // membership in pi_*(R'): every support point solves over Z
    IntMat p(target, IntVec(dec.pi_star.source_rank));
    for (std::size_t i = 0; i < target; ++i)
        for (std::size_t j = 0; j < dec.pi_star.source_rank; ++j)
            p[i][j] = Integer(static_cast<long>(dec.pi_star.matrix[i][j]));
    for (const auto& [pt, c] : out.terms()) {
        IntVec x(pt.size());
        for (std::size_t i = 0; i < pt.size(); ++i)
            x[i] = Integer(static_cast<long>(pt[i]));
        if (!integer_solve(p, x))
            throw NotInImageOfRprime("support point " + point_str(pt) +
                                     " outside pi_*(X_*(A'))");
    }
    return out;
}

GroupAlgebraElement general_cs_value(const IsogenyDecomposition& dec,
                                     const LatticePoint& mu_prime) {
    const RootDatum& ad = *dec.adjoint;
    auto rho = ad.rho_vee_in_lattice();
    if (!rho)
        throw RhoNotInLattice("general_cs_value: adjoint rho_vee outside "
                              "its lattice");
    return general_cs_value(dec, mu_prime, cs_value(ad, *rho));
}

WhittakerTable general_cs_table(const IsogenyDecomposition& dec,
                                const std::vector<LatticePoint>& box) {
    WhittakerTable t;
    t.conductor = WhittakerTable::Conductor::P;
    t.value_tag = r2_tag(dec);
    t.support_map = intrinsic_support_map(dec);
    t.r = GroupAlgebraElement::monomial(
        t.value_tag, LatticePoint(dec.pi_star.target_rank, 0));
    for (const auto& mu : box) t.values[mu] = general_cs_value(dec, mu);
    return t;
}

Rational specialize(const GroupAlgebraElement& elem,
                    const SatakeSpecialization& s) {
    auto sq = exact_sqrt(s.q_value);
    if (!sq)
        throw IrrationalSqrt("q_value is not a perfect rational square");
    Rational acc(0);
    for (const auto& [p, c] : elem.terms()) {
        if (p.size() != s.point.size())
            throw std::invalid_argument("specialize: point rank mismatch");
        Rational t = c.evaluate(*sq);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] != 0 && s.point[i] == 0)
                throw std::invalid_argument("specialize: zero point value");
            t *= rational_pow(s.point[i], static_cast<long>(p[i]));
        }
        acc += t;
    }
    return acc;
}

std::size_t flat_matrix_rank(std::vector<std::vector<FlatPoly>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    FlatPoly prev;  // empty = no previous pivot (divide by 1)
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].empty()) ++piv;
        if (piv == rows) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                FlatPoly t = flat_sub(flat_mul(m[rank][col], m[i][j]),
                                      flat_mul(m[i][col], m[rank][j]));
                if (!prev.empty() && !t.empty()) {
                    auto q = flat_divide(t, prev);
                    if (!q)
                        throw std::logic_error(
                            "Bareiss division failed unexpectedly");
                    t = std::move(*q);
                }
                m[i][j] = std::move(t);
            }
            m[i][col].clear();
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

std::vector<LatticePoint> dominant_box(const RootDatum& datum, Coord lo,
                                       Coord hi) {
    std::size_t n = datum.semisimple_rank();
    if (n != datum.rank())
        throw std::invalid_argument("dominant_box: needs a semisimple datum "
                                    "of full rank");
    RatMat p(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            p[i][j] = Rational(static_cast<long>(datum.simple_root(i)[j]));
    std::vector<LatticePoint> out;
    CoordVec u(n, lo);
    while (true) {
        RatVec rhs(n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = Rational(static_cast<long>(u[i]));
        auto sol = rat_solve(p, rhs);
        if (sol) {
            LatticePoint lam(n);
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (!is_integral((*sol)[i])) {
                    ok = false;
                    break;
                }
                lam[i] = static_cast<Coord>((*sol)[i].get_num().get_si());
            }
            if (ok) out.push_back(lam);
        }
        std::size_t k = 0;
        while (k < n && u[k] == hi) u[k++] = lo;
        if (k == n) break;
        ++u[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LatticePoint> strict_box_by_height(const RootDatum& datum,
                                               Coord hi) {
    std::vector<LatticePoint> out;
    for (const auto& lam : dominant_box(datum, 1, hi)) {
        Coord h = 0;
        for (std::size_t i = 0; i < datum.semisimple_rank(); ++i)
            h += RootDatum::pairing(datum.simple_root(i), lam);
        if (h <= hi) out.push_back(lam);
    }
    return out;
}

}  // namespace csw
