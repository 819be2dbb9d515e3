#include "csw/lattice_algebra.hpp"

#include <sstream>

#include "csw/flatpoly.hpp"

namespace csw {

void GroupAlgebraElement::add_term(const LatticePoint& p,
                                   const LaurentScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(
    const GroupAlgebraElement& o) {
    check_compatible(o);
    for (const auto& [p, c] : o.terms_) add_term(p, c);
    return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(
    const GroupAlgebraElement& o) {
    check_compatible(o);
    for (const auto& [p, c] : o.terms_) add_term(p, -c);
    return *this;
}

GroupAlgebraElement operator-(const GroupAlgebraElement& a) {
    GroupAlgebraElement r(a.lattice_);
    for (const auto& [p, c] : a.terms_) r.terms_[p] = -c;
    return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                              const GroupAlgebraElement& b) {
    a.check_compatible(b);
    GroupAlgebraElement r(a.lattice_);
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_)
            r.add_term(lattice_add(pa, pb), ca * cb);
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const LaurentScalar& c) const {
    GroupAlgebraElement r(lattice_);
    if (c.is_zero()) return r;
    for (const auto& [p, t] : terms_) {
        LaurentScalar prod = t * c;
        if (!prod.is_zero()) r.terms_[p] = std::move(prod);
    }
    return r;
}

GroupAlgebraElement GroupAlgebraElement::mapped_support(
    const std::vector<CoordVec>& m, std::string target_tag) const {
    GroupAlgebraElement r(std::move(target_tag));
    for (const auto& [p, c] : terms_) {
        LatticePoint q(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                q[i] += m[i][j] * p[j];
        r.add_term(q, c);
    }
    return r;
}

std::string GroupAlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*e^[";
        for (std::size_t i = 0; i < p.size(); ++i)
            os << (i ? "," : "") << p[i];
        os << "]";
    }
    return os.str();
}

void flat_add_term(FlatPoly& p, const CoordVec& e, const Rational& c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

FlatPoly flat_mul(const FlatPoly& a, const FlatPoly& b) {
    FlatPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            flat_add_term(r, lattice_add(ea, eb), ca * cb);
    return r;
}

FlatPoly flat_sub(FlatPoly a, const FlatPoly& b) {
    for (const auto& [e, c] : b) flat_add_term(a, e, -c);
    return a;
}

FlatPoly flat_neg(FlatPoly a) {
    for (auto& [e, c] : a) c = -c;
    return a;
}

std::optional<FlatPoly> flat_divide(const FlatPoly& num, const FlatPoly& den,
                                    std::size_t max_steps) {
    if (den.empty()) throw std::invalid_argument("flat_divide: zero divisor");
    if (num.empty()) return FlatPoly{};
    // Leading term = lex-largest exponent; for an exact quotient q the
    // trailing terms also multiply, so every quotient exponent is bounded
    // below by min(num) - min(den).
    const CoordVec& den_lead = den.rbegin()->first;
    const Rational& den_lead_c = den.rbegin()->second;
    CoordVec q_min(num.begin()->first.size());
    {
        const CoordVec& num_min = num.begin()->first;
        const CoordVec& den_min = den.begin()->first;
        for (std::size_t i = 0; i < q_min.size(); ++i)
            q_min[i] = num_min[i] - den_min[i];
    }
    FlatPoly r = num, q;
    std::size_t steps = 0;
    while (!r.empty()) {
        if (++steps > max_steps) return std::nullopt;
        const CoordVec& lead = r.rbegin()->first;
        CoordVec t(lead.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = lead[i] - den_lead[i];
        if (t < q_min) return std::nullopt;
        Rational tc = r.rbegin()->second / den_lead_c;
        flat_add_term(q, t, tc);
        for (const auto& [e, c] : den)
            flat_add_term(r, lattice_add(t, e), -tc * c);
    }
    return q;
}

FlatPoly flatten(const GroupAlgebraElement& e) {
    FlatPoly p;
    for (const auto& [pt, c] : e.terms())
        for (const auto& [vexp, coeff] : c.terms()) {
            CoordVec key = pt;
            key.push_back(vexp);
            p.emplace(std::move(key), coeff);
        }
    return p;
}

GroupAlgebraElement unflatten(const FlatPoly& p, const std::string& tag,
                              std::size_t lattice_rank) {
    GroupAlgebraElement e(tag);
    for (const auto& [key, c] : p) {
        LatticePoint pt(key.begin(), key.begin() + lattice_rank);
        e.add_term(pt, LaurentScalar::v_power(key[lattice_rank], c));
    }
    return e;
}

GroupAlgebraElement exact_divide(const GroupAlgebraElement& num,
                                 const GroupAlgebraElement& den) {
    if (den.is_zero())
        throw std::invalid_argument("exact_divide: zero divisor");
    if (num.is_zero()) return GroupAlgebraElement(num.lattice());
    if (num.lattice() != den.lattice())
        throw LatticeMismatch("exact_divide: lattice mismatch");
    std::size_t rank = num.terms().begin()->first.size();
    auto q = flat_divide(flatten(num), flatten(den));
    if (!q) throw NonDivisible("exact_divide: no exact quotient");
    return unflatten(*q, num.lattice(), rank);
}

}  // namespace csw
