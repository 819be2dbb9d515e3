#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "csw/laurent.hpp"
#include "csw/linalg.hpp"

namespace csw {

/// Integer coordinate vector of a lattice point, in the declared basis of
/// its lattice.
using LatticePoint = CoordVec;

inline LatticePoint lattice_add(const LatticePoint& a, const LatticePoint& b) {
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline LatticePoint lattice_neg(const LatticePoint& a) {
    LatticePoint r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

/// Integer matrix mapping source-lattice coordinates to target-lattice
/// coordinates (rows = target rank, cols = source rank).
struct LatticeMap {
    std::vector<CoordVec> matrix;
    std::size_t source_rank = 0;
    std::size_t target_rank = 0;
    bool injective = false;

    LatticePoint apply(const LatticePoint& p) const {
        if (p.size() != source_rank)
            throw std::invalid_argument("LatticeMap: rank mismatch");
        LatticePoint out(target_rank, 0);
        for (std::size_t i = 0; i < target_rank; ++i)
            for (std::size_t j = 0; j < source_rank; ++j)
                out[i] += matrix[i][j] * p[j];
        return out;
    }
};

class LatticeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonDivisible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Finitely supported formal sum sum_lambda c_lambda e^lambda with
/// LaurentScalar coefficients. Terms are stored in lexicographic order of
/// coordinate vectors; zero coefficients are never stored.
class GroupAlgebraElement {
public:
    GroupAlgebraElement() = default;
    explicit GroupAlgebraElement(std::string lattice_tag)
        : lattice_(std::move(lattice_tag)) {}

    static GroupAlgebraElement monomial(std::string lattice_tag,
                                        LatticePoint p,
                                        LaurentScalar c = LaurentScalar::one()) {
        GroupAlgebraElement e(std::move(lattice_tag));
        if (!c.is_zero()) e.terms_[std::move(p)] = std::move(c);
        return e;
    }

    const std::string& lattice() const { return lattice_; }
    const std::map<LatticePoint, LaurentScalar>& terms() const {
        return terms_;
    }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    LaurentScalar coeff(const LatticePoint& p) const {
        auto it = terms_.find(p);
        return it == terms_.end() ? LaurentScalar() : it->second;
    }

    void add_term(const LatticePoint& p, const LaurentScalar& c);

    GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
    GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
    friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                         const GroupAlgebraElement& b) {
        a += b;
        return a;
    }
    friend GroupAlgebraElement operator-(GroupAlgebraElement a,
                                         const GroupAlgebraElement& b) {
        a -= b;
        return a;
    }
    friend GroupAlgebraElement operator-(const GroupAlgebraElement& a);
    friend GroupAlgebraElement operator*(const GroupAlgebraElement& a,
                                         const GroupAlgebraElement& b);
    GroupAlgebraElement scaled(const LaurentScalar& c) const;
    friend bool operator==(const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b) {
        return a.lattice_ == b.lattice_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b) {
        return !(a == b);
    }

    /// e^lambda -> e^(m lambda), coefficients unchanged. m acts on
    /// coordinates by integer matrix.
    GroupAlgebraElement mapped_support(const std::vector<CoordVec>& m,
                                       std::string target_tag) const;

    std::string to_string() const;

private:
    void check_compatible(const GroupAlgebraElement& o) const {
        if (lattice_ != o.lattice_)
            throw LatticeMismatch("lattice mismatch: '" + lattice_ +
                                  "' vs '" + o.lattice_ + "'");
    }

    std::string lattice_;
    std::map<LatticePoint, LaurentScalar> terms_;
};

/// Exact quotient num/den in the Laurent group algebra; throws NonDivisible
/// when no exact quotient exists. Leading-term elimination under
/// lexicographic order on coordinates.
GroupAlgebraElement exact_divide(const GroupAlgebraElement& num,
                                 const GroupAlgebraElement& den);

}  // namespace csw
