#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "csw/rational.hpp"

namespace csw {

/// Exact element of Q[v, v^-1], v = q^{1/2}. Zero coefficients are never
/// stored; the zero element has empty support.
class LaurentScalar {
public:
    LaurentScalar() = default;
    explicit LaurentScalar(const Rational& c) {
        if (c != 0) terms_[0] = c;
    }
    explicit LaurentScalar(long c) : LaurentScalar(Rational(c)) {}

    static LaurentScalar v_power(long k, const Rational& c = Rational(1)) {
        LaurentScalar s;
        if (c != 0) s.terms_[k] = c;
        return s;
    }
    static LaurentScalar one() { return LaurentScalar(Rational(1)); }

    const std::map<long, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // A unit of Q[v,v^-1] is a nonzero monomial.
    bool is_monomial() const { return terms_.size() == 1; }

    LaurentScalar& operator+=(const LaurentScalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentScalar& operator-=(const LaurentScalar& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) {
        a += b;
        return a;
    }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) {
        a -= b;
        return a;
    }
    friend LaurentScalar operator-(const LaurentScalar& a) {
        LaurentScalar r;
        for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentScalar operator*(const LaurentScalar& a,
                                   const LaurentScalar& b) {
        LaurentScalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentScalar& operator*=(const LaurentScalar& o) {
        *this = *this * o;
        return *this;
    }
    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) {
        return !(a == b);
    }

    // Division by a unit (v-monomial).
    LaurentScalar divide_by_monomial(const LaurentScalar& m) const {
        if (!m.is_monomial())
            throw std::invalid_argument("LaurentScalar: divisor is not a unit");
        auto [me, mc] = *m.terms_.begin();
        LaurentScalar r;
        for (const auto& [e, c] : terms_) r.terms_[e - me] = c / mc;
        return r;
    }

    LaurentScalar inverse_of_monomial() const {
        return one().divide_by_monomial(*this);
    }

    /// Evaluate at v = sqrt_q (an explicitly supplied square root of q).
    Rational evaluate(const Rational& sqrt_q) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) acc += c * rational_pow(sqrt_q, e);
        return acc;
    }

    std::string to_string() const;

private:
    void add_term(long e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (c != 0) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::map<long, Rational> terms_;
};

inline std::string LaurentScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        Rational ac = abs(c);
        if (e == 0) {
            mono = rational_to_string(ac);
        } else {
            if (ac != 1) mono = rational_to_string(ac) + "*";
            mono += "v";
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (out.empty()) {
            out = (c < 0 ? "-" : "") + mono;
        } else {
            out += (c < 0 ? " - " : " + ") + mono;
        }
    }
    return out;
}

}  // namespace csw
