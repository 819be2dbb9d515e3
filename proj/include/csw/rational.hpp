#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace csw {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string rational_to_string(const Rational& r) {
    return r.get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
    r.canonicalize();
    return r;
}

inline bool is_integral(const Rational& r) {
    return r.get_den() == 1;
}

// mpq_class(n, d) does not canonicalize; always build fractions through this.
inline Rational make_rational(const Integer& n, const Integer& d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Exact square root of a nonnegative rational, if it is a perfect square.
inline std::optional<Rational> exact_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer num = r.get_num(), den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) ||
        !mpz_perfect_square_p(den.get_mpz_t())) {
        return std::nullopt;
    }
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return make_rational(sn, sd);
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("0^negative");
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long n = e > 0 ? static_cast<unsigned long>(e)
                            : static_cast<unsigned long>(-e);
    Rational acc(1);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

}  // namespace csw
