#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <utility>

namespace assoform {

// Every coefficient in the library is an exact arbitrary-precision rational.
// GMP keeps values canonical (lowest terms, positive denominator, 0 == 0/1),
// so equality and sign tests are always exact.
using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// The (long long, long long) constructor of mpq_rational treats a negative
// denominator as unsigned; always go through Int.
inline Rational make_rational(long long num, long long den = 1) {
    return Rational(Int(num), Int(den));
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    return Rational(Int(num), Int(den));
}

inline bool is_zero(const Rational& q) { return q.is_zero(); }

// Units of the coefficient ring; pivoting in generic elimination tests this.
inline bool is_unit(const Rational& q) { return !q.is_zero(); }

inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string numerator_string(const Rational& q) { return numerator(q).str(); }
inline std::string denominator_string(const Rational& q) { return denominator(q).str(); }

inline Rational pow_rational(const Rational& q, int e) {
    Rational r(1);
    for (int k = 0; k < e; ++k) r *= q;
    return r;
}

}  // namespace assoform
