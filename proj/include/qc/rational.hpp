#ifndef QC_RATIONAL_HPP
#define QC_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qc {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonical rational num/den with den > 0 and gcd(|num|, den) = 1.
/// Throws std::domain_error on a zero denominator.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "n" for integers, "n/d" otherwise. Exact, no decimals.
inline std::string to_fraction_string(const Rational& r) { return r.get_str(); }

inline Rational rational_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
    r.canonicalize();
    return r;
}

inline Int pow_int(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace qc

#endif
