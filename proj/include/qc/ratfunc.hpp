#ifndef QC_RATFUNC_HPP
#define QC_RATFUNC_HPP

#include <string>

#include "qc/laurent.hpp"
#include "qc/poly.hpp"

namespace qc {

/// Reduced quotient of two polynomials: gcd(num, den) = 1 and den monic.
/// Zero is num = 0, den = 1. The canonical form makes equality structural.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly::one()) {}
    explicit RatFunc(const Rational& c) : RatFunc(Poly(c)) {}
    explicit RatFunc(long c) : RatFunc(Poly(c)) {}
    explicit RatFunc(const LaurentPoly& l) : RatFunc(make(l, LaurentPoly::one())) {}

    /// Canonicalizing constructor: folds Laurent offsets into a power of q on
    /// one side, cancels the gcd, scales the denominator monic. Throws
    /// std::domain_error on a zero denominator.
    static RatFunc make(const LaurentPoly& num, const LaurentPoly& den);
    static RatFunc make(Poly num, Poly den);

    static RatFunc zero() { return RatFunc{}; }
    static RatFunc one() { return RatFunc(1); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// True iff the denominator is a power of q (q^0 = 1 included), i.e. the
    /// value is a Laurent polynomial.
    bool is_laurent() const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    /// Throws std::domain_error when b is zero.
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    Poly num_, den_;

    RatFunc(Poly num, Poly den, bool already_reduced);
};

/// The numerator scaled to integer coefficients with content 1 and positive
/// leading coefficient: the object the divisibility test looks at.
Poly integer_primitive_numerator(const RatFunc& r);

}  // namespace qc

#endif
