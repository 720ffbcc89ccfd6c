#ifndef QC_LAURENT_HPP
#define QC_LAURENT_HPP

#include <string>

#include "qc/poly.hpp"

namespace qc {

/// Finite sum of integer powers of q, negative exponents allowed: a Poly body
/// together with the exponent of its lowest term.
///
/// Canonical form: the body has a nonzero constant term unless it is zero, in
/// which case the offset is 0. So q^-2 + 1 is {body: 1 + q^2, offset: -2}.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(Poly body, long offset);
    explicit LaurentPoly(const Poly& p) : LaurentPoly(p, 0) {}
    explicit LaurentPoly(const Rational& c) : LaurentPoly(Poly(c), 0) {}
    explicit LaurentPoly(long c) : LaurentPoly(Poly(c), 0) {}

    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly one() { return LaurentPoly(1); }
    /// q^e for any integer e.
    static LaurentPoly q_power(long e);
    /// 1 - s*q^e for any integer e (s = -1 gives 1 + q^e).
    static LaurentPoly one_minus_q_power(long e, int sign = 1);

    const Poly& body() const { return body_; }
    long offset() const { return offset_; }
    bool is_zero() const { return body_.is_zero(); }
    /// Exponent of the highest term; meaningful only for nonzero values.
    long top_exponent() const { return offset_ + body_.degree(); }

    LaurentPoly operator-() const { return LaurentPoly(-body_, offset_); }
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { a += b; return a; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { a -= b; return a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.offset_ == b.offset_ && a.body_ == b.body_;
    }

    /// Multiply by q^e.
    LaurentPoly shifted(long e) const;
    LaurentPoly pow(unsigned long e) const;

    std::string str() const;

private:
    Poly body_;
    long offset_ = 0;
};

}  // namespace qc

#endif
