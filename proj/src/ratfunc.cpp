#include "qc/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace qc {

RatFunc::RatFunc(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}

RatFunc RatFunc::make(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num.is_zero()) return RatFunc{};
    // Strip the common power of q first; it keeps the gcd inputs small.
    long vn = num.low_order(), vd = den.low_order();
    long v = vn < vd ? vn : vd;
    if (v > 0) {
        num = num.shifted(-v);
        den = den.shifted(-v);
    }
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0 || g.low_order() > 0) {
        num = poly_divexact(num, g);
        den = poly_divexact(den, g);
    }
    Rational lc = den.leading();
    if (lc != Rational(1)) {
        num = num.scaled(Rational(1) / lc);
        den = den.scaled(Rational(1) / lc);
    }
    return RatFunc(std::move(num), std::move(den), true);
}

RatFunc RatFunc::make(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num.is_zero()) return RatFunc{};
    // q^offset(num) / q^offset(den): move the net power onto whichever side
    // keeps exponents nonnegative.
    long shift = num.offset() - den.offset();
    Poly n = num.body(), d = den.body();
    if (shift >= 0)
        n = n.shifted(shift);
    else
        d = d.shifted(-shift);
    return make(std::move(n), std::move(d));
}

bool RatFunc::is_laurent() const {
    return den_.degree() == static_cast<long>(den_.low_order());
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = r.num_.scaled(Rational(-1));
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Cancel the denominator gcd before cross multiplying: the classic
    // d = gcd(da, db), result = (na*(db/d) + nb*(da/d)) / (da*(db/d)).
    Poly d = poly_gcd(a.den_, b.den_);
    bool trivial = d.degree() == 0 && d.low_order() == 0;
    Poly da = trivial ? a.den_ : poly_divexact(a.den_, d);
    Poly db = trivial ? b.den_ : poly_divexact(b.den_, d);
    Poly num = a.num_ * db + b.num_ * da;
    Poly den = a.den_ * db;
    return RatFunc::make(std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return a + (-b);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc::zero();
    // Cross-cancel before multiplying so the big products stay reduced.
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    auto reduce = [](const Poly& p, const Poly& g) {
        if (g.degree() == 0 && g.low_order() == 0) return p;
        return poly_divexact(p, g);
    };
    Poly num = reduce(a.num_, g1) * reduce(b.num_, g2);
    Poly den = reduce(a.den_, g2) * reduce(b.den_, g1);
    return RatFunc::make(std::move(num), std::move(den));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    if (a.is_zero()) return RatFunc::zero();
    RatFunc inv = RatFunc::make(b.den_, b.num_);
    return a * inv;
}

std::string RatFunc::str() const {
    if (den_ == Poly::one()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

Poly integer_primitive_numerator(const RatFunc& r) {
    return primitive_integer_part(r.num());
}

}  // namespace qc
