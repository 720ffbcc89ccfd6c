#include "qc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qc {

LaurentPoly::LaurentPoly(Poly body, long offset) : body_(std::move(body)), offset_(offset) {
    if (body_.is_zero()) {
        offset_ = 0;
        return;
    }
    const std::size_t low = body_.low_order();
    if (low > 0) {
        // re-anchor so the body has a nonzero constant term
        std::vector<Rational> c(body_.coeffs().begin() + static_cast<long>(low),
                                body_.coeffs().end());
        body_ = Poly(std::move(c));
        offset_ += static_cast<long>(low);
    }
}

LaurentPoly LaurentPoly::q_power(long e) { return LaurentPoly(Poly::one(), e); }

LaurentPoly LaurentPoly::one_minus_q_power(long e, int sign) {
    // 1 - s*q^e; for e < 0 this is q^e * (q^{-e} - s)
    if (e == 0) return LaurentPoly(Rational(1 - sign));
    if (e > 0) {
        Poly p = Poly::one() - Poly::monomial(Rational(sign), static_cast<std::size_t>(e));
        return LaurentPoly(std::move(p), 0);
    }
    Poly p = Poly::monomial(Rational(1), static_cast<std::size_t>(-e)) - Poly(Rational(sign));
    return LaurentPoly(std::move(p), e);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    const long base = std::min(offset_, o.offset_);
    Poly sum = body_.shifted(offset_ - base) + o.body_.shifted(o.offset_ - base);
    *this = LaurentPoly(std::move(sum), base);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    *this += -o;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentPoly(a.body() * b.body(), a.offset() + b.offset());
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::shifted(long e) const {
    if (is_zero()) return {};
    return LaurentPoly(body_, offset_ + e);
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
    return LaurentPoly(body_.pow(e), offset_ * static_cast<long>(e));
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    if (offset_ == 0) return body_.str();
    std::ostringstream os;
    os << "q^(" << offset_ << ")*(" << body_.str() << ")";
    return os.str();
}

}  // namespace qc
