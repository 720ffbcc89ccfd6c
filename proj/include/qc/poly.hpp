#ifndef QC_POLY_HPP
#define QC_POLY_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qc/rational.hpp"

namespace qc {

/// Dense univariate polynomial in q over the rationals.
///
/// Canonical form: the coefficient vector is empty for the zero polynomial
/// and otherwise ends with a nonzero coefficient. Index i holds the
/// coefficient of q^i. Values are immutable after construction; every
/// operation returns a fresh polynomial, so instances may be shared freely
/// across threads.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& constant);
    explicit Poly(long constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly zero() { return Poly{}; }
    static Poly one() { return Poly(1); }
    static Poly variable();  // q
    static Poly monomial(const Rational& c, std::size_t exp);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const Rational& leading() const;  // pre: nonzero
    bool is_monic() const;
    bool has_integer_coeffs() const;
    /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
    std::size_t low_order() const;

    /// Coefficient of q^i; zero beyond the degree.
    const Rational& coeff(std::size_t i) const;
    std::span<const Rational> coeffs() const { return c_; }

    Rational eval(const Rational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(const Rational& s) const;
    /// Multiply by q^e; negative e divides (pre: low_order() >= -e).
    Poly shifted(long e) const;
    Poly pow(unsigned long e) const;

    std::string str() const;  // human-readable, ascending powers

private:
    std::vector<Rational> c_;

    void trim();
};

/// Exact Euclidean division: a = b*quotient + remainder, deg rem < deg b.
/// Throws std::domain_error when b is zero.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

/// Monic gcd over the rationals. Production path: small-prime modular images
/// combined by CRT and verified by exact division. Throws std::domain_error
/// when both inputs are zero.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Quotient of an exact division; throws std::domain_error if b does not
/// divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

/// Positive rational c such that a == c * primitive_integer_part(a).
Rational poly_content(const Poly& a);

/// a scaled by the least-magnitude rational giving integer coefficients with
/// content 1 and a positive leading coefficient. Zero maps to zero.
Poly primitive_integer_part(const Poly& a);

/// a divided by its leading coefficient.
Poly monic(const Poly& a);

namespace ref {
/// Serial schoolbook multiplication, kept as the reference implementation
/// for the OpenMP kernel.
Poly mul(const Poly& a, const Poly& b);
/// Rational-coefficient Euclidean gcd with monic normalization at each step.
/// Reference for the modular gcd; also the fallback path.
Poly gcd(const Poly& a, const Poly& b);
}  // namespace ref

}  // namespace qc

#endif
