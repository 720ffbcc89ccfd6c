#ifndef QC_QOBJECTS_HPP
#define QC_QOBJECTS_HPP

#include "qc/laurent.hpp"
#include "qc/poly.hpp"
#include "qc/ratfunc.hpp"

namespace qc {

/// (s·q^a; q^d)_k with s = -1 when negate_base: the product
/// prod_{i=0..k-1} (1 - s q^{a+i d}). base_exp may be negative.
struct QPochhammerSpec {
    long base_exp = 1;
    long step = 1;
    long length = 0;
    bool negate_base = false;
};

/// [n] = 1 + q + ... + q^{n-1}; [0] = 0. Throws std::invalid_argument for
/// n < 0 (signed values live in q_integer_signed).
Poly q_integer(long n);

/// [m] = (1 - q^m)/(1 - q) for any integer m; [-m] = -q^{-m} [m].
LaurentPoly q_integer_signed(long m);

LaurentPoly q_pochhammer(const QPochhammerSpec& spec);

/// Reciprocal factor 1/(s q^a; q^d)_k with the summation convention that a
/// negative length makes the whole enclosing product vanish: returns 0 when
/// signed_length < 0. spec.length is ignored; signed_length is used.
RatFunc q_pochhammer_inverse_guard(QPochhammerSpec spec, long signed_length);

/// Gaussian binomial [n choose k]_q; zero outside 0 <= k <= n.
Poly q_binomial(long n, long k);

/// nth cyclotomic polynomial, by exact division of q^n - 1 by the proper-
/// divisor cyclotomics. Memoized. Throws std::invalid_argument for n < 1.
Poly cyclotomic(long n);

/// (q;q)_k, memoized prefix products. k >= 0.
Poly q_factorial(long k);

/// (q^2;q^2)_k, memoized prefix products. k >= 0.
Poly q_factorial_sq(long k);

}  // namespace qc

#endif
