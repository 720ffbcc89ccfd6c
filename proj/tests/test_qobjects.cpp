#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qc/qobjects.hpp"

using namespace qc;

namespace {

Poly P(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

TEST_CASE("q_integer") {
    CHECK(q_integer(1) == Poly::one());
    CHECK(q_integer(0).is_zero());
    CHECK(q_integer(3) == P({1, 1, 1}));
    CHECK_THROWS_AS(q_integer(-1), std::invalid_argument);

    CHECK(q_integer_signed(3) == LaurentPoly(P({1, 1, 1})));
    CHECK(q_integer_signed(0) == LaurentPoly::zero());
    // [-m] = -q^-m [m]: [-2] = -q^-2 (1 + q)
    CHECK(q_integer_signed(-2) == LaurentPoly(P({-1, -1}), -2));
    // consistency with the defining quotient: (1 - q^m) = [m](1 - q)
    for (long m = -6; m <= 6; ++m)
        CHECK(q_integer_signed(m) * LaurentPoly(P({1, -1})) ==
              LaurentPoly::one() - LaurentPoly::q_power(m));
}

TEST_CASE("q_pochhammer") {
    CHECK(q_pochhammer({1, 1, 0}) == LaurentPoly::one());
    CHECK(q_pochhammer({-1, 2, 1}) == LaurentPoly(P({-1, 1}), -1));  // 1 - q^-1
    CHECK(q_pochhammer({1, 2, 2}) == LaurentPoly(P({1, -1, 0, -1, 1})));  // (1-q)(1-q^3)
    // signed base: (-q;q)_2 = (1+q)(1+q^2)
    CHECK(q_pochhammer({1, 1, 2, true}) == LaurentPoly(P({1, 1, 1, 1})));
    // degree property: top exponent of (q^a;q^d)_k is sum of a+id for a >= 1
    for (long a = 1; a <= 3; ++a)
        for (long d = 1; d <= 3; ++d)
            for (long k = 1; k <= 5; ++k) {
                LaurentPoly p = q_pochhammer({a, d, k});
                long expect = a * k + d * k * (k - 1) / 2;
                CHECK(p.top_exponent() == expect);
                CHECK(p.offset() == 0);
            }
}

TEST_CASE("q_pochhammer_inverse_guard") {
    CHECK(q_pochhammer_inverse_guard({2, 2, 0}, -1) == RatFunc::zero());
    CHECK(q_pochhammer_inverse_guard({2, 2, 0}, 0) == RatFunc::one());
    RatFunc r = q_pochhammer_inverse_guard({2, 2, 0}, 1);
    CHECK(r * RatFunc(P({1, 0, -1})) == RatFunc::one());  // r = 1/(1-q^2)
}

TEST_CASE("q_binomial") {
    CHECK(q_binomial(2, 1) == P({1, 1}));
    CHECK(q_binomial(4, 2) == P({1, 1, 2, 1, 1}));
    for (long n = 0; n <= 8; ++n) CHECK(q_binomial(n, 0) == Poly::one());
    CHECK(q_binomial(3, 4).is_zero());
    CHECK(q_binomial(3, -1).is_zero());

    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) {
            Poly b = q_binomial(n, k);
            CHECK(b == q_binomial(n, n - k));
            CHECK(b.has_integer_coeffs());
            for (const Rational& c : b.coeffs()) CHECK(c >= 0);
        }
    for (long n = 0; n <= 20; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(q_binomial(n, k).eval(Rational(1)) ==
                  Rational(binom(static_cast<unsigned long>(n), static_cast<unsigned long>(k))));
    // central q-binomial agrees with its defining quotient
    for (long k = 0; k <= 8; ++k)
        CHECK(q_binomial(2 * k, k) * q_factorial(k) * q_factorial(k) == q_factorial(2 * k));
}

TEST_CASE("cyclotomic") {
    CHECK(cyclotomic(1) == P({-1, 1}));
    CHECK(cyclotomic(2) == P({1, 1}));
    CHECK(cyclotomic(6) == P({1, -1, 1}));
    CHECK(cyclotomic(3) == P({1, 1, 1}));
    CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);

    for (long n = 1; n <= 200; ++n) {
        Poly prod = Poly::one();
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        CHECK(prod == Poly::monomial(Rational(1), static_cast<std::size_t>(n)) - Poly::one());
    }
    for (long n = 1; n <= 100; ++n) {
        Poly prod = Poly::one();
        for (long d = 2; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        CHECK(prod == q_integer(n));
    }
}

TEST_CASE("q factorial caches") {
    for (long k = 0; k <= 10; ++k) {
        CHECK(LaurentPoly(q_factorial(k)) == q_pochhammer({1, 1, k}));
        CHECK(LaurentPoly(q_factorial_sq(k)) == q_pochhammer({2, 2, k}));
    }
}

TEST_CASE("binary theorem prerequisite: (-q;q)_{n-1} - 1 divisible by Phi_n for odd n") {
    for (long n = 3; n <= 41; n += 2) {
        LaurentPoly fermat = q_pochhammer({1, 1, n - 1, true}) - LaurentPoly::one();
        CHECK(poly_divrem(fermat.body(), cyclotomic(n)).second.is_zero());
    }
}
