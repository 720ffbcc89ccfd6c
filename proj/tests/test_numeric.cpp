#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "qc/numeric.hpp"

#include <doctest.h>

#include "qc/qobjects.hpp"
#include "qc/wzengine.hpp"

using namespace qc;

namespace {

Poly P(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

Int cube(const Int& x) { return x * x * x; }

// (3k-1) (1/2)_k (-1/2)_k^2 4^k / k!^3
Rational classical_odd_term(long k) {
    Rational half = pochhammer(Rational(1, 2), k);
    Rational neg_half = pochhammer(Rational(-1, 2), k);
    Int factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(k));
    return Int(3 * k - 1) * half * neg_half * neg_half *
           Rational(pow_int(Int(4), static_cast<unsigned long>(k))) /
           Rational(cube(factorial));
}

// (3n+1) C(2n,n)^3 / 16^n
Rational classical_even_term(long n) {
    return Int(3 * n + 1) * Rational(cube(central_binomial(n))) /
           Rational(pow_int(Int(16), static_cast<unsigned long>(n)));
}

}  // namespace

TEST_CASE("rising factorials and central binomials") {
    CHECK(pochhammer(Rational(1, 2), 0) == 1);
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(-1, 2), 3) == Rational(-3, 8));
    CHECK(pochhammer(Rational(3), 4) == 360);
    CHECK(pochhammer(Rational(-2), 5) == 0);
    CHECK_THROWS_AS(pochhammer(Rational(1), -1), std::invalid_argument);

    for (long k = 0; k <= 64; ++k) {
        Int direct;
        mpz_bin_uiui(direct.get_mpz_t(), static_cast<unsigned long>(2 * k),
                     static_cast<unsigned long>(k));
        CHECK(central_binomial(k) == direct);
    }
    CHECK_THROWS_AS(central_binomial(-1), std::invalid_argument);

    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(9));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("residues of exact rationals") {
    CHECK(residue_mod(Rational(7), Int(5)) == 2);
    CHECK(residue_mod(Rational(-1), Int(5)) == 4);
    CHECK(residue_mod(Rational(7, 3), Int(10)) == 9);  // 9 * 3 == 27 == 7 (10)
    CHECK_THROWS_AS(residue_mod(Rational(1, 5), Int(25)), std::domain_error);
    CHECK_THROWS_AS(residue_mod(Rational(1), Int(0)), std::invalid_argument);
}

TEST_CASE("third-power specializations over half and full ranges") {
    // p = 3, half range: 1 + 4 * 8 / 16 = 3 exactly.
    CHECK(supercongruence_sum({SuperId::div1_half, 3}) == 3);

    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        CHECK(check_supercongruence({SuperId::div1_half, p}));
        CHECK(check_supercongruence({SuperId::div1_full, p}));
    }

    // The two ranges agree modulo p^3: the tail contributes nothing there.
    for (long p : {5L, 7L, 11L}) {
        Int cube_mod = Int(p) * p * p;
        Int half = residue_mod(supercongruence_sum({SuperId::div1_half, p}), cube_mod);
        Int full = residue_mod(supercongruence_sum({SuperId::div1_full, p}), cube_mod);
        CHECK(half == full);
        CHECK(half == p);
    }
}

TEST_CASE("fourth-power specializations") {
    const long primes[] = {5, 7, 11, 13};
    const long even_residue[] = {255, 693, 2673, 4407};    // p + 2p^3 mod p^4
    const long odd_residue[] = {380, 1722, 11990, 24180};  // p - 2p^3 mod p^4

    for (int i = 0; i < 4; ++i) {
        const long p = primes[i];
        Int fourth = Int(p) * p * p * p;
        CHECK(residue_mod(supercongruence_sum({SuperId::guo1, p}), fourth) ==
              even_residue[i]);
        CHECK(residue_mod(supercongruence_sum({SuperId::wang, p}), fourth) ==
              odd_residue[i]);
        CHECK(check_supercongruence({SuperId::guo1, p}));
        CHECK(check_supercongruence({SuperId::wang, p}));
    }
}

TEST_CASE("prime-power ranges") {
    CHECK(check_supercongruence({SuperId::guo1_pr, 5, 2}));
    CHECK(check_supercongruence({SuperId::wang_pr, 5, 2}));
    CHECK(check_supercongruence({SuperId::guo1_pr, 7, 2}));
    CHECK(check_supercongruence({SuperId::wang_pr, 7, 2}));
}

TEST_CASE("usage errors are rejected up front") {
    CHECK_THROWS_AS(check_supercongruence({SuperId::div1_full, 9}), std::invalid_argument);
    CHECK_THROWS_AS(check_supercongruence({SuperId::div1_half, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_supercongruence({SuperId::guo1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(check_supercongruence({SuperId::wang, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_supercongruence({SuperId::guo1_pr, 5}), std::invalid_argument);
    CHECK_THROWS_AS(check_supercongruence({SuperId::guo1, 5, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_divisibility({DivisibilityId::sunby, 1}), std::invalid_argument);
}

TEST_CASE("integer divisibility of weighted partial sums") {
    // n = 2: both weighted sums equal 48; the divisors are 24 and 48.
    CHECK(check_divisibility({DivisibilityId::sun_3k1, 2}));
    CHECK(check_divisibility({DivisibilityId::sunby, 2}));
    CHECK(check_divisibility({DivisibilityId::strong, 2}));

    for (long n = 2; n <= 64; ++n) {
        CAPTURE(n);
        CHECK(check_divisibility({DivisibilityId::sun_3k1, n}));
        CHECK(check_divisibility({DivisibilityId::sunby, n}));
        CHECK(check_divisibility({DivisibilityId::strong, n}));
    }
}

TEST_CASE("evaluation at one") {
    CHECK(eval_at_one(RatFunc(q_binomial(4, 2))) == 6);
    CHECK(eval_at_one(RatFunc(LaurentPoly::q_power(-3))) == 1);
    CHECK(eval_at_one(wz_F({1, 0})) == 2);

    const RatFunc pole = RatFunc::make(Poly::one(), P({-1, 1}));
    CHECK_THROWS_AS(eval_at_one(pole), PoleAtOne);

    // The pole error is its own type, not a generic usage error.
    bool caught_specifically = false;
    try {
        eval_at_one(pole);
    } catch (const PoleAtOne&) {
        caught_specifically = true;
    } catch (const std::exception&) {
    }
    CHECK(caught_specifically);
}

TEST_CASE("summands specialize to the classical series") {
    // F(n,0) at q = 1 gives the (3n+1)-weighted central binomial series.
    const Rational frozen[] = {Rational(1), Rational(2), Rational(189, 32),
                               Rational(625, 32), Rational(557375, 8192)};
    for (long n = 0; n <= 10; ++n) {
        CAPTURE(n);
        Rational at_one = eval_at_one(wz_F({n, 0}));
        CHECK(at_one == classical_even_term(n));
        if (n <= 4) CHECK(at_one == frozen[n]);
    }

    // The odd theorem summand at q = 1 gives the (3k-1)-weighted series.
    for (long k = 0; k <= 10; ++k) {
        CAPTURE(k);
        CHECK(eval_at_one(theorem_summand(TheoremId::thm_1_2, k)) ==
              classical_odd_term(k));
    }
}
