#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qc/congruence.hpp"
#include "qc/qobjects.hpp"

using namespace qc;

namespace {

Poly P(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly(std::move(v));
}

}  // namespace

TEST_CASE("modulus_build") {
    // [3] = Phi_3, so [3] Phi_3^3 = Phi_3^4
    CHECK(modulus_build({{{ModulusKind::q_integer, 3, 1}, {ModulusKind::cyclotomic, 3, 3}}}) ==
          P({1, 1, 1}).pow(4));
    CHECK(modulus_build({{{ModulusKind::q_integer, 1, 1}}}) == Poly::one());
    Poly m5 = modulus_build({{{ModulusKind::q_integer, 5, 1}, {ModulusKind::cyclotomic, 5, 3}}});
    CHECK(m5.degree() == 16);
    CHECK(m5.is_monic());
    CHECK_THROWS_AS(modulus_build({}), std::invalid_argument);
    CHECK_THROWS_AS(modulus_build({{{ModulusKind::q_integer, 0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(modulus_build({{{ModulusKind::cyclotomic, 3, 0}}}), std::invalid_argument);
}

TEST_CASE("congruent basics") {
    Poly phi3 = cyclotomic(3);
    RatFunc a = RatFunc::make(P({1, 2}), P({2, 1}));

    CongruenceResult same = congruent(a, a, phi3);
    CHECK(same.pass);
    CHECK(same.witness.is_zero());

    // (-q;q)_2 = 1+q+q^2+q^3 == 1 mod Phi_3, witness q
    RatFunc poch{q_pochhammer({1, 1, 2, true})};
    CongruenceResult r = congruent(poch, RatFunc::one(), phi3);
    CHECK(r.pass);
    CHECK(r.witness == P({0, 1}));
    CHECK(r.modulus == phi3);
    CHECK_FALSE(r.denominator_shares_modulus_factor);

    // lemma instance n=3: difference reduces to q^2 Phi_3^2 / (1+q)
    CongruenceResult lem = verify_lemma(LemmaId::mod_n, 3);
    CHECK(lem.pass);
    CHECK(lem.witness == P({0, 0, 1}));
    CHECK(lem.modulus == phi3 * phi3);
    CHECK_FALSE(lem.denominator_shares_modulus_factor);

    // failing congruence: q == 1 mod Phi_3 is false, remainder q - 1
    CongruenceResult bad = congruent(RatFunc(P({0, 1})), RatFunc::one(), phi3);
    CHECK_FALSE(bad.pass);
    CHECK(bad.witness == P({-1, 1}));
    CHECK(bad.witness.degree() < phi3.degree());

    // denominator flag: a = 1/Phi_3 shares a factor with the modulus
    CongruenceResult flagged =
        congruent(RatFunc::make(Poly::one(), phi3), RatFunc::one(), phi3 * phi3);
    CHECK(flagged.denominator_shares_modulus_factor);

    CHECK_THROWS_AS(congruent(a, a, P({1, 1, 2})), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(congruent(a, a, P({2})), std::invalid_argument);        // constant != 1
    CHECK(congruent(a, RatFunc::zero(), Poly::one()).pass);                 // mod 1: everything
}

TEST_CASE("lemmas pass for odd 3..21") {
    for (long n = 3; n <= 21; n += 2) {
        CAPTURE(n);
        CHECK(verify_lemma(LemmaId::fermat, n).pass);
        CHECK(verify_lemma(LemmaId::mod_n, n).pass);
        CHECK(verify_lemma(LemmaId::mod_n_new, n).pass);
        CongruenceResult ident = verify_lemma(LemmaId::mod_n_identity, n);
        CHECK(ident.pass);
        CHECK(ident.witness.is_zero());
        CHECK(check_mod_n_2(n).pass);
    }
    CHECK_THROWS_AS(verify_lemma(LemmaId::fermat, 4), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma(LemmaId::mod_n, 1), std::invalid_argument);
    CHECK_THROWS_AS(check_mod_n_2(6), std::invalid_argument);
}

TEST_CASE("congruence relation properties") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<long> coef(-5, 5);
    Poly phi5 = cyclotomic(5);
    auto rand_poly = [&](int deg) {
        std::vector<Rational> v;
        for (int i = 0; i <= deg; ++i) v.emplace_back(coef(rng));
        return Poly(std::move(v));
    };
    auto rand_rf_coprime = [&](int deg) {
        for (;;) {
            Poly den = rand_poly(deg);
            if (den.is_zero()) continue;
            if (poly_gcd(den, phi5).degree() > 0) continue;
            return RatFunc::make(rand_poly(deg), den);
        }
    };
    for (int iter = 0; iter < 40; ++iter) {
        RatFunc b = rand_rf_coprime(3);
        RatFunc a = b + RatFunc(phi5) * rand_rf_coprime(2);
        RatFunc c = b - RatFunc(phi5) * rand_rf_coprime(2);
        CHECK(congruent(a, a, phi5).pass);  // reflexive
        CHECK(congruent(a, b, phi5).pass == congruent(b, a, phi5).pass);  // symmetric
        CHECK(congruent(a, b, phi5).pass);
        CHECK(congruent(b, c, phi5).pass);
        CHECK(congruent(a, c, phi5).pass);  // transitive under coprime denominators
    }
}
