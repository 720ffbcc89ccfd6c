#include "qc/numeric.hpp"

#include <stdexcept>

namespace qc {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

Int pow_long(long base, long exp) {
    Int out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

bool needs_power(SuperId id) { return id == SuperId::guo1_pr || id == SuperId::wang_pr; }

void validate(const SupercongruenceSpec& s) {
    require(is_prime(s.p), "supercongruence: p must be prime");
    const bool half_family = s.id == SuperId::div1_half || s.id == SuperId::div1_full;
    require(s.p > (half_family ? 2 : 3), "supercongruence: p too small for this family");
    if (needs_power(s.id))
        require(s.r >= 2, "supercongruence: prime-power family needs r >= 2");
    else
        require(s.r == 1, "supercongruence: r only applies to prime-power families");
}

// (3k+1) C(2k,k)^3 / 16^k
Rational div1_term(long k, const Int& binom_cubed) {
    return make_rational(Int(3 * k + 1) * binom_cubed, pow_long(16, k));
}

// 6k^4 C(2k,k)^3 / (16^k (2k-1))
Rational guo1_term(long k, const Int& binom_cubed) {
    Int num = 6 * Int(k) * k * k * k * binom_cubed;
    return make_rational(num, pow_long(16, k) * Int(2 * k - 1));
}

}  // namespace

Rational pochhammer(const Rational& a, long k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative length");
    Rational out(1);
    Rational factor = a;
    for (long i = 0; i < k; ++i, factor += 1) out *= factor;
    return out;
}

Int central_binomial(long k) {
    if (k < 0) throw std::invalid_argument("central_binomial: negative index");
    Int c(1);
    for (long i = 1; i <= k; ++i) {
        c *= 2 * Int(2 * i - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(i));
    }
    return c;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Rational supercongruence_sum(const SupercongruenceSpec& spec) {
    validate(spec);
    long k_hi = 0;
    switch (spec.id) {
        case SuperId::div1_half: k_hi = (spec.p - 1) / 2; break;
        case SuperId::div1_full:
        case SuperId::guo1:
        case SuperId::wang: k_hi = spec.p - 1; break;
        case SuperId::guo1_pr:
        case SuperId::wang_pr: {
            Int bound = pow_long(spec.p, spec.r);
            k_hi = bound.get_si() - 1;
            break;
        }
    }

    Rational sum(0);
    if (spec.id == SuperId::wang || spec.id == SuperId::wang_pr) {
        // (3k-1) (1/2)_k (-1/2)_k^2 4^k / k!^3, all factors kept incrementally
        Rational rise_half(1), rise_neg_half(1), factorial_cubed(1), four_pow(1);
        for (long k = 0; k <= k_hi; ++k) {
            if (k > 0) {
                rise_half *= Rational(2 * k - 1, 2);
                rise_neg_half *= Rational(2 * k - 3, 2);
                factorial_cubed *= Rational(Int(k) * k * k);
                four_pow *= 4;
            }
            sum += Int(3 * k - 1) * rise_half * rise_neg_half * rise_neg_half *
                   four_pow / factorial_cubed;
        }
        return sum;
    }

    Int binom(1);
    for (long k = 0; k <= k_hi; ++k) {
        if (k > 0) {
            binom *= 2 * Int(2 * k - 1);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                            static_cast<unsigned long>(k));
        }
        Int cubed = binom * binom * binom;
        sum += (spec.id == SuperId::guo1 || spec.id == SuperId::guo1_pr)
                   ? guo1_term(k, cubed)
                   : div1_term(k, cubed);
    }
    return sum;
}

Int residue_mod(const Rational& x, const Int& modulus) {
    if (modulus <= 0) throw std::invalid_argument("residue_mod: modulus must be positive");
    Int den_inv;
    if (mpz_invert(den_inv.get_mpz_t(), x.get_den_mpz_t(), modulus.get_mpz_t()) == 0)
        throw std::domain_error("residue_mod: denominator shares a factor with the modulus");
    Int out = x.get_num() * den_inv;
    mpz_mod(out.get_mpz_t(), out.get_mpz_t(), modulus.get_mpz_t());
    return out;
}

bool check_supercongruence(const SupercongruenceSpec& spec) {
    const Rational sum = supercongruence_sum(spec);

    Int modulus, target;
    switch (spec.id) {
        case SuperId::div1_half:
        case SuperId::div1_full:
            modulus = pow_long(spec.p, 3);
            target = spec.p;
            break;
        case SuperId::guo1:
        case SuperId::wang: {
            modulus = pow_long(spec.p, 4);
            Int cube = pow_long(spec.p, 3);
            if (spec.id == SuperId::guo1)
                target = Int(spec.p) + 2 * cube;
            else
                target = Int(spec.p) - 2 * cube;
            break;
        }
        case SuperId::guo1_pr:
        case SuperId::wang_pr:
            modulus = pow_long(spec.p, spec.r + 3);
            target = pow_long(spec.p, spec.r);
            break;
    }

    mpz_mod(target.get_mpz_t(), target.get_mpz_t(), modulus.get_mpz_t());
    return residue_mod(sum, modulus) == target;
}

bool check_divisibility(const DivisibilitySpec& spec) {
    require(spec.n >= 2, "divisibility: n must be at least 2");
    const long n = spec.n;

    Int sum(0);
    Int binom(1);
    for (long k = 0; k < n; ++k) {
        if (k > 0) {
            binom *= 2 * Int(2 * k - 1);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                            static_cast<unsigned long>(k));
        }
        Int term;
        if (spec.id == DivisibilityId::sun_3k1) {
            term = Int(3 * k + 1) * binom * binom * binom;
        } else {
            term = 6 * Int(k) * k * k * k * binom * binom * binom;
            Int odd(2 * k - 1);
            if (!mpz_divisible_p(term.get_mpz_t(), odd.get_mpz_t()))
                throw std::logic_error("divisibility: summand not divisible by 2k-1");
            mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), odd.get_mpz_t());
        }
        sum += term * pow_long(16, n - k - 1);
    }

    Int divisor = Int(spec.id == DivisibilityId::strong ? 4 : 2) * n * central_binomial(n);
    return mpz_divisible_p(sum.get_mpz_t(), divisor.get_mpz_t()) != 0;
}

Rational eval_at_one(const RatFunc& r) {
    const Rational den = r.den().eval(Rational(1));
    if (den == 0) throw PoleAtOne();
    return r.num().eval(Rational(1)) / den;
}

}  // namespace qc
