#include "qc/congruence.hpp"

#include <cassert>
#include <stdexcept>

#include "qc/qobjects.hpp"

namespace qc {

Poly modulus_build(const ModulusSpec& spec) {
    if (spec.factors.empty()) throw std::invalid_argument("modulus_build: empty factor list");
    Poly m = Poly::one();
    for (const ModulusFactor& f : spec.factors) {
        if (f.n < 1 || f.power < 1)
            throw std::invalid_argument("modulus_build: factor n and power must be >= 1");
        Poly base = f.kind == ModulusKind::q_integer ? q_integer(f.n) : cyclotomic(f.n);
        m *= base.pow(static_cast<unsigned long>(f.power));
    }
    assert(m.is_monic());
    return m;
}

CongruenceResult congruent(const RatFunc& a, const RatFunc& b, const Poly& modulus) {
    if (!modulus.is_monic() || (modulus.degree() == 0 && !modulus.is_one()))
        throw std::invalid_argument("congruent: modulus must be monic, nonconstant or 1");
    RatFunc diff = a - b;
    bool den_flag = false;
    if (modulus.degree() > 0 && diff.den().degree() > 0)
        den_flag = poly_gcd(diff.den(), modulus).degree() > 0;
    if (diff.is_zero()) return {true, Poly::zero(), modulus, den_flag};
    Poly num = integer_primitive_numerator(diff);
    auto [quot, rem] = poly_divrem(num, modulus);
    if (rem.is_zero()) return {true, std::move(quot), modulus, den_flag};
    return {false, std::move(rem), modulus, den_flag};
}

namespace {

void require_odd_gt1(long n) {
    if (n <= 1 || n % 2 == 0)
        throw std::invalid_argument("verify_lemma: n must be odd and > 1");
}

// (q;q^2)_n / ((1-q)(q;q)_{n-1})
RatFunc half_poch_ratio(long n) {
    LaurentPoly num = q_pochhammer({1, 2, n});
    LaurentPoly den = LaurentPoly(Poly::one() - Poly::variable()) * LaurentPoly(q_factorial(n - 1));
    return RatFunc::make(num, den);
}

}  // namespace

CongruenceResult verify_lemma(LemmaId id, long n) {
    require_odd_gt1(n);
    switch (id) {
        case LemmaId::fermat: {
            RatFunc a{q_pochhammer({1, 1, n - 1, true})};
            return congruent(a, RatFunc::one(), cyclotomic(n));
        }
        case LemmaId::mod_n: {
            Poly modulus = modulus_build({{{ModulusKind::q_integer, n, 1},
                                           {ModulusKind::cyclotomic, n, 1}}});
            return congruent(half_poch_ratio(n), RatFunc(q_integer(n)), modulus);
        }
        case LemmaId::mod_n_new: {
            Poly modulus = modulus_build({{{ModulusKind::q_integer, n, 1},
                                           {ModulusKind::cyclotomic, n, 1}}});
            RatFunc a = RatFunc::make(q_pochhammer({1, 2, n - 1}),
                                      LaurentPoly(q_factorial(n - 1)));
            RatFunc b{-q_integer(n).shifted(1)};
            return congruent(a, b, modulus);
        }
        case LemmaId::mod_n_identity: {
            RatFunc lhs = half_poch_ratio(n);
            RatFunc rhs = RatFunc(q_integer(n) * q_binomial(2 * n, n)) /
                          RatFunc(q_pochhammer({1, 1, n, true}));
            RatFunc diff = lhs - rhs;
            return {diff.is_zero(), integer_primitive_numerator(diff), Poly::one(), false};
        }
    }
    throw std::invalid_argument("verify_lemma: unknown id");
}

CongruenceResult check_mod_n_2(long n) {
    require_odd_gt1(n);
    RatFunc a = RatFunc(q_binomial(2 * n, n)) / RatFunc(q_pochhammer({1, 1, n, true}));
    return congruent(a, RatFunc::one(), cyclotomic(n));
}

}  // namespace qc
