#include "qc/wzengine.hpp"

#include <stdexcept>
#include <vector>

#include "qc/qobjects.hpp"

namespace qc {

namespace {

// Every q-exponent in the transcribed formulas is an even integer before
// halving; a failure here is a transcription bug, not bad input.
long half_exact(long x) {
    if (x % 2 != 0) throw std::logic_error("wzengine: exponent halving not exact");
    return x / 2;
}

void require_odd(long n, long min_exclusive, const char* who) {
    if (n <= min_exclusive || n % 2 == 0)
        throw std::invalid_argument(std::string(who) + ": n must be odd and > " +
                                    std::to_string(min_exclusive));
}

LaurentPoly one_plus_q_power(long e) { return LaurentPoly::one_minus_q_power(e, -1); }

// Shared shape of four of the five left sides:
//   sum_k [3k + a_off] (q;q^2)_k (q^base;q^2)_k^2 q^{(e2 k^2 + e1 k + e0)/2}
//         / ((q;q)_k^2 (q^2;q^2)_k)
struct PochFormSpec {
    long a_off;
    long base;
    long e2, e1, e0;
};

PochFormSpec poch_form(TheoremId id) {
    switch (id) {
        case TheoremId::thm_1_2: return {-1, -1, -1, 3, 0};
        case TheoremId::qdiv:    return {1, 1, -1, -1, 0};
        case TheoremId::thm_5_1: return {5, 5, -1, -9, 0};
        case TheoremId::thm_5_2: return {-3, -3, -1, 7, 0};
        case TheoremId::thm_1_1: break;
    }
    throw std::logic_error("poch_form: thm_1_1 uses the qbinom form");
}

LaurentPoly poch_form_summand_numerator(const PochFormSpec& s, long k) {
    LaurentPoly t = q_integer_signed(3 * k + s.a_off);
    t *= q_pochhammer({1, 2, k});
    LaurentPoly sq = q_pochhammer({s.base, 2, k});
    t *= sq * sq;
    return t.shifted(half_exact(s.e2 * k * k + s.e1 * k + s.e0));
}

// Accumulate over the fixed common denominator (q;q)_{n-1}^2 (q^2;q^2)_{n-1},
// multiplying each summand by the tail products (q^{k+1};q)_{n-1-k}^2 and
// (q^{2k+2};q^2)_{n-1-k}, then reduce once.
RatFunc poch_form_sum(const PochFormSpec& s, long n) {
    std::vector<Poly> tail1(static_cast<std::size_t>(n));
    std::vector<Poly> tail2(static_cast<std::size_t>(n));
    tail1[static_cast<std::size_t>(n - 1)] = Poly::one();
    tail2[static_cast<std::size_t>(n - 1)] = Poly::one();
    for (long k = n - 2; k >= 0; --k) {
        auto i = static_cast<std::size_t>(k);
        tail1[i] = tail1[i + 1] *
                   (Poly::one() - Poly::monomial(Rational(1), static_cast<std::size_t>(k + 1)));
        tail2[i] = tail2[i + 1] *
                   (Poly::one() - Poly::monomial(Rational(1), static_cast<std::size_t>(2 * k + 2)));
    }
    LaurentPoly acc;
    for (long k = 0; k < n; ++k) {
        auto i = static_cast<std::size_t>(k);
        LaurentPoly t = poch_form_summand_numerator(s, k);
        t *= LaurentPoly(tail1[i] * tail1[i] * tail2[i]);
        acc += t;
    }
    Poly den = q_factorial(n - 1) * q_factorial(n - 1) * q_factorial_sq(n - 1);
    return RatFunc::make(acc, LaurentPoly(den));
}

// sum_{k=k_lo}^{k_hi} [3k][2k][k]^2 / ([2k-1](-q;q)_k^4) qbinom(2k,k)^3
//                     q^{-(k^2+3k)/2}
// over the common denominator prod_j [2j-1] * (-q;q)_{k_hi}^4.
RatFunc qbinom_form_sum(long k_lo, long k_hi) {
    const auto count = static_cast<std::size_t>(k_hi - k_lo + 1);
    std::vector<LaurentPoly> two_k_minus_1(count);
    for (std::size_t i = 0; i < count; ++i)
        two_k_minus_1[i] = q_integer_signed(2 * (k_lo + static_cast<long>(i)) - 1);
    // prefix[i] = prod_{j<i}, suffix[i] = prod_{j>i}
    std::vector<LaurentPoly> prefix(count, LaurentPoly::one());
    std::vector<LaurentPoly> suffix(count, LaurentPoly::one());
    for (std::size_t i = 1; i < count; ++i) prefix[i] = prefix[i - 1] * two_k_minus_1[i - 1];
    for (std::size_t i = count - 1; i-- > 0;) suffix[i] = suffix[i + 1] * two_k_minus_1[i + 1];
    // tail4[i] = (-q^{k+1};q)_{k_hi-k} = (-q;q)_{k_hi} / (-q;q)_k
    std::vector<Poly> tail(count);
    tail[count - 1] = Poly::one();
    for (std::size_t i = count - 1; i-- > 0;) {
        long k = k_lo + static_cast<long>(i);
        tail[i] = tail[i + 1] *
                  (Poly::one() + Poly::monomial(Rational(1), static_cast<std::size_t>(k + 1)));
    }
    LaurentPoly acc;
    for (std::size_t i = 0; i < count; ++i) {
        long k = k_lo + static_cast<long>(i);
        Poly small = q_integer(3 * k) * q_integer(2 * k) * q_integer(k) * q_integer(k);
        if (small.is_zero()) continue;  // the k=0 summand: [0] = 0
        LaurentPoly t{small * q_binomial(2 * k, k).pow(3) * tail[i].pow(4)};
        t = t.shifted(half_exact(-(k * k + 3 * k)));
        t *= prefix[i] * suffix[i];
        acc += t;
    }
    LaurentPoly den = q_pochhammer({1, 1, k_hi, true}).pow(4);
    for (std::size_t i = 0; i < count; ++i) den *= two_k_minus_1[i];
    return RatFunc::make(acc, den);
}

}  // namespace

RatFunc wz_F(WZPoint p) {
    if (p.n < 0) throw std::invalid_argument("wz_F: n must be >= 0");
    const long n = p.n, k = p.k;
    LaurentPoly num = q_integer_signed(3 * n + 2 * k + 1);
    num *= q_pochhammer({1, 2, n});
    LaurentPoly sq = q_pochhammer({2 * k + 1, 2, n});
    num *= sq * sq;
    num = num.shifted(-half_exact(n * (n + 1)) - (2 * n + 1) * k);
    Poly den = q_factorial(n) * q_factorial(n) * q_factorial_sq(n);
    return RatFunc::make(num, LaurentPoly(den));
}

RatFunc wz_G(WZPoint p) {
    if (p.n < 0) throw std::invalid_argument("wz_G: n must be >= 0");
    const long n = p.n, k = p.k;
    // 1/(q^2;q^2)_{n-1} = 0 for negative length: G(0,k) vanishes identically.
    if (q_pochhammer_inverse_guard({2, 2, 0}, n - 1).is_zero()) return RatFunc::zero();
    LaurentPoly num = one_plus_q_power(n + 2 * k - 1);
    num *= q_pochhammer({1, 2, n});
    LaurentPoly sq = q_pochhammer({2 * k + 1, 2, n - 1});
    num *= sq * sq;
    num = num.shifted(-half_exact(n * (n - 1)) - (2 * n - 1) * k);
    Poly den = (Poly::one() - Poly::variable()) * q_factorial(n - 1) * q_factorial(n - 1) *
               q_factorial_sq(n - 1);
    return -RatFunc::make(num, LaurentPoly(den));
}

bool wz_pair_check(WZPoint p) {
    RatFunc lhs = wz_F({p.n, p.k - 1}) - wz_F({p.n, p.k});
    RatFunc rhs = wz_G({p.n + 1, p.k}) - wz_G({p.n, p.k});
    return lhs == rhs;
}

bool telescope_check(long m, long k) {
    if (m < 1) throw std::invalid_argument("telescope_check: m must be >= 1");
    RatFunc sum;
    for (long n = 0; n < m; ++n) sum += wz_F({n, k - 1}) - wz_F({n, k});
    return sum == wz_G({m, k});
}

RatFunc theorem_summand(TheoremId id, long k) {
    if (k < 0) throw std::invalid_argument("theorem_summand: k must be >= 0");
    if (id == TheoremId::thm_1_1) {
        LaurentPoly num{q_integer(3 * k) * q_integer(2 * k) * q_integer(k) * q_integer(k) *
                        q_binomial(2 * k, k).pow(3)};
        num = num.shifted(half_exact(-(k * k + 3 * k)));
        LaurentPoly den = q_integer_signed(2 * k - 1) * q_pochhammer({1, 1, k, true}).pow(4);
        return RatFunc::make(num, den);
    }
    PochFormSpec s = poch_form(id);
    Poly den = q_factorial(k) * q_factorial(k) * q_factorial_sq(k);
    return RatFunc::make(poch_form_summand_numerator(s, k), LaurentPoly(den));
}

RatFunc theorem_lhs(TheoremId id, long n) {
    long min_n = (id == TheoremId::thm_5_1 || id == TheoremId::thm_5_2) ? 3 : 1;
    require_odd(n, min_n, "theorem_lhs");
    if (id == TheoremId::thm_1_1) return qbinom_form_sum(0, n - 1);
    return poch_form_sum(poch_form(id), n);
}

RatFunc theorem_rhs(TheoremId id, long n) {
    long min_n = (id == TheoremId::thm_5_1 || id == TheoremId::thm_5_2) ? 3 : 1;
    require_odd(n, min_n, "theorem_rhs");
    const LaurentPoly nq{q_integer(n)};
    const LaurentPoly n3 = nq.pow(3);
    const LaurentPoly one_plus_q = one_plus_q_power(1);
    // (n^2-1)(1-q)^2/24 [n]^3; a non-integer rational for n == 3 (mod 6)
    const LaurentPoly correction =
        LaurentPoly(Poly(make_rational(Int(n * n - 1), Int(24)))) *
        LaurentPoly(Poly::one() - Poly::variable()).pow(2) * n3;
    switch (id) {
        case TheoremId::thm_1_1:
            return RatFunc(nq.shifted(-half_exact(n + 1)) + one_plus_q * n3 +
                           correction.shifted(-half_exact(n + 1)));
        case TheoremId::thm_1_2:
            return RatFunc(nq.shifted(-half_exact(n + 1)) - one_plus_q * n3 +
                           correction.shifted(-half_exact(n + 1)));
        case TheoremId::qdiv:
            return RatFunc(nq.shifted(half_exact(1 - n)) + correction.shifted(half_exact(1 - n)));
        case TheoremId::thm_5_1:
            return RatFunc(nq.shifted(half_exact(5 - n)) + (one_plus_q * n3).shifted(3) +
                           correction.shifted(half_exact(5 - n))) +
                   RatFunc::make(one_plus_q_power(3).shifted(4) * n3,
                                 LaurentPoly(cyclotomic(3)).pow(2));
        case TheoremId::thm_5_2:
            return RatFunc(nq.shifted(-half_exact(n + 3)) - (one_plus_q * n3).shifted(-1) +
                           correction.shifted(-half_exact(n + 3))) -
                   RatFunc::make(one_plus_q_power(3) * n3, LaurentPoly(cyclotomic(3)).pow(2));
    }
    throw std::invalid_argument("theorem_rhs: unknown id");
}

CongruenceResult verify_theorem(TheoremId id, long n) {
    Poly modulus =
        modulus_build({{{ModulusKind::q_integer, n, 1}, {ModulusKind::cyclotomic, n, 3}}});
    return congruent(theorem_lhs(id, n), theorem_rhs(id, n), modulus);
}

CongruenceResult verify_boundary(BoundaryId id, long m) {
    const bool needs_gt3 = id == BoundaryId::g_m_2 || id == BoundaryId::g_m_neg1;
    require_odd(m, needs_gt3 ? 3 : 1, "verify_boundary");
    const LaurentPoly m3 = LaurentPoly(q_integer(m)).pow(3);
    switch (id) {
        case BoundaryId::g_m_1: {
            Poly modulus = modulus_build(
                {{{ModulusKind::q_integer, m, 3}, {ModulusKind::cyclotomic, m, 1}}});
            RatFunc rhs{-(one_plus_q_power(1) * m3).shifted(1)};
            return congruent(wz_G({m, 1}), rhs, modulus);
        }
        case BoundaryId::g_m_0: {
            Poly modulus = modulus_build(
                {{{ModulusKind::q_integer, m, 3}, {ModulusKind::cyclotomic, m, 1}}});
            RatFunc rhs{-(one_plus_q_power(-1) * m3).shifted(2)};
            return congruent(wz_G({m, 0}), rhs, modulus);
        }
        case BoundaryId::g_m_2:
        case BoundaryId::g_m_neg1: {
            Poly modulus = modulus_build(
                {{{ModulusKind::q_integer, m, 1}, {ModulusKind::cyclotomic, m, 3}}});
            RatFunc rhs = -RatFunc::make(one_plus_q_power(3).shifted(2) * m3,
                                         LaurentPoly(cyclotomic(3)).pow(2));
            return congruent(wz_G({m, id == BoundaryId::g_m_2 ? 2 : -1}), rhs, modulus);
        }
    }
    throw std::invalid_argument("verify_boundary: unknown id");
}

bool reindex_identity_check(ReindexId id, long m) {
    require_odd(m, 1, "reindex_identity_check");
    const long fixed_k = id == ReindexId::sum_F_n1 ? 1 : -1;
    RatFunc lhs;
    for (long n = 0; n < m; ++n) lhs += wz_F({n, fixed_k});
    RatFunc q{LaurentPoly::q_power(1)};
    RatFunc rhs = id == ReindexId::sum_F_n1 ? q * qbinom_form_sum(1, m)
                                            : q * theorem_lhs(TheoremId::thm_1_2, m);
    return lhs == rhs;
}

CongruenceResult reindexed_top_summand_check(long m) {
    require_odd(m, 1, "reindexed_top_summand_check");
    RatFunc summand =
        RatFunc(LaurentPoly::q_power(1)) * theorem_summand(TheoremId::thm_1_1, m);
    Poly modulus = modulus_build({{{ModulusKind::q_integer, m, 4}}});
    return congruent(summand, RatFunc::zero(), modulus);
}

RatFunc conjecture61_expression(long n) {
    if (n < 1) throw std::invalid_argument("conjecture61_expression: n must be >= 1");
    RatFunc sum = qbinom_form_sum(1, n);
    RatFunc poch4{q_pochhammer({1, 1, n, true}).pow(4)};
    RatFunc prefactor_den{one_plus_q_power(1).pow(3) * LaurentPoly(q_integer(2 * n + 1)) *
                          LaurentPoly(q_binomial(2 * n, n))};
    return sum * poch4 / prefactor_den;
}

}  // namespace qc
