#ifndef QC_WZENGINE_HPP
#define QC_WZENGINE_HPP

#include "qc/congruence.hpp"
#include "qc/ratfunc.hpp"

namespace qc {

/// Lattice point for the certificate pair F(n,k), G(n,k); k may be negative.
struct WZPoint {
    long n = 0;
    long k = 0;
};

/// The five verified congruence families:
///   thm_1_1  sum [3k][2k][k]^2 / ([2k-1](-q;q)_k^4) qbinom(2k,k)^3 q^{-(k^2+3k)/2}
///   thm_1_2  sum [3k-1] (q;q^2)_k (q^{-1};q^2)_k^2 / ((q;q)_k^2 (q^2;q^2)_k) q^{(3k-k^2)/2}
///   qdiv     sum [3k+1] (q;q^2)_k^3 q^{-k(k+1)/2} / ((q;q)_k^2 (q^2;q^2)_k)
///   thm_5_1  sum [3k+5] (q;q^2)_k (q^5;q^2)_k^2 / (same) q^{-(k^2+9k)/2}
///   thm_5_2  sum [3k-3] (q;q^2)_k (q^{-3};q^2)_k^2 / (same) q^{(7k-k^2)/2}
/// all modulo [n] Phi_n(q)^3.
enum class TheoremId { thm_1_1, thm_1_2, qdiv, thm_5_1, thm_5_2 };

/// Boundary congruences for the certificate G at fixed second argument:
///   g_m_1     G(m,1)  == -(1+q) q [m]^3                  mod [m]^3 Phi_m
///   g_m_0     G(m,0)  == -(1+q^{-1}) q^2 [m]^3           mod [m]^3 Phi_m
///   g_m_2     G(m,2)  == -(1+q^3) q^2 / (1+q+q^2)^2 [m]^3  mod [m] Phi_m^3
///   g_m_neg1  G(m,-1) == same right side as g_m_2          mod [m] Phi_m^3
enum class BoundaryId { g_m_1, g_m_0, g_m_2, g_m_neg1 };

/// Factor-of-q bookkeeping between the certificate sums and the theorem sums:
///   sum_F_n1     sum_{n=0}^{m-1} F(n,1)  == q * (thm_1_1 form summed over k=1..m)
///   sum_F_nneg1  sum_{n=0}^{m-1} F(n,-1) == q * theorem_lhs(thm_1_2, m)
enum class ReindexId { sum_F_n1, sum_F_nneg1 };

/// F(n,k) = [3n+2k+1] (q;q^2)_n (q^{2k+1};q^2)_n^2 q^{-n(n+1)/2-(2n+1)k}
///          / ((q;q)_n^2 (q^2;q^2)_n). Requires p.n >= 0.
RatFunc wz_F(WZPoint p);

/// G(n,k) = -(1+q^{n+2k-1}) (q;q^2)_n (q^{2k+1};q^2)_{n-1}^2 q^{-n(n-1)/2-(2n-1)k}
///          / ((1-q)(q;q)_{n-1}^2 (q^2;q^2)_{n-1}); zero at n = 0 by the
///          reciprocal-of-negative-length convention.
RatFunc wz_G(WZPoint p);

/// F(n,k-1) - F(n,k) == G(n+1,k) - G(n,k), exactly.
bool wz_pair_check(WZPoint p);

/// sum_{n=0}^{m-1} [F(n,k-1) - F(n,k)] == G(m,k), exactly. Requires m >= 1.
bool telescope_check(long m, long k);

/// The k-th summand of the theorem's left side, as a reduced RatFunc.
RatFunc theorem_summand(TheoremId id, long k);

/// The full left-side sum, accumulated over the natural common denominator
/// and reduced once. Requires n odd; n > 1 (thm_1_1, thm_1_2, qdiv) or n > 3
/// (thm_5_1, thm_5_2).
RatFunc theorem_lhs(TheoremId id, long n);

/// The right side, including the rational (n^2-1)(1-q)^2/24 term.
RatFunc theorem_rhs(TheoremId id, long n);

/// congruent(theorem_lhs, theorem_rhs, [n] Phi_n^3).
CongruenceResult verify_theorem(TheoremId id, long n);

/// Requires m odd; m > 1 (g_m_1, g_m_0) or m > 3 (g_m_2, g_m_neg1).
CongruenceResult verify_boundary(BoundaryId id, long m);

/// Requires m odd > 1.
bool reindex_identity_check(ReindexId id, long m);

/// The k=m summand of the reindexed thm_1_1 sum is divisible by [m]^4.
CongruenceResult reindexed_top_summand_check(long m);

/// (1 / ((1+q)^3 [2n+1] qbinom(2n,n))) *
/// sum_{k=1}^{n} [3k][2k][k]^2 (-q;q)_n^4 / ([2k-1](-q;q)_k^4)
///               qbinom(2k,k)^3 q^{-(k^2+3k)/2},  reduced. Requires n >= 1.
RatFunc conjecture61_expression(long n);

/// True iff the reduced denominator is a power of q.
inline bool is_laurent(const RatFunc& r) { return r.is_laurent(); }

}  // namespace qc

#endif
