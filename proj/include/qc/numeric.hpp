#ifndef QC_NUMERIC_HPP
#define QC_NUMERIC_HPP

#include <stdexcept>

#include "qc/ratfunc.hpp"

namespace qc {

/// The q -> 1 specializations, all exact rational arithmetic:
///   div1_half  sum_{k=0}^{(p-1)/2} (3k+1)/16^k C(2k,k)^3          == p       mod p^3
///   div1_full  same summand, k up to p-1                          == p       mod p^3
///   guo1       sum_{k=0}^{p-1} 6k^4/(16^k(2k-1)) C(2k,k)^3        == p+2p^3  mod p^4
///   wang       sum_{k=0}^{p-1} (3k-1)(1/2)_k(-1/2)_k^2 4^k/k!^3   == p-2p^3  mod p^4
///   guo1_pr    guo1 summand, k up to p^r-1                        == p^r     mod p^{r+3}
///   wang_pr    wang summand, k up to p^r-1                        == p^r     mod p^{r+3}
enum class SuperId { div1_half, div1_full, guo1, wang, guo1_pr, wang_pr };

struct SupercongruenceSpec {
    SuperId id;
    long p;
    long r = 1;  // only meaningful for *_pr ids, where it must be >= 2
};

/// Integer divisibility claims, for n >= 2:
///   sun_3k1  2n C(2n,n) | sum_{k=0}^{n-1} (3k+1) C(2k,k)^3 16^{n-k-1}
///   sunby    2n C(2n,n) | sum_{k=0}^{n-1} 6k^4/(2k-1) C(2k,k)^3 16^{n-k-1}
///   strong   4n C(2n,n) | the sunby sum
enum class DivisibilityId { sun_3k1, sunby, strong };

struct DivisibilitySpec {
    DivisibilityId id;
    long n;
};

/// q = 1 is a root of the reduced denominator: reported distinctly from
/// arithmetic or usage errors.
struct PoleAtOne : std::domain_error {
    PoleAtOne() : std::domain_error("eval_at_one: pole at q = 1") {}
};

/// Rising factorial a(a+1)...(a+k-1); k = 0 gives 1.
Rational pochhammer(const Rational& a, long k);

/// C(2k,k) by the multiplicative recurrence. k >= 0.
Int central_binomial(long k);

/// Trial division; the inputs are tiny.
bool is_prime(long p);

/// The exact rational value of the spec's sum (validates the spec).
Rational supercongruence_sum(const SupercongruenceSpec& spec);

/// x interpreted modulo `modulus` via modular inverse of the denominator,
/// normalized to [0, modulus). Throws std::domain_error when the denominator
/// shares a factor with the modulus.
Int residue_mod(const Rational& x, const Int& modulus);

/// Sums exactly, asserts the reduced denominator is coprime to p (hard
/// error otherwise), reduces modulo the stated power of p, compares with the
/// target. Composite p or out-of-range p/r is a usage error.
bool check_supercongruence(const SupercongruenceSpec& spec);

bool check_divisibility(const DivisibilitySpec& spec);

/// Exact evaluation of the reduced rational function at q = 1; throws
/// PoleAtOne when the denominator vanishes there.
Rational eval_at_one(const RatFunc& r);

}  // namespace qc

#endif
