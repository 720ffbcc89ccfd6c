#ifndef QC_CONGRUENCE_HPP
#define QC_CONGRUENCE_HPP

#include <vector>

#include "qc/poly.hpp"
#include "qc/ratfunc.hpp"

namespace qc {

/// Composite modulus: a product of powers of q-integers [n] and cyclotomic
/// polynomials Phi_n. Both families are monic, so every built modulus is.
enum class ModulusKind { q_integer, cyclotomic };

struct ModulusFactor {
    ModulusKind kind;
    long n;
    long power = 1;
};

struct ModulusSpec {
    std::vector<ModulusFactor> factors;
};

/// Expanded product polynomial. Throws std::invalid_argument on an empty
/// factor list, n < 1, or power < 1; asserts the result is monic.
Poly modulus_build(const ModulusSpec& spec);

/// Outcome of a congruence test. On pass the witness is the exact quotient
/// numerator = modulus * witness; on fail it is the nonzero remainder, of
/// degree below deg(modulus). Exact-identity checks (mod_n_identity) carry
/// modulus 1 and use the full difference numerator as the failure witness.
struct CongruenceResult {
    bool pass;
    Poly witness;
    Poly modulus;
    /// Diagnostic only: the congruence definition constrains the numerator
    /// alone, but a reduced denominator sharing a factor with the modulus
    /// would make the claim fragile, so it is reported.
    bool denominator_shares_modulus_factor;
};

/// a == b modulo the monic polynomial `modulus`: tests whether the modulus
/// divides the integer-primitive numerator of the reduced difference a - b.
/// Requires modulus monic and either nonconstant or exactly 1.
CongruenceResult congruent(const RatFunc& a, const RatFunc& b, const Poly& modulus);

/// The section-2 lemmas, per odd n > 1:
///   fermat          (-q;q)_{n-1}                  == 1        mod Phi_n
///   mod_n           (q;q^2)_n/((1-q)(q;q)_{n-1})  == [n]      mod [n] Phi_n
///   mod_n_new       (q;q^2)_{n-1}/(q;q)_{n-1}     == -[n] q   mod [n] Phi_n
///   mod_n_identity  (q;q^2)_n/((1-q)(q;q)_{n-1})  == [n] qbinom(2n,n)/(-q;q)_n, exactly
enum class LemmaId { fermat, mod_n, mod_n_new, mod_n_identity };

/// Throws std::invalid_argument unless n is odd and > 1.
CongruenceResult verify_lemma(LemmaId id, long n);

/// The auxiliary step inside the lemma proof: qbinom(2n,n)/(-q;q)_n == 1
/// mod Phi_n, for odd n > 1.
CongruenceResult check_mod_n_2(long n);

}  // namespace qc

#endif
