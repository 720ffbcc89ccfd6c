#include "qc/qobjects.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace qc {

Poly q_integer(long n) {
    if (n < 0) throw std::invalid_argument("q_integer: negative n");
    return Poly(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

LaurentPoly q_integer_signed(long m) {
    if (m >= 0) return LaurentPoly(q_integer(m));
    // (1 - q^m)/(1 - q) = -q^m (1 - q^{-m})/(1 - q) = -q^m [-m]
    return (-LaurentPoly(q_integer(-m))).shifted(m);
}

LaurentPoly q_pochhammer(const QPochhammerSpec& spec) {
    if (spec.step < 1 || spec.length < 0)
        throw std::invalid_argument("q_pochhammer: invalid spec");
    const int sign = spec.negate_base ? -1 : 1;
    LaurentPoly prod = LaurentPoly::one();
    for (long i = 0; i < spec.length; ++i)
        prod *= LaurentPoly::one_minus_q_power(spec.base_exp + i * spec.step, sign);
    return prod;
}

RatFunc q_pochhammer_inverse_guard(QPochhammerSpec spec, long signed_length) {
    if (signed_length < 0) return RatFunc::zero();
    spec.length = signed_length;
    return RatFunc::make(LaurentPoly::one(), q_pochhammer(spec));
}

namespace {

// Shared write-once caches. Values are deterministic, so a lost insertion
// race would recompute the identical polynomial.
std::mutex cache_mutex;

Poly& factorial_cache(long k, long step) {
    static std::vector<Poly> fac1{Poly::one()};
    static std::vector<Poly> fac2{Poly::one()};
    std::vector<Poly>& fac = step == 1 ? fac1 : fac2;
    while (static_cast<long>(fac.size()) <= k) {
        const long i = static_cast<long>(fac.size());
        fac.push_back(fac.back() *
                      (Poly::one() - Poly::monomial(Rational(1), static_cast<std::size_t>(i * step))));
    }
    return fac[static_cast<std::size_t>(k)];
}

}  // namespace

Poly q_factorial(long k) {
    if (k < 0) throw std::invalid_argument("q_factorial: negative k");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return factorial_cache(k, 1);
}

Poly q_factorial_sq(long k) {
    if (k < 0) throw std::invalid_argument("q_factorial_sq: negative k");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return factorial_cache(k, 2);
}

Poly q_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Poly::zero();
    return poly_divexact(q_factorial(n), q_factorial(k) * q_factorial(n - k));
}

Poly cyclotomic(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    static std::mutex mu;
    static std::map<long, Poly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // Phi_n = (q^n - 1) / prod of Phi_d over proper divisors d. The recursion
    // runs outside the lock; try_emplace keeps the first value inserted.
    Poly divisor_prod = Poly::one();
    for (long d = 1; d <= n / 2; ++d)
        if (n % d == 0) divisor_prod *= cyclotomic(d);
    Poly qn_minus_1 = Poly::monomial(Rational(1), static_cast<std::size_t>(n)) - Poly::one();
    Poly result = poly_divexact(qn_minus_1, divisor_prod);
    std::lock_guard<std::mutex> lock(mu);
    return cache.try_emplace(n, std::move(result)).first->second;
}

}  // namespace qc
