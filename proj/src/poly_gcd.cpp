#include <cstdint>
#include <mutex>
#include <optional>
#include <vector>

#include "qc/poly.hpp"

namespace qc {

namespace {

// ---- word-size modular arithmetic (primes just above 2^62) ----

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 base, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

const std::vector<u64>& prime_pool() {
    static std::vector<u64> primes;
    static std::once_flag once;
    std::call_once(once, [] {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, 62);
        for (int i = 0; i < 128; ++i) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            primes.push_back(p.get_ui());
        }
    });
    return primes;
}

// ---- dense polynomials over Z/p, trailing coefficient nonzero ----

using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce_mod(const std::vector<Int>& a, u64 p) {
    ModPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
    trim(r);
    return r;
}

// x <- x mod y; requires deg x >= deg y, y nonzero.
void mod_rem(ModPoly& x, const ModPoly& y, u64 p) {
    const std::size_t dy = y.size() - 1;
    const u64 inv = invmod(y.back(), p);
    for (std::size_t i = x.size(); i-- > dy;) {
        const u64 t = mulmod(x[i], inv, p);
        if (t == 0) continue;
        for (std::size_t j = 0; j <= dy; ++j) {
            const u64 sub = mulmod(t, y[j], p);
            u64& xi = x[i - dy + j];
            xi = (xi >= sub) ? xi - sub : xi + (p - sub);
        }
    }
    x.resize(dy);
    trim(x);
}

ModPoly mod_gcd(ModPoly a, ModPoly b, u64 p) {
    if (a.size() < b.size()) a.swap(b);
    while (!b.empty()) {
        mod_rem(a, b, p);
        a.swap(b);
    }
    if (!a.empty()) {
        const u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

// ---- integer helpers ----

std::vector<Int> to_int_vec(const Poly& a) {
    std::vector<Int> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = Int(a.coeff(i).get_num());
    return v;
}

// Exact division over Z from the low-order end; bails out on the first
// non-exact step, so rejecting a wrong candidate is cheap.
std::optional<std::vector<Int>> divexact_int(const std::vector<Int>& a,
                                             const std::vector<Int>& c) {
    if (c.empty() || a.size() < c.size()) return std::nullopt;
    if (c[0] == 0) return std::nullopt;
    std::vector<Int> rem = a;
    std::vector<Int> quot(a.size() - c.size() + 1);
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (!mpz_divisible_p(rem[i].get_mpz_t(), c[0].get_mpz_t())) return std::nullopt;
        Int t = rem[i] / c[0];
        if (t != 0)
            for (std::size_t j = 1; j < c.size(); ++j)
                mpz_submul(rem[i + j].get_mpz_t(), t.get_mpz_t(), c[j].get_mpz_t());
        quot[i] = std::move(t);
    }
    for (std::size_t i = quot.size(); i < rem.size(); ++i)
        if (rem[i] != 0) return std::nullopt;
    return quot;
}

void make_primitive(std::vector<Int>& v) {
    Int g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return;
    if (v.back() < 0) g = -g;
    for (auto& c : v) c /= g;
}

Poly from_int_vec(const std::vector<Int>& v) {
    std::vector<Rational> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
    return Poly(std::move(c));
}

}  // namespace

// Brown-style small-prime gcd: compute monic gcd images mod word-size primes,
// scale by gcd(lc(A), lc(B)) to pin the integer leading coefficient, combine
// by CRT with symmetric lifting, and accept once the primitive candidate
// divides both inputs exactly. Unlucky primes only ever raise the image
// degree, so the minimal-degree image wins; exact division is the final
// arbiter either way.
Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("poly_gcd: gcd(0, 0) undefined");
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.degree() == 0 || b.degree() == 0) return Poly::one();

    // Split off the common power of q so constant terms are nonzero.
    const std::size_t va = a.low_order(), vb = b.low_order();
    const std::size_t v = std::min(va, vb);
    std::vector<Int> A = to_int_vec(primitive_integer_part(a));
    std::vector<Int> B = to_int_vec(primitive_integer_part(b));
    A.erase(A.begin(), A.begin() + static_cast<long>(va));
    B.erase(B.begin(), B.begin() + static_cast<long>(vb));

    Int gamma;
    mpz_gcd(gamma.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());

    std::vector<Int> H, prev;  // CRT accumulator, symmetric representatives
    Int M(1);
    std::size_t best_deg = 0;
    bool have_image = false;

    for (u64 p : prime_pool()) {
        if (mpz_fdiv_ui(A.back().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(B.back().get_mpz_t(), p) == 0) continue;

        ModPoly gp = mod_gcd(reduce_mod(A, p), reduce_mod(B, p), p);
        if (gp.size() <= 1) return Poly::one().shifted(v);

        const u64 gam_p = mpz_fdiv_ui(gamma.get_mpz_t(), p);
        for (auto& c : gp) c = mulmod(c, gam_p, p);

        bool fresh = false;
        if (!have_image || gp.size() - 1 < best_deg) {
            // first usable prime, or every previous prime was unlucky
            have_image = true;
            fresh = true;
            best_deg = gp.size() - 1;
            M = Int(mpz_class(p));
            H.resize(gp.size());
            for (std::size_t i = 0; i < gp.size(); ++i) H[i] = Int(mpz_class(gp[i]));
        } else if (gp.size() - 1 > best_deg) {
            continue;  // unlucky prime
        } else {
            const u64 m_inv = invmod(mpz_fdiv_ui(M.get_mpz_t(), p), p);
            for (std::size_t i = 0; i < H.size(); ++i) {
                const u64 hi = mpz_fdiv_ui(H[i].get_mpz_t(), p);
                const u64 delta = (gp[i] >= hi) ? gp[i] - hi : gp[i] + (p - hi);
                H[i] += M * Int(mpz_class(mulmod(delta, m_inv, p)));
            }
            M *= Int(mpz_class(p));
        }

        const Int half = M / 2;
        for (auto& h : H)
            if (h > half) h -= M;

        if (fresh || H == prev) {
            std::vector<Int> cand = H;
            make_primitive(cand);
            if (!cand.empty() && cand[0] != 0) {
                if (auto qa = divexact_int(A, cand); qa) {
                    if (auto qb = divexact_int(B, cand); qb)
                        return monic(from_int_vec(cand)).shifted(v);
                }
            }
        }
        prev = H;
    }
    // Prime pool exhausted (pathological coefficients): fall back to the
    // exact serial reference.
    return ref::gcd(a, b);
}

}  // namespace qc
