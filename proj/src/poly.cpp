#include "qc/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qc {

Poly::Poly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::variable() { return monomial(Rational(1), 1); }

Poly Poly::monomial(const Rational& c, std::size_t exp) {
    if (c == 0) return {};
    std::vector<Rational> v(exp + 1, Rational(0));
    v[exp] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const Rational& Poly::leading() const {
    if (c_.empty()) throw std::domain_error("Poly::leading: zero polynomial");
    return c_.back();
}

bool Poly::is_monic() const { return !c_.empty() && c_.back() == 1; }

bool Poly::has_integer_coeffs() const {
    return std::all_of(c_.begin(), c_.end(),
                       [](const Rational& r) { return r.get_den() == 1; });
}

std::size_t Poly::low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return i;
    return 0;
}

const Rational& Poly::coeff(std::size_t i) const {
    static const Rational kZero(0);
    return i < c_.size() ? c_[i] : kZero;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly Poly::scaled(const Rational& s) const {
    if (s == 0) return {};
    Poly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::shifted(long e) const {
    if (is_zero() || e == 0) return *this;
    if (e < 0) {
        const auto drop = static_cast<std::size_t>(-e);
        if (low_order() < drop)
            throw std::domain_error("Poly::shifted: negative shift below low order");
        return Poly(std::vector<Rational>(c_.begin() + static_cast<long>(drop), c_.end()));
    }
    std::vector<Rational> v(c_.size() + static_cast<std::size_t>(e), Rational(0));
    std::copy(c_.begin(), c_.end(), v.begin() + e);
    return Poly(std::move(v));
}

Poly Poly::pow(unsigned long e) const {
    Poly acc = Poly::one();
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << c.get_str();
        if (i > 0) {
            if (c != 1) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Scale a rational vector to integers: out[i] = c[i] * L with L = lcm of
// denominators. Returns L.
Int clear_denominators(std::span<const Rational> c, std::vector<Int>& out) {
    Int l(1);
    for (const auto& r : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
    out.resize(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Int scale = l / Int(c[i].get_den());
        out[i] = Int(c[i].get_num()) * scale;
    }
    return l;
}

// Integer convolution kernel. Each output coefficient is an independent dot
// product, so the loop parallelizes without any synchronization and the
// result is bit-identical to the serial order (exact arithmetic).
void convolve(const std::vector<Int>& a, const std::vector<Int>& b,
              std::vector<Int>& out) {
    const long la = static_cast<long>(a.size());
    const long lb = static_cast<long>(b.size());
    const long lo = la + lb - 1;
    out.assign(static_cast<std::size_t>(lo), Int(0));
    const bool big = static_cast<long long>(la) * lb >= 1 << 14;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 32) if (big)
#endif
    for (long k = 0; k < lo; ++k) {
        Int acc(0);
        const long i0 = std::max(0L, k - lb + 1);
        const long i1 = std::min(k, la - 1);
        for (long i = i0; i <= i1; ++i)
            mpz_addmul(acc.get_mpz_t(), a[static_cast<std::size_t>(i)].get_mpz_t(),
                       b[static_cast<std::size_t>(k - i)].get_mpz_t());
        out[static_cast<std::size_t>(k)] = std::move(acc);
    }
    (void)big;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Clear denominators once, convolve over Z, scale back. Avoids one mpq
    // canonicalization per inner-loop step.
    std::vector<Int> ia, ib, ic;
    Int da = clear_denominators(a.coeffs(), ia);
    Int db = clear_denominators(b.coeffs(), ib);
    convolve(ia, ib, ic);
    Int d = da * db;
    std::vector<Rational> rc(ic.size());
    for (std::size_t i = 0; i < ic.size(); ++i) rc[i] = make_rational(ic[i], d);
    return Poly(std::move(rc));
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

namespace ref {

Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a.coeff(i) * b.coeff(j);
    }
    return Poly(std::move(out));
}

}  // namespace ref

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    const long db = b.degree();
    if (a.degree() < db) return {Poly::zero(), a};

    std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational inv_lc = Rational(1) / b.leading();

    for (long i = a.degree(); i >= db; --i) {
        Rational t = rem[static_cast<std::size_t>(i)];
        if (t == 0) continue;
        t *= inv_lc;
        quot[static_cast<std::size_t>(i - db)] = t;
        for (long j = 0; j <= db; ++j) {
            const Rational& bj = b.coeff(static_cast<std::size_t>(j));
            if (bj != 0) rem[static_cast<std::size_t>(i - db + j)] -= t * bj;
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("poly_divexact: division is not exact");
    return q;
}

Rational poly_content(const Poly& a) {
    if (a.is_zero()) return Rational(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& c : a.coeffs()) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    return make_rational(num_gcd, den_lcm);
}

Poly primitive_integer_part(const Poly& a) {
    if (a.is_zero()) return a;
    Rational c = poly_content(a);
    if (a.leading() < 0) c = -c;
    return a.scaled(Rational(1) / c);
}

Poly monic(const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return a.scaled(Rational(1) / a.leading());
}

namespace ref {

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("poly_gcd: gcd(0, 0) undefined");
    Poly x = a, y = b;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Poly r = poly_divrem(x, y).second;
        x = std::move(y);
        y = monic(r);  // keep coefficient growth in check
    }
    return monic(x);
}

}  // namespace ref

}  // namespace qc
