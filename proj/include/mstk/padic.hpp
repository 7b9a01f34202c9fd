#pragma once

#include <cstdint>
#include <string>

#include "mstk/errors.hpp"
#include "mstk/rational.hpp"

namespace mstk {

/// Deterministic trial division. Contexts are built once from small primes,
/// so nothing faster is needed.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (std::uint64_t i = 5; i <= n / i; i += 6) {
        if (n % i == 0 || n % (i + 2) == 0) return false;
    }
    return true;
}

/// A fixed prime p; construction validates primality so every context in
/// circulation carries a genuine prime.
class PAdicContext {
public:
    explicit PAdicContext(std::uint64_t p) : prime_(p) {
        if (!is_prime(p)) throw ParameterError("p-adic context requires a prime, got " + std::to_string(p));
    }
    std::uint64_t prime() const { return prime_; }

private:
    std::uint64_t prime_;
};

/// The exponent of p in a rational. Zero gets a distinguished infinite
/// valuation instead of a sentinel integer, so it can never leak into
/// exponent arithmetic.
class Valuation {
public:
    static Valuation infinity() { return Valuation(true, 0); }
    static Valuation of(long long v) { return Valuation(false, v); }

    bool is_infinity() const { return infinite_; }
    long long value() const {
        if (infinite_) throw Error("Valuation: no finite value, input was zero");
        return value_;
    }

    friend bool operator==(const Valuation&, const Valuation&) = default;

private:
    Valuation(bool infinite, long long value) : infinite_(infinite), value_(value) {}
    bool infinite_;
    long long value_;
};

namespace detail {

// Multiplicity of p in a nonzero integer, by repeated exact division.
inline long long prime_multiplicity(BigInt n, const BigInt& p) {
    long long count = 0;
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, p, q, r);
        if (r != 0) return count;
        n = q;
        ++count;
    }
}

}  // namespace detail

/// v_p(x): the unique j with x = (a/b) p^j and p dividing neither a nor b;
/// infinite for x = 0.
inline Valuation p_adic_valuation(const Rational& x, const PAdicContext& ctx) {
    if (x == 0) return Valuation::infinity();
    const BigInt p(ctx.prime());
    const long long num = detail::prime_multiplicity(boost::multiprecision::numerator(x), p);
    const long long den = detail::prime_multiplicity(boost::multiprecision::denominator(x), p);
    return Valuation::of(num - den);
}

/// |x|_p = p^{-v_p(x)} as an exact rational; |0|_p = 0. The result is always
/// zero or an integer power of p.
inline Rational p_adic_abs(const Rational& x, const PAdicContext& ctx) {
    const Valuation v = p_adic_valuation(x, ctx);
    if (v.is_infinity()) return Rational(0);
    return rational_pow(Rational(ctx.prime()), -v.value());
}

/// d_p(x, y) = |x - y|_p, exact.
inline Rational p_adic_distance(const Rational& x, const Rational& y, const PAdicContext& ctx) {
    return p_adic_abs(x - y, ctx);
}

/// Both sides of the strong triangle inequality for one triple.
struct UltrametricReport {
    Rational lhs;         // d_p(x, z)
    Rational strong_rhs;  // max(d_p(x, y), d_p(y, z))
    bool holds;           // lhs <= strong_rhs
};

inline UltrametricReport ultrametric_defect(const Rational& x, const Rational& y, const Rational& z,
                                            const PAdicContext& ctx) {
    UltrametricReport report;
    report.lhs = p_adic_distance(x, z, ctx);
    const Rational d_xy = p_adic_distance(x, y, ctx);
    const Rational d_yz = p_adic_distance(y, z, ctx);
    report.strong_rhs = d_xy < d_yz ? d_yz : d_xy;
    report.holds = report.lhs <= report.strong_rhs;
    return report;
}

/// Checks |xy|_p == |x|_p |y|_p exactly.
inline bool abs_multiplicativity_check(const Rational& x, const Rational& y, const PAdicContext& ctx) {
    return p_adic_abs(x * y, ctx) == p_adic_abs(x, ctx) * p_adic_abs(y, ctx);
}

}  // namespace mstk
