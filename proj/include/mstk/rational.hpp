#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "mstk/errors.hpp"

namespace mstk {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision fraction. cpp_rational keeps the canonical form
/// this library relies on: lowest terms, positive denominator, zero as 0/1.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a" or "a/b" in decimal, optional leading '-'. Rejects everything
/// else, including a zero denominator.
inline Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        return InputError("not a rational: '" + std::string(text) + "' (expected \"a\" or \"a/b\")");
    };
    std::size_t pos = 0;
    const auto read_integer = [&](bool allow_sign) -> BigInt {
        std::size_t start = pos;
        if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
        std::size_t digits_begin = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == digits_begin) throw bad();
        return BigInt(std::string(text.substr(start, pos - start)));
    };
    const BigInt num = read_integer(true);
    if (pos == text.size()) return Rational(num);
    if (text[pos] != '/') throw bad();
    ++pos;
    const BigInt den = read_integer(false);
    if (pos != text.size()) throw bad();
    if (den == 0) throw InputError("rational denominator is zero: '" + std::string(text) + "'");
    return Rational(num, den);
}

/// Renders in the same "a" / "a/b" form parse_rational accepts.
inline std::string format_rational(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// base^exp for any integer exp; negative exponents require base != 0.
inline Rational rational_pow(const Rational& base, long long exp) {
    if (exp == 0) return Rational(1);
    if (base == 0 && exp < 0) throw ParameterError("rational_pow: 0 cannot be raised to a negative power");
    const auto mag = static_cast<unsigned long long>(exp < 0 ? -exp : exp);
    const BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(base), static_cast<unsigned>(mag));
    const BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(base), static_cast<unsigned>(mag));
    return exp > 0 ? Rational(num, den) : Rational(den, num);
}

/// |q| exactly.
inline Rational rational_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace mstk
