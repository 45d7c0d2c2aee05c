#pragma once

/**
 * @file numeric.hpp
 * @brief Exact arithmetic backbone: arbitrary-precision integers and
 *        rationals, parsing/printing helpers, and small number-theory
 *        utilities shared by the rest of the library.
 *
 * The exact backend is authoritative everywhere a certificate or an
 * oracle is involved; float64 is offered separately for large moduli and
 * benchmarks. Rationals are kept canonical (reduced, positive
 * denominator) by the underlying representation.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace anticon {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// "num/den" in lowest terms, e.g. "7/27". Integers print as "n/1".
inline std::string fraction_string(const Rational& q) {
    return num(q).str() + "/" + den(q).str();
}

/// Decimal approximation to `digits` significant digits (display only;
/// exactness lives in the fraction form).
inline std::string decimal_string(const Rational& q, int digits = 12) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, to_double(q));
    return buf;
}

inline Integer parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    try {
        return Integer(std::string(s));
    } catch (const std::exception&) {
        throw std::invalid_argument("bad integer literal: '" + std::string(s) + "'");
    }
}

/// Parses "a/b", "123", "0.25", "-1.3e-12" into an exact rational.
/// Decimal forms are read digit-exactly (0.1 -> 1/10), never via float64.
inline Rational parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        Integer n = parse_integer(s.substr(0, slash));
        Integer d = parse_integer(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(s) + "'");
        return Rational(n, d);
    }
    std::size_t i = 0;
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') negative = (s[i] == '-'), ++i;
    Integer mantissa = 0;
    long frac_digits = 0, exponent = 0;
    bool any_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') {
            mantissa = mantissa * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            any_digit = true;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else if ((c == 'e' || c == 'E') && any_digit) {
            exponent = std::stol(std::string(s.substr(i + 1)));
            i = s.size() - 1;
        } else {
            throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
        }
    }
    if (!any_digit) throw std::invalid_argument("bad rational literal: '" + std::string(s) + "'");
    if (negative) mantissa = -mantissa;
    long ten_power = exponent - frac_digits;
    Rational q(mantissa);
    if (ten_power > 0) q *= Rational(boost::multiprecision::pow(Integer(10), static_cast<unsigned>(ten_power)));
    if (ten_power < 0) q /= Rational(boost::multiprecision::pow(Integer(10), static_cast<unsigned>(-ten_power)));
    return q;
}

inline Rational rational_pow(const Rational& base, std::int64_t e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("0 raised to a negative power");
        return Rational(1) / rational_pow(base, -e);
    }
    Rational result(1), b = base;
    auto k = static_cast<std::uint64_t>(e);
    while (k > 0) {
        if (k & 1) result *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return result;
}

/// Deterministic trial division, adequate for p <= 1e12 at desk scale.
inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

/// SplitMix64 step; used to derive independent per-trial seeds.
inline std::uint64_t split_mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace anticon
