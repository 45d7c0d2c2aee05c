#pragma once

/**
 * @file bounds.hpp
 * @brief Closed-form anticoncentration bound evaluators. Each returns a
 *        BoundReport carrying the value, an applicability verdict, and the
 *        intermediate quantities the formula used.
 *
 * A bound evaluated outside its hypotheses is flagged, never suppressed;
 * comparison tables stay honest that way.
 */

#include "anticon/numeric.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace anticon {

/// Berry-Esseen absolute constant (Shevtsova's bound).
inline constexpr double kBerryEsseenC = 0.4748;

/// Maximum of the standard normal density, 1/sqrt(2*pi).
inline const double kNormalDensityMax = 1.0 / std::sqrt(2.0 * std::acos(-1.0));

struct BoundReport {
    std::string bound_name;
    double value = 0.0;
    std::optional<Rational> exact_value;  // set when the bound is an exact rational
    bool applicable = true;
    std::string reason_if_not;
    std::map<std::string, std::string> intermediates;

    bool operator==(const BoundReport&) const = default;
};

namespace detail {

inline std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

inline std::string fmt_bool(bool b) { return b ? "true" : "false"; }

}  // namespace detail

struct SigmaRho {
    double sigma;
    double rho;
};

/**
 * Exact finite-n moments of the uniform distribution on the centered
 * integer interval of n points (half-integer support when n is even):
 * sigma^2 = (n^2-1)/12 and rho = E|Y|^3 / sigma^3, both from closed-form
 * sums rather than the asymptotics n/(2*sqrt(3)) and 3*sqrt(3)/4.
 */
inline SigmaRho sigma_rho(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("support size must be >= 2");
    const Rational variance(Integer(n) * n - 1, 12);
    Rational third_abs_moment;
    if (n % 2 == 1) {
        const Integer m = (n - 1) / 2;            // sum_{j=1..m} j^3 = (m(m+1)/2)^2
        const Integer s = m * (m + 1) / 2;
        third_abs_moment = Rational(2 * s * s, n);
    } else {
        const Integer m = n / 2;                  // sum over half-integers 1/2, 3/2, ...
        third_abs_moment = Rational(m * m * (2 * m * m - 1), 4 * Integer(n));
    }
    const double sigma = std::sqrt(to_double(variance));
    const double rho = to_double(third_abs_moment) / (sigma * sigma * sigma);
    return {sigma, rho};
}

/**
 * Finite-n interval bound for the l-fold sum of uniforms on an n-point
 * set: [2*C*rho/sqrt(l-1) + phi_max*n/(sigma*sqrt(l-1))]/n. Always
 * reported; a "nontrivial" intermediate records whether it beats 1/n.
 */
inline BoundReport berry_esseen_interval_bound(std::int64_t n, std::int64_t ell) {
    if (n < 2) throw std::invalid_argument("support size must be >= 2");
    if (ell < 2) throw std::invalid_argument("ell must be >= 2");
    const auto [sigma, rho] = sigma_rho(n);
    const double base = (2.0 * kBerryEsseenC * rho + kNormalDensityMax * static_cast<double>(n) / sigma) /
                        static_cast<double>(n);
    const double scale = std::sqrt(static_cast<double>(ell - 1));
    const double value = base / scale;
    BoundReport r;
    r.bound_name = "berry-esseen";
    r.value = value;
    r.intermediates["sigma"] = detail::fmt_double(sigma);
    r.intermediates["rho"] = detail::fmt_double(rho);
    r.intermediates["c_berry_esseen"] = detail::fmt_double(kBerryEsseenC);
    r.intermediates["phi_max"] = detail::fmt_double(kNormalDensityMax);
    r.intermediates["term_berry_esseen"] = detail::fmt_double(2.0 * kBerryEsseenC * rho / scale);
    r.intermediates["term_density"] = detail::fmt_double(kNormalDensityMax * static_cast<double>(n) / (sigma * scale));
    r.intermediates["nontrivial"] = detail::fmt_bool(value < 1.0 / static_cast<double>(n));
    return r;
}

/// Ordered triples from the n-point interval landing on the peak:
/// (3n^2+1)/4 for odd n, 3n^2/4 for even n.
inline Integer peak_triple_count(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("support size must be >= 2");
    const Integer nn = Integer(n) * n;
    return (n % 2 == 1) ? Integer((3 * nn + 1) / 4) : Integer(3 * nn / 4);
}

/**
 * Exact bound on the 3-fold sum of uniforms on n distinct integers:
 * (3+1/n^2)/(4n) for odd n, 3/(4n) for even n. This is a statement over
 * Z; transferring it to Z_p needs the Freiman predicate below.
 */
inline BoundReport triple_bound(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("support size must be >= 2");
    const Integer count = peak_triple_count(n);
    const Rational value(count, Integer(n) * n * n);
    BoundReport r;
    r.bound_name = "triple";
    r.value = to_double(value);
    r.exact_value = value;
    r.intermediates["peak_count"] = count.str();
    r.intermediates["parity"] = (n % 2 == 1) ? "odd" : "even";
    return r;
}

struct PeakLocation {
    Rational centered;          // 0 or -1/2 on the centered interval
    std::int64_t translated;    // floor(l(n+1)/2) on support {1..n}
};

/// Peak of the l-fold sum of uniforms on the centered n-point interval.
inline PeakLocation peak_location(std::int64_t n, std::int64_t ell) {
    if (n < 2) throw std::invalid_argument("support size must be >= 2");
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    const bool at_zero = (ell % 2 == 0) || (n % 2 == 1);
    return {at_zero ? Rational(0) : Rational(-1, 2), ell * (n + 1) / 2};
}

/// sqrt(8/(pi*l)) * (1 + 2/sqrt(l) + (3/4)^(l/2+3) * l^(3/2)).
inline double lev_coefficient(std::int64_t ell) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    const double l = static_cast<double>(ell);
    const double pi = std::acos(-1.0);
    return std::sqrt(8.0 / (pi * l)) *
           (1.0 + 2.0 / std::sqrt(l) + std::pow(0.75, l / 2.0 + 3.0) * std::pow(l, 1.5));
}

/// 1/p + C~(l)/n for uniform summands on an n-subset of Z_p.
inline BoundReport lev_bound(std::int64_t p, std::int64_t n, std::int64_t ell) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (n < 2 || n > p) throw std::invalid_argument("need 2 <= n <= p");
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    const double c_tilde = lev_coefficient(ell);
    const double value = 1.0 / static_cast<double>(p) + c_tilde / static_cast<double>(n);
    BoundReport r;
    r.bound_name = "lev";
    r.value = value;
    r.intermediates["c_tilde"] = detail::fmt_double(c_tilde);
    r.intermediates["trivial_reference"] = detail::fmt_double(1.0 / static_cast<double>(n));
    r.intermediates["nontrivial"] = detail::fmt_bool(value < 1.0 / static_cast<double>(n));
    return r;
}

/**
 * Iterated 3-fold bound: with k the largest integer such that 3^k <= ell,
 * the ell-fold sum of lambda-bounded i.i.d. variables concentrates at
 * most c3^k * lambda, provided p > 2/(c3^(k-1) * lambda).
 */
inline BoundReport iterated_bound(const Rational& lambda, std::int64_t ell, std::int64_t p,
                                  const Rational& c3) {
    if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
    if (lambda > Rational(9, 10)) throw std::invalid_argument("lambda must be <= 9/10");
    if (ell < 3) throw std::invalid_argument("ell must be >= 3");
    if (c3 <= 0 || c3 >= 1) throw std::invalid_argument("c3 must lie in (0,1)");
    std::int64_t k = 0, power = 1;
    while (power <= ell / 3) power *= 3, ++k;
    const Rational value = rational_pow(c3, k) * lambda;
    const Rational threshold_induction = Rational(2) / (rational_pow(c3, k - 1) * lambda);
    const Rational threshold_headline = Rational(2) / (rational_pow(c3, k) * lambda);
    BoundReport r;
    r.bound_name = "iterated";
    r.value = to_double(value);
    r.exact_value = value;
    r.applicable = Rational(p) > threshold_induction;
    if (!r.applicable)
        r.reason_if_not = "p <= 2/(c3^(k-1)*lambda) = " + decimal_string(threshold_induction);
    r.intermediates["k"] = std::to_string(k);
    r.intermediates["ell0"] = std::to_string(power);
    r.intermediates["p_min_induction"] = decimal_string(threshold_induction);
    r.intermediates["p_min_headline"] = decimal_string(threshold_headline);
    return r;
}

/// nu = -log_3(c3), evaluated through log1p on the exact gap 1-c3.
inline double nu_exponent(const Rational& c3) {
    if (c3 <= 0 || c3 >= 1) throw std::invalid_argument("c3 must lie in (0,1)");
    const double gap = to_double(c3 - 1);  // negative, exact until the final rounding
    return -std::log1p(gap) / std::log(3.0);
}

/**
 * Whether the integer-domain bounds transfer to Z_k: every prime factor
 * of k must exceed n^n and the order ell must satisfy ell <= n. The
 * factorization is the caller's claim; multiplicities included.
 */
inline bool freiman_transfer_applicable(const Integer& k, const std::vector<Integer>& prime_factors,
                                        std::int64_t n, std::int64_t ell) {
    if (prime_factors.empty()) throw std::invalid_argument("empty factorization");
    Integer product = 1;
    for (const auto& f : prime_factors) product *= f;
    if (product != k) throw std::invalid_argument("factors do not multiply to k");
    if (n < 2) throw std::invalid_argument("support size must be >= 2");
    if (ell > n) return false;
    const Integer n_to_n = boost::multiprecision::pow(Integer(n), static_cast<unsigned>(n));
    for (const auto& f : prime_factors)
        if (f <= n_to_n) return false;
    return true;
}

/**
 * Evaluates every bound that could apply to an ell-fold sum on Z_p with
 * per-variable bound lambda (uniform-on-n-set instances are recognized by
 * lambda == 1/n) and returns the smallest applicable value. The full
 * comparison is kept in the intermediates.
 */
inline BoundReport best_bound(std::int64_t p, std::int64_t n, std::int64_t ell,
                              const Rational& lambda, const Rational& c3) {
    if (lambda <= 0 || lambda > 1) throw std::invalid_argument("lambda must lie in (0,1]");
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    const bool uniform = (n >= 2) && (lambda == Rational(1, Integer(n)));

    std::vector<BoundReport> candidates;
    {
        BoundReport trivial;
        trivial.bound_name = "trivial";
        trivial.value = to_double(lambda);
        trivial.exact_value = lambda;
        candidates.push_back(std::move(trivial));
    }
    if (uniform && ell == 3) {
        BoundReport t = triple_bound(n);
        if (!is_prime(p)) {
            t.applicable = false;
            t.reason_if_not = "p not prime";
        } else if (!freiman_transfer_applicable(Integer(p), {Integer(p)}, n, ell)) {
            t.applicable = false;
            t.reason_if_not = "no Freiman transfer: p <= n^n";
        }
        candidates.push_back(std::move(t));
    }
    if (uniform) {
        try {
            candidates.push_back(lev_bound(p, n, ell));
        } catch (const std::invalid_argument& e) {
            BoundReport lev;
            lev.bound_name = "lev";
            lev.applicable = false;
            lev.reason_if_not = e.what();
            candidates.push_back(std::move(lev));
        }
    }
    if (ell >= 3 && lambda <= Rational(9, 10)) {
        candidates.push_back(iterated_bound(lambda, ell, p, c3));
    }

    const BoundReport* winner = nullptr;
    for (const auto& c : candidates) {
        if (!c.applicable) continue;
        if (!winner || c.value < winner->value) winner = &c;
    }
    BoundReport r = *winner;  // trivial bound guarantees a winner exists
    r.intermediates["winner"] = r.bound_name;
    r.bound_name = "best";
    for (const auto& c : candidates) {
        r.intermediates["candidate." + c.bound_name + ".value"] =
            c.applicable ? detail::fmt_double(c.value) : "n/a";
        r.intermediates["candidate." + c.bound_name + ".applicable"] = detail::fmt_bool(c.applicable);
        if (!c.applicable)
            r.intermediates["candidate." + c.bound_name + ".reason"] = c.reason_if_not;
    }
    return r;
}

}  // namespace anticon
