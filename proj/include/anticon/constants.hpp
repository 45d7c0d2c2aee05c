#pragma once

/**
 * @file constants.hpp
 * @brief Certified absolute constants C1, C2, C3 and the exponent nu.
 *
 * Each constant is produced by a float64 search (grid plus 1-D boundary
 * refinement; the defining residuals are strictly decreasing in the
 * second witness, so the feasible boundary is a function of the first)
 * and then re-verified in exact rational arithmetic at rational
 * witnesses. Upstream constants enter downstream constraints
 * monotonically, so propagating their certified upper bounds keeps the
 * whole chain sound without interval arithmetic.
 *
 * Conventions:
 *   C1 = 1 - eps1*eps2   subject to  7/(9(1-4e1-3e2)) + 12e1 + 9e2 <= 1 - e1*e2
 *   C2 = 1 - eps3        subject to  C1/(1-e3) + 3e3 <= 1 - e3
 *   C3 = 1 - eps4*eps5   subject to  3(e4+e5) + C2/((1-e4)^3(1-e5)) <= 1 - e4*e5
 *   nu: a rational lower bound on -log_3(C3), via -ln(1-x) >= x and a
 *       rational upper bound on ln 3 from the atanh(1/2) series.
 */

#include "anticon/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace anticon {

struct CertifiedConstant {
    std::string name;  // "C1", "C2", "C3", "nu"
    Rational value;    // upper bound; for nu a lower bound
    std::vector<std::pair<std::string, Rational>> witnesses;
    Rational residual;
    bool verified = false;
    std::vector<std::string> depends_on;

    const Rational& witness(const std::string& key) const {
        for (const auto& [k, v] : witnesses)
            if (k == key) return v;
        throw std::invalid_argument("missing witness '" + key + "' in certificate " + name);
    }

    bool operator==(const CertifiedConstant&) const = default;
};

inline constexpr int kLn3SeriesTerms = 40;

/// Rational upper bound on ln 3 = sum_{k>=0} 1/(4^k (2k+1)), with the
/// geometric tail bound (4/3) * t_K added to the partial sum.
inline Rational ln3_upper_bound(int terms = kLn3SeriesTerms) {
    if (terms < 1) throw std::invalid_argument("need at least one series term");
    Rational sum = 0;
    Integer pow4 = 1;
    for (int k = 0; k < terms; ++k) {
        sum += Rational(1, pow4 * (2 * k + 1));
        pow4 *= 4;
    }
    return sum + Rational(4, 3 * pow4 * (2 * terms + 1));
}

// ---------------------------------------------------------------------------
// Constraint residuals (exact)
// ---------------------------------------------------------------------------

/// RHS - LHS of the n-cleared C1 feasibility inequality. Nonnegative iff
/// (eps1, eps2) is feasible; the associated candidate is C1 = 1 - e1*e2.
inline Rational c1_constraint_residual(const Rational& eps1, const Rational& eps2) {
    const Rational cap(1, 24);
    if (eps1 < 0 || eps2 < 0 || eps1 > cap || eps2 > cap)
        throw std::invalid_argument("eps1, eps2 must lie in [0, 1/24]");
    const Rational u = 1 - 4 * eps1 - 3 * eps2;
    return 1 - eps1 * eps2 - Rational(7, 9) / u - 12 * eps1 - 9 * eps2;
}

/// Residual of C1/(1-eps3) + 3*eps3 <= 1 - eps3 at the given C1 bound.
inline Rational c2_constraint_residual(const Rational& eps3, const Rational& c1) {
    if (eps3 < 0 || eps3 >= 1) throw std::invalid_argument("eps3 must lie in [0, 1)");
    if (c1 <= 0 || c1 >= 1) throw std::invalid_argument("c1 must lie in (0, 1)");
    return (1 - eps3) - 3 * eps3 - c1 / (1 - eps3);
}

/// Residual of 3(e4+e5) + C2/((1-e4)^3 (1-e5)) <= 1 - e4*e5.
inline Rational c3_constraint_residual(const Rational& eps4, const Rational& eps5,
                                       const Rational& c2) {
    if (eps4 < 0 || eps4 >= 1) throw std::invalid_argument("eps4 must lie in [0, 1)");
    if (eps5 < 0 || eps5 >= Rational(1, 10)) throw std::invalid_argument("eps5 must lie in [0, 1/10)");
    if (c2 <= 0 || c2 >= 1) throw std::invalid_argument("c2 must lie in (0, 1)");
    const Rational q4 = 1 - eps4;
    return (1 - eps4 * eps5) - 3 * (eps4 + eps5) - c2 / (q4 * q4 * q4 * (1 - eps5));
}

namespace detail {

/// floor(q * D)/D; rounding toward zero is the sound direction for every
/// witness we snap (all residuals decrease in the witness being snapped).
inline Rational floor_to_denominator(const Rational& q, const Integer& D) {
    if (q < 0) throw std::invalid_argument("expected a nonnegative value");
    return Rational((num(q) * D) / den(q), D);
}

/// Largest x in [lo, hi] with F(x) >= 0, assuming F decreasing and
/// F(lo) >= 0. Exact bisection; returns a point that is itself feasible.
template <class F>
Rational largest_feasible(F&& residual, Rational lo, Rational hi, int steps) {
    if (residual(lo) < 0) throw std::logic_error("lower endpoint infeasible");
    if (residual(hi) >= 0) return hi;
    for (int i = 0; i < steps; ++i) {
        const Rational mid = (lo + hi) / 2;
        (residual(mid) >= 0 ? lo : hi) = mid;
    }
    return lo;
}

struct BoundarySearch {
    std::function<double(double, double)> residual;  // decreasing in 2nd arg
    double first_cap;
    double second_cap;

    double second_at(double x) const {
        if (residual(x, 0.0) < 0) return -1.0;
        double lo = 0.0, hi = second_cap;
        if (residual(x, hi) >= 0) return hi;
        for (int i = 0; i < 80; ++i) {
            const double mid = 0.5 * (lo + hi);
            (residual(x, mid) >= 0 ? lo : hi) = mid;
        }
        return lo;
    }

    double objective(double x) const {
        const double y = second_at(x);
        return y > 0 ? x * y : -1.0;
    }

    /// Grid argmax of x * second_at(x) followed by ternary refinement on
    /// the bracketing cells. Deterministic; nested grids keep doubled
    /// resolutions non-increasing in the certified constant.
    double maximize(int resolution, int rounds) const {
        int best = 1;
        double best_val = -1.0;
        for (int j = 1; j <= resolution; ++j) {
            const double x = first_cap * j / resolution;
            const double v = objective(x);
            if (v > best_val) best_val = v, best = j;
        }
        double lo = first_cap * (best - 1) / resolution;
        double hi = std::min(first_cap, first_cap * (best + 1) / static_cast<double>(resolution));
        if (lo <= 0.0) lo = first_cap / (4.0 * resolution);
        for (int i = 0; i < rounds; ++i) {
            const double m1 = lo + (hi - lo) / 3.0;
            const double m2 = hi - (hi - lo) / 3.0;
            if (objective(m1) < objective(m2)) lo = m1; else hi = m2;
        }
        return 0.5 * (lo + hi);
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Certification
// ---------------------------------------------------------------------------

/**
 * Minimizes C1 = 1 - eps1*eps2 over the feasible (eps1, eps2) region in
 * (0, 1/24]^2. The emitted witnesses are rationals with denominator 1e9
 * and the residual is re-evaluated exactly.
 */
inline CertifiedConstant certify_c1(int grid_resolution = 400, int refine_rounds = 90) {
    if (grid_resolution < 100) throw std::invalid_argument("grid resolution must be >= 100");
    detail::BoundarySearch search{
        [](double e1, double e2) {
            const double u = 1.0 - 4.0 * e1 - 3.0 * e2;
            if (u <= 0.0) return -1.0e9;
            return 1.0 - e1 * e2 - (7.0 / 9.0) / u - 12.0 * e1 - 9.0 * e2;
        },
        1.0 / 24.0, 1.0 / 24.0};
    const double e1_float = search.maximize(grid_resolution, refine_rounds);

    const Integer snap("1000000000");
    const Rational cap(1, 24);
    Rational eps1 = detail::floor_to_denominator(Rational(e1_float), snap);
    eps1 = std::clamp(eps1, Rational(1, snap), cap);
    Rational eps2 = detail::largest_feasible(
        [&](const Rational& q) { return c1_constraint_residual(eps1, q); }, Rational(0), cap, 64);
    eps2 = detail::floor_to_denominator(eps2, snap);
    if (eps2 <= 0) throw std::logic_error("C1 witness collapsed to the boundary");

    CertifiedConstant cert;
    cert.name = "C1";
    cert.value = 1 - eps1 * eps2;
    cert.witnesses = {{"eps1", eps1}, {"eps2", eps2}};
    cert.residual = c1_constraint_residual(eps1, eps2);
    cert.verified = cert.residual >= 0;
    return cert;
}

/**
 * Solves 4*e3^2 - 5*e3 + (1 - C1) = 0 for the root in (0, 1 - C1) and
 * emits a rational eps3 strictly below it, so that the defining
 * inequality holds exactly at the certified (upper-bound) C1. C2 = 1 - e3.
 */
inline CertifiedConstant certify_c2(const CertifiedConstant& c1_cert) {
    if (c1_cert.name != "C1" || !c1_cert.verified)
        throw std::invalid_argument("certify_c2 needs a verified C1 certificate");
    const Rational c1 = c1_cert.value;
    // q(e3) = 4 e3^2 - 5 e3 + (1 - C1): positive left of the root,
    // decreasing on [0, 5/8], and q(1-C1) = -4 C1 (1-C1) < 0.
    auto q = [&](const Rational& e3) { return 4 * e3 * e3 - 5 * e3 + (1 - c1); };
    Rational eps3 = detail::largest_feasible(q, Rational(0), 1 - c1, 70);
    eps3 = detail::floor_to_denominator(eps3, Integer("1000000000000000"));
    if (eps3 <= 0) throw std::logic_error("C2 witness collapsed to the boundary");

    CertifiedConstant cert;
    cert.name = "C2";
    cert.value = 1 - eps3;
    cert.witnesses = {{"eps3", eps3}};
    cert.residual = c2_constraint_residual(eps3, c1);
    cert.verified = cert.residual >= 0;
    cert.depends_on = {"C1"};
    return cert;
}

struct C3Certification {
    CertifiedConstant c3;
    CertifiedConstant nu;
};

/**
 * Maximizes eps4*eps5 subject to the C3 constraint at the certified
 * (upper-bound) C2, then derives the certified lower bound on
 * nu = -log_3(C3) from nu >= (1-C3)/ln3 and the rational ln3 upper bound.
 */
inline C3Certification certify_c3(const CertifiedConstant& c2_cert, int grid_resolution = 400,
                                  int refine_rounds = 90) {
    if (c2_cert.name != "C2" || !c2_cert.verified)
        throw std::invalid_argument("certify_c3 needs a verified C2 certificate");
    if (grid_resolution < 100) throw std::invalid_argument("grid resolution must be >= 100");
    const Rational c2 = c2_cert.value;
    const double c2f = to_double(c2);
    auto residf = [c2f](double e4, double e5) {
        const double q4 = 1.0 - e4;
        return (1.0 - e4 * e5) - 3.0 * (e4 + e5) - c2f / (q4 * q4 * q4 * (1.0 - e5));
    };
    // Feasible ceiling for eps4 at eps5 = 0: brackets the whole region.
    double lo = 0.0, hi = 0.3;
    for (int i = 0; i < 80; ++i) {
        const double mid = 0.5 * (lo + hi);
        (residf(mid, 0.0) >= 0 ? lo : hi) = mid;
    }
    detail::BoundarySearch search{residf, lo, 0.1};
    const double e4_float = search.maximize(grid_resolution, refine_rounds);

    const Integer snap("1000000000000000");
    Rational eps4 = detail::floor_to_denominator(Rational(e4_float), snap);
    eps4 = std::max(eps4, Rational(1, snap));
    Rational eps5 = detail::largest_feasible(
        [&](const Rational& q) { return c3_constraint_residual(eps4, q, c2); }, Rational(0),
        Rational(1, 10) - Rational(1, snap), 70);
    eps5 = detail::floor_to_denominator(eps5, snap);
    if (eps5 <= 0) throw std::logic_error("C3 witness collapsed to the boundary");

    CertifiedConstant c3;
    c3.name = "C3";
    c3.value = 1 - eps4 * eps5;
    c3.witnesses = {{"eps4", eps4}, {"eps5", eps5}};
    c3.residual = c3_constraint_residual(eps4, eps5, c2);
    c3.verified = c3.residual >= 0;
    c3.depends_on = {"C2"};

    const Rational gap = eps4 * eps5;  // = 1 - C3
    const Rational ln3_up = ln3_upper_bound();
    CertifiedConstant nu;
    nu.name = "nu";
    nu.value = detail::floor_to_denominator(gap / ln3_up, boost::multiprecision::pow(Integer(10), 30));
    nu.witnesses = {{"ln3_upper", ln3_up}};
    nu.residual = gap - nu.value * ln3_up;
    nu.verified = nu.value > 0 && nu.residual >= 0;
    nu.depends_on = {"C3"};
    return {std::move(c3), std::move(nu)};
}

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

namespace detail {

inline const CertifiedConstant& find_upstream(const std::vector<CertifiedConstant>& upstream,
                                              const std::string& name) {
    for (const auto& c : upstream)
        if (c.name == name) return c;
    throw std::invalid_argument("missing upstream certificate '" + name + "'");
}

}  // namespace detail

/**
 * Re-evaluates the defining constraint of `cert` in exact rational
 * arithmetic, with upstream constants taken from their certificates (the
 * sound direction: every downstream residual is decreasing in the
 * upstream value, so certified upper bounds transfer). Pure and
 * idempotent; throws only when a required upstream certificate is absent.
 */
inline bool verify_certificate(const CertifiedConstant& cert,
                               const std::vector<CertifiedConstant>& upstream = {}) {
    try {
        if (cert.residual < 0) return false;
        if (cert.name == "C1") {
            const Rational e1 = cert.witness("eps1"), e2 = cert.witness("eps2");
            if (e1 <= 0 || e2 <= 0) return false;
            const Rational r = c1_constraint_residual(e1, e2);
            return r >= 0 && r == cert.residual && cert.value == 1 - e1 * e2 && cert.value < 1;
        }
        if (cert.name == "C2") {
            const Rational c1 = detail::find_upstream(upstream, "C1").value;
            const Rational e3 = cert.witness("eps3");
            if (e3 <= 0) return false;
            const Rational r = c2_constraint_residual(e3, c1);
            return r >= 0 && r == cert.residual && cert.value == 1 - e3 && cert.value < 1;
        }
        if (cert.name == "C3") {
            const Rational c2 = detail::find_upstream(upstream, "C2").value;
            const Rational e4 = cert.witness("eps4"), e5 = cert.witness("eps5");
            if (e4 <= 0 || e5 <= 0) return false;
            const Rational r = c3_constraint_residual(e4, e5, c2);
            return r >= 0 && r == cert.residual && cert.value == 1 - e4 * e5 && cert.value < 1;
        }
        if (cert.name == "nu") {
            const Rational c3 = detail::find_upstream(upstream, "C3").value;
            const Rational gap = 1 - c3;
            const Rational ln3_up = ln3_upper_bound();
            if (cert.witness("ln3_upper") != ln3_up) return false;
            return cert.value > 0 && gap - cert.value * ln3_up == cert.residual &&
                   cert.value * ln3_up <= gap;
        }
    } catch (const std::invalid_argument& e) {
        if (std::string(e.what()).starts_with("missing upstream")) throw;
        return false;  // witness outside its admissible range
    }
    throw std::invalid_argument("unknown certificate name '" + cert.name + "'");
}

/// Runs the full chain C1 -> C2 -> (C3, nu) and verifies every link.
inline std::vector<CertifiedConstant> certify_all(int grid_resolution = 400,
                                                  int refine_rounds = 90) {
    std::vector<CertifiedConstant> chain;
    chain.push_back(certify_c1(grid_resolution, refine_rounds));
    chain.push_back(certify_c2(chain[0]));
    auto [c3, nu] = certify_c3(chain[1], grid_resolution, refine_rounds);
    chain.push_back(std::move(c3));
    chain.push_back(std::move(nu));
    for (auto& cert : chain)
        cert.verified = verify_certificate(cert, chain);
    return chain;
}

}  // namespace anticon
