#pragma once

/**
 * @file distribution.hpp
 * @brief Probability distributions on Z_p and on Z with exact-rational or
 *        float64 weights: construction, convolution, l-fold sums,
 *        concentration queries, and affine maps.
 *
 * Distributions are immutable after construction and every operation is a
 * pure function of its inputs, so independent evaluations can run in
 * parallel. Exact-backend results are bit-identical regardless of
 * evaluation order.
 */

#include "anticon/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

namespace anticon {

inline constexpr double kFloatMassTolerance = 1e-12;
inline constexpr std::int64_t kMaxExactModulus = 20000;
inline constexpr std::int64_t kMaxFloatModulus = 2100000;

template <class S>
inline constexpr bool is_exact_backend = std::is_same_v<S, Rational>;

template <class S>
struct ConcentrationResult {
    S max_probability;
    std::vector<std::int64_t> argmax_points;  // ascending
};

template <class S>
class ModularDist;

ModularDist<double> convolve_transform(const ModularDist<double>& a, const ModularDist<double>& b);

namespace detail {

struct unchecked_t {};
inline constexpr unchecked_t unchecked{};

template <class S>
void validate_weights(const std::vector<S>& w) {
    S total{};
    for (const S& x : w) {
        if (x < S{}) throw std::invalid_argument("negative weight");
        total += x;
    }
    if constexpr (is_exact_backend<S>) {
        if (total != S(1)) throw std::invalid_argument("weights must sum to exactly 1");
    } else {
        if (std::abs(total - 1.0) > kFloatMassTolerance)
            throw std::invalid_argument("weights must sum to 1 within 1e-12");
    }
}

template <class S>
S scalar_one_over(std::size_t n) {
    if constexpr (is_exact_backend<S>) {
        return Rational(1, Integer(n));
    } else {
        return 1.0 / static_cast<double>(n);
    }
}

// Exact cyclic convolution over a shared denominator: integer numerator
// convolution followed by one reduction pass, so no per-term gcd work.
inline std::vector<Rational> cyclic_convolve_exact(const std::vector<Rational>& a,
                                                   const std::vector<Rational>& b) {
    const std::size_t p = a.size();
    Integer la = 1, lb = 1;
    for (const auto& q : a) la = boost::multiprecision::lcm(la, den(q));
    for (const auto& q : b) lb = boost::multiprecision::lcm(lb, den(q));
    std::vector<Integer> na(p), nb(p), acc(p);
    for (std::size_t i = 0; i < p; ++i) na[i] = num(a[i]) * (la / den(a[i]));
    for (std::size_t i = 0; i < p; ++i) nb[i] = num(b[i]) * (lb / den(b[i]));
    for (std::size_t i = 0; i < p; ++i) {
        if (na[i] == 0) continue;
        for (std::size_t j = 0; j < p; ++j) {
            std::size_t k = i + j;
            if (k >= p) k -= p;
            acc[k] += na[i] * nb[j];
        }
    }
    const Integer d = la * lb;
    std::vector<Rational> out(p);
    for (std::size_t k = 0; k < p; ++k) out[k] = Rational(acc[k], d);
    return out;
}

inline std::vector<Rational> linear_convolve_exact(const std::vector<Rational>& a,
                                                   const std::vector<Rational>& b) {
    Integer la = 1, lb = 1;
    for (const auto& q : a) la = boost::multiprecision::lcm(la, den(q));
    for (const auto& q : b) lb = boost::multiprecision::lcm(lb, den(q));
    std::vector<Integer> na(a.size()), nb(b.size()), acc(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) na[i] = num(a[i]) * (la / den(a[i]));
    for (std::size_t i = 0; i < b.size(); ++i) nb[i] = num(b[i]) * (lb / den(b[i]));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (na[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += na[i] * nb[j];
    }
    const Integer d = la * lb;
    std::vector<Rational> out(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) out[k] = Rational(acc[k], d);
    return out;
}

template <class S>
std::vector<std::int64_t> collect_argmax(const std::vector<S>& w, std::int64_t first_point) {
    S best{};
    for (const S& x : w) best = std::max(best, x);
    std::vector<std::int64_t> points;
    for (std::size_t i = 0; i < w.size(); ++i) {
        bool hit;
        if constexpr (is_exact_backend<S>) {
            hit = (w[i] == best);
        } else {
            hit = (w[i] >= best - kFloatMassTolerance);
        }
        if (hit) points.push_back(first_point + static_cast<std::int64_t>(i));
    }
    return points;
}

}  // namespace detail

/**
 * A probability vector over Z_p, indexed by residues 0..p-1.
 *
 * Invariants: modulus >= 2; all weights >= 0; total mass is exactly 1
 * (exact backend) or 1 within 1e-12 (float backend).
 */
template <class S>
class ModularDist {
public:
    ModularDist(std::int64_t modulus, std::vector<S> weights)
        : ModularDist(modulus, std::move(weights), detail::unchecked) {
        detail::validate_weights(weights_);
    }

    static ModularDist uniform(std::int64_t modulus, const std::vector<std::int64_t>& support) {
        check_modulus(modulus);
        if (support.empty()) throw std::invalid_argument("empty support");
        std::vector<S> w(static_cast<std::size_t>(modulus), S{});
        const S mass = detail::scalar_one_over<S>(support.size());
        for (std::int64_t x : support) {
            if (x < 0 || x >= modulus) throw std::invalid_argument("support point out of range");
            S& slot = w[static_cast<std::size_t>(x)];
            if (slot != S{}) throw std::invalid_argument("duplicate support point");
            slot = mass;
        }
        return ModularDist(modulus, std::move(w), detail::unchecked);
    }

    static ModularDist point_mass(std::int64_t modulus, std::int64_t at) {
        return uniform(modulus, {((at % modulus) + modulus) % modulus});
    }

    std::int64_t modulus() const { return modulus_; }
    const std::vector<S>& weights() const { return weights_; }

    /// Weight at residue x; x is reduced mod p first.
    const S& weight(std::int64_t x) const {
        std::int64_t r = ((x % modulus_) + modulus_) % modulus_;
        return weights_[static_cast<std::size_t>(r)];
    }

    bool operator==(const ModularDist&) const = default;

private:
    ModularDist(std::int64_t modulus, std::vector<S> weights, detail::unchecked_t)
        : modulus_(modulus), weights_(std::move(weights)) {
        check_modulus(modulus_);
        if (weights_.size() != static_cast<std::size_t>(modulus_))
            throw std::invalid_argument("weight vector length must equal the modulus");
    }

    static void check_modulus(std::int64_t p) {
        if (p < 2) throw std::invalid_argument("modulus must be >= 2");
        const std::int64_t cap = is_exact_backend<S> ? kMaxExactModulus : kMaxFloatModulus;
        if (p > cap) throw std::invalid_argument("modulus exceeds the dense-vector cap for this backend");
    }

    template <class T>
    friend ModularDist<T> convolve(const ModularDist<T>&, const ModularDist<T>&);
    template <class T>
    friend ModularDist<T> dilate(const ModularDist<T>&, std::int64_t);
    template <class T>
    friend ModularDist<T> translate(const ModularDist<T>&, std::int64_t);
    friend ModularDist<double> convolve_transform(const ModularDist<double>&, const ModularDist<double>&);

    std::int64_t modulus_;
    std::vector<S> weights_;
};

/**
 * A finitely supported probability vector over Z. `offset` is the value of
 * the smallest support point; the window is trimmed so the first and last
 * stored weights are nonzero.
 */
template <class S>
class IntegerDist {
public:
    IntegerDist(std::int64_t offset, std::vector<S> weights)
        : IntegerDist(offset, std::move(weights), detail::unchecked) {
        detail::validate_weights(weights_);
    }

    static IntegerDist uniform(const std::vector<std::int64_t>& support) {
        if (support.empty()) throw std::invalid_argument("empty support");
        std::vector<std::int64_t> pts = support;
        std::sort(pts.begin(), pts.end());
        if (std::adjacent_find(pts.begin(), pts.end()) != pts.end())
            throw std::invalid_argument("duplicate support point");
        const std::int64_t lo = pts.front(), hi = pts.back();
        std::vector<S> w(static_cast<std::size_t>(hi - lo + 1), S{});
        const S mass = detail::scalar_one_over<S>(pts.size());
        for (std::int64_t x : pts) w[static_cast<std::size_t>(x - lo)] = mass;
        return IntegerDist(lo, std::move(w), detail::unchecked);
    }

    static IntegerDist point_mass(std::int64_t at) { return uniform({at}); }

    std::int64_t offset() const { return offset_; }
    std::int64_t max_point() const { return offset_ + static_cast<std::int64_t>(weights_.size()) - 1; }
    const std::vector<S>& weights() const { return weights_; }

    S weight(std::int64_t x) const {
        if (x < offset_ || x > max_point()) return S{};
        return weights_[static_cast<std::size_t>(x - offset_)];
    }

    bool operator==(const IntegerDist&) const = default;

private:
    IntegerDist(std::int64_t offset, std::vector<S> weights, detail::unchecked_t)
        : offset_(offset), weights_(std::move(weights)) {
        if (weights_.empty()) throw std::invalid_argument("empty weight vector");
        trim();
    }

    void trim() {
        std::size_t lo = 0, hi = weights_.size();
        while (lo < hi && weights_[lo] == S{}) ++lo;
        while (hi > lo && weights_[hi - 1] == S{}) --hi;
        if (lo == hi) throw std::invalid_argument("distribution has no mass");
        if (lo > 0 || hi < weights_.size()) {
            weights_ = std::vector<S>(weights_.begin() + static_cast<std::ptrdiff_t>(lo),
                                      weights_.begin() + static_cast<std::ptrdiff_t>(hi));
            offset_ += static_cast<std::int64_t>(lo);
        }
    }

    template <class T>
    friend IntegerDist<T> convolve(const IntegerDist<T>&, const IntegerDist<T>&);

    std::int64_t offset_;
    std::vector<S> weights_;
};

// ---------------------------------------------------------------------------
// Convolution
// ---------------------------------------------------------------------------

/// Law of the sum of independent draws; indices wrap mod p.
template <class S>
ModularDist<S> convolve(const ModularDist<S>& a, const ModularDist<S>& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("mismatched moduli");
    const std::size_t p = a.weights().size();
    std::vector<S> out;
    if constexpr (is_exact_backend<S>) {
        out = detail::cyclic_convolve_exact(a.weights(), b.weights());
    } else {
        out.assign(p, S{});
        for (std::size_t i = 0; i < p; ++i) {
            const double wi = a.weights()[i];
            if (wi == 0.0) continue;
            for (std::size_t j = 0; j < p; ++j) {
                std::size_t k = i + j;
                if (k >= p) k -= p;
                out[k] += wi * b.weights()[j];
            }
        }
    }
    return ModularDist<S>(a.modulus(), std::move(out), detail::unchecked);
}

/// Law of the sum of independent draws; support windows add.
template <class S>
IntegerDist<S> convolve(const IntegerDist<S>& a, const IntegerDist<S>& b) {
    std::vector<S> out;
    if constexpr (is_exact_backend<S>) {
        out = detail::linear_convolve_exact(a.weights(), b.weights());
    } else {
        out.assign(a.weights().size() + b.weights().size() - 1, S{});
        for (std::size_t i = 0; i < a.weights().size(); ++i) {
            const double wi = a.weights()[i];
            if (wi == 0.0) continue;
            for (std::size_t j = 0; j < b.weights().size(); ++j) out[i + j] += wi * b.weights()[j];
        }
    }
    return IntegerDist<S>(a.offset() + b.offset(), std::move(out), detail::unchecked);
}

/// Law of the sum of `ell` independent copies, by binary exponentiation
/// (identical to ell-1 sequential convolutions on the exact backend).
template <class D>
D self_convolve(const D& d, std::int64_t ell) {
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    std::optional<D> acc;
    D base = d;
    auto e = static_cast<std::uint64_t>(ell);
    while (true) {
        if (e & 1) acc = acc ? convolve(*acc, base) : base;
        e >>= 1;
        if (!e) break;
        base = convolve(base, base);
    }
    return *acc;
}

// ---------------------------------------------------------------------------
// Concentration queries
// ---------------------------------------------------------------------------

template <class S>
ConcentrationResult<S> max_concentration(const ModularDist<S>& d) {
    auto points = detail::collect_argmax(d.weights(), 0);
    return {d.weight(points.front()), std::move(points)};
}

template <class S>
ConcentrationResult<S> max_concentration(const IntegerDist<S>& d) {
    auto points = detail::collect_argmax(d.weights(), d.offset());
    return {d.weight(points.front()), std::move(points)};
}

template <class S>
S concentration_at(const ModularDist<S>& d, std::int64_t x) {
    return d.weight(x);
}

template <class S>
S concentration_at(const IntegerDist<S>& d, std::int64_t x) {
    return d.weight(x);
}

// ---------------------------------------------------------------------------
// Affine maps on Z_p (p prime), under which max concentration is invariant
// ---------------------------------------------------------------------------

/// Moves the weight at x to a*x mod p. Requires p prime and a != 0 mod p.
template <class S>
ModularDist<S> dilate(const ModularDist<S>& d, std::int64_t a) {
    const std::int64_t p = d.modulus();
    if (!is_prime(p)) throw std::invalid_argument("dilate requires a prime modulus");
    const std::int64_t ar = ((a % p) + p) % p;
    if (ar == 0) throw std::invalid_argument("dilation factor must be nonzero mod p");
    std::vector<S> out(static_cast<std::size_t>(p), S{});
    for (std::int64_t x = 0; x < p; ++x)
        out[static_cast<std::size_t>((ar * x) % p)] = d.weights()[static_cast<std::size_t>(x)];
    return ModularDist<S>(p, std::move(out), detail::unchecked);
}

/// Moves the weight at x to x+b mod p.
template <class S>
ModularDist<S> translate(const ModularDist<S>& d, std::int64_t b) {
    const std::int64_t p = d.modulus();
    const std::int64_t br = ((b % p) + p) % p;
    std::vector<S> out(static_cast<std::size_t>(p), S{});
    for (std::int64_t x = 0; x < p; ++x)
        out[static_cast<std::size_t>((x + br) % p)] = d.weights()[static_cast<std::size_t>(x)];
    return ModularDist<S>(p, std::move(out), detail::unchecked);
}

/// True iff weight(x) == weight(-x mod p) for every residue.
template <class S>
bool is_symmetric(const ModularDist<S>& d) {
    const std::int64_t p = d.modulus();
    for (std::int64_t x = 0; x < p; ++x) {
        const S& lhs = d.weights()[static_cast<std::size_t>(x)];
        const S& rhs = d.weights()[static_cast<std::size_t>((p - x) % p)];
        if constexpr (is_exact_backend<S>) {
            if (lhs != rhs) return false;
        } else {
            if (std::abs(lhs - rhs) > kFloatMassTolerance) return false;
        }
    }
    return true;
}

}  // namespace anticon
