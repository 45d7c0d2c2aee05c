#pragma once

/**
 * @file fourier.hpp
 * @brief Discrete Fourier diagnostics over Z_p and the transform-based
 *        cyclic convolution for the float backend.
 *
 * The direct DFT is O(p^2) and meant for diagnostics at small p. The FFT
 * convolution is the explicit O(p log p) alternative to the naive float
 * convolution; it is never selected silently.
 */

#include "anticon/distribution.hpp"

#include <complex>
#include <numbers>
#include <vector>

namespace anticon {

namespace detail {

// Iterative radix-2 Cooley-Tukey; n must be a power of two.
inline void fft_in_place(std::vector<std::complex<double>>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0);
            for (std::size_t j = 0; j < len / 2; ++j) {
                const auto u = a[i + j];
                const auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse) {
        for (auto& x : a) x /= static_cast<double>(n);
    }
}

inline std::size_t next_pow2(std::size_t n) {
    std::size_t r = 1;
    while (r < n) r <<= 1;
    return r;
}

}  // namespace detail

/// Cyclic convolution of two real vectors of the same length p. When p is
/// not a power of two the product is computed linearly on a padded
/// transform and folded back mod p.
inline std::vector<double> cyclic_convolve_fft(const std::vector<double>& a,
                                               const std::vector<double>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("length mismatch");
    const std::size_t p = a.size();
    const bool pow2 = (p & (p - 1)) == 0;
    const std::size_t n = pow2 ? p : detail::next_pow2(2 * p - 1);
    std::vector<std::complex<double>> fa(n), fb(n);
    for (std::size_t i = 0; i < p; ++i) fa[i] = a[i], fb[i] = b[i];
    detail::fft_in_place(fa, false);
    detail::fft_in_place(fb, false);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
    detail::fft_in_place(fa, true);
    std::vector<double> out(p, 0.0);
    for (std::size_t i = 0; i < (pow2 ? p : 2 * p - 1); ++i)
        out[i % p] += fa[i].real();
    return out;
}

/// Transform-based counterpart of the naive float convolve. Explicit
/// opt-in: exact-backend callers never end up here.
inline ModularDist<double> convolve_transform(const ModularDist<double>& a,
                                              const ModularDist<double>& b) {
    if (a.modulus() != b.modulus()) throw std::invalid_argument("mismatched moduli");
    auto w = cyclic_convolve_fft(a.weights(), b.weights());
    for (double& x : w)
        if (x < 0.0) x = 0.0;  // round-off dust
    return ModularDist<double>(a.modulus(), std::move(w), detail::unchecked);
}

/// Coefficient k is sum_x w(x) exp(-2*pi*i*x*k/p); coefficient 0 is 1.
template <class S>
std::vector<std::complex<double>> dft(const ModularDist<S>& d) {
    const std::int64_t p = d.modulus();
    std::vector<double> w(static_cast<std::size_t>(p));
    for (std::int64_t x = 0; x < p; ++x) {
        if constexpr (is_exact_backend<S>) {
            w[static_cast<std::size_t>(x)] = to_double(d.weights()[static_cast<std::size_t>(x)]);
        } else {
            w[static_cast<std::size_t>(x)] = d.weights()[static_cast<std::size_t>(x)];
        }
    }
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(p));
    for (std::int64_t k = 0; k < p; ++k) {
        std::complex<double> sum(0.0);
        for (std::int64_t x = 0; x < p; ++x) {
            const std::int64_t phase = (x * k) % p;  // reduce before the trig call
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(p);
            sum += w[static_cast<std::size_t>(x)] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        coeffs[static_cast<std::size_t>(k)] = sum;
    }
    return coeffs;
}

/// Inverse transform; recovers the weight vector of `dft` within 1e-10.
inline std::vector<double> idft_weights(const std::vector<std::complex<double>>& coeffs) {
    const std::size_t p = coeffs.size();
    std::vector<double> w(p);
    for (std::size_t x = 0; x < p; ++x) {
        std::complex<double> sum(0.0);
        for (std::size_t k = 0; k < p; ++k) {
            const std::size_t phase = (x * k) % p;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase) / static_cast<double>(p);
            sum += coeffs[k] * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        w[x] = sum.real() / static_cast<double>(p);
    }
    return w;
}

}  // namespace anticon
