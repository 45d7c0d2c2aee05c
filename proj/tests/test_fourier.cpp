#include "anticon/fourier.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace anticon;

namespace {

ModularDist<double> random_float_dist(std::int64_t p, std::mt19937_64& rng) {
    std::vector<double> w(static_cast<std::size_t>(p));
    double total = 0;
    for (auto& x : w) {
        x = 1.0 + static_cast<double>(rng() % 1000);
        total += x;
    }
    for (auto& x : w) x /= total;
    return ModularDist<double>(p, std::move(w));
}

}  // namespace

TEST_CASE("dft of a point mass at zero is all ones", "[fourier]") {
    auto coeffs = dft(ModularDist<Rational>::point_mass(13, 0));
    for (const auto& c : coeffs) {
        REQUIRE_THAT(c.real(), Catch::Matchers::WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(c.imag(), Catch::Matchers::WithinAbs(0.0, 1e-12));
    }
}

TEST_CASE("dft coefficient zero is one for any distribution", "[fourier]") {
    std::mt19937_64 rng(19);
    auto d = random_float_dist(31, rng);
    auto coeffs = dft(d);
    REQUIRE_THAT(coeffs[0].real(), Catch::Matchers::WithinAbs(1.0, 1e-12));
    REQUIRE_THAT(coeffs[0].imag(), Catch::Matchers::WithinAbs(0.0, 1e-12));
}

TEST_CASE("Parseval route to the two-fold concentration at zero", "[fourier]") {
    // symmetric uniform A in Z_p: (1/p) sum_k f^(k)^2 = P[Y1+Y2=0] = 1/n
    const std::int64_t p = 29;
    auto d = ModularDist<Rational>::uniform(p, {1, 28, 4, 25, 6, 23});
    REQUIRE(is_symmetric(d));
    auto coeffs = dft(d);
    std::complex<double> sum(0.0);
    for (const auto& c : coeffs) sum += c * c;
    REQUIRE_THAT(sum.real() / static_cast<double>(p),
                 Catch::Matchers::WithinAbs(1.0 / 6.0, 1e-10));
    REQUIRE_THAT(sum.imag(), Catch::Matchers::WithinAbs(0.0, 1e-10));
}

TEST_CASE("inverse transform recovers the weights", "[fourier]") {
    std::mt19937_64 rng(23);
    auto d = random_float_dist(101, rng);
    auto recovered = idft_weights(dft(d));
    for (std::size_t i = 0; i < recovered.size(); ++i)
        REQUIRE_THAT(recovered[i], Catch::Matchers::WithinAbs(d.weights()[i], 1e-10));
}

TEST_CASE("transform convolution agrees with the naive float path", "[fourier]") {
    std::mt19937_64 rng(29);
    for (std::int64_t p : {64, 97, 1024}) {
        auto a = random_float_dist(p, rng);
        auto b = random_float_dist(p, rng);
        auto naive = convolve(a, b);
        auto fast = convolve_transform(a, b);
        for (std::int64_t x = 0; x < p; ++x)
            REQUIRE_THAT(fast.weight(x), Catch::Matchers::WithinAbs(naive.weight(x), 1e-9));
    }
}

TEST_CASE("transform convolution agrees with the exact engine", "[fourier]") {
    auto a = ModularDist<Rational>::uniform(101, {3, 14, 15, 92});
    auto b = ModularDist<Rational>::uniform(101, {2, 71, 82});
    auto exact = convolve(a, b);
    std::vector<double> aw(101), bw(101);
    for (std::int64_t x = 0; x < 101; ++x) {
        aw[static_cast<std::size_t>(x)] = to_double(a.weight(x));
        bw[static_cast<std::size_t>(x)] = to_double(b.weight(x));
    }
    auto fast = convolve_transform(ModularDist<double>(101, aw), ModularDist<double>(101, bw));
    for (std::int64_t x = 0; x < 101; ++x)
        REQUIRE_THAT(fast.weight(x), Catch::Matchers::WithinAbs(to_double(exact.weight(x)), 1e-12));
}
