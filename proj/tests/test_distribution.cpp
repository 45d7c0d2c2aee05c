#include "anticon/distribution.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <random>

using namespace anticon;

namespace {

// Small random exact distribution on Z_p for property tests: positive
// rational weights over a shared denominator.
ModularDist<Rational> random_exact_dist(std::int64_t p, std::mt19937_64& rng) {
    std::vector<Integer> u(static_cast<std::size_t>(p));
    Integer total = 0;
    for (auto& x : u) {
        x = Integer(1 + rng() % 1000);
        total += x;
    }
    std::vector<Rational> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = Rational(u[i], total);
    return ModularDist<Rational>(p, std::move(w));
}

Rational total_mass(const ModularDist<Rational>& d) {
    Rational s = 0;
    for (const auto& w : d.weights()) s += w;
    return s;
}

}  // namespace

TEST_CASE("uniform construction", "[distribution]") {
    auto d = ModularDist<Rational>::uniform(5, {0, 1});
    REQUIRE(d.weights() == std::vector<Rational>{Rational(1, 2), Rational(1, 2), 0, 0, 0});

    auto e = IntegerDist<Rational>::uniform({-1, 1});
    REQUIRE(e.offset() == -1);
    REQUIRE(e.weights() == std::vector<Rational>{Rational(1, 2), 0, Rational(1, 2)});

    auto f = ModularDist<Rational>::uniform(7, {1, 2, 4});
    for (std::int64_t x : {1, 2, 4}) REQUIRE(f.weight(x) == Rational(1, 3));
    REQUIRE(f.weight(0) == 0);
}

TEST_CASE("uniform construction rejects bad supports", "[distribution]") {
    REQUIRE_THROWS_AS(ModularDist<Rational>::uniform(5, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(ModularDist<Rational>::uniform(5, {1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(ModularDist<Rational>::uniform(5, {5}), std::invalid_argument);
    REQUIRE_THROWS_AS(ModularDist<Rational>::uniform(5, {-1}), std::invalid_argument);
    REQUIRE_THROWS_AS(IntegerDist<Rational>::uniform({2, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS((ModularDist<Rational>(1, {Rational(1)})), std::invalid_argument);
}

TEST_CASE("constructor validates mass and sign", "[distribution]") {
    REQUIRE_THROWS_AS((ModularDist<Rational>(2, {Rational(1, 2), Rational(1, 3)})),
                      std::invalid_argument);
    REQUIRE_THROWS_AS((ModularDist<Rational>(2, {Rational(3, 2), Rational(-1, 2)})),
                      std::invalid_argument);
    REQUIRE_THROWS_AS((ModularDist<double>(2, {0.5, 0.5 + 1e-9})), std::invalid_argument);
    REQUIRE_NOTHROW((ModularDist<double>(2, {0.5, 0.5 + 1e-14})));
    // a point mass is fine here; bound evaluators are where n = 1 is rejected
    REQUIRE_NOTHROW(IntegerDist<Rational>::point_mass(42));
}

TEST_CASE("convolution of two coins mod 5", "[distribution]") {
    auto coin = ModularDist<Rational>::uniform(5, {0, 1});
    auto two = convolve(coin, coin);
    REQUIRE(two.weights() ==
            std::vector<Rational>{Rational(1, 4), Rational(1, 2), Rational(1, 4), 0, 0});
}

TEST_CASE("convolving with a point mass translates", "[distribution]") {
    std::mt19937_64 rng(7);
    auto d = random_exact_dist(11, rng);
    auto delta = ModularDist<Rational>::point_mass(11, 4);
    REQUIRE(convolve(delta, d) == translate(d, 4));
}

TEST_CASE("integer convolution matches pair enumeration", "[distribution]") {
    auto u = IntegerDist<Rational>::uniform({1, 2, 3});
    auto two = convolve(u, u);
    // independent route: enumerate the 9 ordered pairs
    std::map<std::int64_t, int> counts;
    for (std::int64_t a : {1, 2, 3})
        for (std::int64_t b : {1, 2, 3}) ++counts[a + b];
    REQUIRE(counts[4] == 3);
    REQUIRE(two.weight(4) == Rational(3, 9));
    for (const auto& [point, count] : counts) REQUIRE(two.weight(point) == Rational(count, 9));
}

TEST_CASE("convolution rejects mismatched moduli", "[distribution]") {
    auto a = ModularDist<Rational>::uniform(5, {0});
    auto b = ModularDist<Rational>::uniform(7, {0});
    REQUIRE_THROWS_AS(convolve(a, b), std::invalid_argument);
}

TEST_CASE("self_convolve basics", "[distribution]") {
    auto d = IntegerDist<Rational>::uniform({1, 2, 3});
    REQUIRE(self_convolve(d, 1) == d);
    REQUIRE_THROWS_AS(self_convolve(d, 0), std::invalid_argument);

    auto s3 = self_convolve(d, 3);
    REQUIRE(s3.weight(6) == Rational(7, 27));

    // {-1,1}^3: enumerate the 8 ordered triples independently
    auto pm = IntegerDist<Rational>::uniform({-1, 1});
    std::map<std::int64_t, int> counts;
    for (int a : {-1, 1})
        for (int b : {-1, 1})
            for (int c : {-1, 1}) ++counts[a + b + c];
    auto s = self_convolve(pm, 3);
    auto conc = max_concentration(s);
    REQUIRE(conc.max_probability == Rational(3, 8));
    for (const auto& [point, count] : counts) REQUIRE(s.weight(point) == Rational(count, 8));
}

TEST_CASE("max_concentration reports all ties ascending", "[distribution]") {
    auto flat = ModularDist<Rational>::uniform(5, {0, 1, 2, 3, 4});
    auto conc = max_concentration(flat);
    REQUIRE(conc.max_probability == Rational(1, 5));
    REQUIRE(conc.argmax_points == std::vector<std::int64_t>{0, 1, 2, 3, 4});

    auto s3 = self_convolve(IntegerDist<Rational>::uniform({1, 2, 3}), 3);
    auto c3 = max_concentration(s3);
    REQUIRE(c3.max_probability == Rational(7, 27));
    REQUIRE(c3.argmax_points == std::vector<std::int64_t>{6});

    // {1..4}^3: brute-force the 64 triples
    std::map<std::int64_t, int> counts;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) ++counts[a + b + c];
    int best = 0;
    for (const auto& [point, count] : counts) best = std::max(best, count);
    REQUIRE(best == 12);
    auto c4 = max_concentration(self_convolve(IntegerDist<Rational>::uniform({1, 2, 3, 4}), 3));
    REQUIRE(c4.max_probability == Rational(12, 64));
    REQUIRE(c4.argmax_points == std::vector<std::int64_t>{7, 8});
}

TEST_CASE("dilate and translate", "[distribution]") {
    auto d = ModularDist<Rational>::uniform(7, {1, 2, 4});
    REQUIRE(dilate(d, 1) == d);
    REQUIRE(translate(ModularDist<Rational>::uniform(5, {0, 1}), 2) ==
            ModularDist<Rational>::uniform(5, {2, 3}));

    auto d3 = dilate(d, 3);
    REQUIRE(d3 == ModularDist<Rational>::uniform(7, {3, 6, 5}));
    REQUIRE(max_concentration(d3).max_probability == max_concentration(d).max_probability);

    REQUIRE_THROWS_AS(dilate(d, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(dilate(d, 7), std::invalid_argument);
    REQUIRE_THROWS_AS(dilate(ModularDist<Rational>::uniform(6, {1, 2}), 5), std::invalid_argument);
}

TEST_CASE("affine maps preserve concentration and map the argmax", "[distribution][property]") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 20; ++rep) {
        const std::int64_t p = std::vector<std::int64_t>{11, 13, 29, 47}[rep % 4];
        auto d = random_exact_dist(p, rng);
        const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % (p - 1));
        const std::int64_t b = static_cast<std::int64_t>(rng() % p);
        auto mapped = translate(dilate(d, a), b);
        auto before = max_concentration(d), after = max_concentration(mapped);
        REQUIRE(after.max_probability == before.max_probability);
        std::vector<std::int64_t> expected;
        for (std::int64_t x : before.argmax_points) expected.push_back((a * x + b) % p);
        std::sort(expected.begin(), expected.end());
        REQUIRE(after.argmax_points == expected);
    }
}

TEST_CASE("is_symmetric", "[distribution]") {
    REQUIRE(is_symmetric(ModularDist<Rational>::uniform(11, {1, 10})));
    REQUIRE_FALSE(is_symmetric(ModularDist<Rational>::uniform(5, {1, 2})));

    auto sym = ModularDist<Rational>::uniform(13, {1, 12, 5, 8});
    REQUIRE(is_symmetric(sym));
    auto two = self_convolve(sym, 2);
    for (std::int64_t x = 0; x < 13; ++x) REQUIRE(two.weight(x) == two.weight(13 - x));
}

TEST_CASE("symmetric uniform sets concentrate 1/n at zero after two draws",
          "[distribution][property]") {
    for (auto [p, half] : std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>{
             {11, {1, 3}}, {29, {2, 5, 9}}, {47, {1, 2, 3, 4, 5}}}) {
        std::vector<std::int64_t> support;
        for (auto v : half) {
            support.push_back(v);
            support.push_back(p - v);
        }
        auto d = ModularDist<Rational>::uniform(p, support);
        REQUIRE(is_symmetric(d));
        REQUIRE(self_convolve(d, 2).weight(0) == Rational(1, Integer(support.size())));
    }
}

TEST_CASE("exact pipeline keeps total mass exactly one", "[distribution][property]") {
    std::mt19937_64 rng(3);
    auto d = random_exact_dist(37, rng);
    auto piped = translate(dilate(self_convolve(convolve(d, d), 5), 3), 11);
    REQUIRE(total_mass(piped) == 1);
}

TEST_CASE("convolution is commutative and associative on the exact backend",
          "[distribution][property]") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        const std::int64_t p = 2 + static_cast<std::int64_t>(rng() % 49);
        auto a = random_exact_dist(p, rng);
        auto b = random_exact_dist(p, rng);
        auto c = random_exact_dist(p, rng);
        REQUIRE(convolve(a, b) == convolve(b, a));
        REQUIRE(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)));
    }
}

TEST_CASE("binary exponentiation equals the chained product", "[distribution][property]") {
    std::mt19937_64 rng(5);
    auto d = random_exact_dist(43, rng);
    auto chained = d;
    for (std::int64_t ell = 2; ell <= 20; ++ell) {
        chained = convolve(chained, d);
        REQUIRE(self_convolve(d, ell) == chained);
    }
    // split independence: d^(a+b) == d^a * d^b for any split
    for (std::int64_t a = 1; a < 12; ++a)
        REQUIRE(convolve(self_convolve(d, a), self_convolve(d, 12 - a)) == self_convolve(d, 12));
}

TEST_CASE("float backend agrees with exact to 1e-12 on small cases", "[distribution]") {
    auto exact = self_convolve(ModularDist<Rational>::uniform(101, {1, 2, 3, 50}), 4);
    auto fl = self_convolve(ModularDist<double>::uniform(101, {1, 2, 3, 50}), 4);
    for (std::int64_t x = 0; x < 101; ++x)
        REQUIRE_THAT(fl.weight(x), Catch::Matchers::WithinAbs(to_double(exact.weight(x)), 1e-12));
}
