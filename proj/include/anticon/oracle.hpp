#pragma once

/**
 * @file oracle.hpp
 * @brief Independent ground truth: exhaustive tuple counting, extremal
 *        scans over all small supports, and seeded randomized stress
 *        tests. Exact values only; enumeration never shares code with the
 *        convolution engine it is used to validate.
 */

#include "anticon/bounds.hpp"
#include "anticon/distribution.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace anticon {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100000000;  // tuples

struct ScanRecord {
    std::string experiment;
    std::string instance;
    Rational exact_value;
    Rational bound_value;
    bool pass = false;
    std::optional<std::uint64_t> seed;

    bool operator==(const ScanRecord&) const = default;
};

/**
 * Number of ordered ell-tuples from A summing to x (mod p when a modulus
 * is given), by literal odometer enumeration. Throws when |A|^ell would
 * exceed the budget, naming the budget required.
 */
inline std::uint64_t count_solutions(const std::vector<std::int64_t>& A, std::int64_t ell,
                                     std::int64_t x, std::optional<std::int64_t> modulus = {},
                                     std::uint64_t budget = kDefaultEnumerationBudget) {
    if (A.empty()) throw std::invalid_argument("empty set");
    if (ell < 1) throw std::invalid_argument("ell must be >= 1");
    const std::uint64_t n = A.size();
    std::uint64_t tuples = 1;
    for (std::int64_t i = 0; i < ell; ++i) {
        if (tuples > budget / n)
            throw std::invalid_argument("enumeration budget exceeded: need " +
                                        std::to_string(static_cast<double>(std::pow(static_cast<double>(n), static_cast<double>(ell)))) +
                                        " tuples");
        tuples *= n;
    }
    const std::int64_t p = modulus.value_or(0);
    std::int64_t target = x;
    if (modulus) target = ((x % p) + p) % p;

    std::vector<std::size_t> idx(static_cast<std::size_t>(ell), 0);
    std::uint64_t count = 0;
    while (true) {
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < idx.size(); ++j) sum += A[idx[j]];
        if (modulus) sum = ((sum % p) + p) % p;
        if (sum == target) ++count;
        std::size_t j = 0;
        while (j < idx.size() && ++idx[j] == n) idx[j++] = 0;
        if (j == idx.size()) break;
    }
    return count;
}

/**
 * Exhaustive Leader-Radcliffe check: over every n-subset A of
 * {0,...,W-1}, the exact max concentration of the ell-fold sum never
 * exceeds that of the integer interval {0,...,n-1}. One record per
 * subset, in lexicographic subset order, plus a final record checking
 * the interval's peak location against the closed form.
 */
inline std::vector<ScanRecord> leader_radcliffe_scan(std::int64_t n, std::int64_t ell,
                                                     std::int64_t window,
                                                     std::uint64_t budget = kDefaultEnumerationBudget) {
    if (n < 2 || ell < 2) throw std::invalid_argument("need n >= 2 and ell >= 2");
    if (window < n) throw std::invalid_argument("window must be at least n");
    // C(window, n) * cost of one exact ell-fold convolution, estimated in tuples.
    double subsets = 1.0;
    for (std::int64_t i = 0; i < n; ++i) subsets = subsets * static_cast<double>(window - i) / static_cast<double>(i + 1);
    const double per_subset = std::pow(static_cast<double>(n), static_cast<double>(ell));
    if (subsets * per_subset > static_cast<double>(budget))
        throw std::invalid_argument("scan budget exceeded: need " +
                                    std::to_string(subsets * per_subset) + " tuples");

    std::vector<std::int64_t> interval(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) interval[static_cast<std::size_t>(i)] = i;
    const auto interval_sum = self_convolve(IntegerDist<Rational>::uniform(interval), ell);
    const auto reference = max_concentration(interval_sum);

    std::vector<ScanRecord> records;
    std::vector<std::int64_t> subset(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) subset[static_cast<std::size_t>(i)] = i;
    while (true) {
        const auto sum = self_convolve(IntegerDist<Rational>::uniform(subset), ell);
        const auto conc = max_concentration(sum);
        ScanRecord rec;
        rec.experiment = "leader-radcliffe";
        std::string pts;
        for (std::size_t i = 0; i < subset.size(); ++i) pts += (i ? "," : "") + std::to_string(subset[i]);
        rec.instance = "n=" + std::to_string(n) + " ell=" + std::to_string(ell) +
                       " W=" + std::to_string(window) + " A={" + pts + "}";
        rec.exact_value = conc.max_probability;
        rec.bound_value = reference.max_probability;
        rec.pass = conc.max_probability <= reference.max_probability;
        records.push_back(std::move(rec));
        // next n-combination of {0..W-1} in lexicographic order
        std::int64_t i = n - 1;
        while (i >= 0 && subset[static_cast<std::size_t>(i)] == window - n + i) --i;
        if (i < 0) break;
        ++subset[static_cast<std::size_t>(i)];
        for (std::int64_t j = i + 1; j < n; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(i)] + (j - i);
    }

    // Peak of the interval instance vs the closed form, shifted from
    // support {1..n} to {0..n-1} by subtracting ell.
    const std::int64_t predicted = peak_location(n, ell).translated - ell;
    ScanRecord peak;
    peak.experiment = "leader-radcliffe/peak";
    peak.instance = "interval n=" + std::to_string(n) + " ell=" + std::to_string(ell) +
                    " argmax-vs-formula";
    peak.exact_value = Rational(interval_sum.weight(predicted) == reference.max_probability
                                    ? predicted
                                    : reference.argmax_points.front());
    peak.bound_value = Rational(predicted);
    peak.pass = peak.exact_value == peak.bound_value;  // equality check, not a soundness bound
    records.push_back(std::move(peak));
    return records;
}

/**
 * Reproducible pseudo-random distribution on Z_p with exact rational
 * weights, total mass exactly 1 and max weight <= lambda. Numerators are
 * drawn log-uniformly (denominators stay <= 1e6 before normalization) so
 * the lambda-clip actually engages for small p; the all-equal draw (which
 * would yield the uniform distribution on the whole group) is rejected
 * and redrawn.
 */
inline ModularDist<Rational> random_bounded_distribution(std::int64_t p, const Rational& lambda,
                                                         std::uint64_t seed) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (lambda <= 0 || lambda > Rational(9, 10)) throw std::invalid_argument("lambda must lie in (0, 9/10]");
    if (Rational(p) * lambda <= 2) throw std::invalid_argument("need p > 2/lambda");

    std::mt19937_64 rng(seed);
    const std::size_t count = static_cast<std::size_t>(p);
    std::vector<Integer> numerators(count);
    while (true) {
        bool all_equal = true;
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t magnitude = 10;
            for (std::uint64_t e = rng() % 6; e > 0; --e) magnitude *= 10;
            numerators[i] = Integer(1 + rng() % magnitude);
            if (numerators[i] != numerators[0]) all_equal = false;
        }
        if (!all_equal) break;
    }
    Integer total = 0;
    for (const auto& u : numerators) total += u;
    std::vector<Rational> w(count);
    for (std::size_t i = 0; i < count; ++i) w[i] = Rational(numerators[i], total);

    // Clip at lambda and renormalize the rest, repeating until no weight
    // exceeds lambda. The clipped set only grows, so this terminates.
    std::vector<bool> clipped(count, false);
    while (true) {
        bool changed = false;
        Integer n_clipped = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (!clipped[i] && w[i] > lambda) clipped[i] = true, changed = true;
            if (clipped[i]) ++n_clipped;
        }
        if (!changed) break;
        Rational free_target = 1 - lambda * n_clipped;
        Rational free_sum = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (clipped[i]) w[i] = lambda;
            else free_sum += w[i];
        }
        if (free_sum != 0) {
            const Rational scale = free_target / free_sum;
            for (std::size_t i = 0; i < count; ++i)
                if (!clipped[i]) w[i] *= scale;
        }
    }
    return ModularDist<Rational>(p, std::move(w));
}

/**
 * Seeded soundness stress for the 3-fold bound: per trial, the exact max
 * concentration of the 3^k-fold self-sum is compared against c3^k*lambda
 * for every k <= k_max whose hypothesis p > 2/(c3^(k-1)*lambda) holds.
 */
inline std::vector<ScanRecord> general3_stress(std::int64_t p, const Rational& lambda,
                                               int trials, std::uint64_t seed, const Rational& c3,
                                               int k_max = 3) {
    if (trials < 1) throw std::invalid_argument("need at least one trial");
    if (c3 <= 0 || c3 >= 1) throw std::invalid_argument("c3 must lie in (0,1)");
    if (k_max < 1 || k_max > 3) throw std::invalid_argument("k_max must lie in 1..3");
    std::vector<ScanRecord> records;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = split_mix64(seed + static_cast<std::uint64_t>(t));
        auto d = random_bounded_distribution(p, lambda, trial_seed);
        auto power = d;  // 3^k-fold sum, built by cubing the previous level
        Rational level_bound = lambda;
        for (int k = 1; k <= k_max; ++k) {
            if (!(Rational(p) * level_bound > 2)) break;  // induction hypothesis at this level
            power = self_convolve(power, 3);
            level_bound *= c3;
            const auto conc = max_concentration(power);
            ScanRecord rec;
            rec.experiment = "general3";
            rec.instance = "p=" + std::to_string(p) + " lambda=" + fraction_string(lambda) +
                           " trial=" + std::to_string(t) + " k=" + std::to_string(k);
            rec.exact_value = conc.max_probability;
            rec.bound_value = level_bound;
            rec.pass = conc.max_probability <= level_bound;
            rec.seed = trial_seed;
            records.push_back(std::move(rec));
        }
    }
    return records;
}

}  // namespace anticon
