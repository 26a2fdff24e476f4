/**
 * @file bootstrap.hpp
 * @brief Bootstrap distribution of the F1 score with percentile CI.
 *
 * Each resample draws |pairs| pairs with replacement; the summary reports
 * the mean F1 over resamples and the empirical 2.5th/97.5th percentiles
 * (linear interpolation between order statistics). Resample i derives its
 * substream from (seed, i), so results are bit-reproducible and resamples
 * could be computed in any order.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "cxrval/error.hpp"
#include "cxrval/metrics.hpp"
#include "cxrval/rng.hpp"

namespace cxrval {

/// Recorded in output metadata; the resampling algorithm is fixed.
inline constexpr std::string_view bootstrap_generator_name = "mt19937_64-lemire";

inline constexpr int bootstrap_default_resamples = 10000;
inline constexpr std::size_t bootstrap_histogram_bins = 40;

struct histogram_bin {
    double bin_low = 0;
    double bin_high = 0;
    std::uint64_t count = 0;
    friend bool operator==(const histogram_bin&, const histogram_bin&) = default;
};

struct bootstrap_summary {
    double mean_f1 = 0;
    double ci_low = 0;
    double ci_high = 0;
    std::uint64_t n_resamples = 0;
    std::uint64_t seed = 0;
    std::vector<histogram_bin> histogram;
    friend bool operator==(const bootstrap_summary&, const bootstrap_summary&) = default;
};

/// p-th quantile (p in [0,1]) of sorted values, linear interpolation
/// between order statistics at rank h = (n-1)p.
inline double quantile_sorted(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw error(errc::input_error, "quantile of empty sample");
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

inline std::vector<histogram_bin> build_histogram(std::span<const double> values,
                                                  std::size_t bins) {
    std::vector<histogram_bin> out;
    if (values.empty() || bins == 0) return out;
    const auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    const double lo = *min_it, hi = *max_it;
    if (lo == hi) {
        out.push_back({lo, hi, values.size()});
        return out;
    }
    out.resize(bins);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t b = 0; b < bins; ++b) {
        out[b].bin_low = lo + width * static_cast<double>(b);
        out[b].bin_high = b + 1 == bins ? hi : lo + width * static_cast<double>(b + 1);
    }
    for (double v : values) {
        auto b = static_cast<std::size_t>((v - lo) / width);
        if (b >= bins) b = bins - 1;  // v == hi lands in the last bin
        out[b].count += 1;
    }
    return out;
}

/// Per-resample F1 values, resample i seeded from (seed, i).
inline std::vector<double> bootstrap_f1_samples(std::span<const outcome_pair> pairs,
                                                std::uint64_t n_resamples,
                                                std::uint64_t seed) {
    if (pairs.empty()) throw error(errc::input_error, "no pairs to bootstrap");
    // 0=tp 1=fp 2=fn 3=tn per pair; a resample only needs the tallies.
    std::vector<std::uint8_t> category(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [predicted, truth] = pairs[i];
        const bool pa = predicted == binary_label::abnormal;
        const bool ta = truth == binary_label::abnormal;
        category[i] = pa ? (ta ? 0 : 1) : (ta ? 2 : 3);
    }

    std::vector<double> f1s(n_resamples);
    const std::uint64_t n = pairs.size();
    for (std::uint64_t i = 0; i < n_resamples; ++i) {
        std::mt19937_64 rng(mix(seed, i));
        std::uint64_t tally[4] = {0, 0, 0, 0};
        for (std::uint64_t k = 0; k < n; ++k) tally[category[bounded(rng, n)]] += 1;
        f1s[i] = f1_score({tally[0], tally[1], tally[2], tally[3]});
    }
    return f1s;
}

inline bootstrap_summary bootstrap_f1(std::span<const outcome_pair> pairs,
                                      std::uint64_t n_resamples, std::uint64_t seed) {
    std::vector<double> f1s = bootstrap_f1_samples(pairs, n_resamples, seed);

    bootstrap_summary s;
    s.n_resamples = n_resamples;
    s.seed = seed;
    double sum = 0;
    for (double v : f1s) sum += v;
    s.mean_f1 = sum / static_cast<double>(f1s.size());
    s.histogram = build_histogram(f1s, bootstrap_histogram_bins);

    std::sort(f1s.begin(), f1s.end());
    s.ci_low = quantile_sorted(f1s, 0.025);
    s.ci_high = quantile_sorted(f1s, 0.975);
    return s;
}

inline bootstrap_summary bootstrap_f1(const std::vector<outcome_pair>& pairs,
                                      std::uint64_t n_resamples = bootstrap_default_resamples,
                                      std::uint64_t seed = 0) {
    return bootstrap_f1(std::span<const outcome_pair>(pairs), n_resamples, seed);
}

}  // namespace cxrval
