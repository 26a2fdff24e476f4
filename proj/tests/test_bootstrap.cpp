#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "cxrval/bootstrap.hpp"
#include "support/oracles.hpp"

using namespace cxrval;

namespace {

constexpr auto A = binary_label::abnormal;
constexpr auto N = binary_label::normal;

std::vector<outcome_pair> pairs_from_categories(const std::vector<int>& categories) {
    std::vector<outcome_pair> pairs;
    for (int c : categories) {
        switch (c) {
            case 0: pairs.emplace_back(A, A); break;
            case 1: pairs.emplace_back(A, N); break;
            case 2: pairs.emplace_back(N, A); break;
            default: pairs.emplace_back(N, N); break;
        }
    }
    return pairs;
}

std::vector<outcome_pair> pairs_for_counts(const confusion_counts& c) {
    std::vector<outcome_pair> pairs;
    pairs.insert(pairs.end(), c.tp, {A, A});
    pairs.insert(pairs.end(), c.fp, {A, N});
    pairs.insert(pairs.end(), c.fn, {N, A});
    pairs.insert(pairs.end(), c.tn, {N, N});
    return pairs;
}

}  // namespace

TEST_CASE("all-perfect pairs give a degenerate distribution at 1") {
    const std::vector<outcome_pair> pairs(10, {A, A});
    const auto s = bootstrap_f1(pairs, 500, 42);
    CHECK(s.mean_f1 == 1.0);
    CHECK(s.ci_low == 1.0);
    CHECK(s.ci_high == 1.0);
    REQUIRE(s.histogram.size() == 1);
    CHECK(s.histogram[0].count == 500);
}

TEST_CASE("empty input is an input error") {
    CHECK_THROWS_AS(bootstrap_f1(std::vector<outcome_pair>{}, 100, 1), error);
}

TEST_CASE("bit-identical summaries for identical (pairs, n, seed)") {
    const auto pairs = pairs_for_counts({7, 3, 2, 8});
    const auto a = bootstrap_f1(pairs, 2000, 99);
    const auto b = bootstrap_f1(pairs, 2000, 99);
    CHECK(a == b);
    const auto c = bootstrap_f1(pairs, 2000, 100);
    CHECK(a.mean_f1 != c.mean_f1);  // different seed, different stream
}

TEST_CASE("Monte Carlo mean matches exhaustive enumeration on a 3-pair input") {
    // 3 pairs -> 27 equiprobable resamples; exact mean by enumeration.
    const std::vector<int> categories = {0, 1, 2};  // tp, fp, fn
    const double exact = testsupport::exact_bootstrap_mean_f1(categories);
    const auto s = bootstrap_f1(pairs_from_categories(categories), 200000, 7);
    CHECK(s.mean_f1 == Catch::Approx(exact).margin(0.01));
}

TEST_CASE("bootstrap mean stays within three bootstrap-SE of the point F1") {
    const auto pairs = pairs_for_counts({120, 72, 56, 380});
    const double point = f1_score(confusion(pairs));
    const auto samples = bootstrap_f1_samples(pairs, 10000, 5);
    double mean = 0;
    for (double v : samples) mean += v;
    mean /= static_cast<double>(samples.size());
    double var = 0;
    for (double v : samples) var += (v - mean) * (v - mean);
    const double sd = std::sqrt(var / static_cast<double>(samples.size() - 1));
    CHECK(std::abs(mean - point) < 3 * sd);
}

TEST_CASE("quantiles interpolate linearly between order statistics") {
    const std::vector<double> sorted = {1.0, 2.0, 3.0, 4.0};
    CHECK(quantile_sorted(sorted, 0.0) == 1.0);
    CHECK(quantile_sorted(sorted, 1.0) == 4.0);
    CHECK(quantile_sorted(sorted, 0.5) == Catch::Approx(2.5));
    CHECK(quantile_sorted(sorted, 1.0 / 3.0) == Catch::Approx(2.0));
    CHECK(quantile_sorted(sorted, 0.25) == Catch::Approx(1.75));
}

TEST_CASE("histogram covers all samples and spans the range") {
    const auto pairs = pairs_for_counts({50, 20, 15, 100});
    const auto s = bootstrap_f1(pairs, 3000, 13);
    std::uint64_t total = 0;
    double lo = 1e9, hi = -1e9;
    for (const auto& b : s.histogram) {
        total += b.count;
        lo = std::min(lo, b.bin_low);
        hi = std::max(hi, b.bin_high);
        CHECK(b.bin_low <= b.bin_high);
    }
    CHECK(total == 3000);
    CHECK(s.ci_low >= lo);
    CHECK(s.ci_high <= hi);
    CHECK(s.mean_f1 >= lo);
    CHECK(s.mean_f1 <= hi);
    CHECK(s.ci_low <= s.mean_f1);
    CHECK(s.mean_f1 <= s.ci_high);
}
