#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "cxrval/metrics.hpp"

using namespace cxrval;

namespace {
constexpr auto A = binary_label::abnormal;
constexpr auto N = binary_label::normal;
}  // namespace

TEST_CASE("confusion counts each quadrant") {
    std::vector<outcome_pair> pairs = {{A, A}, {A, N}, {N, A}, {N, N}};
    const auto c = confusion(pairs);
    CHECK(c.tp == 1);
    CHECK(c.fp == 1);
    CHECK(c.fn == 1);
    CHECK(c.tn == 1);
    CHECK(c.total() == 4);
}

TEST_CASE("confusion of empty input is all zeros") {
    const auto c = confusion(std::vector<outcome_pair>{});
    CHECK(c == confusion_counts{});
}

TEST_CASE("f1 arithmetic") {
    CHECK(f1_score({1, 0, 0, 0}) == 1.0);
    CHECK(f1_score({2, 1, 1, 0}) == Catch::Approx(2.0 / 3.0));
    // the deployed-scale matrix: 1200/(1200 + (719+556)/2) = 0.65306...
    CHECK(f1_score({1200, 719, 556, 3810}) == Catch::Approx(0.6531).margin(0.0005));
    // all-TN degenerate case is defined as perfect agreement
    CHECK(f1_score({0, 0, 0, 5}) == 1.0);
    // no true positives but errors exist
    CHECK(f1_score({0, 3, 2, 5}) == 0.0);
}

TEST_CASE("f1 is scale-free") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        confusion_counts c{rng() % 50, rng() % 50, rng() % 50, rng() % 50};
        if (c.tp + c.fp + c.fn == 0) continue;
        const std::uint64_t k = 1 + rng() % 9;
        const double f = f1_score(c);
        const double fk = f1_score({c.tp * k, c.fp * k, c.fn * k, c.tn * k});
        CHECK(fk == Catch::Approx(f).epsilon(1e-12));
    }
}

TEST_CASE("f1 equals harmonic mean of precision and recall") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        confusion_counts c{1 + rng() % 50, rng() % 50, rng() % 50, rng() % 50};
        const double precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
        const double recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
        const double harmonic = 2 * precision * recall / (precision + recall);
        CHECK(f1_score(c) == Catch::Approx(harmonic).epsilon(1e-12));
    }
}

TEST_CASE("invalid status cannot be narrowed to a binary label") {
    CHECK(to_binary(ai_status::normal) == N);
    CHECK(to_binary(ai_status::abnormal) == A);
    CHECK_THROWS_AS(to_binary(ai_status::invalid), error);
}
