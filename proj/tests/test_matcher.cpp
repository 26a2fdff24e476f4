#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "cxrval/matcher.hpp"

using namespace cxrval;

namespace {

timestamp at(const char* iso) { return *timestamp::parse(iso); }

ai_result ai(const std::string& uid, const std::string& patient, timestamp t,
             ai_status status = ai_status::normal) {
    ai_result r;
    r.study_uid = uid;
    r.patient_id = patient;
    r.study_time = t;
    r.status = status;
    r.pa_probability = 0.9;
    if (status != ai_status::invalid) r.abnormal_probability = 0.3;
    return r;
}

session ses(const std::string& id, const std::string& patient, timestamp in, timestamp out,
            std::vector<timestamp> report_times) {
    session s;
    s.session_id = id;
    s.patient_id = patient;
    s.check_in_time = in;
    s.check_out_time = out;
    for (auto t : report_times) s.reports.push_back({"CXR", t, "d"});
    return s;
}

}  // namespace

TEST_CASE("a pair satisfying all three conditions is matched") {
    const std::vector<ai_result> results = {ai("S1", "P001", at("2020-11-15T09:30:00"))};
    const std::vector<session> sessions = {ses("A", "P001", at("2020-11-15T09:00:00"),
                                               at("2020-11-15T11:00:00"),
                                               {at("2020-11-15T10:00:00")})};
    const auto outcome = match_pairs(results, sessions);
    REQUIRE(outcome.pairs.size() == 1);
    CHECK(outcome.pairs[0].time_delta_seconds == 1800);
    CHECK(outcome.unmatched_ai.empty());
    CHECK(outcome.unmatched_reports.empty());
}

TEST_CASE("different patients never match") {
    const std::vector<ai_result> results = {ai("S1", "P001", at("2020-11-15T09:30:00"))};
    const std::vector<session> sessions = {ses("A", "P002", at("2020-11-15T09:00:00"),
                                               at("2020-11-15T11:00:00"),
                                               {at("2020-11-15T10:00:00")})};
    const auto outcome = match_pairs(results, sessions);
    CHECK(outcome.pairs.empty());
    CHECK(outcome.unmatched_ai.size() == 1);
    CHECK(outcome.unmatched_reports.size() == 1);
}

TEST_CASE("all bounds are inclusive") {
    SECTION("report exactly 24 h after the study") {
        const std::vector<ai_result> results = {ai("S1", "P1", at("2020-11-15T09:00:00"))};
        const std::vector<session> sessions = {ses("A", "P1", at("2020-11-15T08:00:00"),
                                                   at("2020-11-17T09:00:00"),
                                                   {at("2020-11-16T09:00:00")})};
        CHECK(match_pairs(results, sessions).pairs.size() == 1);
    }
    SECTION("study exactly at check-in and check-out") {
        for (const char* study_time : {"2020-11-15T09:00:00", "2020-11-15T11:00:00"}) {
            const std::vector<ai_result> results = {ai("S1", "P1", at(study_time))};
            const std::vector<session> sessions = {ses("A", "P1", at("2020-11-15T09:00:00"),
                                                       at("2020-11-15T11:00:00"),
                                                       {at("2020-11-15T10:00:00")})};
            CHECK(match_pairs(results, sessions).pairs.size() == 1);
        }
    }
    SECTION("one second beyond the window misses") {
        const std::vector<ai_result> results = {ai("S1", "P1", at("2020-11-15T09:00:00"))};
        const std::vector<session> sessions = {ses("A", "P1", at("2020-11-15T08:00:00"),
                                                   at("2020-11-17T09:00:00"),
                                                   {at("2020-11-16T09:00:01")})};
        CHECK(match_pairs(results, sessions).pairs.empty());
    }
}

TEST_CASE("the window is symmetric: reports may precede the study") {
    const std::vector<ai_result> results = {ai("S1", "P1", at("2020-11-15T09:00:00"))};
    const std::vector<session> sessions = {ses("A", "P1", at("2020-11-15T08:00:00"),
                                               at("2020-11-15T12:00:00"),
                                               {at("2020-11-15T08:30:00")})};
    const auto outcome = match_pairs(results, sessions);
    REQUIRE(outcome.pairs.size() == 1);
    CHECK(outcome.pairs[0].time_delta_seconds == -1800);
}

TEST_CASE("closest report wins; the other stays available") {
    // One AI result, two candidate reports at +1 h and +5 h; a second AI
    // result 4 h later can still take the +5 h report (its +1 h).
    const std::vector<ai_result> results = {ai("S1", "P1", at("2020-11-15T09:00:00")),
                                            ai("S2", "P1", at("2020-11-15T13:00:00"))};
    const std::vector<session> sessions = {
        ses("A", "P1", at("2020-11-15T08:00:00"), at("2020-11-15T14:00:00"),
            {at("2020-11-15T10:00:00"), at("2020-11-15T14:00:00")})};
    const auto outcome = match_pairs(results, sessions);
    REQUIRE(outcome.pairs.size() == 2);
    const auto& p1 = *std::find_if(outcome.pairs.begin(), outcome.pairs.end(),
                                   [](const auto& p) { return p.study_uid == "S1"; });
    CHECK(p1.report_time == at("2020-11-15T10:00:00"));
    const auto& p2 = *std::find_if(outcome.pairs.begin(), outcome.pairs.end(),
                                   [](const auto& p) { return p.study_uid == "S2"; });
    CHECK(p2.report_time == at("2020-11-15T14:00:00"));

    // Brute force over both complete one-to-one assignments: the greedy
    // outcome must attain the minimal total |delta|.
    std::int64_t greedy_total = 0;
    for (const auto& p : outcome.pairs) greedy_total += std::abs(p.time_delta_seconds);
    std::int64_t best_total = INT64_MAX;
    const auto& reports = sessions[0].reports;
    for (int assignment : {0, 1}) {
        const auto& r1 = reports[assignment];
        const auto& r2 = reports[1 - assignment];
        best_total = std::min(best_total,
                              std::abs(r1.report_time - results[0].study_time) +
                                  std::abs(r2.report_time - results[1].study_time));
    }
    CHECK(greedy_total == best_total);
}

TEST_CASE("duplicate study uids are an input error") {
    const std::vector<ai_result> results = {ai("S1", "P1", at("2020-11-15T09:00:00")),
                                            ai("S1", "P2", at("2020-11-15T09:00:00"))};
    CHECK_THROWS_AS(match_pairs(results, std::vector<session>{}), error);
}

TEST_CASE("invalid AI results must be excluded by the caller") {
    const std::vector<ai_result> results = {
        ai("S1", "P1", at("2020-11-15T09:00:00"), ai_status::invalid)};
    CHECK_THROWS_AS(match_pairs(results, std::vector<session>{}), error);
}

TEST_CASE("randomized: emitted pairs satisfy the three conditions, nothing reused") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const timestamp base = at("2020-11-15T00:00:00");
        std::vector<ai_result> results;
        const std::size_t n_ai = rng() % 12;
        for (std::size_t i = 0; i < n_ai; ++i)
            results.push_back(ai("S" + std::to_string(i), "P" + std::to_string(rng() % 5),
                                 base + static_cast<std::int64_t>(rng() % (3 * 86400))));
        std::vector<session> sessions;
        const std::size_t n_ses = rng() % 8;
        for (std::size_t i = 0; i < n_ses; ++i) {
            const timestamp in = base + static_cast<std::int64_t>(rng() % (3 * 86400));
            const timestamp out = in + static_cast<std::int64_t>(rng() % 86400);
            std::vector<timestamp> reports;
            const std::size_t n_rep = rng() % 4;
            for (std::size_t r = 0; r < n_rep; ++r)
                reports.push_back(in + static_cast<std::int64_t>(rng() % (2 * 86400)) - 86400);
            sessions.push_back(
                ses("X" + std::to_string(i), "P" + std::to_string(rng() % 5), in, out, reports));
        }

        const std::int64_t window = static_cast<std::int64_t>(rng() % (30 * 3600));
        const auto outcome = match_pairs(results, sessions, window);

        std::set<std::size_t> ai_seen;
        std::set<std::pair<std::size_t, std::size_t>> reports_seen;
        for (const auto& p : outcome.pairs) {
            const auto& a = results[p.ai_index];
            const auto& s = sessions[p.session_index];
            CHECK(a.patient_id == s.patient_id);
            CHECK(s.check_in_time <= a.study_time);
            CHECK(a.study_time <= s.check_out_time);
            const auto delta = s.reports[p.report_index].report_time - a.study_time;
            CHECK(std::abs(delta) <= window);
            CHECK(ai_seen.insert(p.ai_index).second);
            CHECK(reports_seen.insert({p.session_index, p.report_index}).second);
        }
        for (std::size_t idx : outcome.unmatched_ai) CHECK(ai_seen.insert(idx).second);
        for (const auto& u : outcome.unmatched_reports)
            CHECK(reports_seen.insert({u.session_index, u.report_index}).second);

        std::size_t total_reports = 0;
        for (const auto& s : sessions) total_reports += s.reports.size();
        CHECK(ai_seen.size() == results.size());
        CHECK(reports_seen.size() == total_reports);
    }
}

TEST_CASE("shrinking the window never increases the pair count") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        const timestamp base = at("2020-11-15T00:00:00");
        std::vector<ai_result> results;
        std::vector<session> sessions;
        for (std::size_t i = 0; i < 8; ++i) {
            results.push_back(ai("S" + std::to_string(i), "P" + std::to_string(rng() % 3),
                                 base + static_cast<std::int64_t>(rng() % 86400)));
            const timestamp in = base + static_cast<std::int64_t>(rng() % 86400) - 43200;
            sessions.push_back(ses("X" + std::to_string(i), "P" + std::to_string(rng() % 3), in,
                                   in + 86400,
                                   {in + static_cast<std::int64_t>(rng() % (2 * 86400))}));
        }
        std::size_t prev = SIZE_MAX;
        for (std::int64_t window : {48 * 3600, 24 * 3600, 6 * 3600, 3600, 0}) {
            const auto n = match_pairs(results, sessions, window).pairs.size();
            CHECK(n <= prev);
            prev = n;
        }
    }
}

TEST_CASE("outcome is independent of input order") {
    std::mt19937_64 rng(47);
    const timestamp base = at("2020-11-15T00:00:00");
    std::vector<ai_result> results;
    std::vector<session> sessions;
    for (std::size_t i = 0; i < 10; ++i) {
        results.push_back(ai("S" + std::to_string(i), "P" + std::to_string(i % 4),
                             base + static_cast<std::int64_t>(rng() % 86400)));
        const timestamp in = base - 3600;
        sessions.push_back(ses("X" + std::to_string(i), "P" + std::to_string(i % 4), in,
                               in + 2 * 86400,
                               {base + static_cast<std::int64_t>(rng() % 86400)}));
    }

    const auto project = [&](const match_outcome& o) {
        std::vector<std::tuple<std::string, std::string, std::size_t>> v;
        for (const auto& p : o.pairs) v.emplace_back(p.study_uid, p.session_id, p.report_index);
        return v;
    };
    const auto baseline = project(match_pairs(results, sessions));

    for (int shuffle = 0; shuffle < 20; ++shuffle) {
        std::shuffle(results.begin(), results.end(), rng);
        std::shuffle(sessions.begin(), sessions.end(), rng);
        CHECK(project(match_pairs(results, sessions)) == baseline);
    }
}
