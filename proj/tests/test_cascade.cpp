#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "cxrval/ai.hpp"
#include "cxrval/scorer.hpp"

using namespace cxrval;
using nlohmann::json;

namespace {

study_meta study(const std::string& uid) {
    study_meta m;
    m.patient_id = "P1";
    m.study_uid = uid;
    m.study_time = *timestamp::parse("2020-11-15T09:30:00");
    m.modality = "DX";
    m.body_part = "CHEST";
    return m;
}

struct call_counts {
    int pa = 0, abn = 0, detect = 0;
};

scorer_contract counting(call_counts& counts, double pa, double abn, int boxes = 1) {
    scorer_contract s;
    s.pa_score = [&counts, pa](const study_meta&) { ++counts.pa; return pa; };
    s.abnormal_score = [&counts, abn](const study_meta&) { ++counts.abn; return abn; };
    s.detect = [&counts, boxes](const study_meta&) {
        ++counts.detect;
        std::vector<lesion_box> out;
        for (int i = 0; i < boxes; ++i) {
            lesion_box b;
            b.cls = lesion_class::pulmonary_fibrosis;
            b.x_min = 0.1 + 0.05 * i;
            b.y_min = 0.1;
            b.x_max = 0.4 + 0.05 * i;
            b.y_max = 0.4;
            b.confidence = 0.8;
            out.push_back(b);
        }
        return out;
    };
    return s;
}

}  // namespace

TEST_CASE("pa gate failure means invalid and no downstream calls") {
    call_counts counts;
    const auto r = run_cascade(study("S1"), counting(counts, 0.40, 0.9));
    CHECK(r.status == ai_status::invalid);
    CHECK_FALSE(r.abnormal_probability.has_value());
    CHECK(r.lesions.empty());
    CHECK(counts.pa == 1);
    CHECK(counts.abn == 0);
    CHECK(counts.detect == 0);
}

TEST_CASE("abnormality gate failure means normal and no detector call") {
    call_counts counts;
    const auto r = run_cascade(study("S1"), counting(counts, 0.90, 0.30));
    CHECK(r.status == ai_status::normal);
    REQUIRE(r.abnormal_probability.has_value());
    CHECK(*r.abnormal_probability == 0.30);
    CHECK(r.lesions.empty());
    CHECK(counts.detect == 0);
}

TEST_CASE("both gates passed means abnormal with the detector's boxes") {
    call_counts counts;
    const auto r = run_cascade(study("S1"), counting(counts, 0.90, 0.80, 1));
    CHECK(r.status == ai_status::abnormal);
    REQUIRE(r.lesions.size() == 1);
    CHECK(r.lesions[0].cls == lesion_class::pulmonary_fibrosis);
    CHECK(counts.pa == 1);
    CHECK(counts.abn == 1);
    CHECK(counts.detect == 1);
}

TEST_CASE("gates are strict: exactly 0.5 fails") {
    call_counts counts;
    CHECK(run_cascade(study("S1"), counting(counts, 0.5, 0.9)).status == ai_status::invalid);
    CHECK(run_cascade(study("S1"), counting(counts, 0.9, 0.5)).status == ai_status::normal);
}

TEST_CASE("call ordering invariant over many random scores") {
    call_counts counts;
    std::mt19937_64 rng(19);
    for (int i = 0; i < 500; ++i) {
        const double pa = (rng() % 100) / 99.0;
        const double abn = (rng() % 100) / 99.0;
        auto s = counting(counts, pa, abn);
        run_cascade(study("S" + std::to_string(i)), s);
        CHECK(counts.detect <= counts.abn);
        CHECK(counts.abn <= counts.pa);
    }
}

TEST_CASE("status is a pure function of probabilities and thresholds") {
    call_counts counts;
    CHECK(run_cascade(study("S"), counting(counts, 0.61, 0.9), 0.6).status ==
          ai_status::abnormal);
    CHECK(run_cascade(study("S"), counting(counts, 0.60, 0.9), 0.6).status ==
          ai_status::invalid);
    CHECK(run_cascade(study("S"), counting(counts, 0.9, 0.71), 0.5, 0.7).status ==
          ai_status::abnormal);
    CHECK(run_cascade(study("S"), counting(counts, 0.9, 0.70), 0.5, 0.7).status ==
          ai_status::normal);
}

TEST_CASE("scorer failures surface as cascade-error naming the stage") {
    scorer_contract s;
    s.pa_score = [](const study_meta&) -> double { throw std::runtime_error("boom"); };
    try {
        run_cascade(study("S1"), s);
        FAIL("expected cascade-error");
    } catch (const error& e) {
        CHECK(e.code() == errc::cascade_error);
        CHECK(e.context() == "pa-classifier");
    }

    scorer_contract bad_range;
    bad_range.pa_score = [](const study_meta&) { return 1.5; };
    CHECK_THROWS_AS(run_cascade(study("S1"), bad_range), error);
}

TEST_CASE("ai_result JSON round trip is identity") {
    call_counts counts;
    for (auto [pa, abn] : {std::pair{0.4, 0.0}, {0.9, 0.3}, {0.9, 0.8}}) {
        const auto r = run_cascade(study("S1"), counting(counts, pa, abn, 2));
        const json j = r;
        const auto back = j.get<ai_result>();
        CHECK(back == r);
        CHECK(j.at("ABNORMAL_STATUS").get<int>() == (r.status == ai_status::abnormal ? 1 : 0));
    }
}

TEST_CASE("inconsistent ABNORMAL_STATUS is rejected on read") {
    call_counts counts;
    json j = run_cascade(study("S1"), counting(counts, 0.9, 0.8));
    j["ABNORMAL_STATUS"] = 0;
    CHECK_THROWS_AS(j.get<ai_result>(), error);
}

TEST_CASE("stub scorer: explicit entries pin scores") {
    const json cfg = {{"studies", {{"S1", {{"pa", 0.9}, {"abn", 0.8}}}}}};
    const auto s = stub_scorer(cfg, 1);
    CHECK(s.pa_score(study("S1")) == 0.9);
    CHECK(s.abnormal_score(study("S1")) == 0.8);
}

TEST_CASE("stub scorer: glob patterns apply in order") {
    const json cfg = {{"patterns",
                       {{{"glob", "INV*"}, {"pa", 0.2}},
                        {{"glob", "*"}, {"pa", 0.9}, {"abn", 0.1}}}}};
    const auto s = stub_scorer(cfg, 1);
    CHECK(s.pa_score(study("INV-7")) == 0.2);
    CHECK(s.pa_score(study("OTHER")) == 0.9);
    CHECK(s.abnormal_score(study("OTHER")) == 0.1);
}

TEST_CASE("stub scorer: same config and seed give identical streams") {
    const json cfg = {{"fallback", {{"invalid_rate", 0.1}, {"abnormal_rate", 0.4}}}};
    const auto a = stub_scorer(cfg, 77);
    const auto b = stub_scorer(cfg, 77);
    const auto c = stub_scorer(cfg, 78);
    bool saw_difference = false;
    for (int i = 0; i < 200; ++i) {
        const auto m = study("U" + std::to_string(i));
        CHECK(a.pa_score(m) == b.pa_score(m));
        CHECK(a.abnormal_score(m) == b.abnormal_score(m));
        CHECK(a.detect(m) == b.detect(m));
        saw_difference |= a.abnormal_score(m) != c.abnormal_score(m);
    }
    CHECK(saw_difference);
}

TEST_CASE("stub scorer fallback hits the configured abnormal rate") {
    const json cfg = {{"fallback", {{"invalid_rate", 0.0}, {"abnormal_rate", 0.276}}}};
    const auto s = stub_scorer(cfg, 20201115);
    int abnormal = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) {
        const auto m = study("UID." + std::to_string(i));
        REQUIRE(s.pa_score(m) > 0.5);
        if (s.abnormal_score(m) > 0.5) ++abnormal;
    }
    CHECK(std::abs(abnormal / static_cast<double>(n) - 0.276) < 0.01);
}

TEST_CASE("malformed scorer config is config-error") {
    CHECK_THROWS_AS(stub_scorer_from_text("{nope", 1), error);
    CHECK_THROWS_AS(stub_scorer(json{{"studies", {{"S1", {{"pa", 1.7}}}}}}, 1), error);
    CHECK_THROWS_AS(stub_scorer(json{{"fallback", {{"invalid_rate", 1.0}}}}, 1), error);
}
