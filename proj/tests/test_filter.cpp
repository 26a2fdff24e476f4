#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cxrval/study.hpp"

using namespace cxrval;

namespace {

study_meta meta_with(std::string modality, std::string body_part) {
    study_meta m;
    m.patient_id = "P1";
    m.study_uid = "1.2.3";
    m.study_time = *timestamp::parse("2020-11-15T09:30:00");
    m.modality = std::move(modality);
    m.body_part = std::move(body_part);
    return m;
}

}  // namespace

TEST_CASE("admits exactly CR/DR/DX with CHEST/THORAX") {
    for (const char* mod : {"CR", "DR", "DX"})
        for (const char* bp : {"CHEST", "THORAX"}) {
            const auto d = is_cxr(meta_with(mod, bp));
            CHECK(d.accepted);
            CHECK(d.reason == filter_reason::accepted);
        }
}

TEST_CASE("wrong modality is rejected before the body part is looked at") {
    const auto d = is_cxr(meta_with("CT", "CHEST"));
    CHECK_FALSE(d.accepted);
    CHECK(d.reason == filter_reason::bad_modality);

    const auto both_bad = is_cxr(meta_with("MR", "SKULL"));
    CHECK(both_bad.reason == filter_reason::bad_modality);
}

TEST_CASE("wrong body part is rejected") {
    const auto d = is_cxr(meta_with("DX", "SKULL"));
    CHECK_FALSE(d.accepted);
    CHECK(d.reason == filter_reason::bad_body_part);
}

TEST_CASE("comparison trims and upcases") {
    CHECK(is_cxr(meta_with(" dx ", "chest")).accepted);
    CHECK(is_cxr(meta_with("Dr", " Thorax\t")).accepted);
    CHECK_FALSE(is_cxr(meta_with("dxx", "chest")).accepted);
}

TEST_CASE("empty attribute values report missing-tag") {
    CHECK(is_cxr(meta_with("", "CHEST")).reason == filter_reason::missing_tag);
    CHECK(is_cxr(meta_with("DX", "   ")).reason == filter_reason::missing_tag);
}

TEST_CASE("reason is accepted exactly when accepted is true") {
    std::mt19937_64 rng(5);
    const char* modalities[] = {"CR", "DR", "DX", "CT", "MR", "US", "", "XR", "dx"};
    const char* body_parts[] = {"CHEST", "THORAX", "SKULL", "ABDOMEN", "", "chest "};
    for (int t = 0; t < 2000; ++t) {
        const auto d = is_cxr(meta_with(modalities[rng() % std::size(modalities)],
                                        body_parts[rng() % std::size(body_parts)]));
        CHECK(d.accepted == (d.reason == filter_reason::accepted));
    }
}
