#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "cxrval/dicomweb.hpp"

using namespace cxrval;

namespace {

const char* two_studies = R"([
  {
    "00080020": {"vr": "DA", "Value": ["20201115"]},
    "00080030": {"vr": "TM", "Value": ["093000"]},
    "00080060": {"vr": "CS", "Value": ["DX"]},
    "00100020": {"vr": "LO", "Value": ["P001"]},
    "00180015": {"vr": "CS", "Value": ["CHEST"]},
    "0020000D": {"vr": "UI", "Value": ["1.2.3.1"]}
  },
  {
    "00080020": {"vr": "DA", "Value": ["20201116"]},
    "00080030": {"vr": "TM", "Value": ["101530.25"]},
    "00080060": {"vr": "CS", "Value": ["CR"]},
    "00100020": {"vr": "LO", "Value": ["P002"]},
    "00180015": {"vr": "CS", "Value": ["THORAX"]},
    "0020000D": {"vr": "UI", "Value": ["1.2.3.2"]}
  }
])";

}  // namespace

TEST_CASE("an array of study objects maps to one record each") {
    const auto studies = parse_dicomweb_json(two_studies, "qido");
    REQUIRE(studies.size() == 2);
    CHECK(studies[0].patient_id == "P001");
    CHECK(studies[0].study_time.to_iso() == "2020-11-15T09:30:00");
    CHECK(studies[0].source_uri == "qido#0");
    CHECK(studies[1].modality == "CR");
    CHECK(studies[1].body_part == "THORAX");
    CHECK(studies[1].study_time.to_iso() == "2020-11-16T10:15:30");  // fraction truncated
    CHECK(studies[1].source_uri == "qido#1");
}

TEST_CASE("an empty array is an empty list") {
    CHECK(parse_dicomweb_json("[]").empty());
}

TEST_CASE("malformed JSON is parse-error") {
    CHECK_THROWS_MATCHES(parse_dicomweb_json("{not json"), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::parse_error;
                         }));
    CHECK_THROWS_MATCHES(parse_dicomweb_json("{}"), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::parse_error;  // not an array
                         }));
}

TEST_CASE("a study object missing Modality names the tag") {
    const char* doc = R"([
      {
        "00080020": {"vr": "DA", "Value": ["20201115"]},
        "00080030": {"vr": "TM", "Value": ["093000"]},
        "00100020": {"vr": "LO", "Value": ["P001"]},
        "00180015": {"vr": "CS", "Value": ["CHEST"]},
        "0020000D": {"vr": "UI", "Value": ["1.2.3.1"]}
      }
    ])";
    try {
        parse_dicomweb_json(doc);
        FAIL("expected missing-tag");
    } catch (const error& e) {
        CHECK(e.code() == errc::missing_tag);
        CHECK(e.context() == "(0008,0060)");
    }
}

TEST_CASE("an empty Value array is treated as missing") {
    const char* doc = R"([
      {
        "00080020": {"vr": "DA", "Value": ["20201115"]},
        "00080030": {"vr": "TM", "Value": ["093000"]},
        "00080060": {"vr": "CS", "Value": []},
        "00100020": {"vr": "LO", "Value": ["P001"]},
        "00180015": {"vr": "CS", "Value": ["CHEST"]},
        "0020000D": {"vr": "UI", "Value": ["1.2.3.1"]}
      }
    ])";
    CHECK_THROWS_MATCHES(parse_dicomweb_json(doc), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                             return e.code() == errc::missing_tag;
                         }));
}
