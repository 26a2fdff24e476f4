/**
 * @file study.hpp
 * @brief DICOM-derived study identity and the chest-radiograph filter.
 */

#pragma once

#include <array>
#include <string>
#include <string_view>

#include "cxrval/text.hpp"
#include "cxrval/timestamp.hpp"

namespace cxrval {

/// Identity of one imaging study as read from PACS metadata.
struct study_meta {
    std::string patient_id;
    std::string study_uid;
    timestamp study_time;
    std::string modality;   ///< short uppercase code, e.g. "DX"
    std::string body_part;  ///< uppercase, e.g. "CHEST"
    std::string source_uri;

    friend bool operator==(const study_meta&, const study_meta&) = default;
};

/// Why a study was admitted or rejected by the CXR filter.
enum class filter_reason { accepted, bad_modality, bad_body_part, missing_tag };

inline std::string_view to_string(filter_reason r) {
    switch (r) {
        case filter_reason::accepted: return "accepted";
        case filter_reason::bad_modality: return "bad-modality";
        case filter_reason::bad_body_part: return "bad-body-part";
        case filter_reason::missing_tag: return "missing-tag";
    }
    return "unknown";
}

struct filter_decision {
    bool accepted = false;
    filter_reason reason = filter_reason::missing_tag;
};

/// Admits studies with MODALITY in {CR, DR, DX} and BODY_PART_EXAMINED in
/// {CHEST, THORAX}; comparison after trimming and upper-casing. Total.
inline filter_decision is_cxr(const study_meta& meta) {
    const std::string modality = upper_ascii(trim_ascii(meta.modality));
    const std::string body_part = upper_ascii(trim_ascii(meta.body_part));
    if (modality.empty() || body_part.empty())
        return {false, filter_reason::missing_tag};

    constexpr std::array<std::string_view, 3> modalities = {"CR", "DR", "DX"};
    constexpr std::array<std::string_view, 2> body_parts = {"CHEST", "THORAX"};
    if (std::find(modalities.begin(), modalities.end(), modality) == modalities.end())
        return {false, filter_reason::bad_modality};
    if (std::find(body_parts.begin(), body_parts.end(), body_part) == body_parts.end())
        return {false, filter_reason::bad_body_part};
    return {true, filter_reason::accepted};
}

}  // namespace cxrval
