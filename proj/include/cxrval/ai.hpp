/**
 * @file ai.hpp
 * @brief The gated three-stage cascade and its pluggable scorer contract.
 *
 * Stage order is fixed: view gate, abnormality gate, lesion detector.
 * A stage runs only when the previous gate passed, both gates strict
 * "greater than" against their thresholds.
 */

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cxrval/error.hpp"
#include "cxrval/study.hpp"
#include "cxrval/timestamp.hpp"

namespace cxrval {

// ─────────────────────────────────────────────────────
// Lesion classes and boxes
// ─────────────────────────────────────────────────────

/// The 17 finding classes emitted by the lesion detector.
enum class lesion_class : std::uint8_t {
    aortic_enlargement,
    atelectasis,
    calcification,
    cardiomegaly,
    clavicle_fracture,
    consolidation,
    emphysema,
    enlarged_pa,
    infiltration,
    interstitial_lung_disease,
    nodule_mass,
    opacity,
    pleural_effusion,
    pleural_thickening,
    pneumothorax,
    pulmonary_fibrosis,
    rib_fracture,
};

inline constexpr std::size_t lesion_class_count = 17;

inline constexpr std::array<std::string_view, lesion_class_count> lesion_class_names = {
    "Aortic enlargement",
    "Atelectasis",
    "Calcification",
    "Cardiomegaly",
    "Clavicle fracture",
    "Consolidation",
    "Emphysema",
    "Enlarged PA",
    "Infiltration",
    "Interstitial lung disease (ILD)",
    "Nodule/Mass",
    "Opacity",
    "Pleural effusion",
    "Pleural thickening",
    "Pneumothorax",
    "Pulmonary fibrosis",
    "Rib fracture",
};

inline std::string_view to_string(lesion_class c) {
    return lesion_class_names[static_cast<std::size_t>(c)];
}

inline std::optional<lesion_class> lesion_class_from_string(std::string_view name) {
    for (std::size_t i = 0; i < lesion_class_count; ++i)
        if (lesion_class_names[i] == name) return static_cast<lesion_class>(i);
    return std::nullopt;
}

/// Class-labeled bounding box, coordinates normalized to image extent.
struct lesion_box {
    lesion_class cls = lesion_class::aortic_enlargement;
    double x_min = 0, y_min = 0, x_max = 0, y_max = 0;
    double confidence = 0;

    bool valid_geometry() const { return x_min < x_max && y_min < y_max; }
    bool valid_normalized() const {
        return valid_geometry() && x_min >= 0 && y_min >= 0 && x_max <= 1 && y_max <= 1 &&
               confidence >= 0 && confidence <= 1;
    }

    friend bool operator==(const lesion_box&, const lesion_box&) = default;
};

inline void to_json(nlohmann::json& j, const lesion_box& b) {
    j = {{"class", to_string(b.cls)}, {"x_min", b.x_min},  {"y_min", b.y_min},
         {"x_max", b.x_max},          {"y_max", b.y_max},  {"confidence", b.confidence}};
}

inline void from_json(const nlohmann::json& j, lesion_box& b) {
    const auto name = j.at("class").get<std::string>();
    auto cls = lesion_class_from_string(name);
    if (!cls) throw error(errc::parse_error, "unknown lesion class", name);
    b.cls = *cls;
    b.x_min = j.at("x_min").get<double>();
    b.y_min = j.at("y_min").get<double>();
    b.x_max = j.at("x_max").get<double>();
    b.y_max = j.at("y_max").get<double>();
    b.confidence = j.at("confidence").get<double>();
    if (!b.valid_normalized())
        throw error(errc::parse_error, "lesion box violates its invariants", name);
}

// ─────────────────────────────────────────────────────
// AI result
// ─────────────────────────────────────────────────────

enum class ai_status : std::uint8_t { invalid, normal, abnormal };

inline std::string_view to_string(ai_status s) {
    switch (s) {
        case ai_status::invalid: return "invalid";
        case ai_status::normal: return "normal";
        case ai_status::abnormal: return "abnormal";
    }
    return "unknown";
}

inline std::optional<ai_status> ai_status_from_string(std::string_view s) {
    if (s == "invalid") return ai_status::invalid;
    if (s == "normal") return ai_status::normal;
    if (s == "abnormal") return ai_status::abnormal;
    return std::nullopt;
}

/// Output of the cascade for one admitted study.
struct ai_result {
    std::string study_uid;
    std::string patient_id;
    timestamp study_time;
    ai_status status = ai_status::invalid;
    double pa_probability = 0;
    std::optional<double> abnormal_probability;  ///< absent when invalid
    std::vector<lesion_box> lesions;             ///< empty unless abnormal

    friend bool operator==(const ai_result&, const ai_result&) = default;
};

inline void to_json(nlohmann::json& j, const ai_result& r) {
    j = {{"schema", "cxrval.ai_result/1"},
         {"study_uid", r.study_uid},
         {"patient_id", r.patient_id},
         {"study_time", r.study_time.to_iso()},
         {"status", to_string(r.status)},
         {"ABNORMAL_STATUS", r.status == ai_status::abnormal ? 1 : 0},
         {"pa_probability", r.pa_probability},
         {"lesions", r.lesions}};
    if (r.abnormal_probability) j["abnormal_probability"] = *r.abnormal_probability;
}

inline void from_json(const nlohmann::json& j, ai_result& r) {
    r.study_uid = j.at("study_uid").get<std::string>();
    r.patient_id = j.at("patient_id").get<std::string>();
    r.study_time = timestamp::parse_or_throw(j.at("study_time").get<std::string>());
    auto status = ai_status_from_string(j.at("status").get<std::string>());
    if (!status) throw error(errc::parse_error, "unknown ai status", j.at("status").dump());
    r.status = *status;
    const int abnormal_flag = j.at("ABNORMAL_STATUS").get<int>();
    if ((abnormal_flag == 1) != (r.status == ai_status::abnormal))
        throw error(errc::parse_error, "ABNORMAL_STATUS inconsistent with status",
                    r.study_uid);
    r.pa_probability = j.at("pa_probability").get<double>();
    r.abnormal_probability.reset();
    if (j.contains("abnormal_probability"))
        r.abnormal_probability = j.at("abnormal_probability").get<double>();
    if (r.status == ai_status::invalid && r.abnormal_probability)
        throw error(errc::parse_error, "invalid result carries abnormal_probability",
                    r.study_uid);
    r.lesions = j.value("lesions", std::vector<lesion_box>{});
    if (r.status != ai_status::abnormal && !r.lesions.empty())
        throw error(errc::parse_error, "non-abnormal result carries lesions", r.study_uid);
}

// ─────────────────────────────────────────────────────
// Scorer contract and cascade
// ─────────────────────────────────────────────────────

/// Pluggable model surface. Implementations must be deterministic for a
/// fixed configuration and seed, and safe for concurrent calls.
struct scorer_contract {
    std::function<double(const study_meta&)> pa_score;
    std::function<double(const study_meta&)> abnormal_score;
    std::function<std::vector<lesion_box>(const study_meta&)> detect;
};

namespace detail {

inline double checked_score(const std::function<double(const study_meta&)>& fn,
                            const study_meta& meta, const char* stage) {
    double v;
    try {
        v = fn(meta);
    } catch (const std::exception& e) {
        throw error(errc::cascade_error, e.what(), stage);
    }
    if (!(v >= 0.0 && v <= 1.0))
        throw error(errc::cascade_error, "score outside [0,1]", stage);
    return v;
}

}  // namespace detail

/**
 * @brief Runs the gated cascade over one admitted study.
 *
 * pa_score <= pa_threshold   -> invalid; later stages never invoked.
 * abnormal_score <= abn_threshold -> normal; detector never invoked.
 * Otherwise abnormal with the detector's boxes.
 */
inline ai_result run_cascade(const study_meta& meta, const scorer_contract& scorers,
                             double pa_threshold = 0.5, double abn_threshold = 0.5) {
    ai_result r;
    r.study_uid = meta.study_uid;
    r.patient_id = meta.patient_id;
    r.study_time = meta.study_time;

    r.pa_probability = detail::checked_score(scorers.pa_score, meta, "pa-classifier");
    if (!(r.pa_probability > pa_threshold)) {
        r.status = ai_status::invalid;
        return r;
    }

    r.abnormal_probability =
        detail::checked_score(scorers.abnormal_score, meta, "abnormality-classifier");
    if (!(*r.abnormal_probability > abn_threshold)) {
        r.status = ai_status::normal;
        return r;
    }

    r.status = ai_status::abnormal;
    try {
        r.lesions = scorers.detect(meta);
    } catch (const std::exception& e) {
        throw error(errc::cascade_error, e.what(), "lesion-detector");
    }
    for (const auto& b : r.lesions)
        if (!b.valid_normalized())
            throw error(errc::cascade_error, "detector emitted an invalid box",
                        "lesion-detector");
    return r;
}

}  // namespace cxrval
