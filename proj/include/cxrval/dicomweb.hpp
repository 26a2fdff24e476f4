/**
 * @file dicomweb.hpp
 * @brief Study metadata from DICOMweb (QIDO-RS/WADO-RS metadata) JSON.
 *
 * Accepts the PS3.18 study-level model: an array of objects keyed by
 * 8-hex-digit tags, each value an object with "vr" and "Value" members.
 */

#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "cxrval/dicom.hpp"
#include "cxrval/error.hpp"
#include "cxrval/study.hpp"

namespace cxrval {

namespace dicomweb_detail {

inline std::string tag_key(dicom::tag t) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%04X%04X", t.group, t.element);
    return buf;
}

inline std::string first_value(const nlohmann::json& study, dicom::tag t,
                               const std::string& where) {
    const std::string key = tag_key(t);
    auto it = study.find(key);
    if (it == study.end() || !it->is_object())
        throw error(errc::missing_tag, "attribute absent in " + where, t.to_string());
    auto value = it->find("Value");
    if (value == it->end() || !value->is_array() || value->empty())
        throw error(errc::missing_tag, "attribute has no Value in " + where, t.to_string());
    const auto& v = value->front();
    if (v.is_string()) return std::string(trim_ascii(v.get<std::string>()));
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw error(errc::missing_tag, "attribute Value not textual in " + where, t.to_string());
}

}  // namespace dicomweb_detail

/// Parses a DICOMweb metadata document into one study_meta per array element.
/// source_prefix seeds the per-study source_uri as "<prefix>#<index>".
inline std::vector<study_meta> parse_dicomweb_json(std::string_view doc,
                                                   const std::string& source_prefix = "dicomweb") {
    nlohmann::json root = nlohmann::json::parse(doc, nullptr, /*allow_exceptions=*/false);
    if (root.is_discarded())
        throw error(errc::parse_error, "malformed DICOMweb JSON");
    if (!root.is_array())
        throw error(errc::parse_error, "DICOMweb document is not an array");

    std::vector<study_meta> out;
    out.reserve(root.size());
    for (std::size_t i = 0; i < root.size(); ++i) {
        const auto& study = root[i];
        const std::string where = "study " + std::to_string(i);
        if (!study.is_object())
            throw error(errc::parse_error, where + " is not an object");

        using namespace dicomweb_detail;
        study_meta m;
        m.patient_id = first_value(study, dicom::patient_id, where);
        m.study_uid = first_value(study, dicom::study_instance_uid, where);
        m.modality = first_value(study, dicom::modality, where);
        m.body_part = first_value(study, dicom::body_part_examined, where);
        const std::string da = first_value(study, dicom::study_date, where);
        const std::string tm = first_value(study, dicom::study_time_tag, where);
        auto ts = timestamp::from_dicom(da, tm);
        if (!ts)
            throw error(errc::bad_timestamp, "cannot parse StudyDate/StudyTime in " + where,
                        da + " " + tm);
        m.study_time = *ts;
        m.source_uri = source_prefix + "#" + std::to_string(i);
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace cxrval
