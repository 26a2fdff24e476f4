/**
 * @file labeler.hpp
 * @brief Normal/abnormal ground truth for a report by template containment.
 *
 * A report describes four anatomical regions. A region is normal when one
 * of its normal-description templates appears verbatim in the description;
 * the report is normal only when all four regions are. Matching is exact
 * substring containment after normalize_text() on both sides, so encoding
 * form, case and whitespace runs do not break "exactly appears".
 */

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cxrval/error.hpp"
#include "cxrval/metrics.hpp"
#include "cxrval/text.hpp"

namespace cxrval {

enum class anatomical_region : std::uint8_t { chest_wall, pleura, lung, mediastinum };

inline constexpr std::size_t region_count = 4;

inline constexpr std::array<anatomical_region, region_count> all_regions = {
    anatomical_region::chest_wall, anatomical_region::pleura, anatomical_region::lung,
    anatomical_region::mediastinum};

inline std::string_view to_string(anatomical_region r) {
    switch (r) {
        case anatomical_region::chest_wall: return "ChestWall";
        case anatomical_region::pleura: return "Pleura";
        case anatomical_region::lung: return "Lung";
        case anatomical_region::mediastinum: return "Mediastinum";
    }
    return "unknown";
}

/// Per-region normal-description templates. All four regions must be
/// populated with non-empty strings.
class template_set {
public:
    template_set(std::vector<std::string> chest_wall, std::vector<std::string> pleura,
                 std::vector<std::string> lung, std::vector<std::string> mediastinum)
        : raw_{std::move(chest_wall), std::move(pleura), std::move(lung),
               std::move(mediastinum)} {
        for (std::size_t r = 0; r < region_count; ++r) {
            if (raw_[r].empty())
                throw error(errc::config_error, "region has no templates",
                            std::string(to_string(all_regions[r])));
            for (const auto& t : raw_[r]) {
                if (t.empty())
                    throw error(errc::config_error, "empty template string",
                                std::string(to_string(all_regions[r])));
                normalized_[r].push_back(normalize_text(t));
            }
        }
    }

    /// {"ChestWall": ["..."], "Pleura": [...], "Lung": [...], "Mediastinum": [...]}
    static template_set from_json(const nlohmann::json& doc) {
        if (!doc.is_object()) throw error(errc::config_error, "template file is not an object");
        const auto pull = [&](anatomical_region r) {
            const std::string key(to_string(r));
            if (!doc.contains(key))
                throw error(errc::config_error, "region missing from template file", key);
            return doc.at(key).get<std::vector<std::string>>();
        };
        return template_set(pull(anatomical_region::chest_wall), pull(anatomical_region::pleura),
                            pull(anatomical_region::lung), pull(anatomical_region::mediastinum));
    }

    nlohmann::json to_json() const {
        nlohmann::json doc;
        for (std::size_t r = 0; r < region_count; ++r)
            doc[std::string(to_string(all_regions[r]))] = raw_[r];
        return doc;
    }

    const std::vector<std::string>& raw(anatomical_region r) const {
        return raw_[static_cast<std::size_t>(r)];
    }
    const std::vector<std::string>& normalized(anatomical_region r) const {
        return normalized_[static_cast<std::size_t>(r)];
    }

private:
    std::array<std::vector<std::string>, region_count> raw_;
    std::array<std::vector<std::string>, region_count> normalized_;
};

/// The stock Vietnamese template set (two chest-wall, three pleura, one
/// lung, two mediastinum template strings).
inline const template_set& default_templates() {
    static const template_set set(
        {"không thấy hình bất thường xương lồng ngực",
         "không thấy hình tổn thương xương lồng ngực"},
        {"không thấy hình tràn dịch màng phổi",
         "không thấy hình tràn dịch, khí màng phổi",
         "không thấy hình tràn khí, tràn dịch màng phổi"},
        {"nhu mô phổi không thấy bất thường"},
        {"hình tim và trung thất không thấy bất thường",
         "hình tim và trung thất bình thường"});
    return set;
}

struct report_label {
    binary_label overall = binary_label::abnormal;
    std::array<bool, region_count> region_normal = {false, false, false, false};
    bool empty_description = false;

    bool region(anatomical_region r) const {
        return region_normal[static_cast<std::size_t>(r)];
    }
};

/// True iff any of the region's templates is a contiguous substring of the
/// description. Both arguments must already be in normalize_text() form.
inline bool label_region(std::string_view normalized_description, anatomical_region region,
                         const template_set& templates) {
    for (const auto& t : templates.normalized(region))
        if (normalized_description.find(t) != std::string_view::npos) return true;
    return false;
}

/// Labels a raw description; normalization is applied internally.
inline report_label label_report(std::string_view description, const template_set& templates) {
    const std::string normalized = normalize_text(description);
    report_label label;
    label.empty_description = normalized.empty();
    bool all_normal = true;
    for (std::size_t r = 0; r < region_count; ++r) {
        const bool ok = label_region(normalized, all_regions[r], templates);
        label.region_normal[r] = ok;
        all_normal = all_normal && ok;
    }
    label.overall = all_normal ? binary_label::normal : binary_label::abnormal;
    return label;
}

}  // namespace cxrval
