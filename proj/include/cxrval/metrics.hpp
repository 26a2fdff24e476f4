/**
 * @file metrics.hpp
 * @brief Binary confusion counts and the F1 score.
 *
 * Positive class is Abnormal. F1 is computed as TP / (TP + (FP+FN)/2),
 * which equals the harmonic mean of precision and recall whenever both
 * are defined.
 */

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cxrval/ai.hpp"
#include "cxrval/error.hpp"

namespace cxrval {

enum class binary_label : std::uint8_t { normal, abnormal };

inline std::string_view to_string(binary_label l) {
    return l == binary_label::abnormal ? "abnormal" : "normal";
}

inline std::optional<binary_label> binary_label_from_string(std::string_view s) {
    if (s == "normal") return binary_label::normal;
    if (s == "abnormal") return binary_label::abnormal;
    return std::nullopt;
}

/// Narrowing conversion; invalid AI results carry no binary status.
inline binary_label to_binary(ai_status s) {
    switch (s) {
        case ai_status::normal: return binary_label::normal;
        case ai_status::abnormal: return binary_label::abnormal;
        case ai_status::invalid: break;
    }
    throw error(errc::input_error, "invalid AI result has no normal/abnormal status");
}

struct confusion_counts {
    std::uint64_t tp = 0;  ///< AI abnormal, report abnormal
    std::uint64_t fp = 0;  ///< AI abnormal, report normal
    std::uint64_t fn = 0;  ///< AI normal,   report abnormal
    std::uint64_t tn = 0;  ///< AI normal,   report normal

    std::uint64_t total() const { return tp + fp + fn + tn; }
    friend bool operator==(const confusion_counts&, const confusion_counts&) = default;
};

/// One evaluated pair: (AI prediction, report ground truth).
using outcome_pair = std::pair<binary_label, binary_label>;

inline confusion_counts confusion(std::span<const outcome_pair> pairs) {
    confusion_counts c;
    for (const auto& [predicted, truth] : pairs) {
        if (predicted == binary_label::abnormal)
            (truth == binary_label::abnormal ? c.tp : c.fp) += 1;
        else
            (truth == binary_label::abnormal ? c.fn : c.tn) += 1;
    }
    return c;
}

inline confusion_counts confusion(const std::vector<outcome_pair>& pairs) {
    return confusion(std::span<const outcome_pair>(pairs));
}

/// F1 = TP / (TP + (FP+FN)/2). The degenerate all-agree case with no
/// positives anywhere (tp=fp=fn=0) is defined as 1.0 so resampling a
/// perfect classifier stays perfect.
inline double f1_score(const confusion_counts& c) {
    if (c.tp == 0 && c.fp == 0 && c.fn == 0) return 1.0;
    return static_cast<double>(c.tp) /
           (static_cast<double>(c.tp) + (static_cast<double>(c.fp) + static_cast<double>(c.fn)) / 2.0);
}

}  // namespace cxrval
