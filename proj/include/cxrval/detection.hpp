/**
 * @file detection.hpp
 * @brief IoU, per-class average precision at an IoU threshold, and mAP.
 */

#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "cxrval/ai.hpp"
#include "cxrval/error.hpp"

namespace cxrval {

/// Intersection-over-union of two boxes; 0 when disjoint.
inline double iou(const lesion_box& a, const lesion_box& b) {
    const double ix = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
    const double iy = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
    if (ix <= 0 || iy <= 0) return 0.0;
    const double inter = ix * iy;
    const double area_a = (a.x_max - a.x_min) * (a.y_max - a.y_min);
    const double area_b = (b.x_max - b.x_min) * (b.y_max - b.y_min);
    return inter / (area_a + area_b - inter);
}

namespace detection_detail {

inline void require_single_class(std::span<const lesion_box> predictions,
                                 std::span<const lesion_box> truths) {
    const lesion_box* first = !predictions.empty() ? &predictions.front()
                             : !truths.empty()     ? &truths.front()
                                                   : nullptr;
    if (first == nullptr) return;
    for (const auto& b : predictions)
        if (b.cls != first->cls)
            throw error(errc::input_error, "mixed lesion classes in AP input");
    for (const auto& b : truths)
        if (b.cls != first->cls)
            throw error(errc::input_error, "mixed lesion classes in AP input");
}

}  // namespace detection_detail

/**
 * @brief Average precision for one class at one IoU threshold.
 *
 * Predictions are taken in descending confidence order (stable on ties);
 * each is greedily assigned to the unmatched truth of highest IoU >=
 * threshold. AP is the exact area under the interpolated precision-recall
 * step curve (all-point interpolation). With truths and no predictions the
 * AP is 0; with no truths there is nothing to recall and AP is 0.
 */
inline double average_precision(std::span<const lesion_box> predictions,
                                std::span<const lesion_box> truths,
                                double iou_threshold = 0.4) {
    detection_detail::require_single_class(predictions, truths);
    if (truths.empty() || predictions.empty()) return 0.0;

    std::vector<std::size_t> order(predictions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return predictions[a].confidence > predictions[b].confidence;
    });

    std::vector<bool> truth_used(truths.size(), false);
    std::vector<double> precision(order.size()), recall(order.size());
    std::size_t tp = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& pred = predictions[order[k]];
        double best_iou = 0;
        std::size_t best_t = truths.size();
        for (std::size_t t = 0; t < truths.size(); ++t) {
            if (truth_used[t]) continue;
            const double v = iou(pred, truths[t]);
            if (v >= iou_threshold && v > best_iou) {
                best_iou = v;
                best_t = t;
            }
        }
        if (best_t < truths.size()) {
            truth_used[best_t] = true;
            ++tp;
        }
        precision[k] = static_cast<double>(tp) / static_cast<double>(k + 1);
        recall[k] = static_cast<double>(tp) / static_cast<double>(truths.size());
    }

    // Right-to-left running max gives the interpolated precision envelope.
    for (std::size_t k = precision.size() - 1; k-- > 0;)
        precision[k] = std::max(precision[k], precision[k + 1]);

    double ap = 0, prev_recall = 0;
    for (std::size_t k = 0; k < precision.size(); ++k) {
        ap += (recall[k] - prev_recall) * precision[k];
        prev_recall = recall[k];
    }
    return ap;
}

/// Arithmetic mean over the full 17-class AP table.
inline double mean_ap(const std::map<lesion_class, double>& per_class_ap) {
    if (per_class_ap.size() != lesion_class_count)
        throw error(errc::input_error, "AP table must cover all 17 classes, has " +
                                           std::to_string(per_class_ap.size()));
    double sum = 0;
    for (const auto& [cls, ap] : per_class_ap) sum += ap;
    return sum / static_cast<double>(lesion_class_count);
}

}  // namespace cxrval
