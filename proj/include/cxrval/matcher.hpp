/**
 * @file matcher.hpp
 * @brief One-to-one linkage of AI results to radiology reports.
 *
 * A pair (AI result, report) is a candidate when all three conditions hold,
 * every bound inclusive:
 *   1. same patient id,
 *   2. check_in_time <= study_time <= check_out_time of the report's session,
 *   3. |report_time - study_time| <= window (24 h default).
 * Candidates resolve one-to-one greedily by ascending |time delta|, ties
 * broken by (session_id, report position, study_uid), which makes the
 * outcome independent of input order.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cxrval/ai.hpp"
#include "cxrval/error.hpp"
#include "cxrval/his.hpp"

namespace cxrval {

inline constexpr std::int64_t default_match_window_seconds = 24 * 3600;

struct matched_pair {
    std::size_t ai_index = 0;       ///< into the ai_results input
    std::size_t session_index = 0;  ///< into the sessions input
    std::size_t report_index = 0;   ///< into session.reports
    std::string study_uid;
    std::string patient_id;
    std::string session_id;
    timestamp study_time;
    timestamp report_time;
    std::int64_t time_delta_seconds = 0;  ///< report_time - study_time
};

struct unmatched_report_ref {
    std::size_t session_index = 0;
    std::size_t report_index = 0;
    std::string session_id;
};

/// Pairs plus the leftovers on both sides; together they partition the
/// inputs (each AI result and each report appears exactly once).
struct match_outcome {
    std::vector<matched_pair> pairs;                     // sorted by study_uid
    std::vector<std::size_t> unmatched_ai;               // sorted by study_uid
    std::vector<unmatched_report_ref> unmatched_reports; // sorted by (session_id, index)
};

inline match_outcome match_pairs(std::span<const ai_result> ai_results,
                                 std::span<const session> sessions,
                                 std::int64_t window_seconds = default_match_window_seconds) {
    if (window_seconds < 0) throw error(errc::input_error, "negative match window");

    std::unordered_set<std::string> seen_uids;
    for (const auto& r : ai_results) {
        if (!seen_uids.insert(r.study_uid).second)
            throw error(errc::input_error, "duplicate study_uid in AI results", r.study_uid);
        if (r.status == ai_status::invalid)
            throw error(errc::input_error, "invalid AI result must not enter matching",
                        r.study_uid);
    }

    std::unordered_map<std::string_view, std::vector<std::size_t>> sessions_by_patient;
    for (std::size_t s = 0; s < sessions.size(); ++s)
        sessions_by_patient[sessions[s].patient_id].push_back(s);

    struct candidate {
        std::int64_t abs_delta;
        std::int64_t delta;
        std::size_t ai_index;
        std::size_t session_index;
        std::size_t report_index;
    };
    std::vector<candidate> candidates;

    for (std::size_t a = 0; a < ai_results.size(); ++a) {
        const auto& ai = ai_results[a];
        auto it = sessions_by_patient.find(ai.patient_id);
        if (it == sessions_by_patient.end()) continue;
        for (std::size_t s : it->second) {
            const auto& ses = sessions[s];
            if (ai.study_time < ses.check_in_time || ai.study_time > ses.check_out_time)
                continue;
            for (std::size_t r = 0; r < ses.reports.size(); ++r) {
                const std::int64_t delta = ses.reports[r].report_time - ai.study_time;
                const std::int64_t abs_delta = delta < 0 ? -delta : delta;
                if (abs_delta <= window_seconds)
                    candidates.push_back({abs_delta, delta, a, s, r});
            }
        }
    }

    std::sort(candidates.begin(), candidates.end(),
              [&](const candidate& x, const candidate& y) {
                  if (x.abs_delta != y.abs_delta) return x.abs_delta < y.abs_delta;
                  const auto& sx = sessions[x.session_index].session_id;
                  const auto& sy = sessions[y.session_index].session_id;
                  if (sx != sy) return sx < sy;
                  if (x.report_index != y.report_index) return x.report_index < y.report_index;
                  return ai_results[x.ai_index].study_uid < ai_results[y.ai_index].study_uid;
              });

    std::vector<bool> ai_used(ai_results.size(), false);
    std::vector<std::vector<bool>> report_used(sessions.size());
    for (std::size_t s = 0; s < sessions.size(); ++s)
        report_used[s].assign(sessions[s].reports.size(), false);

    match_outcome out;
    for (const auto& c : candidates) {
        if (ai_used[c.ai_index] || report_used[c.session_index][c.report_index]) continue;
        ai_used[c.ai_index] = true;
        report_used[c.session_index][c.report_index] = true;

        const auto& ai = ai_results[c.ai_index];
        const auto& ses = sessions[c.session_index];
        out.pairs.push_back({c.ai_index, c.session_index, c.report_index, ai.study_uid,
                             ai.patient_id, ses.session_id, ai.study_time,
                             ses.reports[c.report_index].report_time, c.delta});
    }

    for (std::size_t a = 0; a < ai_results.size(); ++a)
        if (!ai_used[a]) out.unmatched_ai.push_back(a);
    for (std::size_t s = 0; s < sessions.size(); ++s)
        for (std::size_t r = 0; r < report_used[s].size(); ++r)
            if (!report_used[s][r])
                out.unmatched_reports.push_back({s, r, sessions[s].session_id});

    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const matched_pair& x, const matched_pair& y) {
                  return x.study_uid < y.study_uid;
              });
    std::sort(out.unmatched_ai.begin(), out.unmatched_ai.end(),
              [&](std::size_t x, std::size_t y) {
                  return ai_results[x].study_uid < ai_results[y].study_uid;
              });
    std::sort(out.unmatched_reports.begin(), out.unmatched_reports.end(),
              [](const unmatched_report_ref& x, const unmatched_report_ref& y) {
                  if (x.session_id != y.session_id) return x.session_id < y.session_id;
                  return x.report_index < y.report_index;
              });
    return out;
}

}  // namespace cxrval
