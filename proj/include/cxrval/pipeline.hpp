/**
 * @file pipeline.hpp
 * @brief File-based pipeline stages: ingest, score, match, label, evaluate.
 *
 * Stages hand records to each other through artifact files in one output
 * directory, never in process, so every boundary is auditable. Each JSON
 * record carries a "schema" tag; CSV artifacts are self-described by their
 * header row. Running run_all() is byte-identical to running the stages
 * one by one.
 *
 * Artifacts:
 *   studies.jsonl            admitted studies (post CXR filter)
 *   ingest_manifest.jsonl    one audit line per PACS input record
 *   ai_results.jsonl         one AI result per admitted study
 *   ai_errors.jsonl          studies the cascade could not score
 *   ai_summary.json          status tallies incl. the invalid count
 *   sessions.jsonl           sessions with CXR-service reports only
 *   his_summary.json         session/report tallies
 *   pairs.jsonl              matched pairs (pre ground-truth)
 *   unmatched_ai.jsonl / unmatched_reports.jsonl
 *   match_summary.json
 *   pairs.csv                matched pairs with ground-truth labels
 *   label_summary.json
 *   evaluation.json          counts, point F1, bootstrap summary
 *   histogram.csv            bootstrap F1 distribution bins
 *   confusion.json           2x2 matrix layout for plotting
 */

#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cxrval/bootstrap.hpp"
#include "cxrval/dicom.hpp"
#include "cxrval/dicomweb.hpp"
#include "cxrval/error.hpp"
#include "cxrval/his.hpp"
#include "cxrval/labeler.hpp"
#include "cxrval/matcher.hpp"
#include "cxrval/metrics.hpp"
#include "cxrval/scorer.hpp"
#include "cxrval/study.hpp"

namespace cxrval::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

// ─────────────────────────────────────────────────────
// Artifact names and small I/O helpers
// ─────────────────────────────────────────────────────

struct artifacts {
    static constexpr std::string_view studies = "studies.jsonl";
    static constexpr std::string_view ingest_manifest = "ingest_manifest.jsonl";
    static constexpr std::string_view ai_results = "ai_results.jsonl";
    static constexpr std::string_view ai_errors = "ai_errors.jsonl";
    static constexpr std::string_view ai_summary = "ai_summary.json";
    static constexpr std::string_view sessions = "sessions.jsonl";
    static constexpr std::string_view his_summary = "his_summary.json";
    static constexpr std::string_view pairs = "pairs.jsonl";
    static constexpr std::string_view unmatched_ai = "unmatched_ai.jsonl";
    static constexpr std::string_view unmatched_reports = "unmatched_reports.jsonl";
    static constexpr std::string_view match_summary = "match_summary.json";
    static constexpr std::string_view pairs_csv = "pairs.csv";
    static constexpr std::string_view label_summary = "label_summary.json";
    static constexpr std::string_view evaluation = "evaluation.json";
    static constexpr std::string_view histogram_csv = "histogram.csv";
    static constexpr std::string_view confusion = "confusion.json";
};

inline std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open file", path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text_file(const fs::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw error(errc::io_error, "cannot write file", path.string());
    out << text;
    if (!out) throw error(errc::io_error, "short write", path.string());
}

inline json parse_json_file(const fs::path& path) {
    json doc = json::parse(read_text_file(path), nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded())
        throw error(errc::parse_error, "malformed JSON", path.string());
    return doc;
}

inline void write_json_file(const fs::path& path, const json& doc) {
    write_text_file(path, doc.dump(2) + "\n");
}

inline std::vector<json> read_jsonl(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open file", path.string());
    std::vector<json> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        json rec = json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (rec.is_discarded())
            throw error(errc::parse_error, "malformed JSONL record",
                        path.string() + ":" + std::to_string(lineno));
        records.push_back(std::move(rec));
    }
    return records;
}

inline void write_jsonl(const fs::path& path, const std::vector<json>& records) {
    std::string out;
    for (const auto& rec : records) {
        out += rec.dump();
        out += '\n';
    }
    write_text_file(path, out);
}

// Minimal CSV with RFC-style quoting; fields here never need it, but a
// quoted value in a hand-edited file must still read back.
inline std::string csv_field(std::string_view v) {
    if (v.find_first_of(",\"\n") == std::string_view::npos) return std::string(v);
    std::string out = "\"";
    for (char c : v) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

// ─────────────────────────────────────────────────────
// Stage: ingest-pacs
// ─────────────────────────────────────────────────────

struct ingest_summary {
    std::size_t accepted = 0;
    std::size_t rejected = 0;
};

namespace detail {

inline json study_to_json(const study_meta& m) {
    return {{"schema", "cxrval.study/1"},
            {"study_uid", m.study_uid},
            {"patient_id", m.patient_id},
            {"study_time", m.study_time.to_iso()},
            {"modality", m.modality},
            {"body_part", m.body_part},
            {"source_uri", m.source_uri}};
}

inline study_meta study_from_json(const json& j) {
    study_meta m;
    m.study_uid = j.at("study_uid").get<std::string>();
    m.patient_id = j.at("patient_id").get<std::string>();
    m.study_time = timestamp::parse_or_throw(j.at("study_time").get<std::string>());
    m.modality = j.at("modality").get<std::string>();
    m.body_part = j.at("body_part").get<std::string>();
    m.source_uri = j.value("source_uri", "");
    return m;
}

inline json manifest_line(const std::string& source_uri, bool accepted,
                          std::string_view reason, const study_meta* meta) {
    json line = {{"schema", "cxrval.ingest/1"},
                 {"source_uri", source_uri},
                 {"accepted", accepted},
                 {"reason", std::string(reason)},
                 {"patient_id", nullptr},
                 {"study_time", nullptr}};
    if (meta != nullptr) {
        line["patient_id"] = meta->patient_id;
        line["study_time"] = meta->study_time.to_iso();
    }
    return line;
}

/// Filters parsed studies and emits the audit manifest plus studies.jsonl.
inline ingest_summary finish_ingest(
    const std::vector<std::pair<std::string, std::optional<study_meta>>>& parsed,
    const std::vector<std::string>& parse_failures, const fs::path& out_dir) {
    std::vector<json> manifest;
    std::vector<json> studies;
    ingest_summary summary;

    for (std::size_t i = 0; i < parsed.size(); ++i) {
        const auto& [uri, meta] = parsed[i];
        if (!meta) {
            manifest.push_back(manifest_line(uri, false, parse_failures[i], nullptr));
            ++summary.rejected;
            continue;
        }
        const filter_decision d = is_cxr(*meta);
        manifest.push_back(manifest_line(uri, d.accepted, to_string(d.reason), &*meta));
        if (d.accepted) {
            studies.push_back(study_to_json(*meta));
            ++summary.accepted;
        } else {
            ++summary.rejected;
        }
    }
    write_jsonl(out_dir / artifacts::ingest_manifest, manifest);
    write_jsonl(out_dir / artifacts::studies, studies);
    return summary;
}

}  // namespace detail

/// Ingests a directory of part-10 files (sorted by filename).
inline ingest_summary ingest_pacs_dir(const fs::path& pacs_dir, const fs::path& out_dir) {
    if (!fs::is_directory(pacs_dir))
        throw error(errc::io_error, "PACS directory does not exist", pacs_dir.string());
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(pacs_dir))
        if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());

    std::vector<std::pair<std::string, std::optional<study_meta>>> parsed;
    std::vector<std::string> failures(files.size());
    for (std::size_t i = 0; i < files.size(); ++i) {
        try {
            parsed.emplace_back(files[i].string(), parse_dicom_file(files[i]));
        } catch (const error& e) {
            parsed.emplace_back(files[i].string(), std::nullopt);
            failures[i] = to_string(e.code());
        }
    }
    return detail::finish_ingest(parsed, failures, out_dir);
}

/// Ingests a DICOMweb metadata document.
inline ingest_summary ingest_pacs_json(const fs::path& json_path, const fs::path& out_dir) {
    const auto studies = parse_dicomweb_json(read_text_file(json_path), json_path.string());
    std::vector<std::pair<std::string, std::optional<study_meta>>> parsed;
    parsed.reserve(studies.size());
    for (const auto& m : studies) parsed.emplace_back(m.source_uri, m);
    return detail::finish_ingest(parsed, std::vector<std::string>(studies.size()), out_dir);
}

// ─────────────────────────────────────────────────────
// Stage: run-ai
// ─────────────────────────────────────────────────────

struct ai_summary {
    std::size_t n_results = 0;
    std::size_t n_invalid = 0;
    std::size_t n_normal = 0;
    std::size_t n_abnormal = 0;
    std::size_t n_errors = 0;
    std::size_t n_rejected_not_cxr = 0;
};

/**
 * @brief Scores every admitted study through the gated cascade.
 *
 * The CXR filter is re-checked at this boundary: a study record that does
 * not satisfy it (say, a hand-edited studies.jsonl) is diverted to
 * ai_errors.jsonl and never produces an AI result. Scorer failures are
 * likewise diverted, never recorded as Normal.
 */
inline ai_summary run_ai(const fs::path& out_dir, const scorer_contract& scorers,
                         double pa_threshold = 0.5, double abn_threshold = 0.5) {
    ai_summary summary;
    std::vector<json> results;
    std::vector<json> errors;
    for (const auto& rec : read_jsonl(out_dir / artifacts::studies)) {
        const study_meta meta = detail::study_from_json(rec);
        const filter_decision d = is_cxr(meta);
        if (!d.accepted) {
            errors.push_back({{"schema", "cxrval.ai_error/1"},
                              {"study_uid", meta.study_uid},
                              {"kind", "not-cxr"},
                              {"detail", std::string(to_string(d.reason))}});
            ++summary.n_rejected_not_cxr;
            continue;
        }
        try {
            const ai_result r = run_cascade(meta, scorers, pa_threshold, abn_threshold);
            results.push_back(r);
            ++summary.n_results;
            if (r.status == ai_status::invalid) ++summary.n_invalid;
            if (r.status == ai_status::normal) ++summary.n_normal;
            if (r.status == ai_status::abnormal) ++summary.n_abnormal;
        } catch (const error& e) {
            if (e.code() != errc::cascade_error) throw;
            errors.push_back({{"schema", "cxrval.ai_error/1"},
                              {"study_uid", meta.study_uid},
                              {"kind", "cascade-error"},
                              {"stage", e.context()},
                              {"detail", e.what()}});
            ++summary.n_errors;
        }
    }
    write_jsonl(out_dir / artifacts::ai_results, results);
    write_jsonl(out_dir / artifacts::ai_errors, errors);
    write_json_file(out_dir / artifacts::ai_summary,
                    {{"schema", "cxrval.ai_summary/1"},
                     {"n_results", summary.n_results},
                     {"n_invalid", summary.n_invalid},
                     {"n_normal", summary.n_normal},
                     {"n_abnormal", summary.n_abnormal},
                     {"n_errors", summary.n_errors},
                     {"n_rejected_not_cxr", summary.n_rejected_not_cxr}});
    return summary;
}

// ─────────────────────────────────────────────────────
// Stage: ingest-his
// ─────────────────────────────────────────────────────

struct his_summary {
    std::size_t n_sessions = 0;
    std::size_t n_reports_total = 0;
    std::size_t n_reports_cxr = 0;
};

namespace detail {

inline json session_to_json(const session& s) {
    json reports = json::array();
    for (const auto& r : s.reports)
        reports.push_back({{"service_id", r.service_id},
                           {"report_time", r.report_time.to_iso()},
                           {"description", r.description}});
    return {{"schema", "cxrval.session/1"},
            {"session_id", s.session_id},
            {"patient_id", s.patient_id},
            {"check_in_time", s.check_in_time.to_iso()},
            {"check_out_time", s.check_out_time.to_iso()},
            {"reports", std::move(reports)}};
}

inline session session_from_json(const json& j) {
    session s;
    s.session_id = j.at("session_id").get<std::string>();
    s.patient_id = j.at("patient_id").get<std::string>();
    s.check_in_time = timestamp::parse_or_throw(j.at("check_in_time").get<std::string>());
    s.check_out_time = timestamp::parse_or_throw(j.at("check_out_time").get<std::string>());
    for (const auto& r : j.at("reports")) {
        s.reports.push_back({r.at("service_id").get<std::string>(),
                             timestamp::parse_or_throw(r.at("report_time").get<std::string>()),
                             r.at("description").get<std::string>()});
    }
    return s;
}

}  // namespace detail

/// Parses every session file (sorted by filename) and keeps CXR-service
/// reports. A malformed session file aborts the stage; it names the file.
inline his_summary ingest_his(const fs::path& his_dir, std::string_view cxr_service_id,
                              const fs::path& out_dir, const alias_map& aliases = {}) {
    if (!fs::is_directory(his_dir))
        throw error(errc::io_error, "HIS directory does not exist", his_dir.string());
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(his_dir))
        if (e.is_regular_file() && e.path().extension() == ".xml") files.push_back(e.path());
    std::sort(files.begin(), files.end());

    his_summary summary;
    std::vector<json> records;
    for (const auto& f : files) {
        session s;
        try {
            s = parse_session_file(f, aliases);
        } catch (const error& e) {
            throw error(e.code(), e.what(), f.string());
        }
        summary.n_reports_total += s.reports.size();
        s.reports = filter_cxr_reports(s, cxr_service_id);
        summary.n_reports_cxr += s.reports.size();
        ++summary.n_sessions;
        records.push_back(detail::session_to_json(s));
    }
    write_jsonl(out_dir / artifacts::sessions, records);
    write_json_file(out_dir / artifacts::his_summary,
                    {{"schema", "cxrval.his_summary/1"},
                     {"n_sessions", summary.n_sessions},
                     {"n_reports_total", summary.n_reports_total},
                     {"n_reports_cxr", summary.n_reports_cxr}});
    return summary;
}

// ─────────────────────────────────────────────────────
// Stage: match
// ─────────────────────────────────────────────────────

struct match_summary {
    std::size_t n_pairs = 0;
    std::size_t n_unmatched_ai = 0;
    std::size_t n_unmatched_reports = 0;
    std::size_t n_invalid_excluded = 0;
    std::int64_t window_seconds = default_match_window_seconds;
};

inline match_summary run_match(const fs::path& out_dir,
                               std::int64_t window_seconds = default_match_window_seconds) {
    std::vector<ai_result> all_results;
    for (const auto& rec : read_jsonl(out_dir / artifacts::ai_results))
        all_results.push_back(rec.get<ai_result>());

    match_summary summary;
    summary.window_seconds = window_seconds;

    std::vector<ai_result> eligible;
    for (auto& r : all_results) {
        if (r.status == ai_status::invalid)
            ++summary.n_invalid_excluded;
        else
            eligible.push_back(std::move(r));
    }

    std::vector<session> sessions;
    for (const auto& rec : read_jsonl(out_dir / artifacts::sessions))
        sessions.push_back(detail::session_from_json(rec));

    const match_outcome outcome = match_pairs(eligible, sessions, window_seconds);

    std::vector<json> pair_lines;
    for (const auto& p : outcome.pairs) {
        pair_lines.push_back({{"schema", "cxrval.pair/1"},
                              {"study_uid", p.study_uid},
                              {"patient_id", p.patient_id},
                              {"study_time", p.study_time.to_iso()},
                              {"session_id", p.session_id},
                              {"report_index", p.report_index},
                              {"report_time", p.report_time.to_iso()},
                              {"time_delta_seconds", p.time_delta_seconds},
                              {"ai_status", std::string(to_string(
                                                eligible[p.ai_index].status))}});
    }
    write_jsonl(out_dir / artifacts::pairs, pair_lines);

    std::vector<json> unmatched_ai_lines;
    for (std::size_t idx : outcome.unmatched_ai)
        unmatched_ai_lines.push_back(eligible[idx]);
    write_jsonl(out_dir / artifacts::unmatched_ai, unmatched_ai_lines);

    std::vector<json> unmatched_report_lines;
    for (const auto& u : outcome.unmatched_reports) {
        const auto& rep = sessions[u.session_index].reports[u.report_index];
        unmatched_report_lines.push_back({{"schema", "cxrval.unmatched_report/1"},
                                          {"session_id", u.session_id},
                                          {"report_index", u.report_index},
                                          {"service_id", rep.service_id},
                                          {"report_time", rep.report_time.to_iso()}});
    }
    write_jsonl(out_dir / artifacts::unmatched_reports, unmatched_report_lines);

    summary.n_pairs = outcome.pairs.size();
    summary.n_unmatched_ai = outcome.unmatched_ai.size();
    summary.n_unmatched_reports = outcome.unmatched_reports.size();
    write_json_file(out_dir / artifacts::match_summary,
                    {{"schema", "cxrval.match_summary/1"},
                     {"n_pairs", summary.n_pairs},
                     {"n_unmatched_ai", summary.n_unmatched_ai},
                     {"n_unmatched_reports", summary.n_unmatched_reports},
                     {"n_invalid_excluded", summary.n_invalid_excluded},
                     {"window_seconds", window_seconds}});
    return summary;
}

// ─────────────────────────────────────────────────────
// Stage: label
// ─────────────────────────────────────────────────────

struct label_summary {
    std::size_t n_pairs = 0;
    std::size_t n_truth_normal = 0;
    std::size_t n_truth_abnormal = 0;
    std::size_t n_empty_description = 0;
};

inline constexpr std::string_view pairs_csv_header =
    "study_uid,patient_id,study_time,session_id,report_time,time_delta_seconds,"
    "ai_status,report_label";

/// Joins matched pairs with their report text and writes the labeled CSV.
inline label_summary run_label(const fs::path& out_dir, const template_set& templates) {
    std::map<std::string, session> sessions_by_id;
    for (const auto& rec : read_jsonl(out_dir / artifacts::sessions)) {
        session s = detail::session_from_json(rec);
        sessions_by_id.emplace(s.session_id, std::move(s));
    }

    label_summary summary;
    std::string csv(pairs_csv_header);
    csv += '\n';
    for (const auto& rec : read_jsonl(out_dir / artifacts::pairs)) {
        const auto session_id = rec.at("session_id").get<std::string>();
        const auto report_index = rec.at("report_index").get<std::size_t>();
        auto it = sessions_by_id.find(session_id);
        if (it == sessions_by_id.end() || report_index >= it->second.reports.size())
            throw error(errc::input_error, "pair references unknown report",
                        session_id + "#" + std::to_string(report_index));

        const report_label label =
            label_report(it->second.reports[report_index].description, templates);
        ++summary.n_pairs;
        if (label.overall == binary_label::normal) ++summary.n_truth_normal;
        else ++summary.n_truth_abnormal;
        if (label.empty_description) ++summary.n_empty_description;

        const std::string fields[] = {rec.at("study_uid").get<std::string>(),
                                      rec.at("patient_id").get<std::string>(),
                                      rec.at("study_time").get<std::string>(),
                                      session_id,
                                      rec.at("report_time").get<std::string>(),
                                      std::to_string(rec.at("time_delta_seconds").get<std::int64_t>()),
                                      rec.at("ai_status").get<std::string>(),
                                      std::string(to_string(label.overall))};
        for (std::size_t i = 0; i < std::size(fields); ++i) {
            if (i) csv += ',';
            csv += csv_field(fields[i]);
        }
        csv += '\n';
    }
    write_text_file(out_dir / artifacts::pairs_csv, csv);
    write_json_file(out_dir / artifacts::label_summary,
                    {{"schema", "cxrval.label_summary/1"},
                     {"n_pairs", summary.n_pairs},
                     {"n_truth_normal", summary.n_truth_normal},
                     {"n_truth_abnormal", summary.n_truth_abnormal},
                     {"n_empty_description", summary.n_empty_description}});
    return summary;
}

// ─────────────────────────────────────────────────────
// Stage: evaluate
// ─────────────────────────────────────────────────────

struct evaluation {
    confusion_counts counts;
    double point_f1 = 0;
    bootstrap_summary bootstrap;
};

/// Reads the labeled pairs CSV back into (prediction, truth) pairs.
inline std::vector<outcome_pair> read_labeled_pairs(const fs::path& csv_path) {
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open file", csv_path.string());
    std::string line;
    if (!std::getline(in, line))
        throw error(errc::parse_error, "empty pairs CSV", csv_path.string());
    const auto header = csv_split(line);
    const auto column = [&](std::string_view name) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw error(errc::parse_error, "column missing from pairs CSV", std::string(name));
    };
    const std::size_t ai_col = column("ai_status");
    const std::size_t label_col = column("report_label");

    std::vector<outcome_pair> pairs;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto fields = csv_split(line);
        if (fields.size() != header.size())
            throw error(errc::parse_error, "wrong field count",
                        csv_path.string() + ":" + std::to_string(lineno));
        const auto predicted = binary_label_from_string(fields[ai_col]);
        const auto truth = binary_label_from_string(fields[label_col]);
        if (!predicted || !truth)
            throw error(errc::parse_error, "status outside {normal, abnormal}",
                        csv_path.string() + ":" + std::to_string(lineno));
        pairs.emplace_back(*predicted, *truth);
    }
    return pairs;
}

inline evaluation run_evaluate(const fs::path& out_dir,
                               std::uint64_t n_resamples = bootstrap_default_resamples,
                               std::uint64_t seed = 0) {
    const auto pairs = read_labeled_pairs(out_dir / artifacts::pairs_csv);
    if (pairs.empty())
        throw error(errc::input_error, "no pairs to evaluate",
                    (out_dir / artifacts::pairs_csv).string());

    evaluation ev;
    ev.counts = confusion(pairs);
    ev.point_f1 = f1_score(ev.counts);
    ev.bootstrap = bootstrap_f1(pairs, n_resamples, seed);

    json histogram = json::array();
    std::string histogram_csv = "bin_low,bin_high,count\n";
    for (const auto& b : ev.bootstrap.histogram) {
        histogram.push_back({{"bin_low", b.bin_low}, {"bin_high", b.bin_high},
                             {"count", b.count}});
        histogram_csv += std::to_string(b.bin_low) + "," + std::to_string(b.bin_high) + "," +
                         std::to_string(b.count) + "\n";
    }

    write_json_file(out_dir / artifacts::evaluation,
                    {{"schema", "cxrval.evaluation/1"},
                     {"counts",
                      {{"tp", ev.counts.tp},
                       {"fp", ev.counts.fp},
                       {"fn", ev.counts.fn},
                       {"tn", ev.counts.tn}}},
                     {"point_f1", ev.point_f1},
                     {"bootstrap",
                      {{"mean", ev.bootstrap.mean_f1},
                       {"ci_low", ev.bootstrap.ci_low},
                       {"ci_high", ev.bootstrap.ci_high},
                       {"n", ev.bootstrap.n_resamples},
                       {"seed", ev.bootstrap.seed},
                       {"generator", std::string(bootstrap_generator_name)},
                       {"histogram", histogram}}}});
    write_text_file(out_dir / artifacts::histogram_csv, histogram_csv);
    write_json_file(out_dir / artifacts::confusion,
                    {{"schema", "cxrval.confusion/1"},
                     {"prediction_labels", {"abnormal", "normal"}},
                     {"truth_labels", {"abnormal", "normal"}},
                     {"matrix",
                      {{ev.counts.tp, ev.counts.fp}, {ev.counts.fn, ev.counts.tn}}}});
    return ev;
}

// ─────────────────────────────────────────────────────
// run-all
// ─────────────────────────────────────────────────────

/// Everything a full run needs; mirrors the CLI flags one to one.
struct run_config {
    std::string pacs_dir;   ///< part-10 input directory (exclusive with pacs_json)
    std::string pacs_json;  ///< DICOMweb metadata document
    std::string his_dir;
    std::string templates_path;      ///< empty: built-in template set
    std::string scorer_config_path;  ///< empty: hash-fallback stub scorer
    std::string alias_map_path;
    std::string cxr_service_id = "CXR";
    double pa_threshold = 0.5;
    double abn_threshold = 0.5;
    double window_hours = 24.0;
    std::uint64_t bootstrap_n = bootstrap_default_resamples;
    std::uint64_t seed = 0;
    std::string out_dir;

    std::int64_t window_seconds() const {
        return static_cast<std::int64_t>(std::llround(window_hours * 3600.0));
    }
};

inline scorer_contract load_scorer(const run_config& cfg) {
    if (cfg.scorer_config_path.empty())
        return stub_scorer(json::object(), cfg.seed);
    return stub_scorer(parse_json_file(cfg.scorer_config_path), cfg.seed);
}

inline template_set load_templates(const run_config& cfg) {
    if (cfg.templates_path.empty()) return default_templates();
    return template_set::from_json(parse_json_file(cfg.templates_path));
}

inline alias_map load_aliases(const run_config& cfg) {
    if (cfg.alias_map_path.empty()) return {};
    return alias_map::from_json(parse_json_file(cfg.alias_map_path));
}

/// Runs every stage in order into cfg.out_dir and returns the evaluation.
inline evaluation run_all(const run_config& cfg) {
    const fs::path out(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);

    if (!cfg.pacs_json.empty())
        ingest_pacs_json(cfg.pacs_json, out);
    else
        ingest_pacs_dir(cfg.pacs_dir, out);
    run_ai(out, load_scorer(cfg), cfg.pa_threshold, cfg.abn_threshold);
    ingest_his(cfg.his_dir, cfg.cxr_service_id, out, load_aliases(cfg));
    run_match(out, cfg.window_seconds());
    run_label(out, load_templates(cfg));
    return run_evaluate(out, cfg.bootstrap_n, cfg.seed);
}

}  // namespace cxrval::pipeline
