/**
 * @file synth.hpp
 * @brief Deterministic synthetic corpora with prescribed pipeline outcomes.
 *
 * A corpus spec fixes the confusion counts, the unmatched tallies on both
 * sides and the invalid tally; the generator emits PACS studies (part-10
 * files or a DICOMweb document), one HIS XML file per session, and a stub
 * scorer config such that running the full pipeline reproduces those
 * numbers exactly. Identical (corpus spec, seed) produces byte-identical
 * corpora.
 *
 * Unmatched records each violate exactly one matching condition:
 *   - "no-same-patient-record":       the other side has no record at all
 *   - "study-time-outside-session":   study_time outside [check-in, check-out]
 *   - "report-delay-exceeds-window":  |report_time - study_time| > 24 h
 */

#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cxrval/dicom_write.hpp"
#include "cxrval/error.hpp"
#include "cxrval/his.hpp"
#include "cxrval/labeler.hpp"
#include "cxrval/metrics.hpp"
#include "cxrval/rng.hpp"
#include "cxrval/scorer.hpp"
#include "cxrval/study.hpp"

namespace cxrval {

inline constexpr std::string_view default_cxr_service_id = "CXR";

struct time_window_profile {
    std::int64_t delay_min_seconds = 300;       ///< report_time - study_time, low
    std::int64_t delay_max_seconds = 6 * 3600;  ///< and high, within +/- 24 h
};

enum class corpus_format : std::uint8_t { dicom, dicomweb };

struct corpus_spec {
    std::uint64_t n_studies = 0;
    confusion_counts target_counts;
    std::uint64_t unmatched_ai = 0;
    std::uint64_t unmatched_reports = 0;
    double invalid_rate = 0.0;
    std::uint64_t seed = 0;
    time_window_profile window;
    corpus_format format = corpus_format::dicom;

    std::uint64_t matched() const { return target_counts.total(); }
    std::uint64_t invalid() const {
        return static_cast<std::uint64_t>(
            std::llround(invalid_rate * static_cast<double>(n_studies)));
    }

    void validate() const {
        if (!(invalid_rate >= 0.0 && invalid_rate < 1.0))
            throw error(errc::config_error, "invalid_rate outside [0,1)");
        if (window.delay_min_seconds > window.delay_max_seconds ||
            window.delay_min_seconds < -86400 || window.delay_max_seconds > 86400)
            throw error(errc::config_error, "report delay interval outside +/- 24 h");
        if (matched() + unmatched_ai + invalid() != n_studies)
            throw error(errc::config_error,
                        "n_studies must equal matched + unmatched_ai + invalid tally (" +
                            std::to_string(matched()) + " + " + std::to_string(unmatched_ai) +
                            " + " + std::to_string(invalid()) + " != " +
                            std::to_string(n_studies) + ")");
    }

    static corpus_spec from_json(const nlohmann::json& j) {
        corpus_spec s;
        try {
            s.n_studies = j.at("n_studies").get<std::uint64_t>();
            const auto& c = j.at("target_counts");
            s.target_counts = {c.at("tp").get<std::uint64_t>(), c.at("fp").get<std::uint64_t>(),
                               c.at("fn").get<std::uint64_t>(), c.at("tn").get<std::uint64_t>()};
            s.unmatched_ai = j.value("unmatched_ai", 0ull);
            s.unmatched_reports = j.value("unmatched_reports", 0ull);
            s.invalid_rate = j.value("invalid_rate", 0.0);
            s.seed = j.value("seed", 0ull);
            if (j.contains("time_window_profile")) {
                const auto& w = j.at("time_window_profile");
                s.window.delay_min_seconds = w.value("delay_min_seconds", s.window.delay_min_seconds);
                s.window.delay_max_seconds = w.value("delay_max_seconds", s.window.delay_max_seconds);
            }
            const std::string fmt = j.value("format", "dicom");
            if (fmt == "dicom") s.format = corpus_format::dicom;
            else if (fmt == "dicomweb") s.format = corpus_format::dicomweb;
            else throw error(errc::config_error, "unknown corpus format", fmt);
        } catch (const error&) {
            throw;
        } catch (const std::exception& e) {
            throw error(errc::config_error, e.what());
        }
        s.validate();
        return s;
    }

    nlohmann::json to_json() const {
        return {{"schema", "cxrval.corpus_spec/1"},
                {"n_studies", n_studies},
                {"target_counts",
                 {{"tp", target_counts.tp},
                  {"fp", target_counts.fp},
                  {"fn", target_counts.fn},
                  {"tn", target_counts.tn}}},
                {"unmatched_ai", unmatched_ai},
                {"unmatched_reports", unmatched_reports},
                {"invalid_rate", invalid_rate},
                {"seed", seed},
                {"time_window_profile",
                 {{"delay_min_seconds", window.delay_min_seconds},
                  {"delay_max_seconds", window.delay_max_seconds}}},
                {"format", format == corpus_format::dicom ? "dicom" : "dicomweb"}};
    }
};

/// What the pipeline is expected to do with a generated record.
enum class synth_outcome : std::uint8_t {
    tp, fp, fn, tn, invalid, unmatched_ai, unmatched_report
};

inline std::string_view to_string(synth_outcome o) {
    switch (o) {
        case synth_outcome::tp: return "tp";
        case synth_outcome::fp: return "fp";
        case synth_outcome::fn: return "fn";
        case synth_outcome::tn: return "tn";
        case synth_outcome::invalid: return "invalid";
        case synth_outcome::unmatched_ai: return "unmatched-ai";
        case synth_outcome::unmatched_report: return "unmatched-report";
    }
    return "unknown";
}

struct synth_study {
    study_meta meta;
    synth_outcome outcome;
    std::string violated_condition;  ///< non-empty only for unmatched-ai
};

struct synth_session {
    session record;
    synth_outcome outcome;           ///< one of tp/fp/fn/tn or unmatched_report
    std::string violated_condition;  ///< non-empty only for unmatched-report
};

/// A corpus in memory: the inputs plus every record's intended outcome.
struct synthetic_corpus {
    corpus_spec spec;
    std::vector<synth_study> studies;
    std::vector<synth_session> sessions;
    nlohmann::json scorer_config;
};

namespace synth_detail {

// Lesion sentences used to spoil one region of an otherwise normal report.
// None of them contains any normal-description template as a substring.
struct lesion_sentence {
    anatomical_region region;
    std::string_view text;
};

inline constexpr lesion_sentence lesion_sentences[] = {
    {anatomical_region::chest_wall, "gãy cung sau xương sườn 5 bên phải"},
    {anatomical_region::chest_wall, "hình ảnh gãy xương đòn trái"},
    {anatomical_region::pleura, "tràn dịch màng phổi phải"},
    {anatomical_region::pleura, "tràn khí màng phổi trái lượng ít"},
    {anatomical_region::lung, "đám mờ không đồng nhất thùy dưới phổi phải"},
    {anatomical_region::lung, "nốt mờ rải rác hai phế trường"},
    {anatomical_region::mediastinum, "bóng tim to, chỉ số tim ngực lớn hơn 0.5"},
    {anatomical_region::mediastinum, "trung thất rộng"},
};

inline std::string pick_template(std::mt19937_64& rng, anatomical_region r) {
    const auto& options = default_templates().raw(r);
    return options[bounded(rng, options.size())];
}

inline std::string pick_lesion_sentence(std::mt19937_64& rng, anatomical_region r) {
    std::vector<std::string_view> options;
    for (const auto& s : lesion_sentences)
        if (s.region == r) options.push_back(s.text);
    return std::string(options[bounded(rng, options.size())]);
}

/// Four region sentences in order; abnormal reports replace one of them.
inline std::string make_description(std::mt19937_64& rng, bool abnormal) {
    std::array<std::string, region_count> parts;
    for (std::size_t r = 0; r < region_count; ++r)
        parts[r] = pick_template(rng, all_regions[r]);
    if (abnormal) {
        const std::size_t spoiled = bounded(rng, region_count);
        parts[spoiled] = pick_lesion_sentence(rng, all_regions[spoiled]);
    }
    static constexpr std::string_view prefixes[] = {
        "", "X quang ngực thẳng: ", "KỸ THUẬT: chụp X quang tim phổi thẳng. MÔ TẢ: "};
    std::string out(prefixes[bounded(rng, 3)]);
    for (std::size_t r = 0; r < region_count; ++r) {
        out += parts[r];
        out += ". ";
    }
    if (bounded(rng, 2) == 0) out += "Kết luận: hiện tại chưa thấy bất thường khác.";
    return out;
}

inline std::string format_id(const char* prefix, std::uint64_t i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%05llu", prefix, static_cast<unsigned long long>(i));
    return buf;
}

inline std::vector<lesion_box> make_boxes(std::uint64_t h) {
    std::vector<lesion_box> boxes(1 + bounded(h, 2));
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        const std::uint64_t hb = mix(h, i);
        lesion_box& b = boxes[i];
        b.cls = static_cast<lesion_class>(bounded(hb, lesion_class_count));
        const double cx = 0.25 + 0.5 * to_unit(mix(hb, 1));
        const double cy = 0.25 + 0.5 * to_unit(mix(hb, 2));
        const double w = 0.08 + 0.12 * to_unit(mix(hb, 3));
        const double ht = 0.08 + 0.12 * to_unit(mix(hb, 4));
        b.x_min = cx - w / 2;
        b.x_max = cx + w / 2;
        b.y_min = cy - ht / 2;
        b.y_max = cy + ht / 2;
        b.confidence = 0.55 + 0.45 * to_unit(mix(hb, 5));
    }
    return boxes;
}

}  // namespace synth_detail

/**
 * @brief Generates the corpus in memory.
 *
 * AI outcomes are driven by explicit scorer-config entries (one per study
 * uid), so any scorer seed reproduces the same statuses; ground truths are
 * template-built descriptions; timings satisfy or violate the matching
 * conditions by construction.
 */
inline synthetic_corpus generate_records(const corpus_spec& spec) {
    spec.validate();
    using namespace synth_detail;

    synthetic_corpus corpus;
    corpus.spec = spec;
    corpus.scorer_config = {{"studies", nlohmann::json::object()},
                            {"fallback", {{"invalid_rate", 0.0}, {"abnormal_rate", 0.0}}}};

    const timestamp start = *timestamp::from_civil(2020, 11, 2, 8, 0, 0);

    // Outcome slots for AI-visible studies, shuffled so categories do not
    // correlate with acquisition time.
    std::vector<synth_outcome> slots;
    slots.insert(slots.end(), spec.target_counts.tp, synth_outcome::tp);
    slots.insert(slots.end(), spec.target_counts.fp, synth_outcome::fp);
    slots.insert(slots.end(), spec.target_counts.fn, synth_outcome::fn);
    slots.insert(slots.end(), spec.target_counts.tn, synth_outcome::tn);
    slots.insert(slots.end(), spec.unmatched_ai, synth_outcome::unmatched_ai);
    slots.insert(slots.end(), spec.invalid(), synth_outcome::invalid);
    {
        std::mt19937_64 rng(mix(spec.seed, fnv1a64("assign")));
        for (std::size_t i = slots.size(); i > 1; --i)
            std::swap(slots[i - 1], slots[bounded(rng, i)]);
    }

    // Paired violations consume one unmatched slot on each side; leftover
    // unmatched records on either side get the patient-id violation.
    const std::uint64_t paired = std::min(spec.unmatched_ai, spec.unmatched_reports);
    const std::uint64_t pair_window = paired / 2;
    const std::uint64_t pair_delay = paired - pair_window;
    std::uint64_t unmatched_ai_seen = 0;

    std::mt19937_64 rng(mix(spec.seed, fnv1a64("corpus")));
    std::uint64_t session_counter = 0;

    for (std::uint64_t i = 0; i < slots.size(); ++i) {
        const synth_outcome outcome = slots[i];
        synth_study st;
        st.outcome = outcome;
        st.meta.patient_id = format_id("P", i + 1);
        st.meta.study_uid = "1.2.840.99999.1." + std::to_string(spec.seed % 100000) + "." +
                            std::to_string(i + 1);
        st.meta.study_time = start + static_cast<std::int64_t>(i) * 733;
        st.meta.modality = (i % 3 == 0) ? "CR" : (i % 3 == 1 ? "DR" : "DX");
        st.meta.body_part = (i % 5 == 0) ? "THORAX" : "CHEST";

        // Scorer entry deciding the AI side of the outcome.
        nlohmann::json entry;
        const bool ai_abnormal = outcome == synth_outcome::tp || outcome == synth_outcome::fp ||
                                 (outcome == synth_outcome::unmatched_ai && bounded(rng, 2) == 0);
        if (outcome == synth_outcome::invalid) {
            entry["pa"] = 0.2 + 0.2 * uniform(rng);
        } else {
            entry["pa"] = 0.75 + 0.2 * uniform(rng);
            entry["abn"] = ai_abnormal ? 0.6 + 0.35 * uniform(rng) : 0.05 + 0.4 * uniform(rng);
            if (ai_abnormal)
                entry["lesions"] = make_boxes(mix(spec.seed, fnv1a64(st.meta.study_uid)));
        }
        corpus.scorer_config["studies"][st.meta.study_uid] = entry;

        // The HIS side.
        const bool truth_abnormal = outcome == synth_outcome::tp || outcome == synth_outcome::fn;
        const std::int64_t delay =
            spec.window.delay_min_seconds +
            static_cast<std::int64_t>(bounded(
                rng, static_cast<std::uint64_t>(spec.window.delay_max_seconds -
                                                spec.window.delay_min_seconds + 1)));
        const timestamp t = st.meta.study_time;

        if (outcome == synth_outcome::tp || outcome == synth_outcome::fp ||
            outcome == synth_outcome::fn || outcome == synth_outcome::tn) {
            synth_session ss;
            ss.outcome = outcome;
            ss.record.session_id = format_id("SES", ++session_counter);
            ss.record.patient_id = st.meta.patient_id;
            ss.record.check_in_time = t - 1800 - static_cast<std::int64_t>(bounded(rng, 1800));
            ss.record.check_out_time = t + std::max<std::int64_t>(delay, 0) + 1800 +
                                       static_cast<std::int64_t>(bounded(rng, 1800));
            ss.record.reports.push_back({std::string(default_cxr_service_id), t + delay,
                                         make_description(rng, truth_abnormal)});
            if (bounded(rng, 8) == 0)  // the service filter must drop this one
                ss.record.reports.push_back(
                    {"US", t + delay + 900, "siêu âm ổ bụng: chưa thấy bất thường."});
            corpus.sessions.push_back(std::move(ss));
        } else if (outcome == synth_outcome::unmatched_ai) {
            const std::uint64_t k = unmatched_ai_seen++;
            if (k < pair_window) {
                st.violated_condition = "study-time-outside-session";
                synth_session ss;
                ss.outcome = synth_outcome::unmatched_report;
                ss.violated_condition = "study-time-outside-session";
                ss.record.session_id = format_id("SES", ++session_counter);
                ss.record.patient_id = st.meta.patient_id;
                ss.record.check_in_time = t + 7200;
                ss.record.check_out_time = t + 14400;
                ss.record.reports.push_back({std::string(default_cxr_service_id), t + 10800,
                                             make_description(rng, truth_abnormal)});
                corpus.sessions.push_back(std::move(ss));
            } else if (k < pair_window + pair_delay) {
                st.violated_condition = "report-delay-exceeds-window";
                synth_session ss;
                ss.outcome = synth_outcome::unmatched_report;
                ss.violated_condition = "report-delay-exceeds-window";
                ss.record.session_id = format_id("SES", ++session_counter);
                ss.record.patient_id = st.meta.patient_id;
                ss.record.check_in_time = t - 3600;
                ss.record.check_out_time = t + 26 * 3600;
                ss.record.reports.push_back(
                    {std::string(default_cxr_service_id),
                     t + 24 * 3600 + 60 + static_cast<std::int64_t>(bounded(rng, 3600)),
                     make_description(rng, truth_abnormal)});
                corpus.sessions.push_back(std::move(ss));
            } else {
                st.violated_condition = "no-same-patient-record";
            }
        }
        corpus.studies.push_back(std::move(st));
    }

    // Report-side leftovers: sessions whose patients never produced a study.
    const std::uint64_t standalone_reports = spec.unmatched_reports - paired;
    for (std::uint64_t i = 0; i < standalone_reports; ++i) {
        synth_session ss;
        ss.outcome = synth_outcome::unmatched_report;
        ss.violated_condition = "no-same-patient-record";
        ss.record.session_id = format_id("SES", ++session_counter);
        ss.record.patient_id = format_id("Q", i + 1);
        const timestamp t = start + static_cast<std::int64_t>(slots.size() + i) * 733;
        ss.record.check_in_time = t;
        ss.record.check_out_time = t + 7200;
        ss.record.reports.push_back({std::string(default_cxr_service_id), t + 3600,
                                     make_description(rng, bounded(rng, 2) == 0)});
        corpus.sessions.push_back(std::move(ss));
    }

    return corpus;
}

/// Relative file layout of a written corpus.
struct corpus_layout {
    static constexpr std::string_view pacs_dir = "pacs";
    static constexpr std::string_view his_dir = "his";
    static constexpr std::string_view dicomweb_file = "pacs/studies.json";
    static constexpr std::string_view scorer_config_file = "scorer_config.json";
    static constexpr std::string_view manifest_file = "manifest.json";
};

/**
 * @brief Writes a generated corpus under out_dir and returns the manifest.
 *
 * The manifest lists every artifact with its intended pipeline outcome and
 * the aggregate expectations. All paths inside it are relative to out_dir.
 */
inline nlohmann::json write_corpus(const synthetic_corpus& corpus,
                                   const std::filesystem::path& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir / corpus_layout::pacs_dir, ec);
    fs::create_directories(out_dir / corpus_layout::his_dir, ec);
    if (ec) throw error(errc::io_error, "cannot create output directories", out_dir.string());

    const auto write_text = [](const fs::path& p, std::string_view text) {
        std::ofstream f(p, std::ios::binary | std::ios::trunc);
        if (!f) throw error(errc::io_error, "cannot write file", p.string());
        f << text;
    };

    nlohmann::json manifest_studies = nlohmann::json::array();
    nlohmann::json dicomweb_doc = nlohmann::json::array();
    for (std::size_t i = 0; i < corpus.studies.size(); ++i) {
        const synth_study& st = corpus.studies[i];
        std::string file;
        if (corpus.spec.format == corpus_format::dicom) {
            file = std::string(corpus_layout::pacs_dir) + "/" +
                   synth_detail::format_id("study_", i + 1) + ".dcm";
            dicom::study_file(st.meta).write_file(out_dir / file);
        } else {
            file = std::string(corpus_layout::dicomweb_file);
            const auto tag_entry = [](std::string_view vr, const std::string& value) {
                return nlohmann::json{{"vr", vr}, {"Value", {value}}};
            };
            const std::string iso = st.meta.study_time.to_iso();
            nlohmann::json study;
            study["00080020"] = tag_entry("DA", iso.substr(0, 4) + iso.substr(5, 2) + iso.substr(8, 2));
            study["00080030"] = tag_entry("TM", iso.substr(11, 2) + iso.substr(14, 2) + iso.substr(17, 2));
            study["00080060"] = tag_entry("CS", st.meta.modality);
            study["00100020"] = tag_entry("LO", st.meta.patient_id);
            study["00180015"] = tag_entry("CS", st.meta.body_part);
            study["0020000D"] = tag_entry("UI", st.meta.study_uid);
            dicomweb_doc.push_back(std::move(study));
        }
        nlohmann::json entry = {{"study_uid", st.meta.study_uid},
                                {"patient_id", st.meta.patient_id},
                                {"file", file},
                                {"outcome", to_string(st.outcome)}};
        if (!st.violated_condition.empty()) entry["violated_condition"] = st.violated_condition;
        manifest_studies.push_back(std::move(entry));
    }
    if (corpus.spec.format == corpus_format::dicomweb)
        write_text(out_dir / corpus_layout::dicomweb_file, dicomweb_doc.dump(2) + "\n");

    nlohmann::json manifest_sessions = nlohmann::json::array();
    for (const synth_session& ss : corpus.sessions) {
        const std::string file =
            std::string(corpus_layout::his_dir) + "/" + ss.record.session_id + ".xml";
        write_text(out_dir / file, write_session(ss.record));
        nlohmann::json entry = {{"session_id", ss.record.session_id},
                                {"patient_id", ss.record.patient_id},
                                {"file", file},
                                {"outcome", to_string(ss.outcome)}};
        if (!ss.violated_condition.empty()) entry["violated_condition"] = ss.violated_condition;
        manifest_sessions.push_back(std::move(entry));
    }

    write_text(out_dir / corpus_layout::scorer_config_file,
               corpus.scorer_config.dump(2) + "\n");

    const corpus_spec& spec = corpus.spec;
    nlohmann::json manifest = {
        {"schema", "cxrval.synth_manifest/1"},
        {"format", spec.format == corpus_format::dicom ? "dicom" : "dicomweb"},
        {"seed", spec.seed},
        {"cxr_service_id", std::string(default_cxr_service_id)},
        {"spec", spec.to_json()},
        {"expected",
         {{"counts",
           {{"tp", spec.target_counts.tp},
            {"fp", spec.target_counts.fp},
            {"fn", spec.target_counts.fn},
            {"tn", spec.target_counts.tn}}},
          {"matched", spec.matched()},
          {"invalid", spec.invalid()},
          {"unmatched_ai", spec.unmatched_ai},
          {"unmatched_reports", spec.unmatched_reports}}},
        {"studies", std::move(manifest_studies)},
        {"sessions", std::move(manifest_sessions)}};
    write_text(out_dir / corpus_layout::manifest_file, manifest.dump(2) + "\n");
    return manifest;
}

/// Generates and writes in one step.
inline nlohmann::json generate_corpus(const corpus_spec& spec,
                                      const std::filesystem::path& out_dir) {
    return write_corpus(generate_records(spec), out_dir);
}

}  // namespace cxrval
