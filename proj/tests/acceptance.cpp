/**
 * @file acceptance.cpp
 * @brief End-to-end acceptance suite; prints one pass/fail line per criterion.
 *
 * Exit status is the number of failed criteria (0 = all green).
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cxrval/cxrval.hpp"
#include "support/oracles.hpp"
#include "support/temp_dir.hpp"

using namespace cxrval;
using nlohmann::json;

namespace {

struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw check_failure(what);
}

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

// ───────────────────────────────────────────────────
// 1. Point-F1 arithmetic on the deployed-scale matrix
// ───────────────────────────────────────────────────
void criterion_f1_arithmetic() {
    const confusion_counts counts{1200, 719, 556, 3810};
    require(counts.tp + counts.fn == 1756, "abnormal prevalence must be 1756");
    require(counts.total() == 6285, "total must be 6285");
    const double f1 = f1_score(counts);
    require(std::abs(f1 - 0.6531) <= 0.0005,
            "f1(1200,719,556) = " + str(f1) + ", want 0.6531 +/- 0.0005");
}

std::vector<outcome_pair> pairs_for(const confusion_counts& c) {
    constexpr auto A = binary_label::abnormal;
    constexpr auto N = binary_label::normal;
    std::vector<outcome_pair> pairs;
    pairs.insert(pairs.end(), c.tp, {A, A});
    pairs.insert(pairs.end(), c.fp, {A, N});
    pairs.insert(pairs.end(), c.fn, {N, A});
    pairs.insert(pairs.end(), c.tn, {N, N});
    return pairs;
}

// ───────────────────────────────────────────────────
// 2. Bootstrap at deployment scale
// ───────────────────────────────────────────────────
void criterion_bootstrap_scale() {
    const confusion_counts counts{1200, 719, 556, 3810};
    const auto pairs = pairs_for(counts);
    const double point = f1_score(counts);

    const auto t0 = std::chrono::steady_clock::now();
    const auto summary = bootstrap_f1(pairs, 10000, 20201115);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    require(std::abs(summary.mean_f1 - point) <= 0.003,
            "bootstrap mean " + str(summary.mean_f1) + " vs point " + str(point));
    const double half_width = (summary.ci_high - summary.ci_low) / 2.0;
    require(half_width >= 0.013 && half_width <= 0.023,
            "CI half-width " + str(half_width) + " outside [0.013, 0.023]");
    require(elapsed < 30.0, "bootstrap took " + str(elapsed) + " s, budget 30 s");
}

// ───────────────────────────────────────────────────
// 3. Exhaustive bootstrap oracle for every multiset of size <= 4
// ───────────────────────────────────────────────────
void criterion_bootstrap_oracle() {
    std::size_t multisets = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
        // compositions of n over the 4 outcome categories
        for (std::size_t tp = 0; tp <= n; ++tp)
            for (std::size_t fp = 0; tp + fp <= n; ++fp)
                for (std::size_t fn = 0; tp + fp + fn <= n; ++fn) {
                    const std::size_t tn = n - tp - fp - fn;
                    std::vector<int> categories;
                    categories.insert(categories.end(), tp, 0);
                    categories.insert(categories.end(), fp, 1);
                    categories.insert(categories.end(), fn, 2);
                    categories.insert(categories.end(), tn, 3);

                    const double exact = testsupport::exact_bootstrap_mean_f1(categories);
                    const auto summary = bootstrap_f1(
                        pairs_for({tp, fp, fn, tn}), 200000,
                        1000 + multisets);
                    require(std::abs(summary.mean_f1 - exact) <= 0.01,
                            "multiset tp=" + str(tp) + " fp=" + str(fp) + " fn=" + str(fn) +
                                " tn=" + str(tn) + ": MC " + str(summary.mean_f1) +
                                " vs exact " + str(exact));
                    ++multisets;
                }
    }
    require(multisets == 69, "expected 69 multisets, saw " + str(multisets));
}

// ───────────────────────────────────────────────────
// 4. Published 17-class AP table
// ───────────────────────────────────────────────────
void criterion_map_table() {
    const double ap_values[] = {0.663, 0.231, 0.272, 0.860, 0.459, 0.281, 0.185, 0.256, 0.318,
                                0.315, 0.251, 0.197, 0.387, 0.228, 0.579, 0.340, 0.381};
    std::map<lesion_class, double> table;
    for (std::size_t i = 0; i < lesion_class_count; ++i)
        table[static_cast<lesion_class>(i)] = ap_values[i];
    const double map = mean_ap(table);
    require(std::abs(map - 0.365) <= 0.0005, "mAP = " + str(map) + ", want 0.365 +/- 0.0005");
}

// ───────────────────────────────────────────────────
// 5. End-to-end determinism on a 500-study corpus
// ───────────────────────────────────────────────────
int run_cli(const std::string& args) {
    const std::string cmd = std::string(CXRVAL_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    return WEXITSTATUS(std::system(cmd.c_str()));
}

void criterion_end_to_end_determinism() {
    corpus_spec spec;
    spec.target_counts = {100, 60, 40, 270};  // matched = 470
    spec.unmatched_ai = 10;
    spec.unmatched_reports = 4;
    spec.invalid_rate = 0.04;  // 20 of 500
    spec.n_studies = 500;
    spec.seed = 20201115;

    testsupport::temp_dir corpus("acc5_corpus");
    generate_corpus(spec, corpus);

    const auto t0 = std::chrono::steady_clock::now();
    testsupport::temp_dir out1("acc5_out1"), out2("acc5_out2");
    for (const auto* out : {&out1, &out2}) {
        const int rc = run_cli(
            "run-all --pacs-dir " + (corpus.path() / "pacs").string() + " --his-dir " +
            (corpus.path() / "his").string() + " --scorer-config " +
            (corpus.path() / "scorer_config.json").string() +
            " --seed 20201115 --bootstrap-n 2000 --out " + out->path().string());
        require(rc == 0, "run-all exited with " + str(rc));
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const json evaluation =
        pipeline::parse_json_file(out1.path() / pipeline::artifacts::evaluation);
    const auto& got = evaluation.at("counts");
    require(got.at("tp") == spec.target_counts.tp && got.at("fp") == spec.target_counts.fp &&
                got.at("fn") == spec.target_counts.fn && got.at("tn") == spec.target_counts.tn,
            "confusion counts " + got.dump() + " differ from the corpus spec");

    const json match_summary =
        pipeline::parse_json_file(out1.path() / pipeline::artifacts::match_summary);
    require(match_summary.at("n_unmatched_ai") == spec.unmatched_ai,
            "unmatched AI tally " + match_summary.at("n_unmatched_ai").dump());
    require(match_summary.at("n_unmatched_reports") == spec.unmatched_reports,
            "unmatched report tally " + match_summary.at("n_unmatched_reports").dump());
    require(match_summary.at("n_invalid_excluded") == spec.invalid(),
            "invalid tally " + match_summary.at("n_invalid_excluded").dump());

    std::size_t compared = 0;
    for (const auto& e : std::filesystem::directory_iterator(out1.path())) {
        const auto rel = e.path().filename();
        require(pipeline::read_text_file(out1.path() / rel) ==
                    pipeline::read_text_file(out2.path() / rel),
                "artifact " + rel.string() + " differs between runs");
        ++compared;
    }
    require(compared >= 10, "expected >= 10 artifacts, saw " + str(compared));
    require(elapsed < 10.0, "two runs took " + str(elapsed) + " s, budget 10 s");
}

// ───────────────────────────────────────────────────
// 6. Matching properties over randomized corpora
// ───────────────────────────────────────────────────
void check_match_properties(const std::vector<ai_result>& results,
                            const std::vector<session>& sessions) {
    std::size_t prev = SIZE_MAX;
    for (const std::int64_t window : {24 * 3600, 12 * 3600, 3600, 0}) {
        const auto outcome = match_pairs(results, sessions, window);
        std::set<std::size_t> ai_used;
        std::set<std::pair<std::size_t, std::size_t>> reports_used;
        for (const auto& p : outcome.pairs) {
            const auto& a = results[p.ai_index];
            const auto& s = sessions[p.session_index];
            require(a.patient_id == s.patient_id, "pair crosses patients");
            require(s.check_in_time <= a.study_time && a.study_time <= s.check_out_time,
                    "study time outside the session");
            const auto delta = s.reports[p.report_index].report_time - a.study_time;
            require(std::abs(delta) <= window, "delta exceeds the window");
            require(ai_used.insert(p.ai_index).second, "AI result used twice");
            require(reports_used.insert({p.session_index, p.report_index}).second,
                    "report used twice");
        }
        require(outcome.pairs.size() <= prev, "pair count grew as the window shrank");
        prev = outcome.pairs.size();
    }
}

void criterion_matching_properties() {
    std::mt19937_64 rng(606);
    int trials = 0;

    // Half the trials: corpora from randomized specs through the generator.
    for (int t = 0; t < 500; ++t, ++trials) {
        corpus_spec spec;
        spec.target_counts = {rng() % 5, rng() % 5, rng() % 5, rng() % 6};
        spec.unmatched_ai = rng() % 4;
        spec.unmatched_reports = rng() % 4;
        spec.invalid_rate = 0;
        spec.n_studies = spec.matched() + spec.unmatched_ai;
        spec.seed = rng();
        const auto corpus = generate_records(spec);

        std::vector<ai_result> results;
        for (const auto& st : corpus.studies) {
            if (st.outcome == synth_outcome::invalid) continue;
            ai_result r;
            r.study_uid = st.meta.study_uid;
            r.patient_id = st.meta.patient_id;
            r.study_time = st.meta.study_time;
            r.status = ai_status::normal;
            r.pa_probability = 0.9;
            r.abnormal_probability = 0.3;
            results.push_back(std::move(r));
        }
        std::vector<session> sessions;
        for (const auto& ss : corpus.sessions) sessions.push_back(ss.record);
        check_match_properties(results, sessions);
    }

    // The other half: adversarial records with patient collisions and
    // boundary-hugging times.
    const timestamp base = *timestamp::parse("2020-11-15T00:00:00");
    for (int t = 0; t < 500; ++t, ++trials) {
        std::vector<ai_result> results;
        const std::size_t n_ai = rng() % 10;
        for (std::size_t i = 0; i < n_ai; ++i) {
            ai_result r;
            r.study_uid = "S" + str(t) + "." + str(i);
            r.patient_id = "P" + str(rng() % 4);
            r.study_time = base + static_cast<std::int64_t>(rng() % (2 * 86400));
            r.status = rng() % 2 ? ai_status::abnormal : ai_status::normal;
            r.pa_probability = 0.9;
            r.abnormal_probability = 0.5;
            results.push_back(std::move(r));
        }
        std::vector<session> sessions;
        const std::size_t n_ses = rng() % 6;
        for (std::size_t i = 0; i < n_ses; ++i) {
            session s;
            s.session_id = "X" + str(t) + "." + str(i);
            s.patient_id = "P" + str(rng() % 4);
            s.check_in_time = base + static_cast<std::int64_t>(rng() % (2 * 86400)) - 86400;
            s.check_out_time = s.check_in_time + static_cast<std::int64_t>(rng() % 86400);
            const std::size_t n_rep = rng() % 4;
            for (std::size_t k = 0; k < n_rep; ++k)
                s.reports.push_back({"CXR",
                                     s.check_in_time +
                                         static_cast<std::int64_t>(rng() % (3 * 86400)) - 86400,
                                     "d"});
            sessions.push_back(std::move(s));
        }
        check_match_properties(results, sessions);
    }
    require(trials == 1000, "expected 1000 trials");
}

// ───────────────────────────────────────────────────
// 7. Labeler fidelity on a hand-labeled fixture set
// ───────────────────────────────────────────────────
struct labeled_fixture {
    std::string description;
    binary_label expected;
    bool expect_empty_flag = false;
};

std::vector<labeled_fixture> build_labeled_fixtures() {
    const auto& ts = default_templates();
    const auto T = [&](anatomical_region r, std::size_t i) { return ts.raw(r)[i]; };
    using R = anatomical_region;
    constexpr auto NORMAL = binary_label::normal;
    constexpr auto ABNORMAL = binary_label::abnormal;

    const std::string cw0 = T(R::chest_wall, 0), cw1 = T(R::chest_wall, 1);
    const std::string pl0 = T(R::pleura, 0), pl1 = T(R::pleura, 1), pl2 = T(R::pleura, 2);
    const std::string lu0 = T(R::lung, 0);
    const std::string md0 = T(R::mediastinum, 0), md1 = T(R::mediastinum, 1);

    // Decomposed (NFD) forms produced by an independent Unicode library.
    const std::string cw0_nfd =
        "không thấy hình bất thường "
        "xương lồng ngực";
    const std::string lu0_nfd =
        "nhu mô phổi không thấy bất "
        "thường";
    const std::string md1_nfd =
        "hình tim và trung thất bình thường";
    const std::string lu0_nfd_upper =
        "NHU MÔ PHỔI KHÔNG THẤY BẤT "
        "THƯỜNG";

    const std::string les_cw = "gãy cung sau xương sườn 5 bên phải";
    const std::string les_pl = "tràn dịch màng phổi phải";
    const std::string les_lu = "đám mờ không đồng nhất thùy dưới phổi phải";
    const std::string les_md = "bóng tim to, chỉ số tim ngực lớn hơn 0.5";

    const auto join = [](std::initializer_list<std::string> parts) {
        std::string d;
        for (const auto& p : parts) {
            d += p;
            d += ". ";
        }
        return d;
    };

    std::vector<labeled_fixture> fx;
    // ---- normal reports (expect Normal) ----
    fx.push_back({join({cw0, pl0, lu0, md0}), NORMAL});
    fx.push_back({join({cw1, pl1, lu0, md1}), NORMAL});
    fx.push_back({join({cw0, pl2, lu0, md0}), NORMAL});
    fx.push_back({join({cw1, pl2, lu0, md1}), NORMAL});
    fx.push_back({join({md1, lu0, pl0, cw0}), NORMAL});  // order free
    fx.push_back({"KỸ THUẬT: chụp X quang tim phổi thẳng. MÔ TẢ: " +
                      join({cw0, pl0, lu0, md0}) + "KẾT LUẬN: hiện tại bình thường.",
                  NORMAL});
    {
        std::string upper = join({cw0, pl1, lu0, md1});
        // ASCII-uppercase a normal report (Vietnamese letters keep their case)
        for (auto& c : upper)
            if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 32);
        fx.push_back({upper, NORMAL});
    }
    fx.push_back({cw0 + ".\n\n" + pl0 + ".\t" + lu0 + ".  \n " + md0 + ".", NORMAL});
    fx.push_back({join({cw0_nfd, pl0, lu0_nfd, md1_nfd}), NORMAL});
    fx.push_back({join({cw0, pl0}) + lu0_nfd_upper + ". " + md0 + ".", NORMAL});
    fx.push_back({"bệnh nhân 54 tuổi. " + join({cw1, pl0, lu0, md0}) + "đề nghị khám lại.",
                  NORMAL});
    // A lesion sentence NEXT TO a full set of templates: the rule is pure
    // containment, so all four regions still count as normal.
    fx.push_back({join({cw0, pl0, lu0, md1, les_pl}), NORMAL});

    // ---- abnormal reports (expect Abnormal) ----
    fx.push_back({join({les_cw, pl0, lu0, md0}), ABNORMAL});
    fx.push_back({join({cw0, les_pl, lu0, md0}), ABNORMAL});
    fx.push_back({join({cw0, pl0, les_lu, md0}), ABNORMAL});
    fx.push_back({join({cw0, pl0, lu0, les_md}), ABNORMAL});
    fx.push_back({join({pl0, lu0, md0}), ABNORMAL});   // chest wall missing
    fx.push_back({join({cw0, lu0, md0}), ABNORMAL});   // pleura missing
    fx.push_back({join({cw0, pl0, md0}), ABNORMAL});   // lung missing
    fx.push_back({join({cw0, pl0, lu0}), ABNORMAL});   // mediastinum missing
    fx.push_back({les_pl, ABNORMAL});
    fx.push_back({les_lu, ABNORMAL});
    fx.push_back({"", ABNORMAL, true});
    fx.push_back({"   \t\n  ", ABNORMAL, true});
    fx.push_back({join({"không thấy hình bất thường xương sườn", pl0, lu0, md0}),
                  ABNORMAL});  // altered chest-wall wording
    fx.push_back({join({cw0, "không thấy hình tràn dịch", lu0, md0}),
                  ABNORMAL});  // truncated pleura template
    fx.push_back({join({cw0, pl0, "nhu mô phổi không thấy", md0}),
                  ABNORMAL});  // truncated lung template
    fx.push_back({join({les_cw, les_pl, lu0, md0}), ABNORMAL});
    fx.push_back({join({les_cw, les_pl, les_lu, les_md}), ABNORMAL});
    fx.push_back({join({cw0, pl0, "nhumô phổi không thấy bất thường", md0}),
                  ABNORMAL});  // missing space inside the lung template
    fx.push_back({join({cw0, pl0, lu0}) + "trung thất rộng.", ABNORMAL});
    fx.push_back({"theo dõi tổn thương cũ. " + join({pl1, md0}), ABNORMAL});
    fx.push_back({join({cw1, pl2, les_lu, md1}), ABNORMAL});
    fx.push_back({join({cw0, "tràn khí màng phổi trái lượng ít", lu0, md1}), ABNORMAL});
    fx.push_back({"chụp cắt lớp vi tính lồng ngực: không thấy gì đặc biệt", ABNORMAL});
    fx.push_back({join({cw0, pl0, lu0, "trung thất không thấy"}), ABNORMAL});
    fx.push_back({join({cw0_nfd, pl0, les_lu, md1_nfd}), ABNORMAL});
    fx.push_back({join({cw0, pl1, "nốt mờ rải rác hai phế trường", md0}), ABNORMAL});
    fx.push_back({join({les_md, cw0, pl0, lu0}), ABNORMAL});
    fx.push_back({"x quang ngực: " + les_cw + " kèm " + les_pl, ABNORMAL});
    fx.push_back({join({cw0, pl2, lu0, "hình tim và trung thất"}), ABNORMAL});
    fx.push_back({join({"xương lồng ngực", pl0, lu0, md0}), ABNORMAL});
    fx.push_back({join({cw1, "màng phổi", lu0, md1}), ABNORMAL});
    fx.push_back({join({cw0, pl0, "phổi hai bên", md0}), ABNORMAL});
    fx.push_back({join({cw0, pl0, lu0, "tim to"}), ABNORMAL});
    fx.push_back({"1", ABNORMAL});
    fx.push_back({join({les_lu, les_lu, les_lu, les_lu}), ABNORMAL});
    fx.push_back({join({cw0, cw1, pl0, md0}), ABNORMAL});  // two chest-wall, no lung

    // normal variants to land on exactly 50
    fx.push_back({join({cw1, pl1, lu0, md0}), NORMAL});
    fx.push_back({join({cw0, pl1, lu0, md0}) + les_pl + ".", NORMAL});  // lesion after a
                                                                        // complete template set
    return fx;
}

void criterion_labeler_fidelity() {
    const auto fixtures = build_labeled_fixtures();
    require(fixtures.size() == 50, "fixture set holds " + str(fixtures.size()) + ", want 50");
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        const auto label = label_report(fixtures[i].description, default_templates());
        if (label.overall != fixtures[i].expected) {
            ++mismatches;
            std::fprintf(stderr, "  fixture %zu labeled %s, expected %s: %.60s\n", i,
                         std::string(to_string(label.overall)).c_str(),
                         std::string(to_string(fixtures[i].expected)).c_str(),
                         fixtures[i].description.c_str());
        }
        if (fixtures[i].expect_empty_flag)
            require(label.empty_description, "empty-description flag missing on fixture " + str(i));
    }
    require(mismatches == 0, str(mismatches) + " of 50 fixtures mislabeled");
}

// ───────────────────────────────────────────────────
// 8. Filter property under fuzzing
// ───────────────────────────────────────────────────
void criterion_filter_property() {
    std::mt19937_64 rng(808);
    const char* modalities[] = {"CR", "DR", "DX", "CT", "MR", "US", "XA", "NM",
                                "", "dx", " CR ", "DXX", "D X", "OT"};
    const char* body_parts[] = {"CHEST", "THORAX", "SKULL", "ABDOMEN", "PELVIS",
                                "", "chest", " THORAX ", "CHESTX", "LEG"};
    const auto random_token = [&] {
        std::string s;
        const std::size_t n = rng() % 8;
        for (std::size_t i = 0; i < n; ++i)
            s += static_cast<char>('A' + rng() % 26);
        return s;
    };

    testsupport::temp_dir out("acc8");
    std::vector<json> studies;
    std::vector<study_meta> metas;
    for (int i = 0; i < 10000; ++i) {
        study_meta m;
        m.patient_id = "P" + str(i);
        m.study_uid = "1.2.3." + str(i);
        m.study_time = *timestamp::parse("2020-11-15T09:30:00");
        m.modality = rng() % 4 ? modalities[rng() % std::size(modalities)] : random_token();
        m.body_part = rng() % 4 ? body_parts[rng() % std::size(body_parts)] : random_token();
        m.source_uri = "fuzz";
        metas.push_back(m);
        studies.push_back({{"schema", "cxrval.study/1"},
                           {"study_uid", m.study_uid},
                           {"patient_id", m.patient_id},
                           {"study_time", m.study_time.to_iso()},
                           {"modality", m.modality},
                           {"body_part", m.body_part},
                           {"source_uri", m.source_uri}});
    }
    // Records reach run-ai unfiltered, as if studies.jsonl had been edited.
    pipeline::write_jsonl(out.path() / pipeline::artifacts::studies, studies);
    pipeline::run_ai(out.path(), stub_scorer(json::object(), 1));

    std::map<std::string, const study_meta*> by_uid;
    for (const auto& m : metas) by_uid[m.study_uid] = &m;
    std::size_t results = 0;
    for (const auto& rec : pipeline::read_jsonl(out.path() / pipeline::artifacts::ai_results)) {
        const auto* m = by_uid.at(rec.at("study_uid").get<std::string>());
        const auto d = is_cxr(*m);
        require(d.accepted, "non-CXR study in AI output: modality='" + m->modality +
                               "' body_part='" + m->body_part + "'");
        ++results;
    }
    require(results > 0, "fuzz produced no admitted studies at all");
}

// ───────────────────────────────────────────────────
// 9. Detection-metric oracle
// ───────────────────────────────────────────────────
lesion_box make_box(double x0, double y0, double x1, double y1, double conf) {
    lesion_box b;
    b.cls = lesion_class::opacity;
    b.x_min = x0;
    b.y_min = y0;
    b.x_max = x1;
    b.y_max = y1;
    b.confidence = conf;
    return b;
}

void criterion_detection_oracle() {
    require(iou(make_box(0, 0, 2, 2, 1), make_box(1, 0, 3, 2, 1)) == 1.0 / 3.0,
            "iou([0,0,2,2],[1,0,3,2]) != 1/3 exactly");

    std::mt19937_64 rng(909);
    const auto unit = [&] { return to_unit(rng()); };
    const double confidences[] = {0.9, 0.8, 0.8, 0.5, 0.5, 0.3, 1.0};
    std::size_t cases = 0;
    for (std::size_t n_pred = 0; n_pred <= 5; ++n_pred) {
        for (std::size_t n_truth = 0; n_truth <= 3; ++n_truth) {
            for (int inst = 0; inst < 400; ++inst, ++cases) {
                std::vector<lesion_box> truths, preds;
                for (std::size_t t = 0; t < n_truth; ++t) {
                    const double cx = 0.2 + 0.6 * unit(), cy = 0.2 + 0.6 * unit();
                    const double w = 0.05 + 0.3 * unit(), h = 0.05 + 0.3 * unit();
                    truths.push_back(make_box(cx - w / 2, cy - h / 2, cx + w / 2, cy + h / 2, 1));
                }
                for (std::size_t p = 0; p < n_pred; ++p) {
                    const double conf = confidences[bounded(rng(), std::size(confidences))];
                    if (!truths.empty() && rng() % 2) {
                        auto b = truths[bounded(rng(), truths.size())];
                        const double dx = 0.08 * (unit() - 0.5), dy = 0.08 * (unit() - 0.5);
                        b.x_min += dx; b.x_max += dx; b.y_min += dy; b.y_max += dy;
                        b.confidence = conf;
                        preds.push_back(b);
                    } else {
                        const double cx = 0.2 + 0.6 * unit(), cy = 0.2 + 0.6 * unit();
                        const double w = 0.05 + 0.3 * unit(), h = 0.05 + 0.3 * unit();
                        preds.push_back(
                            make_box(cx - w / 2, cy - h / 2, cx + w / 2, cy + h / 2, conf));
                    }
                }
                const double got = average_precision(preds, truths, 0.4);
                const double want = testsupport::ap_all_cutoffs_oracle(preds, truths, 0.4);
                require(std::abs(got - want) <= 1e-9,
                        "AP " + str(got) + " vs oracle " + str(want) + " at n_pred=" +
                            str(n_pred) + " n_truth=" + str(n_truth));
            }
        }
    }
    require(cases == 24 * 400, "case count off");
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<void()>>> criteria = {
        {"1 Eq-1 arithmetic on the deployed-scale matrix", criterion_f1_arithmetic},
        {"2 bootstrap mean/CI at deployment scale (10k resamples)", criterion_bootstrap_scale},
        {"3 Monte-Carlo bootstrap matches exhaustive enumeration (size <= 4)",
         criterion_bootstrap_oracle},
        {"4 mean AP over the 17-class table", criterion_map_table},
        {"5 end-to-end determinism on a 500-study corpus", criterion_end_to_end_determinism},
        {"6 matching conditions/no-reuse/window monotonicity (1000 trials)",
         criterion_matching_properties},
        {"7 labeler fidelity on 50 hand-labeled reports", criterion_labeler_fidelity},
        {"8 no non-CXR study ever reaches AI output (10k fuzz)", criterion_filter_property},
        {"9 AP equals the all-cutoff oracle; exact IoU", criterion_detection_oracle},
    };

    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        try {
            fn();
            std::printf("PASS  %s\n", name);
        } catch (const std::exception& e) {
            ++failed;
            std::printf("FAIL  %s\n      %s\n", name, e.what());
        }
        std::fflush(stdout);
    }
    if (failed == 0)
        std::printf("all %zu acceptance criteria passed\n", criteria.size());
    else
        std::printf("%d acceptance criteria FAILED\n", failed);
    return failed;
}
