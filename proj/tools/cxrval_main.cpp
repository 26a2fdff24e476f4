/**
 * @file cxrval_main.cpp
 * @brief Pipeline CLI: composable stages plus synth and run-all.
 *
 * Every flag can also come from an environment variable (prefix CXRVAL_,
 * dashes to underscores, upper case) or from a JSON config file given with
 * --config; explicit flags win over both.
 */

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cxrval/cxrval.hpp"

namespace {

using cxrval::pipeline::run_config;

std::string env_name(std::string flag) {
    for (char& c : flag)
        c = (c == '-') ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return "CXRVAL_" + flag;
}

/// add_option with the CXRVAL_* environment fallback wired in.
template <typename App, typename Value>
CLI::Option* opt(App& app, const std::string& flag, Value& value, const std::string& help) {
    return app.add_option("--" + flag, value, help)->envname(env_name(flag));
}

void attach_config(CLI::App& app, std::string& config_path) {
    app.add_option("--config", config_path, "JSON config file mirroring the flags")
        ->envname("CXRVAL_CONFIG");
}

/**
 * Applies a JSON config file ({"flag-name": value, ...}) by appending
 * synthesized "--flag value" arguments. A key is skipped when the flag is
 * already on the command line or its CXRVAL_* variable is set, so explicit
 * flags and the environment win over the file.
 */
void apply_config_file(std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty() && std::getenv("CXRVAL_CONFIG") != nullptr)
        path = std::getenv("CXRVAL_CONFIG");
    if (path.empty()) return;

    const nlohmann::json doc =
        nlohmann::json::parse(cxrval::pipeline::read_text_file(path), nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw cxrval::error(cxrval::errc::config_error, "config file is not a JSON object",
                            path);
    for (const auto& [key, value] : doc.items()) {
        const std::string flag = "--" + key;
        bool given = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
        if (given || std::getenv(env_name(key).c_str()) != nullptr) continue;
        if (value.is_array() || value.is_object())
            throw cxrval::error(cxrval::errc::config_error,
                                "config values must be scalars", key);
        args.push_back(flag);
        args.push_back(value.is_string() ? value.get<std::string>() : value.dump());
    }
}

int fail(const std::string& stage, const std::exception& e) {
    std::fprintf(stderr, "error [%s]: %s\n", stage.c_str(), e.what());
    return 1;
}

void add_out_option(CLI::App& app, run_config& cfg) {
    opt(app, "out", cfg.out_dir, "output directory for stage artifacts")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prospective validation pipeline for a chest-radiograph AI system"};
    app.require_subcommand(1);

    run_config cfg;
    std::string synth_spec_path;
    std::string config_path;

    auto* ingest_pacs = app.add_subcommand("ingest-pacs", "read PACS studies, keep CXRs");
    attach_config(*ingest_pacs, config_path);
    opt(*ingest_pacs, "pacs-dir", cfg.pacs_dir, "directory of DICOM part-10 files");
    opt(*ingest_pacs, "pacs-json", cfg.pacs_json, "DICOMweb metadata JSON document");
    add_out_option(*ingest_pacs, cfg);
    ingest_pacs->callback([&] {
        if (cfg.pacs_dir.empty() == cfg.pacs_json.empty())
            throw CLI::ValidationError("exactly one of --pacs-dir/--pacs-json is required");
        std::filesystem::create_directories(cfg.out_dir);
        const auto s = cfg.pacs_json.empty()
                           ? cxrval::pipeline::ingest_pacs_dir(cfg.pacs_dir, cfg.out_dir)
                           : cxrval::pipeline::ingest_pacs_json(cfg.pacs_json, cfg.out_dir);
        std::printf("ingest-pacs: accepted %zu, rejected %zu\n", s.accepted, s.rejected);
    });

    auto* run_ai = app.add_subcommand("run-ai", "score admitted studies through the cascade");
    attach_config(*run_ai, config_path);
    opt(*run_ai, "scorer-config", cfg.scorer_config_path, "stub scorer config JSON");
    opt(*run_ai, "pa-threshold", cfg.pa_threshold, "view gate threshold")
        ->check(CLI::Range(0.0, 1.0).description("in (0,1)"));
    opt(*run_ai, "abn-threshold", cfg.abn_threshold, "abnormality gate threshold")
        ->check(CLI::Range(0.0, 1.0).description("in (0,1)"));
    opt(*run_ai, "seed", cfg.seed, "scorer seed");
    add_out_option(*run_ai, cfg);
    run_ai->callback([&] {
        const auto s = cxrval::pipeline::run_ai(cfg.out_dir, cxrval::pipeline::load_scorer(cfg),
                                                cfg.pa_threshold, cfg.abn_threshold);
        std::printf("run-ai: %zu results (%zu invalid, %zu normal, %zu abnormal), %zu errors\n",
                    s.n_results, s.n_invalid, s.n_normal, s.n_abnormal, s.n_errors);
    });

    auto* ingest_his = app.add_subcommand("ingest-his", "parse session XML, keep CXR reports");
    attach_config(*ingest_his, config_path);
    opt(*ingest_his, "his-dir", cfg.his_dir, "directory of session XML files")->required();
    opt(*ingest_his, "service-id", cfg.cxr_service_id, "CXR service id (default CXR)");
    opt(*ingest_his, "alias-map", cfg.alias_map_path, "attribute alias map JSON");
    add_out_option(*ingest_his, cfg);
    ingest_his->callback([&] {
        const auto s = cxrval::pipeline::ingest_his(cfg.his_dir, cfg.cxr_service_id, cfg.out_dir,
                                                    cxrval::pipeline::load_aliases(cfg));
        std::printf("ingest-his: %zu sessions, %zu reports (%zu CXR-service)\n", s.n_sessions,
                    s.n_reports_total, s.n_reports_cxr);
    });

    auto* match = app.add_subcommand("match", "link AI results to reports");
    attach_config(*match, config_path);
    opt(*match, "window-hours", cfg.window_hours, "matching window in hours (default 24)")
        ->check(CLI::NonNegativeNumber);
    add_out_option(*match, cfg);
    match->callback([&] {
        const auto s = cxrval::pipeline::run_match(cfg.out_dir, cfg.window_seconds());
        std::printf("match: %zu pairs, %zu unmatched AI, %zu unmatched reports, %zu invalid excluded\n",
                    s.n_pairs, s.n_unmatched_ai, s.n_unmatched_reports, s.n_invalid_excluded);
    });

    auto* label = app.add_subcommand("label", "ground-truth labels for matched reports");
    attach_config(*label, config_path);
    opt(*label, "templates", cfg.templates_path, "template set JSON (default built-in)");
    add_out_option(*label, cfg);
    label->callback([&] {
        const auto s = cxrval::pipeline::run_label(cfg.out_dir, cxrval::pipeline::load_templates(cfg));
        std::printf("label: %zu pairs, %zu normal, %zu abnormal, %zu empty descriptions\n",
                    s.n_pairs, s.n_truth_normal, s.n_truth_abnormal, s.n_empty_description);
    });

    auto* evaluate = app.add_subcommand("evaluate", "confusion, F1 and bootstrap CI");
    attach_config(*evaluate, config_path);
    opt(*evaluate, "bootstrap-n", cfg.bootstrap_n, "bootstrap resamples (default 10000)")
        ->check(CLI::PositiveNumber);
    opt(*evaluate, "seed", cfg.seed, "bootstrap seed");
    add_out_option(*evaluate, cfg);
    evaluate->callback([&] {
        const auto ev = cxrval::pipeline::run_evaluate(cfg.out_dir, cfg.bootstrap_n, cfg.seed);
        std::printf("evaluate: tp=%llu fp=%llu fn=%llu tn=%llu\n",
                    static_cast<unsigned long long>(ev.counts.tp),
                    static_cast<unsigned long long>(ev.counts.fp),
                    static_cast<unsigned long long>(ev.counts.fn),
                    static_cast<unsigned long long>(ev.counts.tn));
        std::printf("evaluate: F1 %.4f, bootstrap mean %.4f (95%% CI %.4f, %.4f), n=%llu\n",
                    ev.point_f1, ev.bootstrap.mean_f1, ev.bootstrap.ci_low, ev.bootstrap.ci_high,
                    static_cast<unsigned long long>(ev.bootstrap.n_resamples));
    });

    auto* synth = app.add_subcommand("synth", "generate a synthetic corpus");
    attach_config(*synth, config_path);
    opt(*synth, "spec", synth_spec_path, "corpus spec JSON")->required();
    add_out_option(*synth, cfg);
    synth->callback([&] {
        const auto spec =
            cxrval::corpus_spec::from_json(cxrval::pipeline::parse_json_file(synth_spec_path));
        const auto manifest = cxrval::generate_corpus(spec, cfg.out_dir);
        std::printf("synth: %zu studies, %zu sessions -> %s\n",
                    manifest.at("studies").size(), manifest.at("sessions").size(),
                    cfg.out_dir.c_str());
    });

    auto* run_all = app.add_subcommand("run-all", "every stage in order");
    attach_config(*run_all, config_path);
    opt(*run_all, "pacs-dir", cfg.pacs_dir, "directory of DICOM part-10 files");
    opt(*run_all, "pacs-json", cfg.pacs_json, "DICOMweb metadata JSON document");
    opt(*run_all, "his-dir", cfg.his_dir, "directory of session XML files")->required();
    opt(*run_all, "templates", cfg.templates_path, "template set JSON (default built-in)");
    opt(*run_all, "scorer-config", cfg.scorer_config_path, "stub scorer config JSON");
    opt(*run_all, "alias-map", cfg.alias_map_path, "attribute alias map JSON");
    opt(*run_all, "service-id", cfg.cxr_service_id, "CXR service id (default CXR)");
    opt(*run_all, "pa-threshold", cfg.pa_threshold, "view gate threshold")
        ->check(CLI::Range(0.0, 1.0).description("in (0,1)"));
    opt(*run_all, "abn-threshold", cfg.abn_threshold, "abnormality gate threshold")
        ->check(CLI::Range(0.0, 1.0).description("in (0,1)"));
    opt(*run_all, "window-hours", cfg.window_hours, "matching window in hours (default 24)")
        ->check(CLI::NonNegativeNumber);
    opt(*run_all, "bootstrap-n", cfg.bootstrap_n, "bootstrap resamples (default 10000)")
        ->check(CLI::PositiveNumber);
    opt(*run_all, "seed", cfg.seed, "scorer and bootstrap seed");
    add_out_option(*run_all, cfg);
    run_all->callback([&] {
        if (cfg.pacs_dir.empty() == cfg.pacs_json.empty())
            throw CLI::ValidationError("exactly one of --pacs-dir/--pacs-json is required");
        const auto ev = cxrval::pipeline::run_all(cfg);
        std::printf("run-all: tp=%llu fp=%llu fn=%llu tn=%llu\n",
                    static_cast<unsigned long long>(ev.counts.tp),
                    static_cast<unsigned long long>(ev.counts.fp),
                    static_cast<unsigned long long>(ev.counts.fn),
                    static_cast<unsigned long long>(ev.counts.tn));
        std::printf("run-all: F1 %.4f, bootstrap mean %.4f (95%% CI %.4f, %.4f)\n", ev.point_f1,
                    ev.bootstrap.mean_f1, ev.bootstrap.ci_low, ev.bootstrap.ci_high);
    });

    const std::string stage_names[] = {"ingest-pacs", "run-ai", "ingest-his", "match",
                                       "label",       "evaluate", "synth",    "run-all"};
    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        apply_config_file(args);
        std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const cxrval::error& e) {
        for (const auto& name : stage_names)
            if (app.get_subcommand(name)->parsed()) return fail(name, e);
        return fail("cxrval", e);
    } catch (const std::exception& e) {
        return fail("cxrval", e);
    }
    return 0;
}
