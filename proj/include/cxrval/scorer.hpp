/**
 * @file scorer.hpp
 * @brief Deterministic stub scorers standing in for the trained models.
 *
 * A stub scorer resolves a study in three steps: an exact study_uid entry,
 * then the first matching glob pattern, then a seeded-hash fallback whose
 * invalid/abnormal rates are configurable. Identical (config, seed) always
 * produces identical scores and boxes.
 *
 * Config document:
 * {
 *   "studies":  { "<uid>": {"pa": 0.9, "abn": 0.8, "lesions": [box...]}, ... },
 *   "patterns": [ {"glob": "INV*", "pa": 0.2}, ... ],
 *   "fallback": { "invalid_rate": 0.0, "abnormal_rate": 0.3 }
 * }
 * All sections optional. Omitted "lesions" on an abnormal study means the
 * detector synthesizes boxes from the hash stream.
 */

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cxrval/ai.hpp"
#include "cxrval/error.hpp"
#include "cxrval/rng.hpp"

namespace cxrval {

namespace stub_detail {

/// Glob with '*' (any run) and '?' (any one char); everything else literal.
inline bool glob_match(std::string_view pattern, std::string_view text) {
    std::size_t p = 0, t = 0, star = std::string_view::npos, backtrack = 0;
    while (t < text.size()) {
        if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
            ++p, ++t;
        } else if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            backtrack = t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++backtrack;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

struct score_entry {
    std::optional<double> pa;
    std::optional<double> abn;
    std::optional<std::vector<lesion_box>> lesions;
};

struct pattern_entry {
    std::string glob;
    score_entry scores;
};

struct stub_config {
    std::unordered_map<std::string, score_entry> studies;
    std::vector<pattern_entry> patterns;
    double invalid_rate = 0.0;
    double abnormal_rate = 0.3;
};

inline score_entry parse_entry(const nlohmann::json& j, const std::string& where) {
    score_entry e;
    if (j.contains("pa")) e.pa = j.at("pa").get<double>();
    if (j.contains("abn")) e.abn = j.at("abn").get<double>();
    if (j.contains("lesions")) e.lesions = j.at("lesions").get<std::vector<lesion_box>>();
    for (auto v : {e.pa, e.abn})
        if (v && !(*v >= 0.0 && *v <= 1.0))
            throw error(errc::config_error, "score outside [0,1]", where);
    return e;
}

inline stub_config parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw error(errc::config_error, "scorer config is not an object");
    stub_config cfg;
    try {
        if (doc.contains("studies"))
            for (const auto& [uid, entry] : doc.at("studies").items())
                cfg.studies.emplace(uid, parse_entry(entry, uid));
        if (doc.contains("patterns"))
            for (const auto& p : doc.at("patterns"))
                cfg.patterns.push_back(
                    {p.at("glob").get<std::string>(), parse_entry(p, p.value("glob", ""))});
        if (doc.contains("fallback")) {
            const auto& f = doc.at("fallback");
            cfg.invalid_rate = f.value("invalid_rate", 0.0);
            cfg.abnormal_rate = f.value("abnormal_rate", 0.3);
        }
    } catch (const error&) {
        throw;
    } catch (const std::exception& e) {
        throw error(errc::config_error, e.what());
    }
    if (!(cfg.invalid_rate >= 0.0 && cfg.invalid_rate < 1.0) ||
        !(cfg.abnormal_rate >= 0.0 && cfg.abnormal_rate <= 1.0))
        throw error(errc::config_error, "fallback rates out of range");
    return cfg;
}

struct stub_state {
    stub_config cfg;
    std::uint64_t seed = 0;

    const score_entry* lookup(const std::string& uid) const {
        if (auto it = cfg.studies.find(uid); it != cfg.studies.end()) return &it->second;
        for (const auto& p : cfg.patterns)
            if (glob_match(p.glob, uid)) return &p.scores;
        return nullptr;
    }

    double hash_unit(std::string_view uid, std::uint64_t stream) const {
        return to_unit(mix(seed, fnv1a64(uid), stream));
    }

    double fallback_pa(std::string_view uid) const {
        const double u = hash_unit(uid, 1);
        const double sub = hash_unit(uid, 2);
        return u < cfg.invalid_rate ? 0.2 + 0.2 * sub   // clearly below the 0.5 gate
                                    : 0.6 + 0.4 * sub;  // clearly above
    }

    double fallback_abn(std::string_view uid) const {
        const double u = hash_unit(uid, 3);
        const double sub = hash_unit(uid, 4);
        return u < cfg.abnormal_rate ? 0.6 + 0.4 * sub : 0.1 + 0.3 * sub;
    }

    std::vector<lesion_box> synth_boxes(std::string_view uid) const {
        const std::uint64_t h = mix(seed, fnv1a64(uid), 5);
        const std::size_t n = 1 + bounded(h, 3);
        std::vector<lesion_box> boxes;
        boxes.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t hb = mix(h, i);
            lesion_box b;
            b.cls = static_cast<lesion_class>(bounded(hb, lesion_class_count));
            const double cx = 0.2 + 0.6 * to_unit(mix(hb, 1));
            const double cy = 0.2 + 0.6 * to_unit(mix(hb, 2));
            const double w = 0.05 + 0.15 * to_unit(mix(hb, 3));
            const double h2 = 0.05 + 0.15 * to_unit(mix(hb, 4));
            b.x_min = cx - w / 2;
            b.x_max = cx + w / 2;
            b.y_min = cy - h2 / 2;
            b.y_max = cy + h2 / 2;
            b.confidence = 0.5 + 0.5 * to_unit(mix(hb, 6));
            boxes.push_back(b);
        }
        return boxes;
    }
};

}  // namespace stub_detail

/// Builds a deterministic scorer from a parsed config document.
inline scorer_contract stub_scorer(const nlohmann::json& config, std::uint64_t seed) {
    auto state = std::make_shared<stub_detail::stub_state>();
    state->cfg = stub_detail::parse_config(config);
    state->seed = seed;

    scorer_contract s;
    s.pa_score = [state](const study_meta& m) {
        const auto* e = state->lookup(m.study_uid);
        return e && e->pa ? *e->pa : state->fallback_pa(m.study_uid);
    };
    s.abnormal_score = [state](const study_meta& m) {
        const auto* e = state->lookup(m.study_uid);
        return e && e->abn ? *e->abn : state->fallback_abn(m.study_uid);
    };
    s.detect = [state](const study_meta& m) {
        const auto* e = state->lookup(m.study_uid);
        if (e && e->lesions) return *e->lesions;
        return state->synth_boxes(m.study_uid);
    };
    return s;
}

/// Parses the config from JSON text first; malformed text -> config-error.
inline scorer_contract stub_scorer_from_text(std::string_view config_text, std::uint64_t seed) {
    nlohmann::json doc = nlohmann::json::parse(config_text, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded()) throw error(errc::config_error, "malformed scorer config JSON");
    return stub_scorer(doc, seed);
}

}  // namespace cxrval
