/**
 * @file his.hpp
 * @brief Examination-session records exported from the hospital system.
 *
 * One XML file holds one session: a header carrying SESSION_ID, PATIENT_ID,
 * CHECK_IN_TIME and CHECK_OUT_TIME, and any number of service reports each
 * carrying SERVICE_ID, REPORT_TIME and a free-text DESCRIPTION. The
 * canonical element/attribute names are English; deployments with other
 * names (the exports this models are Vietnamese) supply an alias map
 * {canonical: deployment}.
 *
 * Canonical form:
 *   <session id=".." patient_id=".." check_in_time=".." check_out_time="..">
 *     <report service_id=".." report_time=".."><description>..</description></report>
 *   </session>
 */

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cxrval/error.hpp"
#include "cxrval/text.hpp"
#include "cxrval/timestamp.hpp"
#include "cxrval/xml.hpp"

namespace cxrval {

struct radiology_report {
    std::string service_id;
    timestamp report_time;
    std::string description;  ///< may be empty; the labeler flags that

    friend bool operator==(const radiology_report&, const radiology_report&) = default;
};

struct session {
    std::string session_id;
    std::string patient_id;
    timestamp check_in_time;
    timestamp check_out_time;
    std::vector<radiology_report> reports;  ///< document order

    friend bool operator==(const session&, const session&) = default;
};

/// Canonical-to-deployment name translation for session documents.
class alias_map {
public:
    alias_map() = default;

    /// From a JSON object {canonical_name: deployment_name}.
    static alias_map from_json(const nlohmann::json& doc) {
        if (!doc.is_object()) throw error(errc::config_error, "alias map is not an object");
        alias_map m;
        for (const auto& [canonical, deployment] : doc.items()) {
            if (!deployment.is_string())
                throw error(errc::config_error, "alias value is not a string", canonical);
            m.names_[canonical] = deployment.get<std::string>();
        }
        return m;
    }

    const std::string& operator()(const std::string& canonical) const {
        auto it = names_.find(canonical);
        return it == names_.end() ? canonical : it->second;
    }

private:
    std::unordered_map<std::string, std::string> names_;
};

namespace his_detail {

inline timestamp parse_time(const std::string& raw, const std::string& attr) {
    auto t = timestamp::parse(raw);
    if (!t) throw error(errc::bad_timestamp, "cannot parse " + attr, raw);
    return *t;
}

inline std::string require_attribute(const xml::element& el, const std::string& name) {
    const std::string* v = el.find_attribute(name);
    if (v == nullptr)
        throw error(errc::missing_attribute, "attribute absent from <" + el.name + ">", name);
    return std::string(trim_ascii(*v));
}

}  // namespace his_detail

/// Parses one session document. The alias map translates canonical names
/// to the deployment's element/attribute names before lookup.
inline session parse_session(std::string_view xml_text, const alias_map& aliases = {}) {
    const xml::element root = xml::parse(xml_text);
    if (root.name != aliases("session"))
        throw error(errc::parse_error,
                    "root element <" + root.name + "> is not <" + aliases("session") + ">");

    using his_detail::parse_time;
    using his_detail::require_attribute;

    session s;
    s.session_id = require_attribute(root, aliases("id"));
    s.patient_id = require_attribute(root, aliases("patient_id"));
    if (s.patient_id.empty())
        throw error(errc::missing_attribute, "empty patient id", aliases("patient_id"));
    s.check_in_time = parse_time(require_attribute(root, aliases("check_in_time")),
                                 aliases("check_in_time"));
    s.check_out_time = parse_time(require_attribute(root, aliases("check_out_time")),
                                  aliases("check_out_time"));
    if (s.check_in_time > s.check_out_time)
        throw error(errc::inconsistent_session, "check-in after check-out", s.session_id);

    for (const xml::element* rep : root.children_named(aliases("report"))) {
        radiology_report r;
        r.service_id = require_attribute(*rep, aliases("service_id"));
        r.report_time =
            parse_time(require_attribute(*rep, aliases("report_time")), aliases("report_time"));
        if (auto descs = rep->children_named(aliases("description")); !descs.empty())
            r.description = descs.front()->text;
        s.reports.push_back(std::move(r));
    }
    return s;
}

/// Serializes a session back to canonical XML.
inline std::string write_session(const session& s) {
    xml::element root;
    root.name = "session";
    root.attributes = {{"id", s.session_id},
                       {"patient_id", s.patient_id},
                       {"check_in_time", s.check_in_time.to_iso()},
                       {"check_out_time", s.check_out_time.to_iso()}};
    for (const auto& r : s.reports) {
        xml::element rep;
        rep.name = "report";
        rep.attributes = {{"service_id", r.service_id}, {"report_time", r.report_time.to_iso()}};
        xml::element desc;
        desc.name = "description";
        desc.text = r.description;
        rep.children.push_back(std::move(desc));
        root.children.push_back(std::move(rep));
    }
    return xml::to_string(root);
}

/// Reads and parses one session file.
inline session parse_session_file(const std::filesystem::path& path,
                                  const alias_map& aliases = {}) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open file", path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_session(buf.str(), aliases);
}

/// Keeps exactly the reports whose service id equals cxr_service_id
/// (exact text match after trim), preserving order.
inline std::vector<radiology_report> filter_cxr_reports(const session& s,
                                                        std::string_view cxr_service_id) {
    const std::string_view wanted = trim_ascii(cxr_service_id);
    if (wanted.empty())
        throw error(errc::input_error, "cxr service id must be non-empty");
    std::vector<radiology_report> out;
    for (const auto& r : s.reports)
        if (trim_ascii(r.service_id) == wanted) out.push_back(r);
    return out;
}

}  // namespace cxrval
