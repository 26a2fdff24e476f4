/**
 * @file dicom_write.hpp
 * @brief Minimal part-10 writer for fixtures and synthetic corpora.
 *
 * Emits well-formed little-endian part-10 files (explicit or implicit VR)
 * containing string elements and optional bulk data. Only what the reader
 * side consumes; no attempt at full IOD conformance.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "cxrval/dicom.hpp"
#include "cxrval/error.hpp"

namespace cxrval::dicom {

class file_builder {
public:
    explicit file_builder(bool explicit_vr = true) : explicit_vr_(explicit_vr) {}

    /// Text/code element; value padded to even length (UI pads with NUL).
    file_builder& add(tag t, std::string_view vr, std::string_view value) {
        std::string v(value);
        if (v.size() % 2 != 0) v += (vr == "UI") ? '\0' : ' ';
        elements_.push_back({t, std::string(vr), {v.begin(), v.end()}});
        return *this;
    }

    /// Bulk element (e.g. OW PixelData) with raw bytes; size must be even.
    file_builder& add_bulk(tag t, std::string_view vr, std::vector<std::uint8_t> bytes) {
        if (bytes.size() % 2 != 0) bytes.push_back(0);
        elements_.push_back({t, std::string(vr), std::move(bytes)});
        return *this;
    }

    /// Pre-encoded element bytes spliced verbatim into the data set, for
    /// fixtures the structured API cannot express (undefined lengths etc.).
    file_builder& add_raw(std::vector<std::uint8_t> bytes) {
        elements_.push_back({tag{0, 0}, std::string(), std::move(bytes)});
        elements_.back().raw = true;
        return *this;
    }

    std::vector<std::uint8_t> build() const {
        std::vector<std::uint8_t> out(128, 0);  // preamble
        append_text(out, "DICM");

        // File meta group, always explicit VR little endian.
        std::vector<std::uint8_t> meta;
        append_element(meta, {tag{0x0002, 0x0001}, "OB", {0x00, 0x01}}, true);
        append_string_element(meta, tag{0x0002, 0x0002}, "UI",
                              "1.2.840.10008.5.1.4.1.1.1.1");  // DX image storage
        append_string_element(meta, tag{0x0002, 0x0003}, "UI", "1.2.826.0.1.3680043.9.9999.1");
        append_string_element(meta, tag{0x0002, 0x0010}, "UI",
                              explicit_vr_ ? explicit_vr_le : implicit_vr_le);

        append_tag(out, tag{0x0002, 0x0000});
        append_text(out, "UL");
        append_u16(out, 4);
        append_u32(out, static_cast<std::uint32_t>(meta.size()));
        out.insert(out.end(), meta.begin(), meta.end());

        for (const auto& e : elements_) append_element(out, e, explicit_vr_);
        return out;
    }

    void write_file(const std::filesystem::path& path) const {
        std::ofstream f(path, std::ios::binary | std::ios::trunc);
        if (!f) throw error(errc::io_error, "cannot write file", path.string());
        const auto bytes = build();
        f.write(reinterpret_cast<const char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
        if (!f) throw error(errc::io_error, "short write", path.string());
    }

private:
    struct element {
        tag t;
        std::string vr;
        std::vector<std::uint8_t> value;
        bool raw = false;
    };

    static void append_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
        out.push_back(v & 0xFF);
        out.push_back(v >> 8);
    }
    static void append_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
        out.push_back(v & 0xFF);
        out.push_back((v >> 8) & 0xFF);
        out.push_back((v >> 16) & 0xFF);
        out.push_back(v >> 24);
    }
    static void append_text(std::vector<std::uint8_t>& out, std::string_view s) {
        out.insert(out.end(), s.begin(), s.end());
    }
    static void append_tag(std::vector<std::uint8_t>& out, tag t) {
        append_u16(out, t.group);
        append_u16(out, t.element);
    }

    static void append_element(std::vector<std::uint8_t>& out, const element& e,
                               bool explicit_vr) {
        if (e.raw) {
            out.insert(out.end(), e.value.begin(), e.value.end());
            return;
        }
        append_tag(out, e.t);
        if (explicit_vr) {
            append_text(out, e.vr);
            if (detail::has_long_length(e.vr)) {
                append_u16(out, 0);
                append_u32(out, static_cast<std::uint32_t>(e.value.size()));
            } else {
                append_u16(out, static_cast<std::uint16_t>(e.value.size()));
            }
        } else {
            append_u32(out, static_cast<std::uint32_t>(e.value.size()));
        }
        out.insert(out.end(), e.value.begin(), e.value.end());
    }

    static void append_string_element(std::vector<std::uint8_t>& out, tag t,
                                      std::string_view vr, std::string_view value) {
        std::string v(value);
        if (v.size() % 2 != 0) v += (vr == "UI") ? '\0' : ' ';
        append_element(out, {t, std::string(vr), {v.begin(), v.end()}}, true);
    }

    bool explicit_vr_;
    std::vector<element> elements_;
};

/// Convenience builder for a study fixture with the six identity attributes.
inline file_builder study_file(const study_meta& meta, bool explicit_vr = true) {
    file_builder b(explicit_vr);
    const std::string iso = meta.study_time.to_iso();  // YYYY-MM-DDTHH:MM:SS
    const std::string da = iso.substr(0, 4) + iso.substr(5, 2) + iso.substr(8, 2);
    const std::string tm = iso.substr(11, 2) + iso.substr(14, 2) + iso.substr(17, 2);
    b.add(study_date, "DA", da);
    b.add(study_time_tag, "TM", tm);
    b.add(modality, "CS", meta.modality);
    b.add(patient_id, "LO", meta.patient_id);
    b.add(body_part_examined, "CS", meta.body_part);
    b.add(study_instance_uid, "UI", meta.study_uid);
    return b;
}

}  // namespace cxrval::dicom
