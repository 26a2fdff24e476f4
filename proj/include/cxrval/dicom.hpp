/**
 * @file dicom.hpp
 * @brief Metadata-only reader for DICOM part-10 files.
 *
 * Reads just enough of a part-10 file to identify the study: PatientID,
 * StudyDate/StudyTime, Modality, BodyPartExamined and StudyInstanceUID.
 * Everything else, including pixel data, is skipped via declared element
 * lengths. Supported transfer syntaxes: explicit-VR little endian
 * (1.2.840.10008.1.2.1) and implicit-VR little endian (1.2.840.10008.1.2).
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cxrval/error.hpp"
#include "cxrval/study.hpp"
#include "cxrval/text.hpp"
#include "cxrval/timestamp.hpp"

namespace cxrval {

namespace dicom {

struct tag {
    std::uint16_t group = 0;
    std::uint16_t element = 0;

    constexpr std::uint32_t key() const {
        return (static_cast<std::uint32_t>(group) << 16) | element;
    }
    friend constexpr auto operator<=>(tag a, tag b) { return a.key() <=> b.key(); }
    friend constexpr bool operator==(tag, tag) = default;

    std::string to_string() const {
        char buf[12];
        std::snprintf(buf, sizeof buf, "(%04X,%04X)", group, element);
        return buf;
    }
};

inline constexpr tag study_date{0x0008, 0x0020};
inline constexpr tag study_time_tag{0x0008, 0x0030};
inline constexpr tag modality{0x0008, 0x0060};
inline constexpr tag patient_id{0x0010, 0x0020};
inline constexpr tag body_part_examined{0x0018, 0x0015};
inline constexpr tag study_instance_uid{0x0020, 0x000D};

inline constexpr tag transfer_syntax_uid{0x0002, 0x0010};
inline constexpr tag item{0xFFFE, 0xE000};
inline constexpr tag item_delimiter{0xFFFE, 0xE00D};
inline constexpr tag sequence_delimiter{0xFFFE, 0xE0DD};

inline constexpr std::string_view explicit_vr_le = "1.2.840.10008.1.2.1";
inline constexpr std::string_view implicit_vr_le = "1.2.840.10008.1.2";

inline constexpr std::uint32_t undefined_length = 0xFFFFFFFFu;

/**
 * @brief Forward-only cursor over an in-memory file image.
 *
 * Value bytes consumed through skip() are counted separately from bytes the
 * parser actually inspects, so tests can assert that skipping a large
 * PixelData element never touches its payload.
 */
class byte_cursor {
public:
    explicit byte_cursor(std::span<const std::uint8_t> data) : data_(data) {}

    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return data_.size() - pos_; }
    std::size_t bytes_read() const { return bytes_read_; }
    std::size_t bytes_skipped() const { return bytes_skipped_; }

    std::uint8_t read_u8() {
        require(1);
        bytes_read_ += 1;
        return data_[pos_++];
    }

    std::uint16_t read_u16() {
        require(2);
        bytes_read_ += 2;
        std::uint16_t v = static_cast<std::uint16_t>(data_[pos_]) |
                          static_cast<std::uint16_t>(data_[pos_ + 1]) << 8;
        pos_ += 2;
        return v;
    }

    std::uint32_t read_u32() {
        require(4);
        bytes_read_ += 4;
        std::uint32_t v = static_cast<std::uint32_t>(data_[pos_]) |
                          static_cast<std::uint32_t>(data_[pos_ + 1]) << 8 |
                          static_cast<std::uint32_t>(data_[pos_ + 2]) << 16 |
                          static_cast<std::uint32_t>(data_[pos_ + 3]) << 24;
        pos_ += 4;
        return v;
    }

    std::string read_string(std::size_t n) {
        require(n);
        bytes_read_ += n;
        std::string s(reinterpret_cast<const char*>(data_.data() + pos_), n);
        pos_ += n;
        return s;
    }

    void skip(std::size_t n) {
        require(n);
        bytes_skipped_ += n;
        pos_ += n;
    }

private:
    void require(std::size_t n) const {
        if (pos_ + n > data_.size())
            throw error(errc::malformed_file, "unexpected end of file at offset " +
                                                  std::to_string(pos_));
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
    std::size_t bytes_read_ = 0;
    std::size_t bytes_skipped_ = 0;
};

namespace detail {

inline tag read_tag(byte_cursor& c) {
    const std::uint16_t group = c.read_u16();
    const std::uint16_t element = c.read_u16();
    return {group, element};
}

// VRs that use the 2-byte-reserved + 4-byte-length explicit encoding.
inline bool has_long_length(std::string_view vr) {
    static constexpr std::string_view long_vrs[] = {"OB", "OD", "OF", "OL", "OV",
                                                    "OW", "SQ", "UC", "UN", "UR",
                                                    "UT", "SV", "UV"};
    for (auto v : long_vrs)
        if (v == vr) return true;
    return false;
}

struct element_header {
    tag t;
    std::string vr;  // empty under implicit VR
    std::uint32_t length = 0;
};

inline element_header read_element_header(byte_cursor& c, bool explicit_vr) {
    element_header h;
    h.t = read_tag(c);
    if (h.t.group == 0xFFFE) {  // item/delimiter headers carry no VR
        h.length = c.read_u32();
        return h;
    }
    if (explicit_vr) {
        h.vr = c.read_string(2);
        if (has_long_length(h.vr)) {
            c.skip(2);
            h.length = c.read_u32();
        } else {
            h.length = c.read_u16();
        }
    } else {
        h.length = c.read_u32();
    }
    return h;
}

// Skips the body of a sequence (or item data set) with undefined length by
// walking item headers until the matching delimiter.
inline void skip_undefined_sequence(byte_cursor& c, bool explicit_vr);

inline void skip_undefined_item(byte_cursor& c, bool explicit_vr) {
    for (;;) {
        element_header h = read_element_header(c, explicit_vr);
        if (h.t == item_delimiter) return;
        if (h.length == undefined_length) {
            if (h.vr == "SQ" || h.vr.empty())
                skip_undefined_sequence(c, explicit_vr);
            else
                throw error(errc::malformed_file,
                            "undefined length on non-sequence element " + h.t.to_string());
        } else {
            c.skip(h.length);
        }
    }
}

inline void skip_undefined_sequence(byte_cursor& c, bool explicit_vr) {
    for (;;) {
        element_header h = read_element_header(c, explicit_vr);
        if (h.t == sequence_delimiter) return;
        if (h.t != item)
            throw error(errc::malformed_file,
                        "expected item in sequence, found " + h.t.to_string());
        if (h.length == undefined_length)
            skip_undefined_item(c, explicit_vr);
        else
            c.skip(h.length);
    }
}

inline void skip_value(byte_cursor& c, const element_header& h, bool explicit_vr) {
    if (h.length != undefined_length) {
        c.skip(h.length);
        return;
    }
    // Undefined length: a sequence, or encapsulated pixel data (item-framed).
    skip_undefined_sequence(c, explicit_vr);
}

// DICOM string values are space- or NUL-padded to even length.
inline std::string clean_value(std::string v) { return std::string(trim_ascii(v)); }

}  // namespace detail

/// File meta information needed to parse the data set.
struct file_meta {
    std::string transfer_syntax;
    bool explicit_vr = true;
};

/// Parses the 128-byte preamble, "DICM" magic and the group-0002 elements.
inline file_meta parse_file_meta(byte_cursor& c) {
    if (c.remaining() < 132)
        throw error(errc::malformed_file, "file shorter than preamble and magic");
    c.skip(128);
    if (c.read_string(4) != "DICM")
        throw error(errc::malformed_file, "missing DICM magic after preamble");

    // Group 0002 is always explicit-VR little endian. The group length
    // element (0002,0000) bounds the remaining meta elements.
    detail::element_header first = detail::read_element_header(c, /*explicit_vr=*/true);
    if (first.t != tag{0x0002, 0x0000} || first.vr != "UL" || first.length != 4)
        throw error(errc::malformed_file, "file meta does not start with group length");
    const std::uint32_t meta_length = c.read_u32();
    const std::size_t meta_end = c.position() + meta_length;

    file_meta meta;
    while (c.position() < meta_end) {
        detail::element_header h = detail::read_element_header(c, /*explicit_vr=*/true);
        if (h.t == transfer_syntax_uid)
            meta.transfer_syntax = detail::clean_value(c.read_string(h.length));
        else
            detail::skip_value(c, h, /*explicit_vr=*/true);
    }
    if (meta.transfer_syntax.empty())
        throw error(errc::missing_tag, "transfer syntax UID absent from file meta",
                    transfer_syntax_uid.to_string());

    if (meta.transfer_syntax == explicit_vr_le)
        meta.explicit_vr = true;
    else if (meta.transfer_syntax == implicit_vr_le)
        meta.explicit_vr = false;
    else
        throw error(errc::unsupported_syntax,
                    "unsupported transfer syntax " + meta.transfer_syntax);
    return meta;
}

}  // namespace dicom

/// How many bytes a parse inspected vs. skipped by declared length.
struct dicom_parse_stats {
    std::size_t bytes_read = 0;
    std::size_t bytes_skipped = 0;
};

/**
 * @brief Extracts study metadata from an in-memory part-10 file image.
 *
 * Walks data set elements in ascending tag order, capturing the six
 * identity attributes and skipping every other value by its declared
 * length. Stops as soon as the tag order passes StudyInstanceUID, so
 * trailing bulk data is never touched.
 */
inline study_meta parse_dicom_meta(std::span<const std::uint8_t> bytes,
                                   std::string source_uri = {},
                                   dicom_parse_stats* stats = nullptr) {
    dicom::byte_cursor cursor(bytes);
    const dicom::file_meta meta = dicom::parse_file_meta(cursor);

    std::optional<std::string> date, time, modality_v, patient_v, body_part_v, uid_v;
    const auto all_found = [&] {
        return date && time && modality_v && patient_v && body_part_v && uid_v;
    };
    while (cursor.remaining() > 0) {
        dicom::detail::element_header h =
            dicom::detail::read_element_header(cursor, meta.explicit_vr);
        // Data sets are ordered by tag; once past StudyInstanceUID with all
        // attributes in hand there is nothing left to collect.
        if (h.t > dicom::study_instance_uid && all_found()) break;
        std::optional<std::string>* slot = nullptr;
        if (h.t == dicom::study_date) slot = &date;
        else if (h.t == dicom::study_time_tag) slot = &time;
        else if (h.t == dicom::modality) slot = &modality_v;
        else if (h.t == dicom::patient_id) slot = &patient_v;
        else if (h.t == dicom::body_part_examined) slot = &body_part_v;
        else if (h.t == dicom::study_instance_uid) slot = &uid_v;
        if (slot != nullptr && h.length != dicom::undefined_length)
            *slot = dicom::detail::clean_value(cursor.read_string(h.length));
        else
            dicom::detail::skip_value(cursor, h, meta.explicit_vr);
        if (h.t >= dicom::study_instance_uid && all_found()) break;
    }

    if (stats != nullptr) *stats = {cursor.bytes_read(), cursor.bytes_skipped()};

    const auto require = [](const std::optional<std::string>& v, dicom::tag t) {
        if (!v || v->empty())
            throw error(errc::missing_tag, "required attribute absent", t.to_string());
        return *v;
    };

    study_meta out;
    out.patient_id = require(patient_v, dicom::patient_id);
    out.study_uid = require(uid_v, dicom::study_instance_uid);
    out.modality = require(modality_v, dicom::modality);
    out.body_part = require(body_part_v, dicom::body_part_examined);
    const std::string da = require(date, dicom::study_date);
    const std::string tm = require(time, dicom::study_time_tag);
    auto ts = timestamp::from_dicom(da, tm);
    if (!ts)
        throw error(errc::bad_timestamp, "cannot parse StudyDate/StudyTime", da + " " + tm);
    out.study_time = *ts;
    out.source_uri = std::move(source_uri);
    return out;
}

/// Reads a part-10 file from disk and parses its study metadata.
inline study_meta parse_dicom_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::io_error, "cannot open file", path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return parse_dicom_meta(bytes, path.string());
}

}  // namespace cxrval
