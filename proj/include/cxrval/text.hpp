/**
 * @file text.hpp
 * @brief UTF-8 text normalization for template matching.
 *
 * normalize_text() applies, in order: canonical composition (NFC),
 * lowercasing, collapsing whitespace runs to single spaces, and trimming.
 * Composition data covers the Latin repertoire incl. Vietnamese
 * (see detail/unicode_tables.hpp); codepoints outside the tables pass
 * through unchanged. Invalid UTF-8 bytes decode to U+FFFD.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cxrval/detail/unicode_tables.hpp"

namespace cxrval {

namespace detail {

inline std::uint8_t combining_class(char32_t cp) {
    auto* begin = std::begin(combining_class_table);
    auto* end = std::end(combining_class_table);
    auto it = std::lower_bound(begin, end, cp,
                               [](const ccc_entry& e, char32_t c) { return e.cp < c; });
    return it != end && it->cp == cp ? it->ccc : 0;
}

inline const decomp_entry* find_decomposition(char32_t cp) {
    auto* begin = std::begin(decomposition_table);
    auto* end = std::end(decomposition_table);
    auto it = std::lower_bound(begin, end, cp,
                               [](const decomp_entry& e, char32_t c) { return e.cp < c; });
    return it != end && it->cp == cp ? &*it : nullptr;
}

inline char32_t compose_pair(char32_t a, char32_t b) {
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 21) | b;
    auto* begin = std::begin(composition_table);
    auto* end = std::end(composition_table);
    auto it = std::lower_bound(begin, end, key,
                               [](const comp_entry& e, std::uint64_t k) { return e.key < k; });
    return it != end && it->key == key ? it->composed : 0;
}

inline char32_t to_lower(char32_t cp) {
    if (cp < 0x80) return cp >= 'A' && cp <= 'Z' ? cp + 32 : cp;
    auto* begin = std::begin(lowercase_table);
    auto* end = std::end(lowercase_table);
    auto it = std::lower_bound(begin, end, cp,
                               [](const lower_entry& e, char32_t c) { return e.cp < c; });
    return it != end && it->cp == cp ? it->lower : cp;
}

inline bool is_space(char32_t cp) {
    switch (cp) {
        case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
        case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
        case 0x202F: case 0x205F: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;
    }
}

/// Decodes one UTF-8 sequence at s[i]; advances i. Invalid input -> U+FFFD.
inline char32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<std::uint8_t>(s[k]); };
    const std::uint8_t b0 = byte(i);
    if (b0 < 0x80) { ++i; return b0; }
    int len = b0 >= 0xF0 ? 4 : b0 >= 0xE0 ? 3 : b0 >= 0xC2 ? 2 : 0;
    if (len == 0 || i + len > s.size()) { ++i; return 0xFFFD; }
    char32_t cp = b0 & (0x7F >> len);
    for (int k = 1; k < len; ++k) {
        const std::uint8_t bk = byte(i + k);
        if ((bk & 0xC0) != 0x80) { ++i; return 0xFFFD; }
        cp = (cp << 6) | (bk & 0x3F);
    }
    // Reject overlong forms and surrogates.
    static constexpr char32_t min_cp[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < min_cp[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ++i;
        return 0xFFFD;
    }
    i += len;
    return cp;
}

inline void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

inline std::vector<char32_t> decode_all(std::string_view s) {
    std::vector<char32_t> cps;
    cps.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) cps.push_back(decode_utf8(s, i));
    return cps;
}

inline void canonical_decompose(std::vector<char32_t>& cps) {
    std::vector<char32_t> out;
    out.reserve(cps.size() + 8);
    for (char32_t cp : cps) {
        if (const auto* d = find_decomposition(cp)) {
            for (int k = 0; k < d->len; ++k) out.push_back(d->seq[k]);
        } else {
            out.push_back(cp);
        }
    }
    cps = std::move(out);
}

inline void canonical_reorder(std::vector<char32_t>& cps) {
    // Stable bubble over maximal nonzero-ccc runs; runs are short.
    for (std::size_t i = 1; i < cps.size(); ++i) {
        const std::uint8_t cc = combining_class(cps[i]);
        if (cc == 0) continue;
        std::size_t j = i;
        while (j > 0) {
            const std::uint8_t prev = combining_class(cps[j - 1]);
            if (prev == 0 || prev <= cc) break;
            std::swap(cps[j - 1], cps[j]);
            --j;
        }
    }
}

inline void canonical_compose(std::vector<char32_t>& cps) {
    if (cps.empty()) return;
    std::vector<char32_t> out;
    out.reserve(cps.size());
    std::ptrdiff_t last_starter = -1;
    std::uint8_t last_cc = 0;
    for (char32_t cp : cps) {
        const std::uint8_t cc = combining_class(cp);
        if (last_starter >= 0 && (last_cc < cc || last_cc == 0)) {
            if (char32_t fused = compose_pair(out[last_starter], cp)) {
                out[last_starter] = fused;
                continue;
            }
        }
        if (cc == 0) {
            last_starter = static_cast<std::ptrdiff_t>(out.size());
            last_cc = 0;
        } else {
            last_cc = cc;
        }
        out.push_back(cp);
    }
    cps = std::move(out);
}

}  // namespace detail

/// NFC + lowercase + whitespace runs collapsed to single spaces + trim.
inline std::string normalize_text(std::string_view input) {
    auto cps = detail::decode_all(input);
    detail::canonical_decompose(cps);
    detail::canonical_reorder(cps);
    detail::canonical_compose(cps);

    std::string out;
    out.reserve(input.size());
    bool pending_space = false;
    bool any_output = false;
    for (char32_t cp : cps) {
        if (detail::is_space(cp)) {
            pending_space = any_output;
            continue;
        }
        if (pending_space) {
            out += ' ';
            pending_space = false;
        }
        detail::encode_utf8(detail::to_lower(cp), out);
        any_output = true;
    }
    return out;
}

/// ASCII-only trim, for DICOM code strings and identifiers.
inline std::string_view trim_ascii(std::string_view s) {
    const auto is_ws = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\0';
    };
    while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_ws(s.back())) s.remove_suffix(1);
    return s;
}

/// ASCII-only uppercase copy, for DICOM code string comparison.
inline std::string upper_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'a' && c <= 'z') c -= 32;
    return out;
}

}  // namespace cxrval
