/**
 * @file xml.hpp
 * @brief Small XML reader/writer for session exports.
 *
 * Supports the subset session documents use: one root element, nested
 * elements, attributes, character data, CDATA, comments, an optional XML
 * declaration, and the five predefined entities plus numeric references.
 * No DTDs, processing instructions or namespaces. Parse errors report
 * line:column.
 */

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cxrval/error.hpp"

namespace cxrval::xml {

struct attribute {
    std::string name;
    std::string value;
};

struct element {
    std::string name;
    std::vector<attribute> attributes;
    std::vector<element> children;
    std::string text;  ///< concatenated character data of this element

    const std::string* find_attribute(std::string_view name) const {
        for (const auto& a : attributes)
            if (a.name == name) return &a.value;
        return nullptr;
    }

    std::vector<const element*> children_named(std::string_view name) const {
        std::vector<const element*> out;
        for (const auto& c : children)
            if (c.name == name) out.push_back(&c);
        return out;
    }
};

namespace detail {

class parser {
public:
    explicit parser(std::string_view input) : in_(input) {}

    element parse_document() {
        skip_prolog();
        element root = parse_element();
        skip_misc();
        if (pos_ != in_.size()) fail("content after root element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw error(errc::parse_error,
                    what + " at line " + std::to_string(line_) + ":" +
                        std::to_string(column_));
    }

    bool eof() const { return pos_ >= in_.size(); }
    char peek() const { return in_[pos_]; }

    char advance() {
        char c = in_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    bool consume(std::string_view token) {
        if (in_.substr(pos_, token.size()) != token) return false;
        for (std::size_t i = 0; i < token.size(); ++i) advance();
        return true;
    }

    void expect(std::string_view token, const char* what) {
        if (!consume(token)) fail(std::string("expected ") + what);
    }

    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
    static bool is_name_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == ':' ||
               static_cast<unsigned char>(c) >= 0x80;
    }
    static bool is_name_char(char c) {
        return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
    }

    void skip_space() {
        while (!eof() && is_space(peek())) advance();
    }

    void skip_comment() {
        // positioned after "<!--"
        while (!consume("-->")) {
            if (eof()) fail("unterminated comment");
            advance();
        }
    }

    void skip_misc() {
        for (;;) {
            skip_space();
            if (consume("<!--"))
                skip_comment();
            else
                return;
        }
    }

    void skip_prolog() {
        if (consume("\xEF\xBB\xBF")) {}  // UTF-8 BOM
        skip_space();
        if (consume("<?xml")) {
            while (!consume("?>")) {
                if (eof()) fail("unterminated XML declaration");
                advance();
            }
        }
        skip_misc();
    }

    std::string parse_name() {
        if (eof() || !is_name_start(peek())) fail("expected a name");
        std::string name;
        while (!eof() && is_name_char(peek())) name += advance();
        return name;
    }

    void append_reference(std::string& out) {
        // positioned after '&'
        std::string ent;
        while (!eof() && peek() != ';') {
            ent += advance();
            if (ent.size() > 8) fail("unterminated entity reference");
        }
        if (eof()) fail("unterminated entity reference");
        advance();  // ';'
        if (ent == "lt") out += '<';
        else if (ent == "gt") out += '>';
        else if (ent == "amp") out += '&';
        else if (ent == "apos") out += '\'';
        else if (ent == "quot") out += '"';
        else if (!ent.empty() && ent[0] == '#') append_char_reference(out, ent);
        else fail("unknown entity &" + ent + ";");
    }

    void append_char_reference(std::string& out, const std::string& ent) {
        std::uint32_t cp = 0;
        bool hex = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X');
        for (std::size_t i = hex ? 2 : 1; i < ent.size(); ++i) {
            char c = ent[i];
            std::uint32_t digit;
            if (c >= '0' && c <= '9') digit = c - '0';
            else if (hex && c >= 'a' && c <= 'f') digit = c - 'a' + 10;
            else if (hex && c >= 'A' && c <= 'F') digit = c - 'A' + 10;
            else fail("bad character reference &" + ent + ";");
            cp = cp * (hex ? 16 : 10) + digit;
            if (cp > 0x10FFFF) fail("character reference out of range");
        }
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

    std::string parse_attribute_value() {
        if (eof() || (peek() != '"' && peek() != '\'')) fail("expected quoted attribute value");
        const char quote = advance();
        std::string value;
        for (;;) {
            if (eof()) fail("unterminated attribute value");
            char c = peek();
            if (c == quote) {
                advance();
                return value;
            }
            if (c == '<') fail("'<' in attribute value");
            if (c == '&') {
                advance();
                append_reference(value);
            } else {
                value += advance();
            }
        }
    }

    element parse_element() {
        expect("<", "'<'");
        element el;
        el.name = parse_name();
        for (;;) {
            skip_space();
            if (eof()) fail("unterminated start tag");
            if (consume("/>")) return el;
            if (consume(">")) break;
            attribute a;
            a.name = parse_name();
            skip_space();
            expect("=", "'='");
            skip_space();
            a.value = parse_attribute_value();
            for (const auto& existing : el.attributes)
                if (existing.name == a.name) fail("duplicate attribute " + a.name);
            el.attributes.push_back(std::move(a));
        }
        parse_content(el);
        return el;
    }

    void parse_content(element& el) {
        for (;;) {
            if (eof()) fail("unterminated element <" + el.name + ">");
            if (consume("<![CDATA[")) {
                while (!consume("]]>")) {
                    if (eof()) fail("unterminated CDATA section");
                    el.text += advance();
                }
            } else if (consume("<!--")) {
                skip_comment();
            } else if (in_.substr(pos_, 2) == "</") {
                consume("</");
                std::string name = parse_name();
                if (name != el.name)
                    fail("mismatched end tag </" + name + "> for <" + el.name + ">");
                skip_space();
                expect(">", "'>'");
                return;
            } else if (peek() == '<') {
                el.children.push_back(parse_element());
            } else if (peek() == '&') {
                advance();
                append_reference(el.text);
            } else {
                el.text += advance();
            }
        }
    }

    std::string_view in_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

}  // namespace detail

/// Parses a standalone document; throws parse-error with line:column.
inline element parse(std::string_view text) { return detail::parser(text).parse_document(); }

inline std::string escape_text(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string escape_attribute(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

inline void write(const element& el, std::string& out, int indent = 0) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += '<';
    out += el.name;
    for (const auto& a : el.attributes) {
        out += ' ';
        out += a.name;
        out += "=\"";
        out += escape_attribute(a.value);
        out += '"';
    }
    if (el.children.empty() && el.text.empty()) {
        out += "/>\n";
        return;
    }
    out += '>';
    if (!el.text.empty()) out += escape_text(el.text);
    if (!el.children.empty()) {
        out += '\n';
        for (const auto& c : el.children) write(c, out, indent + 1);
        out.append(static_cast<std::size_t>(indent) * 2, ' ');
    }
    out += "</";
    out += el.name;
    out += ">\n";
}

inline std::string to_string(const element& root) {
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    write(root, out);
    return out;
}

}  // namespace cxrval::xml
