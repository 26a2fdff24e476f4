/**
 * @file error.hpp
 * @brief Error codes and the exception type shared across the library.
 */

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace cxrval {

/// Failure categories raised by parsers, the cascade and the pipeline.
enum class errc {
    malformed_file,        ///< DICOM preamble/magic or structure broken
    unsupported_syntax,    ///< transfer syntax outside the supported set
    missing_tag,           ///< required DICOM attribute absent
    bad_timestamp,         ///< date/time value does not parse
    parse_error,           ///< malformed JSON/XML input
    missing_attribute,     ///< required XML attribute absent
    inconsistent_session,  ///< session header violates its own invariants
    input_error,           ///< caller handed in data violating a precondition
    config_error,          ///< malformed configuration document
    cascade_error,         ///< a scorer stage failed
    io_error,              ///< filesystem read/write failure
};

inline std::string_view to_string(errc c) {
    switch (c) {
        case errc::malformed_file: return "malformed-file";
        case errc::unsupported_syntax: return "unsupported-syntax";
        case errc::missing_tag: return "missing-tag";
        case errc::bad_timestamp: return "bad-timestamp";
        case errc::parse_error: return "parse-error";
        case errc::missing_attribute: return "missing-attribute";
        case errc::inconsistent_session: return "inconsistent-session";
        case errc::input_error: return "input-error";
        case errc::config_error: return "config-error";
        case errc::cascade_error: return "cascade-error";
        case errc::io_error: return "io-error";
    }
    return "unknown";
}

/**
 * @brief Exception carrying an error code plus an optional context token.
 *
 * The context names the offending record: a tag id such as "(0008,0060)",
 * a cascade stage name, or a file path.
 */
class error : public std::runtime_error {
public:
    error(errc code, const std::string& message, std::string context = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + message +
                             (context.empty() ? "" : " [" + context + "]")),
          code_(code),
          context_(std::move(context)) {}

    errc code() const noexcept { return code_; }
    const std::string& context() const noexcept { return context_; }

private:
    errc code_;
    std::string context_;
};

}  // namespace cxrval
