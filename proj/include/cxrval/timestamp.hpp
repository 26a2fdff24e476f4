/**
 * @file timestamp.hpp
 * @brief Timezone-naive local timestamps with second precision.
 *
 * The whole pipeline runs in a single hospital-local clock domain, so a
 * timestamp is just a count of seconds since 1970-01-01T00:00:00 with no
 * zone attached. Accepted input forms:
 *   - ISO 8601 local:  "2020-11-15T09:30:00" (also with ' ' separator)
 *   - compact:         "20201115093000"
 *   - DICOM DA + TM:   "20201115" + "093000[.ffffff]" (fraction truncated)
 */

#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include "cxrval/error.hpp"

namespace cxrval {

namespace detail {

// Days since 1970-01-01 for a civil date (Gregorian, proleptic).
inline constexpr std::int64_t days_from_civil(std::int64_t y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * static_cast<unsigned>(m + (m > 2 ? -3 : 9)) + 2u) / 5u +
                         static_cast<unsigned>(d) - 1u;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

struct civil { std::int64_t year; int month, day, hour, minute, second; };

inline constexpr civil civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return {y + (m <= 2), static_cast<int>(m), static_cast<int>(d), 0, 0, 0};
}

inline constexpr bool leap_year(std::int64_t y) {
    return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0);
}

inline constexpr int days_in_month(std::int64_t y, int m) {
    constexpr int dm[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    return m == 2 && leap_year(y) ? 29 : dm[m - 1];
}

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

inline int to_int(std::string_view s) {
    int v = 0;
    for (char c : s) v = v * 10 + (c - '0');
    return v;
}

}  // namespace detail

/// Naive local timestamp, second precision. Totally ordered.
class timestamp {
public:
    timestamp() = default;

    /// Builds from civil fields; empty when the fields are not a valid instant.
    static std::optional<timestamp> from_civil(int year, int month, int day,
                                               int hour, int minute, int second) {
        if (year < 1 || year > 9999 || month < 1 || month > 12) return std::nullopt;
        if (day < 1 || day > detail::days_in_month(year, month)) return std::nullopt;
        if (hour < 0 || hour > 23 || minute < 0 || minute > 59) return std::nullopt;
        if (second < 0 || second > 59) return std::nullopt;
        return timestamp(detail::days_from_civil(year, month, day) * 86400 +
                         hour * 3600 + minute * 60 + second);
    }

    /// Accepts "YYYY-MM-DDTHH:MM:SS" (or ' ' separator) and "YYYYMMDDHHMMSS".
    static std::optional<timestamp> parse(std::string_view s) {
        using namespace detail;
        if (s.size() == 19 && s[4] == '-' && s[7] == '-' &&
            (s[10] == 'T' || s[10] == ' ') && s[13] == ':' && s[16] == ':') {
            if (!all_digits(s.substr(0, 4)) || !all_digits(s.substr(5, 2)) ||
                !all_digits(s.substr(8, 2)) || !all_digits(s.substr(11, 2)) ||
                !all_digits(s.substr(14, 2)) || !all_digits(s.substr(17, 2)))
                return std::nullopt;
            return from_civil(to_int(s.substr(0, 4)), to_int(s.substr(5, 2)),
                              to_int(s.substr(8, 2)), to_int(s.substr(11, 2)),
                              to_int(s.substr(14, 2)), to_int(s.substr(17, 2)));
        }
        if (s.size() == 14 && all_digits(s)) {
            return from_civil(to_int(s.substr(0, 4)), to_int(s.substr(4, 2)),
                              to_int(s.substr(6, 2)), to_int(s.substr(8, 2)),
                              to_int(s.substr(10, 2)), to_int(s.substr(12, 2)));
        }
        return std::nullopt;
    }

    /// Same as parse() but throws bad-timestamp on failure.
    static timestamp parse_or_throw(std::string_view s) {
        auto t = parse(s);
        if (!t) throw error(errc::bad_timestamp, "cannot parse timestamp", std::string(s));
        return *t;
    }

    /// DICOM DA "YYYYMMDD" + TM "HHMMSS[.ffffff]"; fractional seconds truncated,
    /// short TM forms "HH" and "HHMM" padded with zeros.
    static std::optional<timestamp> from_dicom(std::string_view date, std::string_view time) {
        using namespace detail;
        if (date.size() != 8 || !all_digits(date)) return std::nullopt;
        if (auto dot = time.find('.'); dot != std::string_view::npos) time = time.substr(0, dot);
        if (time.size() != 2 && time.size() != 4 && time.size() != 6) return std::nullopt;
        if (!all_digits(time)) return std::nullopt;
        std::string hms(time);
        hms.resize(6, '0');
        return from_civil(to_int(date.substr(0, 4)), to_int(date.substr(4, 2)),
                          to_int(date.substr(6, 2)), to_int(hms.substr(0, 2)),
                          to_int(hms.substr(2, 2)), to_int(hms.substr(4, 2)));
    }

    /// "YYYY-MM-DDTHH:MM:SS"
    std::string to_iso() const {
        auto days = seconds_ >= 0 ? seconds_ / 86400 : (seconds_ - 86399) / 86400;
        auto sod = seconds_ - days * 86400;
        auto c = detail::civil_from_days(days);
        char buf[48];
        std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d",
                      static_cast<int>(c.year), c.month, c.day, static_cast<int>(sod / 3600),
                      static_cast<int>(sod / 60 % 60), static_cast<int>(sod % 60));
        return buf;
    }

    std::int64_t seconds_since_epoch() const noexcept { return seconds_; }

    friend timestamp operator+(timestamp t, std::int64_t secs) { return timestamp(t.seconds_ + secs); }
    friend timestamp operator-(timestamp t, std::int64_t secs) { return timestamp(t.seconds_ - secs); }
    /// Signed difference in seconds.
    friend std::int64_t operator-(timestamp a, timestamp b) { return a.seconds_ - b.seconds_; }
    friend auto operator<=>(timestamp, timestamp) = default;

private:
    explicit timestamp(std::int64_t s) : seconds_(s) {}
    std::int64_t seconds_ = 0;
};

}  // namespace cxrval
