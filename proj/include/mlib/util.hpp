#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <random>
#include <string>
#include <string_view>

namespace mlib {

// Snapshot versions are 1-based and strictly increasing per model.
using VersionId = std::uint32_t;

inline bool is_identifier(std::string_view s) {
    if (s.empty())
        return false;
    auto head = s.front();
    if (!(head == '_' || (head >= 'A' && head <= 'Z') || (head >= 'a' && head <= 'z')))
        return false;
    for (char c : s) {
        bool ok = c == '_' || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9');
        if (!ok)
            return false;
    }
    return true;
}

inline bool is_hex_digit(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

// 8-4-4-4-12 lowercase hex groups.
inline bool is_uuid(std::string_view s) {
    if (s.size() != 36)
        return false;
    for (size_t i = 0; i < 36; ++i) {
        if (i == 8 || i == 13 || i == 18 || i == 23) {
            if (s[i] != '-')
                return false;
        } else if (!is_hex_digit(s[i])) {
            return false;
        }
    }
    return true;
}

inline std::string to_lower(std::string s) {
    for (char& c : s)
        if (c >= 'A' && c <= 'Z')
            c = static_cast<char>(c - 'A' + 'a');
    return s;
}

inline std::mt19937_64& global_rng() {
    static std::mt19937_64 rng([] {
        std::random_device rd;
        return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    }());
    return rng;
}

// Random v4-format UUID string.
inline std::string generate_uuid() {
    static const char* hex = "0123456789abcdef";
    std::uniform_int_distribution<int> nibble(0, 15);
    auto& rng = global_rng();
    std::string out(36, '0');
    for (size_t i = 0; i < 36; ++i) {
        if (i == 8 || i == 13 || i == 18 || i == 23)
            out[i] = '-';
        else
            out[i] = hex[nibble(rng)];
    }
    out[14] = '4';
    out[19] = hex[8 | (nibble(rng) & 3)];
    return out;
}

// Random identifier of `digits` lowercase hex chars (used for model ids).
inline std::string generate_hex_id(size_t digits = 12) {
    static const char* hex = "0123456789abcdef";
    std::uniform_int_distribution<int> nibble(0, 15);
    auto& rng = global_rng();
    std::string out;
    out.reserve(digits);
    for (size_t i = 0; i < digits; ++i)
        out.push_back(hex[nibble(rng)]);
    return out;
}

// ISO-8601 UTC, second precision: 2013-09-10T12:00:00Z
inline std::string format_utc(std::chrono::system_clock::time_point tp) {
    std::time_t t = std::chrono::system_clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

inline std::string now_utc_iso() {
    return format_utc(std::chrono::system_clock::now());
}

} // namespace mlib
