#pragma once

#include <charconv>
#include <cstdint>
#include <string>

namespace sim {

// Shortest round-trip decimal for doubles (std::to_chars). Keeps every log
// byte-reproducible and locale-independent.
inline std::string fmt_double(double v) {
    char buf[40];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

inline std::string fmt_u64(uint64_t v) {
    char buf[24];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

inline std::string fmt_i64(int64_t v) {
    char buf[24];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, p);
}

}  // namespace sim
