#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sim {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Plain-text "key = value" configuration with optional [section] headers.
// Keys outside any section live in the "" section. '#' starts a comment.
// Consumers validate their section against a declared key list; unknown keys
// are an error.
class Config {
  public:
    Config() = default;

    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text, const std::string& origin = "<text>");

    bool has(const std::string& section, const std::string& key) const;
    std::vector<std::string> sections() const;
    std::vector<std::string> keys(const std::string& section) const;

    std::string get_string(const std::string& section, const std::string& key) const;
    std::string get_string(const std::string& section, const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double(const std::string& section, const std::string& key, double fallback) const;
    long long get_int(const std::string& section, const std::string& key) const;
    long long get_int(const std::string& section, const std::string& key,
                      long long fallback) const;
    unsigned long long get_u64(const std::string& section, const std::string& key,
                               unsigned long long fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

    // Comma-separated list of doubles.
    std::vector<double> get_doubles(const std::string& section, const std::string& key) const;

    void set(const std::string& section, const std::string& key, const std::string& value);

    // Rejects keys in `section` that are not in `allowed`.
    void require_known_keys(const std::string& section,
                            const std::set<std::string>& allowed) const;

    // Canonical byte serialization (sorted sections/keys); input to config hashing.
    std::string canonical_text() const;

    const std::string& origin() const { return origin_; }

  private:
    const std::string& require(const std::string& section, const std::string& key) const;

    std::map<std::string, std::map<std::string, std::string>> sections_;
    std::string origin_;
};

}  // namespace sim
