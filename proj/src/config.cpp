#include "sim/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace sim {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

Config Config::parse_text(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ":" + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            cfg.sections_[section];  // sections may be empty
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        cfg.sections_[section][key] = value;
    }
    return cfg;
}

bool Config::has(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    return s != sections_.end() && s->second.count(key) > 0;
}

std::vector<std::string> Config::sections() const {
    std::vector<std::string> out;
    for (const auto& [name, _] : sections_) out.push_back(name);
    return out;
}

std::vector<std::string> Config::keys(const std::string& section) const {
    std::vector<std::string> out;
    auto s = sections_.find(section);
    if (s == sections_.end()) return out;
    for (const auto& [k, _] : s->second) out.push_back(k);
    return out;
}

const std::string& Config::require(const std::string& section, const std::string& key) const {
    auto s = sections_.find(section);
    if (s == sections_.end())
        throw ConfigError(origin_ + ": missing section [" + section + "]");
    auto k = s->second.find(key);
    if (k == s->second.end())
        throw ConfigError(origin_ + ": missing key '" + key + "' in [" + section + "]");
    return k->second;
}

std::string Config::get_string(const std::string& section, const std::string& key) const {
    return require(section, key);
}

std::string Config::get_string(const std::string& section, const std::string& key,
                               const std::string& fallback) const {
    return has(section, key) ? require(section, key) : fallback;
}

double Config::get_double(const std::string& section, const std::string& key) const {
    const std::string& v = require(section, key);
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError(origin_ + ": key '" + key + "' is not a number: " + v);
    return d;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

long long Config::get_int(const std::string& section, const std::string& key) const {
    const std::string& v = require(section, key);
    long long out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError(origin_ + ": key '" + key + "' is not an integer: " + v);
    return out;
}

long long Config::get_int(const std::string& section, const std::string& key,
                          long long fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

unsigned long long Config::get_u64(const std::string& section, const std::string& key,
                                   unsigned long long fallback) const {
    if (!has(section, key)) return fallback;
    const std::string& v = require(section, key);
    unsigned long long out = 0;
    auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || p != v.data() + v.size())
        throw ConfigError(origin_ + ": key '" + key + "' is not an unsigned integer: " + v);
    return out;
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string& v = require(section, key);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError(origin_ + ": key '" + key + "' is not a boolean: " + v);
}

std::vector<double> Config::get_doubles(const std::string& section, const std::string& key) const {
    const std::string& v = require(section, key);
    std::vector<double> out;
    std::istringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        if (b == std::string::npos)
            throw ConfigError(origin_ + ": key '" + key + "' has an empty list element");
        char* end = nullptr;
        double d = std::strtod(item.c_str(), &end);
        if (end == item.c_str())
            throw ConfigError(origin_ + ": key '" + key + "' has a non-numeric element: " + item);
        out.push_back(d);
    }
    if (out.empty()) throw ConfigError(origin_ + ": key '" + key + "' is an empty list");
    return out;
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
    sections_[section][key] = value;
}

void Config::require_known_keys(const std::string& section,
                                const std::set<std::string>& allowed) const {
    auto s = sections_.find(section);
    if (s == sections_.end()) return;
    for (const auto& [k, _] : s->second) {
        if (!allowed.count(k))
            throw ConfigError(origin_ + ": unknown key '" + k + "' in [" + section + "]");
    }
}

std::string Config::canonical_text() const {
    std::ostringstream out;
    for (const auto& [name, kv] : sections_) {
        out << '[' << name << "]\n";
        for (const auto& [k, v] : kv) out << k << " = " << v << '\n';
    }
    return out.str();
}

}  // namespace sim
