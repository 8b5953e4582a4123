#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "polyrad/errors.hpp"

namespace polyrad {

/// Flat key/value configuration with dotted sections:
///
///   command = solve
///   problem.f.kind = power
///   problem.f.p = 2
///   grid.n = 512
///
/// Lines starting with '#' are comments. Duplicate keys are rejected.
class Config {
  public:
    static Config parse(const std::string& text) {
        Config cfg;
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const std::string trimmed = trim(line);
            if (trimmed.empty() || trimmed[0] == '#') continue;
            const auto eq = trimmed.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
            const std::string key = trim(trimmed.substr(0, eq));
            const std::string value = trim(trimmed.substr(eq + 1));
            if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
            if (cfg.kv_.count(key))
                throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
            cfg.kv_[key] = value;
        }
        return cfg;
    }

    static Config parse_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file: " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse(ss.str());
    }

    bool has(const std::string& key) const { return kv_.count(key) > 0; }

    std::string get_string(const std::string& key) const {
        auto it = kv_.find(key);
        if (it == kv_.end()) throw ConfigError("missing config key: " + key);
        return it->second;
    }

    std::string get_string_or(const std::string& key, const std::string& fallback) const {
        auto it = kv_.find(key);
        return it == kv_.end() ? fallback : it->second;
    }

    double get_double(const std::string& key) const { return to_double(key, get_string(key)); }

    double get_double_or(const std::string& key, double fallback) const {
        auto it = kv_.find(key);
        return it == kv_.end() ? fallback : to_double(key, it->second);
    }

    long get_int(const std::string& key) const { return to_int(key, get_string(key)); }

    long get_int_or(const std::string& key, long fallback) const {
        auto it = kv_.find(key);
        return it == kv_.end() ? fallback : to_int(key, it->second);
    }

    std::uint64_t get_seed_or(const std::string& key, std::uint64_t fallback) const {
        auto it = kv_.find(key);
        if (it == kv_.end()) return fallback;
        return static_cast<std::uint64_t>(to_int(key, it->second));
    }

    /// Comma-separated list of "t:v" pairs, e.g. "0:0,1:2,10:200".
    std::vector<std::pair<double, double>> get_pair_list(const std::string& key) const {
        std::vector<std::pair<double, double>> out;
        std::istringstream in(get_string(key));
        std::string item;
        while (std::getline(in, item, ',')) {
            const auto colon = item.find(':');
            if (colon == std::string::npos) throw ConfigError(key + ": expected t:value pairs");
            out.emplace_back(to_double(key, trim(item.substr(0, colon))),
                             to_double(key, trim(item.substr(colon + 1))));
        }
        return out;
    }

    std::vector<double> get_double_list(const std::string& key) const {
        std::vector<double> out;
        std::istringstream in(get_string(key));
        std::string item;
        while (std::getline(in, item, ',')) out.push_back(to_double(key, trim(item)));
        return out;
    }

    void set(const std::string& key, const std::string& value) { kv_[key] = value; }

    const std::map<std::string, std::string>& entries() const { return kv_; }

  private:
    static std::string trim(const std::string& s) {
        const auto b = s.find_first_not_of(" \t\r\n");
        if (b == std::string::npos) return "";
        const auto e = s.find_last_not_of(" \t\r\n");
        return s.substr(b, e - b + 1);
    }

    static double to_double(const std::string& key, const std::string& v) {
        try {
            std::size_t used = 0;
            const double x = std::stod(v, &used);
            if (used != v.size()) throw ConfigError("");
            return x;
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key + "': not a number: '" + v + "'");
        }
    }

    static long to_int(const std::string& key, const std::string& v) {
        try {
            std::size_t used = 0;
            const long x = std::stol(v, &used);
            if (used != v.size()) throw ConfigError("");
            return x;
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key + "': not an integer: '" + v + "'");
        }
    }

    std::map<std::string, std::string> kv_;
};

}  // namespace polyrad
