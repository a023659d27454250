#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace viewhedge::cli {

/// A configuration problem tied to a key path such as "view.dt".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& reason)
        : std::runtime_error(key + ": " + reason), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

struct Value {
    enum class Kind { String, Number, Bool, Array };
    Kind kind = Kind::String;
    std::string text;  ///< string payload, or the literal as written for numbers
    double number = 0.0;
    bool boolean = false;
    std::vector<Value> items;
};

/// Flat "section.key" → value store read from a small TOML subset:
/// [section] headers, `key = value` lines, '#' comments, basic strings,
/// numbers, booleans and single-line arrays.
class ConfigDoc {
public:
    static ConfigDoc parse(const std::string& text, const std::string& source = "<config>");
    static ConfigDoc load(const std::string& path);

    /// Applies `section.key=value`. The value uses the file syntax; anything
    /// that does not parse is taken as a bare string, and bare text with
    /// top-level commas becomes an array. For a sweep axis, a list override
    /// drops the _min/_max/_count range keys and vice versa.
    void set_override(const std::string& assignment);

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    // Typed accessors mark the key as consumed and return `fallback` when it
    // is absent. Wrong types throw ConfigError naming the key.
    double get_double(const std::string& key, double fallback);
    std::uint64_t get_uint(const std::string& key, std::uint64_t fallback);
    bool get_bool(const std::string& key, bool fallback);
    std::string get_string(const std::string& key, const std::string& fallback);
    std::vector<double> get_double_list(const std::string& key, const std::vector<double>& fallback);
    std::vector<std::string> get_string_list(const std::string& key, const std::vector<std::string>& fallback);

    /// Throws ConfigError for the first key no accessor asked for.
    void reject_unused() const;

private:
    const Value* find(const std::string& key);

    std::map<std::string, Value> values_;
    std::set<std::string> used_;
};

}  // namespace viewhedge::cli
