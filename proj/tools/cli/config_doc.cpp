#include "config_doc.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace viewhedge::cli {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
    }
    return true;
}

class ValueParser {
public:
    explicit ValueParser(const std::string& text) : s_(text) {}

    Value parse_all() {
        Value v = parse_value();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing text '" + s_.substr(pos_) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) { throw std::invalid_argument(why); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    Value parse_value() {
        skip_ws();
        if (pos_ >= s_.size()) fail("missing value");
        const char c = s_[pos_];
        if (c == '"') return parse_string();
        if (c == '[') return parse_array();
        return parse_scalar();
    }

    Value parse_string() {
        ++pos_;
        Value v;
        v.kind = Value::Kind::String;
        while (pos_ < s_.size() && s_[pos_] != '"') {
            char c = s_[pos_++];
            if (c == '\\') {
                if (pos_ >= s_.size()) fail("unterminated escape");
                const char e = s_[pos_++];
                switch (e) {
                    case 'n': c = '\n'; break;
                    case 't': c = '\t'; break;
                    case '"': c = '"'; break;
                    case '\\': c = '\\'; break;
                    default: fail(std::string("unsupported escape \\") + e);
                }
            }
            v.text.push_back(c);
        }
        if (pos_ >= s_.size()) fail("unterminated string");
        ++pos_;
        return v;
    }

    Value parse_array() {
        ++pos_;
        Value v;
        v.kind = Value::Kind::Array;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == ']') {
            ++pos_;
            return v;
        }
        while (true) {
            v.items.push_back(parse_value());
            skip_ws();
            if (pos_ >= s_.size()) fail("unterminated array");
            if (s_[pos_] == ',') {
                ++pos_;
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == ']') {
                    ++pos_;
                    return v;
                }
                continue;
            }
            if (s_[pos_] == ']') {
                ++pos_;
                return v;
            }
            fail("expected ',' or ']' in array");
        }
    }

    Value parse_scalar() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' &&
               !std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        const std::string tok = s_.substr(start, pos_ - start);
        Value v;
        if (tok == "true" || tok == "false") {
            v.kind = Value::Kind::Bool;
            v.boolean = tok == "true";
            v.text = tok;
            return v;
        }
        std::string digits;
        for (char c : tok)
            if (c != '_') digits.push_back(c);
        double x = 0.0;
        const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), x);
        if (digits.empty() || ec != std::errc() || end != digits.data() + digits.size()) {
            fail("cannot parse value '" + tok + "'");
        }
        v.kind = Value::Kind::Number;
        v.number = x;
        v.text = digits;
        return v;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

// Drops a trailing '#' comment, ignoring '#' inside strings.
std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == '\\' && in_string) {
            ++i;
        } else if (c == '"') {
            in_string = !in_string;
        } else if (c == '#' && !in_string) {
            return line.substr(0, i);
        }
    }
    return line;
}

std::vector<std::string> split_top_level(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(trim(cur));
    return out;
}

const char* kind_name(Value::Kind k) {
    switch (k) {
        case Value::Kind::String: return "a string";
        case Value::Kind::Number: return "a number";
        case Value::Kind::Bool: return "a boolean";
        case Value::Kind::Array: return "an array";
    }
    return "?";
}

}  // namespace

ConfigDoc ConfigDoc::parse(const std::string& text, const std::string& source) {
    ConfigDoc doc;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;
        const std::string where = source + ":" + std::to_string(line_no);
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where, "malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (!valid_name(section)) throw ConfigError(where, "invalid section name '" + section + "'");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where, "expected 'key = value'");
        const std::string name = trim(line.substr(0, eq));
        if (!valid_name(name)) throw ConfigError(where, "invalid key '" + name + "'");
        if (section.empty()) throw ConfigError(where, "key '" + name + "' outside of a [section]");
        const std::string key = section + "." + name;
        if (doc.values_.count(key)) throw ConfigError(key, "duplicate key (" + where + ")");
        try {
            doc.values_[key] = ValueParser(line.substr(eq + 1)).parse_all();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(key, std::string(e.what()) + " (" + where + ")");
        }
    }
    return doc;
}

ConfigDoc ConfigDoc::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path);
}

void ConfigDoc::set_override(const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError(assignment, "override must look like --section.key=value");
    const std::string key = trim(assignment.substr(0, eq));
    const auto dot = key.find('.');
    if (dot == std::string::npos || !valid_name(key.substr(0, dot)) || !valid_name(key.substr(dot + 1))) {
        throw ConfigError(key, "override key must be section.key");
    }
    // A sweep axis is either a list or a _min/_max/_count range; an override
    // of one form replaces the other.
    if (key.starts_with("sweep.")) {
        std::string axis = key;
        for (const char* suffix : {"_min", "_max", "_count"}) {
            if (axis.ends_with(suffix)) axis.resize(axis.size() - std::char_traits<char>::length(suffix));
        }
        if (axis == key) {
            for (const char* suffix : {"_min", "_max", "_count"}) values_.erase(key + suffix);
        } else {
            values_.erase(axis);
        }
    }
    const std::string text = trim(assignment.substr(eq + 1));
    try {
        values_[key] = ValueParser(text).parse_all();
        return;
    } catch (const std::invalid_argument&) {
    }
    const auto parts = split_top_level(text);
    auto bare = [](const std::string& s) {
        try {
            return ValueParser(s).parse_all();
        } catch (const std::invalid_argument&) {
            Value v;
            v.kind = Value::Kind::String;
            v.text = s;
            return v;
        }
    };
    if (parts.size() == 1) {
        values_[key] = bare(parts[0]);
        return;
    }
    Value arr;
    arr.kind = Value::Kind::Array;
    for (const auto& p : parts) arr.items.push_back(bare(p));
    values_[key] = arr;
}

const Value* ConfigDoc::find(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) return nullptr;
    used_.insert(key);
    return &it->second;
}

double ConfigDoc::get_double(const std::string& key, double fallback) {
    const Value* v = find(key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::Number) throw ConfigError(key, std::string("expected a number, got ") + kind_name(v->kind));
    if (!std::isfinite(v->number)) throw ConfigError(key, "must be finite");
    return v->number;
}

std::uint64_t ConfigDoc::get_uint(const std::string& key, std::uint64_t fallback) {
    const Value* v = find(key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::Number) throw ConfigError(key, std::string("expected an integer, got ") + kind_name(v->kind));
    std::uint64_t out = 0;
    const auto [end, ec] = std::from_chars(v->text.data(), v->text.data() + v->text.size(), out);
    if (ec == std::errc() && end == v->text.data() + v->text.size()) return out;
    // Accept integral values written in float notation (1e5).
    if (v->number >= 0.0 && v->number < 18446744073709551616.0 && std::floor(v->number) == v->number) {
        return static_cast<std::uint64_t>(v->number);
    }
    throw ConfigError(key, "expected a non-negative integer, got '" + v->text + "'");
}

bool ConfigDoc::get_bool(const std::string& key, bool fallback) {
    const Value* v = find(key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::Bool) throw ConfigError(key, std::string("expected true/false, got ") + kind_name(v->kind));
    return v->boolean;
}

std::string ConfigDoc::get_string(const std::string& key, const std::string& fallback) {
    const Value* v = find(key);
    if (!v) return fallback;
    if (v->kind != Value::Kind::String) throw ConfigError(key, std::string("expected a string, got ") + kind_name(v->kind));
    return v->text;
}

std::vector<double> ConfigDoc::get_double_list(const std::string& key, const std::vector<double>& fallback) {
    const Value* v = find(key);
    if (!v) return fallback;
    if (v->kind == Value::Kind::Number) return {v->number};
    if (v->kind != Value::Kind::Array) throw ConfigError(key, std::string("expected an array of numbers, got ") + kind_name(v->kind));
    std::vector<double> out;
    for (const auto& item : v->items) {
        if (item.kind != Value::Kind::Number || !std::isfinite(item.number)) {
            throw ConfigError(key, "array elements must be finite numbers");
        }
        out.push_back(item.number);
    }
    return out;
}

std::vector<std::string> ConfigDoc::get_string_list(const std::string& key, const std::vector<std::string>& fallback) {
    const Value* v = find(key);
    if (!v) return fallback;
    if (v->kind == Value::Kind::String) return {v->text};
    if (v->kind != Value::Kind::Array) throw ConfigError(key, std::string("expected an array of strings, got ") + kind_name(v->kind));
    std::vector<std::string> out;
    for (const auto& item : v->items) {
        if (item.kind != Value::Kind::String) throw ConfigError(key, "array elements must be strings");
        out.push_back(item.text);
    }
    return out;
}

void ConfigDoc::reject_unused() const {
    for (const auto& [key, value] : values_) {
        if (!used_.count(key)) throw ConfigError(key, "unknown key");
    }
}

}  // namespace viewhedge::cli
