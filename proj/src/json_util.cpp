#include "llmspace/json_util.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace llmspace {

json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error(origin + ": " + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

namespace {

const json& get_field(const json& obj, const std::string& path, const std::string& key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw config_error(path + ": missing required field '" + key + "'");
    }
    return *it;
}

double as_number(const json& value, const std::string& path, const std::string& key) {
    if (!value.is_number()) {
        throw config_error(path + "." + key + ": expected a number, got " +
                           std::string(value.type_name()));
    }
    double v = value.get<double>();
    if (!std::isfinite(v)) {
        throw config_error(path + "." + key + ": value must be finite");
    }
    return v;
}

} // namespace

double get_number(const json& obj, const std::string& path, const std::string& key) {
    return as_number(get_field(obj, path, key), path, key);
}

double get_number_or(const json& obj, const std::string& path, const std::string& key,
                     double fallback) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
        return fallback;
    }
    return as_number(*it, path, key);
}

std::string get_string(const json& obj, const std::string& path, const std::string& key) {
    const json& v = get_field(obj, path, key);
    if (!v.is_string()) {
        throw config_error(path + "." + key + ": expected a string");
    }
    return v.get<std::string>();
}

std::string get_string_or(const json& obj, const std::string& path, const std::string& key,
                          const std::string& fallback) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
        return fallback;
    }
    if (!it->is_string()) {
        throw config_error(path + "." + key + ": expected a string");
    }
    return it->get<std::string>();
}

bool get_bool_or(const json& obj, const std::string& path, const std::string& key, bool fallback) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) {
        return fallback;
    }
    if (!it->is_boolean()) {
        throw config_error(path + "." + key + ": expected a boolean");
    }
    return it->get<bool>();
}

void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::vector<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end()) {
            std::vector<std::string> sorted = allowed;
            std::sort(sorted.begin(), sorted.end());
            throw config_error(path + ": unknown key '" + it.key() +
                               "' (allowed: " + join_names(sorted) + ")");
        }
    }
}

void require_object(const json& value, const std::string& path) {
    if (!value.is_object()) {
        throw config_error(path + ": expected an object, got " +
                           std::string(value.type_name()));
    }
}

std::string join_names(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& data) {
    static const char* digits = "0123456789abcdef";
    std::uint64_t h = fnv1a64(data);
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        return "nan";
    }
    return std::string(buf, ptr);
}

std::string csv_field(const std::string& value) {
    bool needs_quotes = value.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) {
        return value;
    }
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace llmspace
