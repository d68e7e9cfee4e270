#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "llmspace/errors.hpp"

namespace llmspace {

using json = nlohmann::json;

json parse_json_text(const std::string& text, const std::string& origin);
json read_json_file(const std::string& path);

/// Schema extraction helpers. `path` is the dotted location used in error
/// messages, e.g. "catalog.solar.Si".
double get_number(const json& obj, const std::string& path, const std::string& key);
double get_number_or(const json& obj, const std::string& path, const std::string& key,
                     double fallback);
std::string get_string(const json& obj, const std::string& path, const std::string& key);
std::string get_string_or(const json& obj, const std::string& path, const std::string& key,
                          const std::string& fallback);
bool get_bool_or(const json& obj, const std::string& path, const std::string& key, bool fallback);

/// Rejects keys outside `allowed`; the anti-typo rule for config documents.
void reject_unknown_keys(const json& obj, const std::string& path,
                         const std::vector<std::string>& allowed);

void require_object(const json& value, const std::string& path);

/// Joins names as "a, b, c" for not-found messages.
std::string join_names(const std::vector<std::string>& names);

/// FNV-1a 64-bit content hash, printed as 16 hex digits. Stable across
/// platforms, used for the output envelope's inputs digest.
std::uint64_t fnv1a64(const std::string& data);
std::string fnv1a64_hex(const std::string& data);

/// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double value);

/// RFC-4180-style field quoting.
std::string csv_field(const std::string& value);

} // namespace llmspace
