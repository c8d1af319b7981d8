#pragma once

#include <map>
#include <string>

namespace qadd::kv {

// Flat `key = value` files with `#` comments and blank lines. Duplicate keys
// and lines without `=` are config errors. Keys/values are trimmed.
std::map<std::string, std::string> parse(const std::string& text);
std::map<std::string, std::string> load(const std::string& path);

// Typed readers; throw config_error on malformed values. `take_*` variants
// erase the key so callers can reject leftovers as unknown keys.
double take_double(std::map<std::string, std::string>& kv,
                   const std::string& key, double fallback);
long long take_int(std::map<std::string, std::string>& kv,
                   const std::string& key, long long fallback);
bool take_bool(std::map<std::string, std::string>& kv, const std::string& key,
               bool fallback);
std::string take_string(std::map<std::string, std::string>& kv,
                        const std::string& key, const std::string& fallback);

// Throws config_error naming the first remaining (unknown) key, if any.
void reject_unknown(const std::map<std::string, std::string>& kv,
                    const std::string& context);

std::string read_text_file(const std::string& path);

}  // namespace qadd::kv
