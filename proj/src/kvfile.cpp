#include "qadd/kvfile.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qadd/errors.hpp"

namespace qadd::kv {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::map<std::string, std::string> parse(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw config_error("line " + std::to_string(lineno) +
                         ": expected key=value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw config_error("line " + std::to_string(lineno) + ": empty key");
    }
    if (!kv.emplace(key, value).second) {
      throw config_error("line " + std::to_string(lineno) +
                         ": duplicate key '" + key + "'");
    }
  }
  return kv;
}

std::map<std::string, std::string> load(const std::string& path) {
  try {
    return parse(read_text_file(path));
  } catch (const config_error& e) {
    throw config_error(path + ": " + e.what());
  }
}

double take_double(std::map<std::string, std::string>& kv,
                   const std::string& key, double fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  const std::string value = it->second;
  kv.erase(it);
  char* end = nullptr;
  const double parsed = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0') {
    throw config_error("key '" + key + "': not a number: '" + value + "'");
  }
  return parsed;
}

long long take_int(std::map<std::string, std::string>& kv,
                   const std::string& key, long long fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  const std::string value = it->second;
  kv.erase(it);
  char* end = nullptr;
  const long long parsed = std::strtoll(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0') {
    throw config_error("key '" + key + "': not an integer: '" + value + "'");
  }
  return parsed;
}

bool take_bool(std::map<std::string, std::string>& kv, const std::string& key,
               bool fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  const std::string value = it->second;
  kv.erase(it);
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw config_error("key '" + key + "': not a boolean: '" + value + "'");
}

std::string take_string(std::map<std::string, std::string>& kv,
                        const std::string& key, const std::string& fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  const std::string value = it->second;
  kv.erase(it);
  return value;
}

void reject_unknown(const std::map<std::string, std::string>& kv,
                    const std::string& context) {
  if (!kv.empty()) {
    throw config_error(context + ": unknown key '" + kv.begin()->first + "'");
  }
}

}  // namespace qadd::kv
