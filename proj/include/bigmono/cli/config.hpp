#pragma once

// Verification configuration: key=value files and command-line flags share
// the same keys; flags override file values.

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bigmono::cli {

inline const std::vector<std::string> &known_checks()
{
  static const std::vector<std::string> names{"splitting", "relations", "form", "irreducibility",
                                              "prop21",    "extension", "image"};
  return names;
}

struct VerificationConfig
{
  std::uint32_t p = 0;
  std::uint32_t l = 0;
  std::vector<std::uint32_t> kvec;
  std::vector<std::string> checks;
  std::uint64_t seed = 1;
  std::uint64_t closure_cap = 2'000'000;
  std::uint64_t point_cap = 8'000'000;
  std::size_t trials = 200;
  std::string out;
  std::string format = "json";
  bool timing = true;
};

class ConfigError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline std::string trim(const std::string &s)
{
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string &s)
{
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty())
        out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

inline std::uint64_t parse_uint(const std::string &key, const std::string &value)
{
  const std::string v = trim(value);
  if (v.empty() || v.find_first_not_of("0123456789'") != std::string::npos)
    throw ConfigError("value for '" + key + "' is not a non-negative integer: '" + value + "'");
  std::string digits;
  for (char c : v)
    if (c != '\'')
      digits += c;
  try {
    return std::stoull(digits);
  } catch (const std::exception &) {
    throw ConfigError("value for '" + key + "' is out of range: '" + value + "'");
  }
}

inline std::vector<std::uint32_t> parse_kvec(const std::string &value)
{
  std::vector<std::uint32_t> k;
  for (const auto &tok : split_list(value))
    k.push_back(static_cast<std::uint32_t>(parse_uint("k", tok)));
  return k;
}

inline std::vector<std::string> parse_checks(const std::string &value)
{
  const std::string v = trim(value);
  if (v.empty() || v == "{}" || v == "none")
    return {};
  std::vector<std::string> out;
  for (const auto &tok : split_list(v)) {
    if (tok == "all")
      return known_checks();
    bool ok = false;
    for (const auto &n : known_checks())
      ok = ok || n == tok;
    if (!ok)
      throw ConfigError("unknown check '" + tok + "'");
    out.push_back(tok);
  }
  return out;
}

inline void apply_key(VerificationConfig &cfg, const std::string &raw_key, const std::string &value)
{
  std::string key = trim(raw_key);
  for (auto &c : key)
    if (c == '_')
      c = '-';
  if (key == "p")
    cfg.p = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "l")
    cfg.l = static_cast<std::uint32_t>(parse_uint(key, value));
  else if (key == "k" || key == "kvec")
    cfg.kvec = parse_kvec(value);
  else if (key == "checks")
    cfg.checks = parse_checks(value);
  else if (key == "seed")
    cfg.seed = parse_uint(key, value);
  else if (key == "closure-cap")
    cfg.closure_cap = parse_uint(key, value);
  else if (key == "point-cap")
    cfg.point_cap = parse_uint(key, value);
  else if (key == "trials")
    cfg.trials = parse_uint(key, value);
  else if (key == "out")
    cfg.out = trim(value);
  else if (key == "format") {
    cfg.format = trim(value);
    if (cfg.format != "json" && cfg.format != "tsv")
      throw ConfigError("format must be json or tsv");
  } else if (key == "timing") {
    const std::string v = trim(value);
    if (v == "true" || v == "1" || v == "yes")
      cfg.timing = true;
    else if (v == "false" || v == "0" || v == "no")
      cfg.timing = false;
    else
      throw ConfigError("timing must be true or false");
  } else {
    throw ConfigError("unknown configuration key '" + raw_key + "'");
  }
}

/// Reads key=value lines; '#' starts a comment.
inline std::map<std::string, std::string> read_config_file(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw ConfigError("cannot open config file '" + path + "'");
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    if (trim(line).empty())
      continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

} // namespace bigmono::cli
