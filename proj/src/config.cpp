#include "pwsum/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace pwsum {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out;
  auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

const std::set<std::string>& Config::allowed_keys() {
  static const std::set<std::string> keys = {
      "subcommand", "family", "count", "delta", "eps", "amp", "points", "spectrum.file",
      "scheme", "schedule", "grid.X", "grid.h", "output.dir", "seed", "trials", "probe.atoms",
      "l.ratio", "l.min", "l.max", "contours.count", "c.grid", "alpha.safety", "function",
      "K.radius", "K.center", "a2.shift", "a2.h", "diagnose.X", "outer.X", "outer.h",
      "factorize.points"};
  return keys;
}

Config Config::parse(std::istream& is) {
  Config c;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (!allowed_keys().count(key)) throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    c.kv_[key] = val;
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot open config '" + path + "'");
  return parse(f);
}

std::string Config::get(const std::string& key, const std::string& def) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? def : it->second;
}

double Config::get_double(const std::string& key, double def) const {
  auto it = kv_.find(key);
  return it == kv_.end() ? def : to_double(key, it->second);
}

long Config::get_int(const std::string& key, long def) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  long out;
  const std::string& v = it->second;
  auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc() || r.ptr != v.data() + v.size())
    throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
  return out;
}

std::vector<double> Config::get_list(const std::string& key, const std::vector<double>& def) const {
  auto it = kv_.find(key);
  if (it == kv_.end()) return def;
  std::vector<double> out;
  for (const auto& s : split(it->second, ',')) out.push_back(to_double(key, s));
  return out;
}

std::vector<cplx> Config::get_points(const std::string& key) const {
  std::vector<cplx> out;
  auto it = kv_.find(key);
  if (it == kv_.end()) return out;
  for (const auto& item : split(it->second, ',')) {
    auto parts = split(item, ':');
    if (parts.size() != 2) throw ConfigError("config: '" + key + "' items must look like re:im");
    out.emplace_back(to_double(key, parts[0]), to_double(key, parts[1]));
  }
  return out;
}

void Config::set(const std::string& key, const std::string& value) {
  if (!allowed_keys().count(key)) throw ConfigError("unknown key '" + key + "'");
  kv_[key] = value;
}

}  // namespace pwsum
