#pragma once

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pwsum/common.hpp"

namespace pwsum {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// key=value lines; '#' starts a comment; keys must come from the allowed set
class Config {
 public:
  static Config parse(std::istream& is);
  static Config load(const std::string& path);

  bool has(const std::string& key) const { return kv_.count(key) > 0; }
  std::string get(const std::string& key, const std::string& def) const;
  double get_double(const std::string& key, double def) const;
  long get_int(const std::string& key, long def) const;
  std::vector<double> get_list(const std::string& key, const std::vector<double>& def) const;
  // "re:im" items separated by commas
  std::vector<cplx> get_points(const std::string& key) const;
  void set(const std::string& key, const std::string& value);

  static const std::set<std::string>& allowed_keys();

 private:
  std::map<std::string, std::string> kv_;
};

}  // namespace pwsum
