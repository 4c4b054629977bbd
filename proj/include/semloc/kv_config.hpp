#pragma once

#include <map>
#include <string>

namespace semloc {

/// Plain `key value` / `key = value` text files, one pair per line, '#' comments.
class KeyValueFile {
 public:
  KeyValueFile() = default;
  static KeyValueFile load(const std::string& path);

  bool has(const std::string& key) const { return entries_.count(key) > 0; }
  double get_double(const std::string& key) const;
  double get_double(const std::string& key, double fallback) const;
  long get_int(const std::string& key) const;
  long get_int(const std::string& key, long fallback) const;
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;

  void set(const std::string& key, const std::string& value) { entries_[key] = value; }
  void set(const std::string& key, double value);
  void set(const std::string& key, long value);
  void save(const std::string& path) const;

 private:
  std::map<std::string, std::string> entries_;
  std::string path_ = "<memory>";
};

}  // namespace semloc
