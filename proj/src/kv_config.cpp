#include "semloc/kv_config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace semloc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

KeyValueFile KeyValueFile::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  KeyValueFile kv;
  kv.path_ = path;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    for (auto& c : line)
      if (c == '=' || c == ':') c = ' ';
    const auto sep = line.find_first_of(" \t");
    if (sep == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected `key value`");
    const std::string key = trim(line.substr(0, sep));
    const std::string value = trim(line.substr(sep + 1));
    if (key.empty() || value.empty())
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected `key value`");
    kv.entries_[key] = value;
  }
  return kv;
}

double KeyValueFile::get_double(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw std::runtime_error(path_ + ": missing key `" + key + "`");
  size_t pos = 0;
  const double v = std::stod(it->second, &pos);
  if (pos != it->second.size())
    throw std::runtime_error(path_ + ": key `" + key + "` is not a number: " + it->second);
  return v;
}

double KeyValueFile::get_double(const std::string& key, double fallback) const {
  return has(key) ? get_double(key) : fallback;
}

long KeyValueFile::get_int(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw std::runtime_error(path_ + ": missing key `" + key + "`");
  size_t pos = 0;
  const long v = std::stol(it->second, &pos);
  if (pos != it->second.size())
    throw std::runtime_error(path_ + ": key `" + key + "` is not an integer: " + it->second);
  return v;
}

long KeyValueFile::get_int(const std::string& key, long fallback) const {
  return has(key) ? get_int(key) : fallback;
}

std::string KeyValueFile::get_string(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) throw std::runtime_error(path_ + ": missing key `" + key + "`");
  return it->second;
}

std::string KeyValueFile::get_string(const std::string& key, const std::string& fallback) const {
  return has(key) ? get_string(key) : fallback;
}

void KeyValueFile::set(const std::string& key, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  entries_[key] = buf;
}

void KeyValueFile::set(const std::string& key, long value) {
  entries_[key] = std::to_string(value);
}

void KeyValueFile::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  for (const auto& [k, v] : entries_) out << k << " " << v << "\n";
}

}  // namespace semloc
