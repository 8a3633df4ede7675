#include "config.hpp"

#include <cctype>
#include <fstream>

#include "nrack/error.hpp"

namespace nrack::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

unsigned long long parse_size(std::string v, const std::string& key, int line) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
  unsigned long long mult = 1;
  if (!v.empty()) {
    switch (std::toupper(static_cast<unsigned char>(v.back()))) {
      case 'K': mult = 1ull << 10; v.pop_back(); break;
      case 'M': mult = 1ull << 20; v.pop_back(); break;
      case 'G': mult = 1ull << 30; v.pop_back(); break;
      default: break;
    }
  }
  v = trim(v);
  if (v.empty() || v.find_first_not_of("0123456789_") != std::string::npos)
    throw usage_error("config line " + std::to_string(line) + ": " + key + " expects a non-negative integer");
  std::string digits;
  for (char c : v)
    if (c != '_') digits += c;
  return std::stoull(digits) * mult;
}

}  // namespace

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open config file " + path);
  Config c;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::string s = trim(raw);
    if (s.empty() || s.front() == '[') continue;
    auto eq = s.find('=');
    if (eq == std::string::npos) throw usage_error("config line " + std::to_string(line) + ": expected key = value");
    std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
    if (key == "memory") {
      c.memory = static_cast<std::size_t>(parse_size(val, key, line));
    } else if (key == "cutoff") {
      c.cutoff = static_cast<int>(parse_size(val, key, line));
    } else if (key == "primes") {
      c.primes = static_cast<std::size_t>(parse_size(val, key, line));
    } else {
      throw usage_error("config line " + std::to_string(line) + ": unknown key " + key);
    }
  }
  return c;
}

}  // namespace nrack::cli
