#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace nrack::cli {

// Budgets read from a small TOML file; command-line flags take precedence.
struct Config {
  std::optional<std::size_t> memory;  // bytes
  std::optional<int> cutoff;
  std::optional<std::size_t> primes;
};

// Accepts `key = value` lines, `#` comments and `[section]` headers (ignored).
// memory takes an integer with an optional K/M/G suffix, as a bare or quoted value.
Config load_config(const std::string& path);

}  // namespace nrack::cli
