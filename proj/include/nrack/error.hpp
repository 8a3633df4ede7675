#pragma once

#include <stdexcept>
#include <string>

namespace nrack {

enum class ErrorKind { Usage, Verification, Budget, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Bad input: malformed text, wrong sizes, undeclared symbols.
inline Error usage_error(const std::string& msg) { return Error(ErrorKind::Usage, msg); }
// A mathematical check failed (non-bijective row, YBE violation, ...).
inline Error verification_error(const std::string& msg) { return Error(ErrorKind::Verification, msg); }
inline Error budget_error(const std::string& msg) { return Error(ErrorKind::Budget, msg); }

}  // namespace nrack
