#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace heg {

// Domain-level failure with a stable machine-readable code ("DISCONNECTED",
// "BAD_PATH", ...). The CLI maps these to exit code 1; parse errors carry the
// code "PARSE" and map to exit code 2.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

}  // namespace heg
