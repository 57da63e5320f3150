#pragma once

#include <stdexcept>
#include <string>

namespace qperm {

/// Raised when a request exceeds a configured size limit. The CLI maps it to
/// the usage exit code and prints the hint.
class CostGuardError : public std::invalid_argument {
 public:
  CostGuardError(const std::string& what, std::string hint)
      : std::invalid_argument(what), hint_(std::move(hint)) {}
  const std::string& hint() const { return hint_; }

 private:
  std::string hint_;
};

}  // namespace qperm
