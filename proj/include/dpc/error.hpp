#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

/// Library error carrying a stable kind name (e.g. "OutOfRange").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message) : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

}  // namespace dpc
