#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace arbor {

// Library errors carry a stable machine-readable kind ("SelfLoop",
// "NotStronglyConnected", ...) next to the human-readable message.
// The CLI maps any Error to exit code 2 and prints what().
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

}  // namespace arbor
