#pragma once

#include <stdexcept>
#include <string>

namespace mlcore {

// Malformed input data (edge lists and the like).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive routine is asked to run above its configured cap.
class RefusalError : public std::runtime_error {
 public:
  explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mlcore
