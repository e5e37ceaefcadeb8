#pragma once

#include <stdexcept>
#include <string>

namespace symten {

// Violated precondition or malformed input (CLI maps this to exit code 2).
class input_error : public std::invalid_argument {
public:
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configurable resource cap was exceeded (CLI maps this to exit code 3).
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace symten
