#pragma once

#include <stdexcept>
#include <string>

namespace pluritop {

// A polynomial or operator application exceeded a declared degree window.
class DegreeOverflow : public std::runtime_error {
 public:
  explicit DegreeOverflow(const std::string& what) : std::runtime_error(what) {}
};

// Two operator sections cannot be combined without truncation loss.
class WindowMismatch : public std::runtime_error {
 public:
  explicit WindowMismatch(const std::string& what) : std::runtime_error(what) {}
};

class ArityMismatch : public std::runtime_error {
 public:
  explicit ArityMismatch(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or string (JSON schema, rational syntax, ...).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pluritop
