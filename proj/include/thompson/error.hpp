#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thompson {

// Library-wide error with a machine-readable kind (the CLI maps it to JSON).
class Error : public std::runtime_error {
 public:
  enum class Kind { Parse, Validation, Precondition, Resource, Invariant, Usage };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

  static const char* kind_name(Kind k) {
    switch (k) {
      case Kind::Parse: return "parse";
      case Kind::Validation: return "validation";
      case Kind::Precondition: return "precondition";
      case Kind::Resource: return "resource";
      case Kind::Invariant: return "invariant";
      case Kind::Usage: return "usage";
    }
    return "error";
  }

 private:
  Kind kind_;
};

// Parse failure that names the byte offset of the defect.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(Kind::Parse, message + " (offset " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace thompson
