#pragma once

#include <stdexcept>
#include <string>

namespace vqcat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments that do not fit together: mixed quantales, carrier mismatches,
/// labels that are not in a carrier, unsupported builtin names.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or materialization would exceed a configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string cap_name, std::size_t limit, std::size_t requested);

  const std::string& cap_name() const noexcept { return cap_name_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::string cap_name_;
  std::size_t limit_;
  std::size_t requested_;
};

/// Malformed textual or JSON input. `location` is a JSON pointer or a
/// "file:line" fragment when one is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string location = {});

  const std::string& location() const noexcept { return location_; }
  /// The message without the location prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::string location_;
};

}  // namespace vqcat
