#ifndef ZCACS_ERRORS_HPP
#define ZCACS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zcacs {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value lies outside its admissible span.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Structural mismatch between a value and the spec it is checked against.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Invalid construction parameters. `field()` names the offending field
/// path, e.g. "row_perms[0]".
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Argument outside the mathematical domain of an operation (e.g. non-prime).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or truncated input file.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace zcacs

#endif
