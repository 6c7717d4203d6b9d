#ifndef ORBITDUAL_ERROR_HPP
#define ORBITDUAL_ERROR_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbitdual {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad request: unknown label, group mismatch, dimension or size mismatch.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Corrupt or inconsistent data (bundle tables, internal cross-checks).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Malformed document.
class ParseError : public DataError {
 public:
  using DataError::DataError;
};

/// Well-formed document with a missing or mistyped field.
class SchemaError : public DataError {
 public:
  using DataError::DataError;
};

/// A loaded bundle violated one or more invariants.
class ValidationError : public DataError {
 public:
  ValidationError(const std::string& what, std::vector<std::string> failed)
      : DataError(what), failed_(std::move(failed)) {}

  /// Names of the failed checks, in report order.
  const std::vector<std::string>& failed_checks() const noexcept { return failed_; }

 private:
  std::vector<std::string> failed_;
};

}  // namespace orbitdual

#endif  // ORBITDUAL_ERROR_HPP
