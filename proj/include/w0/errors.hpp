#pragma once

#include <stdexcept>
#include <string>

namespace w0 {

// Error categories double as C API status codes and CLI exit statuses.
enum class ErrorCode : int {
  ok = 0,
  internal = 1,
  parse = 2,
  unknown_algebra = 3,
  not_dominant = 4,
  golden_mismatch = 5,
  out_of_range = 6,
  invalid_argument = 7,
  consistency = 8,
  too_large = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::parse, w) {}
};
struct UnknownAlgebra : Error {
  explicit UnknownAlgebra(const std::string& w)
      : Error(ErrorCode::unknown_algebra, w) {}
};
struct ParameterOutOfRange : Error {
  explicit ParameterOutOfRange(const std::string& w)
      : Error(ErrorCode::out_of_range, w) {}
};
struct NotDominant : Error {
  explicit NotDominant(const std::string& w)
      : Error(ErrorCode::not_dominant, w) {}
};
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& w)
      : Error(ErrorCode::invalid_argument, w) {}
};
// Raised when an internal cross-check fails: a catalog or construction bug,
// never a user error.
struct ConsistencyError : Error {
  explicit ConsistencyError(const std::string& w)
      : Error(ErrorCode::consistency, w) {}
};
struct TooLarge : Error {
  explicit TooLarge(const std::string& w) : Error(ErrorCode::too_large, w) {}
};

}  // namespace w0
