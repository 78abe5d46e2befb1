#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypchroma {

enum class ErrorKind {
  InvalidInput,
  GeometryInfeasible,
  Combinatorial,
  ConstructionRule,
  Connectivity,
  Orientability,
  Blueprint,
  Pairing,
  SizeExceeded,
  Validation,
  ParameterRegime,
  InternalConsistency,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code or message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace hypchroma
