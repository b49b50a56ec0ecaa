#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lhm {

// Every domain failure carries one of these kinds. The names are part of the
// CLI contract (printed as "error: <Kind>: ...").
enum class ErrorKind {
  SingularLiouvillian,
  NotConverged,
  UnstableStep,
  ZeroProbe,
  LocalFieldPole,
  AllUndefined,
  NoFeasiblePoint,
  ParseError,
  ValidationError,
};

std::string_view error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace lhm
