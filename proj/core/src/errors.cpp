#include "lhm/errors.hpp"

namespace lhm {

std::string_view error_kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::SingularLiouvillian: return "SingularLiouvillian";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::UnstableStep: return "UnstableStep";
    case ErrorKind::ZeroProbe: return "ZeroProbe";
    case ErrorKind::LocalFieldPole: return "LocalFieldPole";
    case ErrorKind::AllUndefined: return "AllUndefined";
    case ErrorKind::NoFeasiblePoint: return "NoFeasiblePoint";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lhm
