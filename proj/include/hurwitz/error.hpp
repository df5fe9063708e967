#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hurwitz {

enum class ErrorKind {
  invalid_spec,
  unsupported_size,
  foreign_element,
  aut_unavailable,
  budget_exceeded,
  group_mismatch,
  index_out_of_range,
  precondition,
  hypothesis_violation,
  non_realizable,
  non_hyperbolic,
  n_too_small,
  invalid_n,
  p_too_small,
  construction_failure,
  usage,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` is stable
// and is what the CLI maps to exit codes and report fields.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_spec: return "invalid-spec";
    case ErrorKind::unsupported_size: return "unsupported-size";
    case ErrorKind::foreign_element: return "foreign-element";
    case ErrorKind::aut_unavailable: return "aut-unavailable";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::group_mismatch: return "group-mismatch";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::hypothesis_violation: return "hypothesis-violation";
    case ErrorKind::non_realizable: return "non-realizable";
    case ErrorKind::non_hyperbolic: return "non-hyperbolic";
    case ErrorKind::n_too_small: return "n-too-small";
    case ErrorKind::invalid_n: return "invalid-n";
    case ErrorKind::p_too_small: return "p-too-small";
    case ErrorKind::construction_failure: return "construction-failure";
    case ErrorKind::usage: return "usage-error";
  }
  return "unknown";
}

}  // namespace hurwitz
