#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace veto {

enum class ErrorKind {
  parse,
  tied_points,
  arity_mismatch,
  unsupported_family,
  bad_parameters,
  too_many_edges,
  too_large,
  not_unit,
  not_proper,
  not_midpoint_unit,
  not_unit_intervals,
  invalid_representation,
};

std::string_view error_kind_name(ErrorKind kind);

/// Domain error raised by library operations. The CLI maps these to exit code 65.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace veto
