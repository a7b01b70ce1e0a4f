#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbikt {

/// Failure categories shared by every module. The CLI maps these onto exit
/// statuses, so the split between refusals and input errors matters.
enum class ErrorKind {
  InvalidInput,
  ParseError,
  BoundExceeded,
  NotSubgroup,
  NonIntegralMultiplicity,
  NotAdmissible,
  NotRegular,
  NotIsolated,
  NotApplicable,
  NotOpen,
  NonConstantStabilizer,
  NonIntegralResult,
  UnknownFixture,
  InternalInconsistency,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// True for precondition refusals: the input is well formed but the requested
/// computation does not apply to it.
bool is_refusal(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& what)
      : std::runtime_error(what), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
  std::string module_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string module, const std::string& what) {
  throw Error(kind, std::move(module), what);
}

}  // namespace orbikt
