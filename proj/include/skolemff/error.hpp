#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skolemff {

enum class ErrorKind {
  FieldTooSmall,
  FieldMismatch,
  InvalidField,
  ZeroInput,
  AllZero,
  ConstantInput,
  ConstantF,
  NotSInteger,
  NotSUnit,
  MultiplicativelyDependent,
  BothConstant,
  ZeroPolynomial,
  QEqualsOne,
  BadChiS,
  PreconditionGlobalZeroExists,
  FactorizationTooHard,
  RootSearchIncomplete,
  CharPUnsupported,
  InvalidInstance,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures carry a machine-readable kind; the CLI maps kinds to
/// exit codes (FactorizationTooHard/RootSearchIncomplete are "inconclusive",
/// everything else is "invalid input").
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace skolemff
