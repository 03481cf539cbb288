#pragma once

#include <stdexcept>
#include <string>

namespace ttomo {

enum class ErrorKind {
  InvalidArgument,
  OrderTooLarge,
  NonRealResult,
  OutsideDomain,
  NotOutgoing,
  Undersampled,
  ShiftExceedsTruncation,
  TruncationTooShort,
  TargetTooCloseToBoundary,
  AttenuationNotPositive,
  PsiKindMismatch,
  NoGaugeClass,
  Unsupported,
  Config,
  Io,
};

const char* error_name(ErrorKind kind);

// Process exit code for the CLI: 2 for I/O and parse problems, 3 otherwise.
int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ttomo
