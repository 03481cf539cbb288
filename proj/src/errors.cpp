#include "ttomo/errors.hpp"

namespace ttomo {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::NonRealResult: return "NonRealResult";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::NotOutgoing: return "NotOutgoing";
    case ErrorKind::Undersampled: return "Undersampled";
    case ErrorKind::ShiftExceedsTruncation: return "ShiftExceedsTruncation";
    case ErrorKind::TruncationTooShort: return "TruncationTooShort";
    case ErrorKind::TargetTooCloseToBoundary: return "TargetTooCloseToBoundary";
    case ErrorKind::AttenuationNotPositive: return "AttenuationNotPositive";
    case ErrorKind::PsiKindMismatch: return "PsiKindMismatch";
    case ErrorKind::NoGaugeClass: return "NoGaugeClass";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::Io: return "IoError";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Io:
    case ErrorKind::Config:
      return 2;
    default:
      return 3;
  }
}

}  // namespace ttomo
