#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace positroid {

enum class ErrorCode {
  MalformedToken,
  SizeTooSmall,
  NotABijection,
  UndecoratedFixedPoint,
  DecoratedNonFixedPoint,
  NotConnected,
  EqualVertices,
  OutOfRange,
  NotRealizable,
  SubstitutionNotFound,
  NotAdmissible,
  InvalidModel,
  InconsistentModel,
  NonterminatingStrand,
  NoSuchFaceSide,
  CapExceeded,
  NoRightmostMember,
  SymbolNotRealizable,
  NotReduced,
  RoundtripFailed,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace positroid
