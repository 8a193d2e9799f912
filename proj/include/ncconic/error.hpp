#pragma once

#include <stdexcept>
#include <string>

namespace ncconic {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  AmbientMismatch,
  ZeroInput,
  NotHomogeneous,
  NotQuadratic,
  TruncationTooSmall,
  DegreeExceedsTruncation,
  NotNormal,
  NotRegular,
  NotSubspace,
  NotFiniteDimensional,
  NotAssociative,
  SignatureUnmatched,
  NotFrobenius,
  Precondition,
  Parse,
  Unsupported,
  PointNotOnScheme,
  SingularMatrix,
  NotStabilized,
  NoCertificate,
  NotFourDimensional,
  MissingWitness,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ncconic
