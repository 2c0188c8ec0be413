#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hoppe {

// Base of every error raised by the toolkit. The code is a stable
// identifier used in CLI diagnostics and tests.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define HOPPE_DEFINE_ERROR(Name)                                      \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  };

HOPPE_DEFINE_ERROR(UnknownVariable)
HOPPE_DEFINE_ERROR(HomogeneityError)
HOPPE_DEFINE_ERROR(AmbientMismatch)
HOPPE_DEFINE_ERROR(ValidationError)
HOPPE_DEFINE_ERROR(InvalidPoint)
HOPPE_DEFINE_ERROR(UnsupportedCokernelRank)
HOPPE_DEFINE_ERROR(UnsupportedOperation)
HOPPE_DEFINE_ERROR(IndexOutOfRange)
HOPPE_DEFINE_ERROR(FiberNotVanishing)
HOPPE_DEFINE_ERROR(NoTerminalBound)
HOPPE_DEFINE_ERROR(ZeroRank)
HOPPE_DEFINE_ERROR(NotApplicable)
HOPPE_DEFINE_ERROR(LatticeMismatch)
HOPPE_DEFINE_ERROR(OddSquare)
HOPPE_DEFINE_ERROR(UnsupportedTwist)
HOPPE_DEFINE_ERROR(BasepointFailure)
HOPPE_DEFINE_ERROR(NotPrime)
HOPPE_DEFINE_ERROR(TooLarge)
HOPPE_DEFINE_ERROR(EvenCharacteristic)
HOPPE_DEFINE_ERROR(CoefficientReduction)
HOPPE_DEFINE_ERROR(InsufficientCounts)
HOPPE_DEFINE_ERROR(NoConsistentCandidate)
HOPPE_DEFINE_ERROR(NoCandidate)
HOPPE_DEFINE_ERROR(InvalidArgument)
HOPPE_DEFINE_ERROR(DocumentError)

#undef HOPPE_DEFINE_ERROR

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t offset)
      : Error("SyntaxError", message + " at byte " + std::to_string(offset)),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace hoppe
