#pragma once

#include <stdexcept>
#include <string>

namespace cubelaw {

/// Base of every mathematical failure raised by the library. kind() is the
/// stable type name reported by the CLI in error payloads.
class MathError : public std::runtime_error {
 public:
  MathError(const char* kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  const char* kind() const noexcept { return kind_; }

 private:
  const char* kind_;
};

#define CUBELAW_DEFINE_ERROR(Name)                                           \
  class Name : public MathError {                                            \
   public:                                                                   \
    explicit Name(const std::string& message) : MathError(#Name, message) {} \
  };

CUBELAW_DEFINE_ERROR(DescriptorMismatch)
CUBELAW_DEFINE_ERROR(DivisionByZero)
CUBELAW_DEFINE_ERROR(ZeroInput)
CUBELAW_DEFINE_ERROR(InvalidInput)
CUBELAW_DEFINE_ERROR(RankDeficient)
CUBELAW_DEFINE_ERROR(NormBoundExceeded)
CUBELAW_DEFINE_ERROR(NotFundamental)
CUBELAW_DEFINE_ERROR(NotAnIdeal)
CUBELAW_DEFINE_ERROR(DegenerateBasis)
CUBELAW_DEFINE_ERROR(AlignmentViolated)
CUBELAW_DEFINE_ERROR(UnsupportedBaseField)
CUBELAW_DEFINE_ERROR(DiscOutsideOrbit)
CUBELAW_DEFINE_ERROR(DeterminantNotInUnitGroup)
CUBELAW_DEFINE_ERROR(NotPrimitive)
CUBELAW_DEFINE_ERROR(NotProjective)
CUBELAW_DEFINE_ERROR(NotBalanced)
CUBELAW_DEFINE_ERROR(NonIntegralEntry)
CUBELAW_DEFINE_ERROR(ProductNotUnitIdeal)
CUBELAW_DEFINE_ERROR(DetProductNotTotallyPositiveUnit)
CUBELAW_DEFINE_ERROR(WitnessMismatch)
CUBELAW_DEFINE_ERROR(ScaleNotAllowed)
CUBELAW_DEFINE_ERROR(GeneratorUnavailable)
CUBELAW_DEFINE_ERROR(OutOfRange)

#undef CUBELAW_DEFINE_ERROR

}  // namespace cubelaw
