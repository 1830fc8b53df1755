#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isoed {

enum class ErrorCode {
  // intlinalg
  NotASublattice,
  InfiniteQuotient,
  SingularMatrix,
  DimensionMismatch,
  // fingroup
  InvalidFactor,
  NotPrime,
  ZeroValuation,
  // abvar
  UnsaturatedSubvariety,
  OddRankSubvariety,
  MalformedSpec,
  InvalidMultiplier,
  ForeignSubvariety,
  IncompatibleComposition,
  // edim
  Uncertified,
  CoprimalityFails,
  InternalInconsistency,
  // groupbounds
  ZeroChi,
  ChiOutOfRange,
  DegreeTooSmall,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace isoed
