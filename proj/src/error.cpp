#include "isoed/error.hpp"

namespace isoed {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotASublattice: return "NotASublattice";
    case ErrorCode::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidFactor: return "InvalidFactor";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroValuation: return "ZeroValuation";
    case ErrorCode::UnsaturatedSubvariety: return "UnsaturatedSubvariety";
    case ErrorCode::OddRankSubvariety: return "OddRankSubvariety";
    case ErrorCode::MalformedSpec: return "MalformedSpec";
    case ErrorCode::InvalidMultiplier: return "InvalidMultiplier";
    case ErrorCode::ForeignSubvariety: return "ForeignSubvariety";
    case ErrorCode::IncompatibleComposition: return "IncompatibleComposition";
    case ErrorCode::Uncertified: return "Uncertified";
    case ErrorCode::CoprimalityFails: return "CoprimalityFails";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ZeroChi: return "ZeroChi";
    case ErrorCode::ChiOutOfRange: return "ChiOutOfRange";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace isoed
