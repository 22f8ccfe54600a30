#include "hsgon/error.hpp"

namespace hsgon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorCode::InfiniteIndex: return "InfiniteIndex";
    case ErrorCode::NotTransitive: return "NotTransitive";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorCode::DensityMismatch: return "DensityMismatch";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::NotCovering: return "NotCovering";
    case ErrorCode::IndexOne: return "IndexOne";
    case ErrorCode::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::NotASimplePole: return "NotASimplePole";
    case ErrorCode::AperiodicPartition: return "AperiodicPartition";
    case ErrorCode::SumDoesNotVanish: return "SumDoesNotVanish";
    case ErrorCode::TooManyTerms: return "TooManyTerms";
    case ErrorCode::StructureViolation: return "StructureViolation";
    case ErrorCode::NonVanishing: return "NonVanishing";
    case ErrorCode::NonPositiveCoefficient: return "NonPositiveCoefficient";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::RetriesExhausted: return "RetriesExhausted";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
  }
  return "Unknown";
}

}  // namespace hsgon
