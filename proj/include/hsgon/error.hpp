#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hsgon {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  UnknownLetter,
  AlphabetMismatch,
  InfiniteIndex,
  NotTransitive,
  NotPermutation,
  StateSpaceTooLarge,
  DensityMismatch,
  NotDisjoint,
  NotCovering,
  IndexOne,
  NonUnitConstantTerm,
  ZeroFunction,
  NotASimplePole,
  AperiodicPartition,
  SumDoesNotVanish,
  TooManyTerms,
  StructureViolation,
  NonVanishing,
  NonPositiveCoefficient,
  IoError,
  GuardExceeded,
  RetriesExhausted,
  BudgetExhausted,
};

std::string_view to_string(ErrorCode code);

// Every failure surfaced by the library. `info` carries the small integer
// payload some codes define: (i, j) for NotDisjoint, the uncovered vertex
// tuple for NotCovering.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::vector<std::size_t> info = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        info_(std::move(info)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<std::size_t>& info() const noexcept { return info_; }

 private:
  ErrorCode code_;
  std::vector<std::size_t> info_;
};

}  // namespace hsgon
