#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pointfree {

using ElementId = std::uint32_t;

enum class ErrorCode {
  InvalidPoset,
  NotALattice,
  NotDistributive,
  InvalidHom,
  NotAPrenucleus,
  NotANucleus,
  NotAFilter,
  NotACongruence,
  KernelNotPreserved,
  TopConditionFails,
  NotFactorable,
  MixedFrames,
  NotSurjective,
  SquareDoesNotCommute,
  ClassViolation,
  ConditionsDisagree,
  NotMaximal,
  WitnessInvalid,
  ChallengeUnanswerable,
  InputPunctured,
  HypothesisViolated,
  InvariantBroken,
  InvalidSpec,
  EmptyX,
  PreconditionFailed,
  ParseError,
  UnknownSuite,
};

std::string_view to_string(ErrorCode code);

/// Contract violation raised by the workbench. `witness` carries the
/// elements that demonstrate the failure (a triple for distributivity, a
/// kernel element for a refused drop, ...), empty when none applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::vector<ElementId> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<ElementId>& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<ElementId> witness_;
};

}  // namespace pointfree
