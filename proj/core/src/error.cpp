#include "pointfree/error.hpp"

namespace pointfree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPoset: return "InvalidPoset";
    case ErrorCode::NotALattice: return "NotALattice";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::InvalidHom: return "InvalidHom";
    case ErrorCode::NotAPrenucleus: return "NotAPrenucleus";
    case ErrorCode::NotANucleus: return "NotANucleus";
    case ErrorCode::NotAFilter: return "NotAFilter";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::KernelNotPreserved: return "KernelNotPreserved";
    case ErrorCode::TopConditionFails: return "TopConditionFails";
    case ErrorCode::NotFactorable: return "NotFactorable";
    case ErrorCode::MixedFrames: return "MixedFrames";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::SquareDoesNotCommute: return "SquareDoesNotCommute";
    case ErrorCode::ClassViolation: return "ClassViolation";
    case ErrorCode::ConditionsDisagree: return "ConditionsDisagree";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::WitnessInvalid: return "WitnessInvalid";
    case ErrorCode::ChallengeUnanswerable: return "ChallengeUnanswerable";
    case ErrorCode::InputPunctured: return "InputPunctured";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::InvariantBroken: return "InvariantBroken";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::EmptyX: return "EmptyX";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

}  // namespace pointfree
