#include "adj2/error.hpp"

namespace adj2 {

std::string_view fault_name(Fault kind) {
  switch (kind) {
    case Fault::MissingComposite: return "MissingComposite";
    case Fault::NonAssociative: return "NonAssociative";
    case Fault::BadIdentity: return "BadIdentity";
    case Fault::IllTyped: return "IllTyped";
    case Fault::NotFunctorial: return "NotFunctorial";
    case Fault::NotNatural: return "NotNatural";
    case Fault::NotInvertible: return "NotInvertible";
    case Fault::ShapeMismatch: return "ShapeMismatch";
    case Fault::NoWitness: return "NoWitness";
    case Fault::AmbiguousWitness: return "AmbiguousWitness";
    case Fault::LawA: return "LawA";
    case Fault::LawB: return "LawB";
    case Fault::LawC: return "LawC";
    case Fault::NotAlgebra: return "NotAlgebra";
    case Fault::NotAlgebraMorphism: return "NotAlgebraMorphism";
    case Fault::NotCylinder: return "NotCylinder";
    case Fault::NotAdjunction: return "NotAdjunction";
    case Fault::NotMonad: return "NotMonad";
    case Fault::NotMonadMorphism: return "NotMonadMorphism";
    case Fault::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Fault::MissingImageAlgebra: return "MissingImageAlgebra";
    case Fault::Internal: return "Internal";
    case Fault::ParseError: return "ParseError";
    case Fault::UnknownEntity: return "UnknownEntity";
  }
  return "Unknown";
}

LawError::LawError(Fault kind, std::string witness)
    : std::runtime_error(std::string(fault_name(kind)) + ": " + witness),
      kind_(kind),
      witness_(std::move(witness)) {}

void fail(Fault kind, std::string witness) { throw LawError(kind, std::move(witness)); }

}  // namespace adj2
