#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace adj2 {

/// Classes of law violations and structural faults raised by the library.
enum class Fault {
  MissingComposite,
  NonAssociative,
  BadIdentity,
  IllTyped,
  NotFunctorial,
  NotNatural,
  NotInvertible,
  ShapeMismatch,
  NoWitness,
  AmbiguousWitness,
  LawA,
  LawB,
  LawC,
  NotAlgebra,
  NotAlgebraMorphism,
  NotCylinder,
  NotAdjunction,
  NotMonad,
  NotMonadMorphism,
  SearchBudgetExceeded,
  MissingImageAlgebra,
  Internal,
  ParseError,
  UnknownEntity,
};

std::string_view fault_name(Fault kind);

/// Carries the fault class and a human-readable witness naming the offending cell.
class LawError : public std::runtime_error {
 public:
  LawError(Fault kind, std::string witness);

  Fault kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  Fault kind_;
  std::string witness_;
};

[[noreturn]] void fail(Fault kind, std::string witness);

}  // namespace adj2
