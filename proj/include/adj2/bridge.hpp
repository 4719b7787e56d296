#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adj2/emnd.hpp"
#include "adj2/uarr.hpp"

namespace adj2 {

/// Phi(C, R, L, eta) = (C, RL, eta, h |-> R zeta(h)).
MonadPtr phi_on_object(const UniversalArrow& u);
/// (J, p |-> rho^-1 LA . R' zeta'(rho LA . p)).
EMndMorphism phi_on_morphism(const UArrMorphism& m);
/// theta = alpha.
EMndTwoCell phi_on_two_cell(const UArrTwoCell& c);

/// The Eilenberg-Moore universal arrow (C, U^S, F^S, eta^S) together with its
/// enumerated algebra category.
struct EmConstruction {
  MonadPtr monad;
  AlgebraCategory algebras;
  ArrowPtr arrow;
};

/// Builds Psi(M). The transpose table is found by search and then compared
/// against v |-> v^N; a disagreement is an Internal fault.
EmConstruction psi_on_object(const MonadPtr& m, SearchBudget budget = {});
/// (P, P-hat, identity) where P-hat lifts each S-algebra along P.
UArrMorphism psi_on_morphism(const EMndMorphism& m, const EmConstruction& source, const EmConstruction& target);
UArrMorphism psi_on_morphism(const EMndMorphism& m, SearchBudget budget = {});
/// (theta, theta-hat) with theta-hat at N equal to theta at the carrier of N.
UArrTwoCell psi_on_two_cell(const EMndTwoCell& c, const EmConstruction& source, const EmConstruction& target);
UArrTwoCell psi_on_two_cell(const EMndTwoCell& c, SearchBudget budget = {});

/// Number of universal witnesses at every (A, X, v), bucketed by count.
std::map<std::size_t, std::size_t> witness_histogram(const UniversalArrow& u);

/// The comparison functor X -> C^{RL}, X |-> (RX, v |-> R zeta(v)).
Functor comparison_functor(const UniversalArrow& u, const EmConstruction& em);
/// (1_C, K, identity) : U -> Psi Phi U.
UArrMorphism unit_component(const ArrowPtr& u, SearchBudget budget = {});
/// The identity 1-cell Phi Psi M -> M. Throws Internal unless Phi Psi M = M.
EMndMorphism counit_component(const MonadPtr& m, SearchBudget budget = {});

struct CheckOutcome {
  bool holds = true;
  std::string witness;
};

/// counit(Phi U) . Phi(unit U) = 1 on Phi U.
CheckOutcome check_triangle(const ArrowPtr& u, SearchBudget budget = {});
/// Psi(counit M) . unit(Psi M) = 1 on Psi M.
CheckOutcome check_triangle(const MonadPtr& m, SearchBudget budget = {});

struct NaturalityVerdict {
  bool holds = true;
  std::optional<Obj> witness;  // object of the source upstairs category
  std::string detail;
};

/// Compares alpha at R X with R' beta at X for every X.
NaturalityVerdict check_unit_2naturality(const UArrTwoCell& c);

/// Every 1-cell (P, ext) : source -> target, in lexicographic order.
std::vector<EMndMorphism> enumerate_emnd_morphisms(const MonadPtr& source, const MonadPtr& target,
                                                   SearchBudget budget = {});
/// Every 1-cell (J, V, identity) : source -> target with J R = R' V.
std::vector<UArrMorphism> enumerate_strict_uarr_morphisms(const ArrowPtr& source, const ArrowPtr& target,
                                                          SearchBudget budget = {});

struct HomBijection {
  std::size_t emnd_count = 0;
  std::size_t uarr_count = 0;
  bool lands = true;
  bool injective = true;
  bool surjective = true;
  std::string witness;

  bool holds() const { return lands && injective && surjective && emnd_count == uarr_count; }
};

/// Checks that m |-> Psi m . unit U maps Hom(Phi U, M) bijectively onto the
/// strict part of Hom(U, Psi M).
HomBijection check_hom_bijection(const ArrowPtr& u, const MonadPtr& m, SearchBudget budget = {});

}  // namespace adj2
