#pragma once

#include <memory>
#include <string>
#include <vector>

#include "adj2/bridge.hpp"
#include "adj2/emnd.hpp"
#include "adj2/uarr.hpp"

namespace adj2 {

/// L -| R : C -> X with unit 1 -> RL and counit LR -> 1.
struct Adjunction {
  std::string name;
  Functor left;   // C -> X
  Functor right;  // X -> C
  NatTrans unit;
  NatTrans counit;

  const CatPtr& base() const { return left.source; }
  const CatPtr& upstairs() const { return right.source; }

  friend bool operator==(const Adjunction& a, const Adjunction& b);
};

using AdjPtr = std::shared_ptr<const Adjunction>;

AdjPtr validate_adjunction(Adjunction a);

/// (J, V, rho, lambda) with lambda : L'J -> VL the dual adjoint of rho.
struct AdjMorphism {
  std::string name;
  AdjPtr source;
  AdjPtr target;
  Functor J;
  Functor V;
  NatTrans rho;      // J R -> R' V
  NatTrans rho_inv;  // R' V -> J R
  NatTrans lambda;   // L' J -> V L

  friend bool operator==(const AdjMorphism& a, const AdjMorphism& b);
};

/// R' V eps . R' lambda R . eta' J R, the transformation lambda must reproduce as rho.
NatTrans dual_adjoint_image(const AdjMorphism& m, const NatTrans& lambda);
AdjMorphism validate_adj_morphism(AdjMorphism m);
/// All lambda' : L'J -> VL whose dual-adjoint image is rho.
std::vector<NatTrans> dual_adjoints(const AdjMorphism& m, SearchBudget budget = {});

struct AdjTwoCell {
  std::string name;
  AdjMorphism source;
  AdjMorphism target;
  NatTrans alpha;
  NatTrans beta;

  friend bool operator==(const AdjTwoCell& a, const AdjTwoCell& b);
};

/// Checks the cylinder condition and lambda' . L'alpha = beta L . lambda.
AdjTwoCell validate_adj_two_cell(AdjTwoCell c);

/// (S, eta, mu) on a base category.
struct ClassicalMonad {
  std::string name;
  Functor endo;
  NatTrans unit;
  NatTrans mult;

  const CatPtr& base() const { return endo.source; }

  friend bool operator==(const ClassicalMonad& a, const ClassicalMonad& b);
};

using CMonadPtr = std::shared_ptr<const ClassicalMonad>;

CMonadPtr validate_classical_monad(ClassicalMonad m);

/// (P, phi) with phi : T P -> P S.
struct MonadMorphism {
  std::string name;
  CMonadPtr source;
  CMonadPtr target;
  Functor P;
  NatTrans phi;

  friend bool operator==(const MonadMorphism& a, const MonadMorphism& b);
};

MonadMorphism validate_monad_morphism(MonadMorphism m);

/// theta : P -> Q with psi . T theta = theta S . phi.
struct MonadTwoCell {
  std::string name;
  MonadMorphism source;
  MonadMorphism target;
  NatTrans theta;

  friend bool operator==(const MonadTwoCell& a, const MonadTwoCell& b);
};

MonadTwoCell validate_monad_two_cell(MonadTwoCell c);

AdjPtr F_on_object(const UniversalArrow& u);
AdjMorphism F_on_morphism(const UArrMorphism& m);
AdjTwoCell F_on_two_cell(const UArrTwoCell& c);

/// The transpose table is found by search and compared with v |-> eps . L v.
ArrowPtr G_on_object(const Adjunction& a);
UArrMorphism G_on_morphism(const AdjMorphism& m);
UArrTwoCell G_on_two_cell(const AdjTwoCell& c);

CMonadPtr H_on_object(const ExtensiveMonad& m);
MonadMorphism H_on_morphism(const EMndMorphism& m);
MonadTwoCell H_on_two_cell(const EMndTwoCell& c);

MonadPtr K_on_object(const ClassicalMonad& m);
EMndMorphism K_on_morphism(const MonadMorphism& m);
EMndTwoCell K_on_two_cell(const MonadTwoCell& c);

/// H Phi G, the left column of the square transported to Adj and Mnd.
CMonadPtr phi_e_on_object(const Adjunction& a);
MonadMorphism phi_e_on_morphism(const AdjMorphism& m);
MonadTwoCell phi_e_on_two_cell(const AdjTwoCell& c);

/// F Psi K.
AdjPtr psi_e_on_object(const ClassicalMonad& m, SearchBudget budget = {});
AdjMorphism psi_e_on_morphism(const MonadMorphism& m, SearchBudget budget = {});
AdjTwoCell psi_e_on_two_cell(const MonadTwoCell& c, SearchBudget budget = {});

}  // namespace adj2
