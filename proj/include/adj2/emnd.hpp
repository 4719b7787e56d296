#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adj2/fincat.hpp"
#include "adj2/uarr.hpp"

namespace adj2 {

/// A monad in extension form (Kleisli triple): an object function S, a unit
/// A -> S A and, for every h : A -> S B, an extension h^{SB} : S A -> S B
/// stored under the key (A, B, h).
struct ExtensiveMonad {
  std::string name;
  CatPtr base;
  ObjectFunction endo;
  std::vector<Mor> unit;
  std::map<Key3, Mor> ext;

  Obj S(Obj a) const { return endo(a); }
  Mor unit_at(Obj a) const { return unit.at(static_cast<std::size_t>(a.index)); }
  Mor extend(Obj a, Obj b, Mor h) const;

  friend bool operator==(const ExtensiveMonad& a, const ExtensiveMonad& b);
};

using MonadPtr = std::shared_ptr<const ExtensiveMonad>;

/// Checks totality and the three extension laws at every instance.
MonadPtr validate_extensive_monad(std::string name, ObjectFunction endo, std::vector<Mor> unit,
                                  std::map<Key3, Mor> ext);

/// An algebra (N, (-)^N): for every a : A -> N an extension a^N : S A -> N.
/// Equality is carrier plus table; the name is a label only.
struct Algebra {
  std::string name;
  Obj carrier;
  std::map<Key2, Mor> ext;

  Mor extend(Obj a, Mor x) const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.carrier == b.carrier && a.ext == b.ext; }
};

Algebra validate_algebra(const ExtensiveMonad& m, Algebra alg);
/// Describes the first failure of (q . a)^N = q . a^M, if any.
std::optional<std::string> algebra_morphism_violation(const ExtensiveMonad& m, const Algebra& source,
                                                      const Algebra& target, Mor q);
/// (S A, (-)^{SA}).
Algebra free_algebra(const ExtensiveMonad& m, Obj a);

/// The category of algebras C^S with its forgetful functor and free-algebra function.
struct AlgebraCategory {
  CatPtr category;
  std::vector<Algebra> algebras;  // indexed like category objects
  Functor forgetful;
  ObjectFunction free;

  const Algebra& algebra(Obj a) const { return algebras.at(static_cast<std::size_t>(a.index)); }
  std::optional<Obj> find(const Algebra& alg) const;
  /// The morphism src -> tgt of C^S lying over q; throws NotAlgebraMorphism if none.
  Mor morphism_over(Obj src, Obj tgt, Mor q) const;
};

/// Brute-force enumeration of all algebras (filtered by the unit law, then the
/// extension law) and all algebra morphisms. The budget bounds candidate
/// tables per carrier.
AlgebraCategory enumerate_algebras(const ExtensiveMonad& m, SearchBudget budget = {});

/// A 1-cell (P, (-)^{PS}) : (C, S) -> (D, T). `ext` maps (D, A, p : D -> P S A)
/// to p^{PSA} : T D -> P S A.
struct EMndMorphism {
  std::string name;
  MonadPtr source;
  MonadPtr target;
  Functor P;
  std::map<Key3, Mor> ext;

  Mor extend(Obj d, Obj a, Mor p) const;
  /// The T-algebra (P S A, (-)^{PSA}).
  Algebra algebra_at(Obj a) const;

  friend bool operator==(const EMndMorphism& a, const EMndMorphism& b);
};

EMndMorphism validate_emnd_morphism(EMndMorphism m);
EMndMorphism identity_emnd_morphism(const MonadPtr& m);
/// second . first with w^{WPSA} := W(1_{PSA})^{PSA} . [W eta PSA . w]^{WTPSA}.
EMndMorphism emnd_compose(const EMndMorphism& second, const EMndMorphism& first);

/// A 2-cell theta : P -> Q whose components at S A are T-algebra morphisms.
struct EMndTwoCell {
  std::string name;
  EMndMorphism source;
  EMndMorphism target;
  NatTrans theta;

  friend bool operator==(const EMndTwoCell& a, const EMndTwoCell& b);
};

EMndTwoCell validate_emnd_two_cell(EMndTwoCell c);
EMndTwoCell identity_emnd_two_cell(const EMndMorphism& m);
EMndTwoCell emnd_vertical(const EMndTwoCell& second, const EMndTwoCell& first);
/// W theta.
EMndTwoCell emnd_whisker_forward(const EMndMorphism& w, const EMndTwoCell& c);
/// xi Q.
EMndTwoCell emnd_whisker_back(const EMndTwoCell& c, const EMndMorphism& q);
/// xi * theta := xi Q . W theta.
EMndTwoCell emnd_horizontal(const EMndTwoCell& outer, const EMndTwoCell& inner);
/// K theta . xi P.
EMndTwoCell emnd_horizontal_transposed(const EMndTwoCell& outer, const EMndTwoCell& inner);

}  // namespace adj2
