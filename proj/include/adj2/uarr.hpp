#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "adj2/fincat.hpp"

namespace adj2 {

using Key2 = std::array<int, 2>;
using Key3 = std::array<int, 3>;

/// A universal arrow from each object of `base` to the functor `right`.
///
/// `unit[A]` is the arrow A -> R L A. `zeta` stores, for every object A of the
/// base, object X upstairs and v : A -> R X, the unique w : L A -> X with
/// R w . unit[A] = v. The table is never read from input; it is always
/// recovered by exhaustive search at validation time.
struct UniversalArrow {
  std::string name;
  CatPtr base;
  CatPtr upstairs;
  Functor right;
  ObjectFunction left;
  std::vector<Mor> unit;
  std::map<Key3, Mor> zeta;

  Mor unit_at(Obj a) const { return unit.at(static_cast<std::size_t>(a.index)); }
  /// The associated universal function; throws UnknownEntity outside the table.
  Mor transpose(Obj a, Obj x, Mor v) const;

  friend bool operator==(const UniversalArrow& a, const UniversalArrow& b);
};

using ArrowPtr = std::shared_ptr<const UniversalArrow>;

/// All w : L a -> x with R w . unit[a] = v, in lexicographic order.
std::vector<Mor> universal_witnesses(const UniversalArrow& u, Obj a, Obj x, Mor v);

/// The unique witness; throws NoWitness or AmbiguousWitness (listing candidates).
Mor compute_zeta(const UniversalArrow& u, Obj a, Obj x, Mor v);

/// Checks typing, materializes zeta for every (A, X, v) and verifies the
/// transpose is a bijection Hom(A, R X) -> Hom(L A, X).
ArrowPtr validate_universal_arrow(std::string name, Functor right, ObjectFunction left, std::vector<Mor> unit);

/// A 1-cell (J, V, rho) between universal arrows. `rho_inv` is stored rather
/// than recomputed and must be a two-sided inverse of `rho`.
struct UArrMorphism {
  std::string name;
  ArrowPtr source;
  ArrowPtr target;
  Functor J;
  Functor V;
  NatTrans rho;      // J R -> R' V
  NatTrans rho_inv;  // R' V -> J R

  bool has_identity_rho() const;

  friend bool operator==(const UArrMorphism& a, const UArrMorphism& b);
};

UArrMorphism validate_uarr_morphism(UArrMorphism m);
UArrMorphism identity_uarr_morphism(const ArrowPtr& u);
/// second . first, with rho = rho2 V . F rho1 and inverse F rho1^-1 . rho2^-1 V.
UArrMorphism uarr_compose(const UArrMorphism& second, const UArrMorphism& first);

/// A 2-cell (alpha, beta) subject to R' beta . rho = rho' . alpha R.
struct UArrTwoCell {
  std::string name;
  UArrMorphism source;
  UArrMorphism target;
  NatTrans alpha;
  NatTrans beta;

  friend bool operator==(const UArrTwoCell& a, const UArrTwoCell& b);
};

/// Object of X where the cylinder condition fails, if any.
std::optional<Obj> cylinder_witness(const UArrTwoCell& c);

UArrTwoCell validate_uarr_two_cell(UArrTwoCell c);
UArrTwoCell identity_uarr_two_cell(const UArrMorphism& m);
UArrTwoCell uarr_vertical(const UArrTwoCell& second, const UArrTwoCell& first);
/// m after c: (F alpha, G beta).
UArrTwoCell uarr_whisker_forward(const UArrMorphism& m, const UArrTwoCell& c);
/// c after m: (gamma J, delta V).
UArrTwoCell uarr_whisker_back(const UArrTwoCell& c, const UArrMorphism& m);
/// (gamma K . F alpha, delta W . G beta).
UArrTwoCell uarr_horizontal(const UArrTwoCell& outer, const UArrTwoCell& inner);
/// The other whiskering order, (M alpha . gamma J, N beta . delta V).
UArrTwoCell uarr_horizontal_transposed(const UArrTwoCell& outer, const UArrTwoCell& inner);

}  // namespace adj2
