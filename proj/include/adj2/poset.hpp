#pragma once

#include <functional>
#include <string>
#include <vector>

#include "adj2/fincat.hpp"

namespace adj2 {

/// Identifier of the unique morphism a <= b in a poset fixture.
std::string poset_arrow_id(const std::string& a, const std::string& b);

/// Builds the category of a finite poset; `leq` is queried on element positions
/// and must be reflexive, antisymmetric and transitive.
CatPtr poset_category(std::string name, const std::vector<std::string>& elements,
                      const std::function<bool(std::size_t, std::size_t)>& leq);

/// True when every hom-set has at most one element.
bool is_thin(const FinCategory& c);

/// The unique morphism a -> b of a thin category; throws NoWitness when a is not below b.
Mor thin_arrow(const FinCategory& c, Obj a, Obj b);

/// A monotone map between thin categories, extended uniquely to morphisms.
Functor monotone_functor(const CatPtr& source, const CatPtr& target, const std::vector<Obj>& images);
Functor monotone_functor(const CatPtr& source, const CatPtr& target,
                         const std::vector<std::pair<std::string, std::string>>& images);

/// The full subcategory on the given objects, with the inclusion functor.
std::pair<CatPtr, Functor> full_subcategory(std::string name, const CatPtr& c, const std::vector<Obj>& keep);

}  // namespace adj2
