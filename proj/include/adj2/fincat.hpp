#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "adj2/error.hpp"

namespace adj2 {

/// Object handle, an index into one FinCategory's object table.
struct Obj {
  int index = -1;
  friend auto operator<=>(const Obj&, const Obj&) = default;
};

/// Morphism handle, an index into one FinCategory's morphism table.
struct Mor {
  int index = -1;
  friend auto operator<=>(const Mor&, const Mor&) = default;
};

/// Caps exhaustive searches (algebra tables, functor and transformation enumeration).
struct SearchBudget {
  std::uint64_t limit = 1'000'000;
};

/// Unvalidated, identifier-based description of a finite category.
struct CategoryDescription {
  struct Arrow {
    std::string id;
    std::string source;
    std::string target;
  };
  struct Composite {
    std::string second;  // g in g . f
    std::string first;   // f
    std::string result;
  };

  std::string name;
  std::vector<std::string> objects;
  std::vector<Arrow> morphisms;
  std::vector<std::pair<std::string, std::string>> identities;  // object, morphism
  std::vector<Composite> composites;
};

class FinCategory;
using CatPtr = std::shared_ptr<const FinCategory>;

/// A validated finite category with a fully materialized composition table.
/// Objects and morphisms are indexed in lexicographic identifier order.
class FinCategory {
 public:
  const std::string& name() const { return name_; }
  int object_count() const { return static_cast<int>(object_ids_.size()); }
  int morphism_count() const { return static_cast<int>(arrows_.size()); }

  auto objects() const {
    return std::views::iota(0, object_count()) | std::views::transform([](int i) { return Obj{i}; });
  }
  auto morphisms() const {
    return std::views::iota(0, morphism_count()) | std::views::transform([](int i) { return Mor{i}; });
  }

  const std::string& id(Obj a) const;
  const std::string& id(Mor f) const;
  Obj source(Mor f) const;
  Obj target(Mor f) const;
  Mor identity(Obj a) const;
  bool is_identity(Mor f) const;

  bool composable(Mor g, Mor f) const;
  /// g . f; throws ShapeMismatch when target f != source g.
  Mor compose(Mor g, Mor f) const;
  template <typename... Rest>
  Mor compose(Mor h, Mor g, Rest... rest) const {
    return compose(h, compose(g, rest...));
  }

  /// Morphisms a -> b in lexicographic identifier order.
  const std::vector<Mor>& hom(Obj a, Obj b) const;

  std::optional<Obj> find_object(std::string_view id) const;
  std::optional<Mor> find_morphism(std::string_view id) const;
  Obj object(std::string_view id) const;
  Mor morphism(std::string_view id) const;

  /// "id : src -> tgt"
  std::string describe(Mor f) const;

  CategoryDescription description() const;

  /// Structural equality: identifiers, typing and composition; the name is ignored.
  friend bool operator==(const FinCategory& a, const FinCategory& b);

 private:
  friend CatPtr validate_category(const CategoryDescription& raw);

  struct Arrow {
    std::string id;
    Obj source;
    Obj target;
  };

  std::string name_;
  std::vector<std::string> object_ids_;
  std::vector<Arrow> arrows_;
  std::vector<Mor> identities_;
  std::vector<int> compose_;           // morphism_count^2, -1 where not composable
  std::vector<std::vector<Mor>> homs_;  // object_count^2
};

CatPtr validate_category(const CategoryDescription& raw);

/// Pointer equality or structural equality.
bool same_category(const CatPtr& a, const CatPtr& b);

struct Functor {
  std::string name;
  CatPtr source;
  CatPtr target;
  std::vector<Obj> objects;
  std::vector<Mor> morphisms;

  Obj operator()(Obj a) const { return objects.at(static_cast<std::size_t>(a.index)); }
  Mor operator()(Mor f) const { return morphisms.at(static_cast<std::size_t>(f.index)); }

  friend bool operator==(const Functor& a, const Functor& b);
};

struct NatTrans {
  std::string name;
  Functor source;
  Functor target;
  std::vector<Mor> components;

  Mor operator[](Obj a) const { return components.at(static_cast<std::size_t>(a.index)); }

  friend bool operator==(const NatTrans& a, const NatTrans& b);
};

/// A function on objects only, with no action on morphisms.
struct ObjectFunction {
  CatPtr source;
  CatPtr target;
  std::vector<Obj> objects;

  Obj operator()(Obj a) const { return objects.at(static_cast<std::size_t>(a.index)); }

  friend bool operator==(const ObjectFunction& a, const ObjectFunction& b);
};

Functor validate_functor(Functor candidate);
NatTrans validate_nat_trans(NatTrans candidate);
ObjectFunction validate_object_function(ObjectFunction candidate);

Functor identity_functor(const CatPtr& c);
/// g . f
Functor compose(const Functor& g, const Functor& f);
ObjectFunction object_part(const Functor& f);

NatTrans identity_transformation(const Functor& f);
bool is_identity_transformation(const NatTrans& t);
/// second . first, componentwise.
NatTrans vertical(const NatTrans& second, const NatTrans& first);
/// h a : h F -> h G for a : F -> G.
NatTrans whisker_left(const Functor& h, const NatTrans& a);
/// a h : F h -> G h for a : F -> G.
NatTrans whisker_right(const NatTrans& a, const Functor& h);
/// outer * inner = outer G . H inner, for inner : F -> G and outer : H -> K.
NatTrans horizontal(const NatTrans& outer, const NatTrans& inner);

/// Returns an object where outer G . H inner and K inner . outer F disagree, if any.
std::optional<Obj> interchange_witness(const NatTrans& outer, const NatTrans& inner);

/// All functors c -> d, in lexicographic order of (object map, morphism map).
std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d, SearchBudget budget = {});
/// All natural transformations f -> g, in lexicographic order of components.
std::vector<NatTrans> enumerate_transformations(const Functor& f, const Functor& g,
                                                SearchBudget budget = {});

}  // namespace adj2
