#pragma once

#include <any>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adj2/classical.hpp"
#include "adj2/spec_format.hpp"

namespace adj2 {

struct AlgebraEntry {
  MonadPtr monad;
  Algebra algebra;
};

/// Outcome of building one registered entity.
struct BuildRecord {
  Kind kind;
  std::string name;
  std::string group;
  std::optional<LawError> error;
};

/// Named registry of every kind of cell. Parsed blocks are built on first use,
/// so blocks may reference each other in any order. Names of the form
/// `phi(x)`, `psi(x)`, `F(x)`, `G(x)`, `H(x)` and `K(x)` that are not
/// registered are derived on demand from the registered `x` of the matching kind.
class Workspace {
 public:
  explicit Workspace(SearchBudget budget = {}) : budget_(budget) {}

  SearchBudget budget() const { return budget_; }

  /// Registers blocks under a group tag; duplicate names within a kind are a ParseError.
  void load(std::vector<Block> blocks, const std::string& group);
  void load_text(std::string_view text, const std::string& source, const std::string& group);
  /// Group is the file stem.
  void load_file(const std::string& path);

  void add(const CatPtr& c, const std::string& group);
  void add(const Functor& f, const std::string& group);
  void add(const NatTrans& t, const std::string& group);
  void add(const ArrowPtr& u, const std::string& group);
  void add(const UArrMorphism& m, const std::string& group);
  void add(const UArrTwoCell& c, const std::string& group);
  void add(const MonadPtr& m, const std::string& group);
  void add(const AlgebraEntry& a, const std::string& group);
  void add(const EMndMorphism& m, const std::string& group);
  void add(const EMndTwoCell& c, const std::string& group);
  void add(const AdjPtr& a, const std::string& group);
  void add(const AdjMorphism& m, const std::string& group);
  void add(const AdjTwoCell& c, const std::string& group);
  void add(const CMonadPtr& m, const std::string& group);
  void add(const MonadMorphism& m, const std::string& group);
  void add(const MonadTwoCell& c, const std::string& group);

  CatPtr category(const std::string& name);
  Functor functor(const std::string& name);
  NatTrans nat(const std::string& name);
  ArrowPtr arrow(const std::string& name);
  UArrMorphism umorphism(const std::string& name);
  UArrTwoCell ucell(const std::string& name);
  MonadPtr monad(const std::string& name);
  AlgebraEntry algebra(const std::string& name);
  EMndMorphism emorphism(const std::string& name);
  EMndTwoCell ecell(const std::string& name);
  AdjPtr adjunction(const std::string& name);
  AdjMorphism amorphism(const std::string& name);
  AdjTwoCell acell(const std::string& name);
  CMonadPtr cmonad(const std::string& name);
  MonadMorphism mmorphism(const std::string& name);
  MonadTwoCell mcell(const std::string& name);

  bool contains(Kind kind, const std::string& name) const;
  /// Registered names of a kind in lexicographic order, optionally restricted
  /// to one group; entities derived on demand are never listed.
  std::vector<std::string> names(Kind kind, const std::string& group = {}) const;
  const std::string& group_of(Kind kind, const std::string& name) const;

  /// Builds every registered entity, recording failures instead of throwing.
  std::vector<BuildRecord> build_all();

 private:
  struct Entry {
    std::optional<Block> raw;
    std::any value;
    std::string group;
    bool building = false;
    std::optional<LawError> failure;
  };

  template <typename T>
  T get(Kind kind, const std::string& name);
  void put(Kind kind, const std::string& name, std::any value, const std::string& group);
  std::any build(const Block& b);
  std::any derive(Kind kind, const std::string& name);

  SearchBudget budget_;
  std::map<std::pair<Kind, std::string>, Entry> entries_;
};

}  // namespace adj2
