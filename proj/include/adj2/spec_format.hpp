#pragma once

#include <any>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "adj2/classical.hpp"

namespace adj2 {

enum class Kind {
  Category,
  Functor,
  Nat,
  UArrow,
  UMorphism,
  UCell,
  EMonad,
  Algebra,
  EMorphism,
  ECell,
  Adjunction,
  AMorphism,
  ACell,
  CMonad,
  MMorphism,
  MCell,
};

std::string_view kind_keyword(Kind kind);
std::optional<Kind> kind_from_keyword(std::string_view word);

/// One line inside a block. `args` holds the identifiers in order of
/// appearance with the punctuation removed; `ext A,B,h => m` gives {A, B, h, m}.
struct Directive {
  std::string keyword;
  std::vector<std::string> args;
  int line = 0;
};

/// A header line and the directives that follow it. `header` holds the
/// referenced names: {C, D} for `functor N : C -> D`, {C} for `emonad N on C`.
struct Block {
  Kind kind = Kind::Category;
  std::string name;
  std::vector<std::string> header;
  std::vector<Directive> directives;
  std::string source;
  int line = 0;

  /// First directive with this keyword, or nullptr.
  const Directive* find(std::string_view keyword) const;
  std::string where(int at) const;
  std::string where() const { return where(line); }
};

/// Splits spec text into blocks. `#` opens a comment when it starts a token.
/// Throws ParseError naming source and line.
std::vector<Block> parse_spec(std::string_view text, const std::string& source = "<input>");

/// Prints entities as self-contained spec text. Every dependency is emitted
/// once, before its first use; structurally equal entities share a block unless
/// both carry different names.
/// Unnamed functors and transformations are named `<owner>.<role>`.
class Emitter {
 public:
  std::string category(const CatPtr& c);
  std::string functor(const Functor& f, const std::string& fallback);
  std::string nat(const NatTrans& t, const std::string& fallback);
  std::string arrow(const UniversalArrow& u);
  std::string umorphism(const UArrMorphism& m);
  std::string ucell(const UArrTwoCell& c);
  std::string monad(const ExtensiveMonad& m);
  std::string algebra(const ExtensiveMonad& m, const Algebra& a);
  std::string emorphism(const EMndMorphism& m);
  std::string ecell(const EMndTwoCell& c);
  std::string adjunction(const Adjunction& a);
  std::string amorphism(const AdjMorphism& m);
  std::string acell(const AdjTwoCell& c);
  std::string cmonad(const ClassicalMonad& m);
  std::string mmorphism(const MonadMorphism& m);
  std::string mcell(const MonadTwoCell& c);

  const std::string& text() const { return out_; }

 private:
  template <typename T>
  std::optional<std::string> known(Kind kind, const T& value) const;
  template <typename T>
  std::string claim(Kind kind, std::string preferred, const T& value);

  std::map<Kind, std::vector<std::pair<std::string, std::any>>> seen_;
  std::string out_;
};

}  // namespace adj2
