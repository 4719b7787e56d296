#include "adj2/spec_format.hpp"

#include <array>
#include <cctype>
#include <set>

namespace adj2 {

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 16> kKeywords{{
    {Kind::Category, "category"},
    {Kind::Functor, "functor"},
    {Kind::Nat, "nat"},
    {Kind::UArrow, "uarrow"},
    {Kind::UMorphism, "umorphism"},
    {Kind::UCell, "ucell"},
    {Kind::EMonad, "emonad"},
    {Kind::Algebra, "algebra"},
    {Kind::EMorphism, "emorphism"},
    {Kind::ECell, "ecell"},
    {Kind::Adjunction, "adjunction"},
    {Kind::AMorphism, "amorphism"},
    {Kind::ACell, "acell"},
    {Kind::CMonad, "cmonad"},
    {Kind::MMorphism, "mmorphism"},
    {Kind::MCell, "mcell"},
}};

enum class Shape { Word, Arrow, Eq, Compose, Map1, Map2, Map3 };

std::optional<Shape> shape_of(Kind kind, std::string_view kw) {
  auto words = [&](std::initializer_list<std::string_view> allowed) -> std::optional<Shape> {
    for (auto w : allowed) {
      if (w == kw) return Shape::Word;
    }
    return std::nullopt;
  };
  switch (kind) {
    case Kind::Category:
      if (kw == "object") return Shape::Word;
      if (kw == "morphism") return Shape::Arrow;
      if (kw == "identity") return Shape::Eq;
      if (kw == "compose") return Shape::Compose;
      return std::nullopt;
    case Kind::Functor:
      if (kw == "on-object" || kw == "on-morphism") return Shape::Map1;
      return std::nullopt;
    case Kind::Nat:
      if (kw == "at") return Shape::Map1;
      return std::nullopt;
    case Kind::UArrow:
      if (kw == "left" || kw == "unit") return Shape::Map1;
      return words({"right"});
    case Kind::UMorphism:
      return words({"J", "V", "rho", "rho-inv"});
    case Kind::UCell:
    case Kind::ACell:
      return words({"alpha", "beta"});
    case Kind::EMonad:
      if (kw == "S" || kw == "unit") return Shape::Map1;
      if (kw == "ext") return Shape::Map3;
      return std::nullopt;
    case Kind::Algebra:
      if (kw == "ext") return Shape::Map2;
      return words({"carrier"});
    case Kind::EMorphism:
      if (kw == "ext") return Shape::Map3;
      return words({"P"});
    case Kind::ECell:
    case Kind::MCell:
      return words({"theta"});
    case Kind::Adjunction:
      return words({"left", "right", "unit", "counit"});
    case Kind::AMorphism:
      return words({"J", "V", "rho", "rho-inv", "lambda"});
    case Kind::CMonad:
      return words({"endo", "unit", "mult"});
    case Kind::MMorphism:
      return words({"P", "phi"});
  }
  return std::nullopt;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    parts.push_back(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace

std::string_view kind_keyword(Kind kind) {
  for (const auto& [k, w] : kKeywords) {
    if (k == kind) return w;
  }
  return "?";
}

std::optional<Kind> kind_from_keyword(std::string_view word) {
  for (const auto& [k, w] : kKeywords) {
    if (w == word) return k;
  }
  return std::nullopt;
}

const Directive* Block::find(std::string_view keyword) const {
  for (const auto& d : directives) {
    if (d.keyword == keyword) return &d;
  }
  return nullptr;
}

std::string Block::where(int at) const { return source + ":" + std::to_string(at); }

std::vector<Block> parse_spec(std::string_view text, const std::string& source) {
  std::vector<Block> blocks;
  std::set<std::string> keys;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    auto bad = [&](const std::string& why) { fail(Fault::ParseError, where + ": " + why); };

    if (auto kind = kind_from_keyword(tokens[0])) {
      if (tokens.size() < 2) bad("header lacks a name");
      Block b;
      b.kind = *kind;
      b.name = tokens[1];
      b.source = source;
      b.line = line_no;
      auto expect = [&](std::initializer_list<std::string_view> pattern) {
        // pattern entries are literals; empty entries are name slots
        if (tokens.size() != pattern.size() + 2) bad("malformed " + tokens[0] + " header");
        std::size_t i = 2;
        for (auto lit : pattern) {
          if (lit.empty()) {
            b.header.push_back(tokens[i]);
          } else if (tokens[i] != lit) {
            bad("expected '" + std::string(lit) + "' in " + tokens[0] + " header");
          }
          ++i;
        }
      };
      switch (*kind) {
        case Kind::Category:
          expect({});
          break;
        case Kind::Functor:
        case Kind::UMorphism:
        case Kind::EMorphism:
        case Kind::AMorphism:
        case Kind::MMorphism:
          expect({":", "", "->", ""});
          break;
        case Kind::Nat:
        case Kind::UCell:
        case Kind::ECell:
        case Kind::ACell:
        case Kind::MCell:
          expect({":", "", "=>", ""});
          break;
        case Kind::UArrow:
        case Kind::Adjunction:
          expect({":", "", "|", ""});
          break;
        case Kind::EMonad:
        case Kind::Algebra:
        case Kind::CMonad:
          expect({"on", ""});
          break;
      }
      keys.clear();
      blocks.push_back(std::move(b));
      continue;
    }

    if (blocks.empty()) bad("directive '" + tokens[0] + "' outside any block");
    Block& b = blocks.back();
    auto shape = shape_of(b.kind, tokens[0]);
    if (!shape) bad("unknown directive '" + tokens[0] + "' in " + std::string(kind_keyword(b.kind)) + " block");
    Directive d{tokens[0], {}, line_no};
    std::string key = tokens[0];
    auto literal = [&](std::size_t i, std::string_view lit) {
      if (tokens[i] != lit) bad("expected '" + std::string(lit) + "' in " + tokens[0] + " directive");
    };
    switch (*shape) {
      case Shape::Word:
        if (tokens.size() != 2) bad("'" + tokens[0] + "' takes one name");
        d.args = {tokens[1]};
        if (tokens[0] == "object") key += " " + tokens[1];
        break;
      case Shape::Arrow:
        if (tokens.size() != 6) bad("expected 'morphism <id> : <src> -> <tgt>'");
        literal(2, ":");
        literal(4, "->");
        d.args = {tokens[1], tokens[3], tokens[5]};
        key += " " + tokens[1];
        break;
      case Shape::Eq:
        if (tokens.size() != 4) bad("expected 'identity <obj> = <id>'");
        literal(2, "=");
        d.args = {tokens[1], tokens[3]};
        key += " " + tokens[1];
        break;
      case Shape::Compose:
        if (tokens.size() != 6) bad("expected 'compose <g> . <f> = <h>'");
        literal(2, ".");
        literal(4, "=");
        d.args = {tokens[1], tokens[3], tokens[5]};
        key += " " + tokens[1] + " " + tokens[3];
        break;
      case Shape::Map1:
      case Shape::Map2:
      case Shape::Map3: {
        const std::size_t arity = *shape == Shape::Map1 ? 1 : *shape == Shape::Map2 ? 2 : 3;
        if (tokens.size() < 4 || tokens[tokens.size() - 2] != "=>") bad("expected '" + tokens[0] + " ... => <id>'");
        std::string lhs;
        for (std::size_t i = 1; i + 2 < tokens.size(); ++i) lhs += tokens[i];
        auto parts = arity == 1 ? std::vector<std::string>{lhs} : split_commas(lhs);
        if (parts.size() != arity) bad("'" + tokens[0] + "' expects " + std::to_string(arity) + " comma-separated names");
        for (const auto& p : parts) {
          if (p.empty()) bad("empty name in '" + tokens[0] + "'");
          key += " " + p;
        }
        d.args = std::move(parts);
        d.args.push_back(tokens.back());
        break;
      }
    }
    if (!keys.insert(key).second) bad("duplicate definition '" + key + "' in " + b.name);
    b.directives.push_back(std::move(d));
  }
  return blocks;
}

namespace {

bool same_value(const CatPtr& a, const CatPtr& b) { return same_category(a, b); }
template <typename T>
bool same_value(const T& a, const T& b) {
  return a == b;
}

const std::string& own_name(const CatPtr& c) { return c->name(); }
template <typename T>
const std::string& own_name(const T& v) {
  return v.name;
}

// A stored block stands for a value when the tables agree and the names do not conflict.
bool same_label(const std::string& stored, const std::string& own) {
  return own.empty() || stored == own || stored.rfind(own + "~", 0) == 0;
}

std::string owner_or(const std::string& name, std::string_view fallback) {
  return name.empty() ? std::string(fallback) : name;
}

}  // namespace

template <typename T>
std::optional<std::string> Emitter::known(Kind kind, const T& value) const {
  auto it = seen_.find(kind);
  if (it == seen_.end()) return std::nullopt;
  for (const auto& [name, stored] : it->second) {
    const T* v = std::any_cast<T>(&stored);
    if (v && same_value(*v, value) && same_label(name, own_name(value))) return name;
  }
  return std::nullopt;
}

template <typename T>
std::string Emitter::claim(Kind kind, std::string preferred, const T& value) {
  auto& list = seen_[kind];
  auto taken = [&](const std::string& n) {
    for (const auto& entry : list) {
      if (entry.first == n) return true;
    }
    return false;
  };
  std::string name = preferred;
  for (int k = 2; taken(name); ++k) name = preferred + "~" + std::to_string(k);
  list.emplace_back(name, value);
  return name;
}

std::string Emitter::category(const CatPtr& c) {
  if (auto n = known(Kind::Category, c)) return *n;
  std::string name = claim(Kind::Category, owner_or(c->name(), "cat"), c);
  std::ostringstream s;
  s << "category " << name << "\n";
  for (Obj a : c->objects()) s << "  object " << c->id(a) << "\n";
  for (Mor f : c->morphisms()) s << "  morphism " << c->id(f) << " : " << c->id(c->source(f)) << " -> " << c->id(c->target(f)) << "\n";
  for (Obj a : c->objects()) s << "  identity " << c->id(a) << " = " << c->id(c->identity(a)) << "\n";
  for (Mor g : c->morphisms()) {
    for (Mor f : c->morphisms()) {
      if (c->composable(g, f)) s << "  compose " << c->id(g) << " . " << c->id(f) << " = " << c->id(c->compose(g, f)) << "\n";
    }
  }
  out_ += s.str() + "\n";
  return name;
}

std::string Emitter::functor(const Functor& f, const std::string& fallback) {
  std::string cs = category(f.source);
  std::string ct = category(f.target);
  if (auto n = known(Kind::Functor, f)) return *n;
  std::string name = claim(Kind::Functor, owner_or(f.name, fallback), f);
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  std::ostringstream s;
  s << "functor " << name << " : " << cs << " -> " << ct << "\n";
  for (Obj a : c.objects()) s << "  on-object " << c.id(a) << " => " << d.id(f(a)) << "\n";
  for (Mor m : c.morphisms()) s << "  on-morphism " << c.id(m) << " => " << d.id(f(m)) << "\n";
  out_ += s.str() + "\n";
  return name;
}

std::string Emitter::nat(const NatTrans& t, const std::string& fallback) {
  const std::string base = owner_or(t.name, fallback);
  std::string fs = functor(t.source, base + ".source");
  std::string gs = functor(t.target, base + ".target");
  if (auto n = known(Kind::Nat, t)) return *n;
  std::string name = claim(Kind::Nat, base, t);
  const FinCategory& c = *t.source.source;
  const FinCategory& d = *t.source.target;
  std::ostringstream s;
  s << "nat " << name << " : " << fs << " => " << gs << "\n";
  for (Obj a : c.objects()) s << "  at " << c.id(a) << " => " << d.id(t[a]) << "\n";
  out_ += s.str() + "\n";
  return name;
}

std::string Emitter::arrow(const UniversalArrow& u) {
  const std::string base = owner_or(u.name, "arrow");
  std::string cs = category(u.base);
  std::string xs = category(u.upstairs);
  std::string r = functor(u.right, base + ".right");
  if (auto n = known(Kind::UArrow, u)) return *n;
  std::string name = claim(Kind::UArrow, base, u);
  const FinCategory& c = *u.base;
  std::ostringstream s;
  s << "uarrow " << name << " : " << cs << " | " << xs << "\n";
  s << "  right " << r << "\n";
  for (Obj a : c.objects()) s << "  left " << c.id(a) << " => " << u.upstairs->id(u.left(a)) << "\n";
  for (Obj a : c.objects()) s << "  unit " << c.id(a) << " => " << c.id(u.unit_at(a)) << "\n";
  out_ += s.str() + "\n";
  return name;
}

std::string Emitter::umorphism(const UArrMorphism& m) {
  const std::string base = owner_or(m.name, "umorphism");
  std::string src = arrow(*m.source);
  std::string tgt = arrow(*m.target);
  std::string j = functor(m.J, base + ".J");
  std::string v = functor(m.V, base + ".V");
  std::string rho = nat(m.rho, base + ".rho");
  std::string inv = nat(m.rho_inv, base + ".rho-inv");
  if (auto n = known(Kind::UMorphism, m)) return *n;
  std::string name = claim(Kind::UMorphism, base, m);
  out_ += "umorphism " + name + " : " + src + " -> " + tgt + "\n  J " + j + "\n  V " + v + "\n  rho " + rho +
          "\n  rho-inv " + inv + "\n\n";
  return name;
}

std::string Emitter::ucell(const UArrTwoCell& c) {
  const std::string base = owner_or(c.name, "ucell");
  std::string src = umorphism(c.source);
  std::string tgt = umorphism(c.target);
  std::string a = nat(c.alpha, base + ".alpha");
  std::string b = nat(c.beta, base + ".beta");
  if (auto n = known(Kind::UCell, c)) return *n;
  std::string name = claim(Kind::UCell, base, c);
  out_ += "ucell " + name + " : " + src + " => " + tgt + "\n  alpha " + a + "\n  beta " + b + "\n\n";
  return name;
}

std::string Emitter::monad(const ExtensiveMonad& m) {
  std::string cs = category(m.base);
  if (auto n = known(Kind::EMonad, m)) return *n;
  std::string name = claim(Kind::EMonad, owner_or(m.name, "monad"), m);
  const FinCategory& c = *m.base;
  std::ostringstream s;
  s << "emonad " << name << " on " << cs << "\n";
  for (Obj a : c.objects()) s << "  S " << c.id(a) << " => " << c.id(m.S(a)) << "\n";
  for (Obj a : c.objects()) s << "  unit " << c.id(a) << " => " << c.id(m.unit_at(a)) << "\n";
  for (const auto& [key, e] : m.ext) {
    s << "  ext " << c.id(Obj{key[0]}) << "," << c.id(Obj{key[1]}) << "," << c.id(Mor{key[2]}) << " => " << c.id(e) << "\n";
  }
  out_ += s.str() + "\n";
  return name;
}

std::string Emitter::algebra(const ExtensiveMonad& m, const Algebra& a) {
  std::string ms = monad(m);
  std::pair<std::string, Algebra> value{ms, a};
  auto it = seen_.find(Kind::Algebra);
  if (it != seen_.end()) {
    for (const auto& [name, stored] : it->second) {
      const auto* v = std::any_cast<std::pair<std::string, Algebra>>(&stored);
      if (v && v->first == ms && v->second == a && same_label(name, a.name)) return name;
    }
  }
  std::string name = claim(Kind::Algebra, owner_or(a.name, "algebra"), value);
  const FinCategory& c = *m.base;
  std::ostringstream s;
  s << "algebra " << name << " on " << ms << "\n  carrier " << c.id(a.carrier) << "\n";
  for (const auto& [key, e] : a.ext) s << "  ext " << c.id(Obj{key[0]}) << "," << c.id(Mor{key[1]}) << " => " << c.id(e) << "\n";
  out_ += s.str() + "\n";
  return name;
}

std::string Emitter::emorphism(const EMndMorphism& m) {
  const std::string base = owner_or(m.name, "emorphism");
  std::string src = monad(*m.source);
  std::string tgt = monad(*m.target);
  std::string p = functor(m.P, base + ".P");
  if (auto n = known(Kind::EMorphism, m)) return *n;
  std::string name = claim(Kind::EMorphism, base, m);
  const FinCategory& c = *m.source->base;
  const FinCategory& d = *m.target->base;
  std::ostringstream s;
  s << "emorphism " << name << " : " << src << " -> " << tgt << "\n  P " << p << "\n";
  for (const auto& [key, e] : m.ext) {
    s << "  ext " << d.id(Obj{key[0]}) << "," << c.id(Obj{key[1]}) << "," << d.id(Mor{key[2]}) << " => " << d.id(e) << "\n";
  }
  out_ += s.str() + "\n";
  return name;
}

std::string Emitter::ecell(const EMndTwoCell& c) {
  const std::string base = owner_or(c.name, "ecell");
  std::string src = emorphism(c.source);
  std::string tgt = emorphism(c.target);
  std::string t = nat(c.theta, base + ".theta");
  if (auto n = known(Kind::ECell, c)) return *n;
  std::string name = claim(Kind::ECell, base, c);
  out_ += "ecell " + name + " : " + src + " => " + tgt + "\n  theta " + t + "\n\n";
  return name;
}

std::string Emitter::adjunction(const Adjunction& a) {
  const std::string base = owner_or(a.name, "adjunction");
  std::string cs = category(a.base());
  std::string xs = category(a.upstairs());
  std::string l = functor(a.left, base + ".left");
  std::string r = functor(a.right, base + ".right");
  std::string u = nat(a.unit, base + ".unit");
  std::string e = nat(a.counit, base + ".counit");
  if (auto n = known(Kind::Adjunction, a)) return *n;
  std::string name = claim(Kind::Adjunction, base, a);
  out_ += "adjunction " + name + " : " + cs + " | " + xs + "\n  left " + l + "\n  right " + r + "\n  unit " + u +
          "\n  counit " + e + "\n\n";
  return name;
}

std::string Emitter::amorphism(const AdjMorphism& m) {
  const std::string base = owner_or(m.name, "amorphism");
  std::string src = adjunction(*m.source);
  std::string tgt = adjunction(*m.target);
  std::string j = functor(m.J, base + ".J");
  std::string v = functor(m.V, base + ".V");
  std::string rho = nat(m.rho, base + ".rho");
  std::string inv = nat(m.rho_inv, base + ".rho-inv");
  std::string lambda = nat(m.lambda, base + ".lambda");
  if (auto n = known(Kind::AMorphism, m)) return *n;
  std::string name = claim(Kind::AMorphism, base, m);
  out_ += "amorphism " + name + " : " + src + " -> " + tgt + "\n  J " + j + "\n  V " + v + "\n  rho " + rho +
          "\n  rho-inv " + inv + "\n  lambda " + lambda + "\n\n";
  return name;
}

std::string Emitter::acell(const AdjTwoCell& c) {
  const std::string base = owner_or(c.name, "acell");
  std::string src = amorphism(c.source);
  std::string tgt = amorphism(c.target);
  std::string a = nat(c.alpha, base + ".alpha");
  std::string b = nat(c.beta, base + ".beta");
  if (auto n = known(Kind::ACell, c)) return *n;
  std::string name = claim(Kind::ACell, base, c);
  out_ += "acell " + name + " : " + src + " => " + tgt + "\n  alpha " + a + "\n  beta " + b + "\n\n";
  return name;
}

std::string Emitter::cmonad(const ClassicalMonad& m) {
  const std::string base = owner_or(m.name, "cmonad");
  std::string cs = category(m.base());
  std::string e = functor(m.endo, base + ".endo");
  std::string u = nat(m.unit, base + ".unit");
  std::string mu = nat(m.mult, base + ".mult");
  if (auto n = known(Kind::CMonad, m)) return *n;
  std::string name = claim(Kind::CMonad, base, m);
  out_ += "cmonad " + name + " on " + cs + "\n  endo " + e + "\n  unit " + u + "\n  mult " + mu + "\n\n";
  return name;
}

std::string Emitter::mmorphism(const MonadMorphism& m) {
  const std::string base = owner_or(m.name, "mmorphism");
  std::string src = cmonad(*m.source);
  std::string tgt = cmonad(*m.target);
  std::string p = functor(m.P, base + ".P");
  std::string phi = nat(m.phi, base + ".phi");
  if (auto n = known(Kind::MMorphism, m)) return *n;
  std::string name = claim(Kind::MMorphism, base, m);
  out_ += "mmorphism " + name + " : " + src + " -> " + tgt + "\n  P " + p + "\n  phi " + phi + "\n\n";
  return name;
}

std::string Emitter::mcell(const MonadTwoCell& c) {
  const std::string base = owner_or(c.name, "mcell");
  std::string src = mmorphism(c.source);
  std::string tgt = mmorphism(c.target);
  std::string t = nat(c.theta, base + ".theta");
  if (auto n = known(Kind::MCell, c)) return *n;
  std::string name = claim(Kind::MCell, base, c);
  out_ += "mcell " + name + " : " + src + " => " + tgt + "\n  theta " + t + "\n\n";
  return name;
}

}  // namespace adj2
