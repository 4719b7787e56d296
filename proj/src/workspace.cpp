#include "adj2/workspace.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace adj2 {

namespace {

const Directive& require(const Block& b, std::string_view keyword) {
  if (const Directive* d = b.find(keyword)) return *d;
  fail(Fault::IllTyped, b.where() + ": " + std::string(kind_keyword(b.kind)) + " '" + b.name + "' lacks '" +
                            std::string(keyword) + "'");
}

std::vector<const Directive*> all(const Block& b, std::string_view keyword) {
  std::vector<const Directive*> found;
  for (const auto& d : b.directives) {
    if (d.keyword == keyword) found.push_back(&d);
  }
  return found;
}

void check_shape(bool ok, const Block& b, const std::string& what) {
  if (!ok) fail(Fault::ShapeMismatch, b.where() + ": " + b.name + ": " + what);
}

std::vector<Obj> object_table(const Block& b, std::string_view keyword, const FinCategory& c, const FinCategory& d) {
  std::vector<Obj> table(static_cast<std::size_t>(c.object_count()), Obj{});
  for (const Directive* e : all(b, keyword)) table[static_cast<std::size_t>(c.object(e->args[0]).index)] = d.object(e->args[1]);
  return table;
}

std::vector<Mor> morphism_table(const Block& b, std::string_view keyword, const FinCategory& c, const FinCategory& d) {
  std::vector<Mor> table(static_cast<std::size_t>(c.object_count()), Mor{});
  for (const Directive* e : all(b, keyword)) {
    table[static_cast<std::size_t>(c.object(e->args[0]).index)] = d.morphism(e->args[1]);
  }
  return table;
}

// "f(inner)" -> {f, inner}
std::optional<std::pair<std::string, std::string>> split_call(const std::string& name) {
  auto open = name.find('(');
  if (open == std::string::npos || open == 0 || name.back() != ')') return std::nullopt;
  return std::make_pair(name.substr(0, open), name.substr(open + 1, name.size() - open - 2));
}

}  // namespace

void Workspace::load(std::vector<Block> blocks, const std::string& group) {
  for (auto& b : blocks) {
    auto key = std::make_pair(b.kind, b.name);
    if (auto it = entries_.find(key); it != entries_.end()) {
      std::string first = it->second.raw ? " (first at " + it->second.raw->where() + ")" : "";
      fail(Fault::ParseError, b.where() + ": duplicate " + std::string(kind_keyword(b.kind)) + " '" + b.name + "'" + first);
    }
    Entry e;
    e.group = group;
    e.raw = std::move(b);
    entries_.emplace(std::move(key), std::move(e));
  }
}

void Workspace::load_text(std::string_view text, const std::string& source, const std::string& group) {
  load(parse_spec(text, source), group);
}

void Workspace::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Fault::ParseError, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  load_text(s.str(), path, std::filesystem::path(path).stem().string());
}

void Workspace::put(Kind kind, const std::string& name, std::any value, const std::string& group) {
  if (name.empty()) fail(Fault::IllTyped, "cannot register an unnamed " + std::string(kind_keyword(kind)));
  auto key = std::make_pair(kind, name);
  if (entries_.count(key)) fail(Fault::ParseError, "duplicate " + std::string(kind_keyword(kind)) + " '" + name + "'");
  Entry e;
  e.group = group;
  e.value = std::move(value);
  entries_.emplace(std::move(key), std::move(e));
}

void Workspace::add(const CatPtr& c, const std::string& group) { put(Kind::Category, c->name(), c, group); }
void Workspace::add(const Functor& f, const std::string& group) { put(Kind::Functor, f.name, f, group); }
void Workspace::add(const NatTrans& t, const std::string& group) { put(Kind::Nat, t.name, t, group); }
void Workspace::add(const ArrowPtr& u, const std::string& group) { put(Kind::UArrow, u->name, u, group); }
void Workspace::add(const UArrMorphism& m, const std::string& group) { put(Kind::UMorphism, m.name, m, group); }
void Workspace::add(const UArrTwoCell& c, const std::string& group) { put(Kind::UCell, c.name, c, group); }
void Workspace::add(const MonadPtr& m, const std::string& group) { put(Kind::EMonad, m->name, m, group); }
void Workspace::add(const AlgebraEntry& a, const std::string& group) { put(Kind::Algebra, a.algebra.name, a, group); }
void Workspace::add(const EMndMorphism& m, const std::string& group) { put(Kind::EMorphism, m.name, m, group); }
void Workspace::add(const EMndTwoCell& c, const std::string& group) { put(Kind::ECell, c.name, c, group); }
void Workspace::add(const AdjPtr& a, const std::string& group) { put(Kind::Adjunction, a->name, a, group); }
void Workspace::add(const AdjMorphism& m, const std::string& group) { put(Kind::AMorphism, m.name, m, group); }
void Workspace::add(const AdjTwoCell& c, const std::string& group) { put(Kind::ACell, c.name, c, group); }
void Workspace::add(const CMonadPtr& m, const std::string& group) { put(Kind::CMonad, m->name, m, group); }
void Workspace::add(const MonadMorphism& m, const std::string& group) { put(Kind::MMorphism, m.name, m, group); }
void Workspace::add(const MonadTwoCell& c, const std::string& group) { put(Kind::MCell, c.name, c, group); }

template <typename T>
T Workspace::get(Kind kind, const std::string& name) {
  auto key = std::make_pair(kind, name);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    std::any derived = derive(kind, name);
    if (!derived.has_value()) fail(Fault::UnknownEntity, "no " + std::string(kind_keyword(kind)) + " named '" + name + "'");
    Entry e;
    e.group = "derived";
    e.value = std::move(derived);
    it = entries_.emplace(std::move(key), std::move(e)).first;
  }
  Entry& e = it->second;
  if (!e.value.has_value()) {
    if (e.failure) throw *e.failure;
    if (e.building) fail(Fault::ParseError, e.raw->where() + ": cyclic reference through '" + name + "'");
    e.building = true;
    Block raw = *e.raw;
    try {
      std::any value = build(raw);
      Entry& again = entries_.at(std::make_pair(kind, name));
      again.building = false;
      again.value = std::move(value);
    } catch (const LawError& err) {
      Entry& again = entries_.at(std::make_pair(kind, name));
      again.building = false;
      again.failure = err;
      throw;
    }
  }
  return std::any_cast<T>(entries_.at(std::make_pair(kind, name)).value);
}

CatPtr Workspace::category(const std::string& n) { return get<CatPtr>(Kind::Category, n); }
Functor Workspace::functor(const std::string& n) { return get<Functor>(Kind::Functor, n); }
NatTrans Workspace::nat(const std::string& n) { return get<NatTrans>(Kind::Nat, n); }
ArrowPtr Workspace::arrow(const std::string& n) { return get<ArrowPtr>(Kind::UArrow, n); }
UArrMorphism Workspace::umorphism(const std::string& n) { return get<UArrMorphism>(Kind::UMorphism, n); }
UArrTwoCell Workspace::ucell(const std::string& n) { return get<UArrTwoCell>(Kind::UCell, n); }
MonadPtr Workspace::monad(const std::string& n) { return get<MonadPtr>(Kind::EMonad, n); }
AlgebraEntry Workspace::algebra(const std::string& n) { return get<AlgebraEntry>(Kind::Algebra, n); }
EMndMorphism Workspace::emorphism(const std::string& n) { return get<EMndMorphism>(Kind::EMorphism, n); }
EMndTwoCell Workspace::ecell(const std::string& n) { return get<EMndTwoCell>(Kind::ECell, n); }
AdjPtr Workspace::adjunction(const std::string& n) { return get<AdjPtr>(Kind::Adjunction, n); }
AdjMorphism Workspace::amorphism(const std::string& n) { return get<AdjMorphism>(Kind::AMorphism, n); }
AdjTwoCell Workspace::acell(const std::string& n) { return get<AdjTwoCell>(Kind::ACell, n); }
CMonadPtr Workspace::cmonad(const std::string& n) { return get<CMonadPtr>(Kind::CMonad, n); }
MonadMorphism Workspace::mmorphism(const std::string& n) { return get<MonadMorphism>(Kind::MMorphism, n); }
MonadTwoCell Workspace::mcell(const std::string& n) { return get<MonadTwoCell>(Kind::MCell, n); }

bool Workspace::contains(Kind kind, const std::string& name) const { return entries_.count({kind, name}) > 0; }

std::vector<std::string> Workspace::names(Kind kind, const std::string& group) const {
  std::vector<std::string> out;
  for (const auto& [key, e] : entries_) {
    if (key.first != kind || e.group == "derived") continue;
    if (!group.empty() && e.group != group) continue;
    out.push_back(key.second);
  }
  return out;
}

const std::string& Workspace::group_of(Kind kind, const std::string& name) const {
  auto it = entries_.find({kind, name});
  if (it == entries_.end()) fail(Fault::UnknownEntity, "no " + std::string(kind_keyword(kind)) + " named '" + name + "'");
  return it->second.group;
}

std::vector<BuildRecord> Workspace::build_all() {
  std::vector<std::pair<Kind, std::string>> keys;
  for (const auto& [key, e] : entries_) {
    if (e.group != "derived") keys.push_back(key);
  }
  std::vector<BuildRecord> records;
  for (const auto& [kind, name] : keys) {
    BuildRecord r{kind, name, entries_.at({kind, name}).group, std::nullopt};
    try {
      switch (kind) {
        case Kind::Category: category(name); break;
        case Kind::Functor: functor(name); break;
        case Kind::Nat: nat(name); break;
        case Kind::UArrow: arrow(name); break;
        case Kind::UMorphism: umorphism(name); break;
        case Kind::UCell: ucell(name); break;
        case Kind::EMonad: monad(name); break;
        case Kind::Algebra: algebra(name); break;
        case Kind::EMorphism: emorphism(name); break;
        case Kind::ECell: ecell(name); break;
        case Kind::Adjunction: adjunction(name); break;
        case Kind::AMorphism: amorphism(name); break;
        case Kind::ACell: acell(name); break;
        case Kind::CMonad: cmonad(name); break;
        case Kind::MMorphism: mmorphism(name); break;
        case Kind::MCell: mcell(name); break;
      }
    } catch (const LawError& e) {
      r.error = e;
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::any Workspace::derive(Kind kind, const std::string& name) {
  auto call = split_call(name);
  if (!call) return {};
  const auto& [f, x] = *call;
  switch (kind) {
    case Kind::EMonad:
      if (f == "phi") return phi_on_object(*arrow(x));
      if (f == "K") return K_on_object(*cmonad(x));
      break;
    case Kind::UArrow:
      if (f == "psi") return psi_on_object(monad(x), budget_).arrow;
      if (f == "G") return G_on_object(*adjunction(x));
      break;
    case Kind::Adjunction:
      if (f == "F") return F_on_object(*arrow(x));
      break;
    case Kind::CMonad:
      if (f == "H") return H_on_object(*monad(x));
      break;
    case Kind::EMorphism:
      if (f == "phi") return phi_on_morphism(umorphism(x));
      if (f == "K") return K_on_morphism(mmorphism(x));
      break;
    case Kind::UMorphism:
      if (f == "psi") return psi_on_morphism(emorphism(x), budget_);
      if (f == "G") return G_on_morphism(amorphism(x));
      break;
    case Kind::AMorphism:
      if (f == "F") return F_on_morphism(umorphism(x));
      break;
    case Kind::MMorphism:
      if (f == "H") return H_on_morphism(emorphism(x));
      break;
    case Kind::ECell:
      if (f == "phi") return phi_on_two_cell(ucell(x));
      if (f == "K") return K_on_two_cell(mcell(x));
      break;
    case Kind::UCell:
      if (f == "psi") return psi_on_two_cell(ecell(x), budget_);
      if (f == "G") return G_on_two_cell(acell(x));
      break;
    case Kind::ACell:
      if (f == "F") return F_on_two_cell(ucell(x));
      break;
    case Kind::MCell:
      if (f == "H") return H_on_two_cell(ecell(x));
      break;
    default:
      break;
  }
  return {};
}

std::any Workspace::build(const Block& b) {
  const auto& h = b.header;
  switch (b.kind) {
    case Kind::Category: {
      CategoryDescription d;
      d.name = b.name;
      for (const auto& dir : b.directives) {
        if (dir.keyword == "object") d.objects.push_back(dir.args[0]);
        if (dir.keyword == "morphism") d.morphisms.push_back({dir.args[0], dir.args[1], dir.args[2]});
        if (dir.keyword == "identity") d.identities.emplace_back(dir.args[0], dir.args[1]);
        if (dir.keyword == "compose") d.composites.push_back({dir.args[0], dir.args[1], dir.args[2]});
      }
      return validate_category(d);
    }
    case Kind::Functor: {
      Functor f;
      f.name = b.name;
      f.source = category(h[0]);
      f.target = category(h[1]);
      f.objects = object_table(b, "on-object", *f.source, *f.target);
      f.morphisms.assign(static_cast<std::size_t>(f.source->morphism_count()), Mor{});
      for (const Directive* e : all(b, "on-morphism")) {
        f.morphisms[static_cast<std::size_t>(f.source->morphism(e->args[0]).index)] = f.target->morphism(e->args[1]);
      }
      return validate_functor(std::move(f));
    }
    case Kind::Nat: {
      NatTrans t;
      t.name = b.name;
      t.source = functor(h[0]);
      t.target = functor(h[1]);
      check_shape(same_category(t.source.source, t.target.source) && same_category(t.source.target, t.target.target),
                  b, "functors are not parallel");
      t.components = morphism_table(b, "at", *t.source.source, *t.source.target);
      return validate_nat_trans(std::move(t));
    }
    case Kind::UArrow: {
      CatPtr c = category(h[0]);
      CatPtr x = category(h[1]);
      Functor r = functor(require(b, "right").args[0]);
      check_shape(same_category(r.source, x) && same_category(r.target, c), b, "right functor is not X -> C");
      ObjectFunction l{c, x, object_table(b, "left", *c, *x)};
      return validate_universal_arrow(b.name, std::move(r), std::move(l), morphism_table(b, "unit", *c, *c));
    }
    case Kind::UMorphism: {
      UArrMorphism m;
      m.name = b.name;
      m.source = arrow(h[0]);
      m.target = arrow(h[1]);
      m.J = functor(require(b, "J").args[0]);
      m.V = functor(require(b, "V").args[0]);
      m.rho = nat(require(b, "rho").args[0]);
      m.rho_inv = nat(require(b, "rho-inv").args[0]);
      return validate_uarr_morphism(std::move(m));
    }
    case Kind::UCell: {
      UArrTwoCell c{b.name, umorphism(h[0]), umorphism(h[1]), nat(require(b, "alpha").args[0]),
                    nat(require(b, "beta").args[0])};
      return validate_uarr_two_cell(std::move(c));
    }
    case Kind::EMonad: {
      CatPtr c = category(h[0]);
      ObjectFunction s{c, c, object_table(b, "S", *c, *c)};
      std::map<Key3, Mor> ext;
      for (const Directive* e : all(b, "ext")) {
        ext[Key3{c->object(e->args[0]).index, c->object(e->args[1]).index, c->morphism(e->args[2]).index}] =
            c->morphism(e->args[3]);
      }
      return validate_extensive_monad(b.name, std::move(s), morphism_table(b, "unit", *c, *c), std::move(ext));
    }
    case Kind::Algebra: {
      MonadPtr m = monad(h[0]);
      const FinCategory& c = *m->base;
      Algebra a;
      a.name = b.name;
      a.carrier = c.object(require(b, "carrier").args[0]);
      for (const Directive* e : all(b, "ext")) {
        a.ext[Key2{c.object(e->args[0]).index, c.morphism(e->args[1]).index}] = c.morphism(e->args[2]);
      }
      return AlgebraEntry{m, validate_algebra(*m, std::move(a))};
    }
    case Kind::EMorphism: {
      EMndMorphism m;
      m.name = b.name;
      m.source = monad(h[0]);
      m.target = monad(h[1]);
      m.P = functor(require(b, "P").args[0]);
      const FinCategory& c = *m.source->base;
      const FinCategory& d = *m.target->base;
      for (const Directive* e : all(b, "ext")) {
        m.ext[Key3{d.object(e->args[0]).index, c.object(e->args[1]).index, d.morphism(e->args[2]).index}] =
            d.morphism(e->args[3]);
      }
      return validate_emnd_morphism(std::move(m));
    }
    case Kind::ECell: {
      EMndTwoCell c{b.name, emorphism(h[0]), emorphism(h[1]), nat(require(b, "theta").args[0])};
      return validate_emnd_two_cell(std::move(c));
    }
    case Kind::Adjunction: {
      Adjunction a;
      a.name = b.name;
      a.left = functor(require(b, "left").args[0]);
      a.right = functor(require(b, "right").args[0]);
      a.unit = nat(require(b, "unit").args[0]);
      a.counit = nat(require(b, "counit").args[0]);
      check_shape(same_category(a.left.source, category(h[0])) && same_category(a.left.target, category(h[1])), b,
                  "left functor is not C -> X");
      return validate_adjunction(std::move(a));
    }
    case Kind::AMorphism: {
      AdjMorphism m;
      m.name = b.name;
      m.source = adjunction(h[0]);
      m.target = adjunction(h[1]);
      m.J = functor(require(b, "J").args[0]);
      m.V = functor(require(b, "V").args[0]);
      m.rho = nat(require(b, "rho").args[0]);
      m.rho_inv = nat(require(b, "rho-inv").args[0]);
      m.lambda = nat(require(b, "lambda").args[0]);
      return validate_adj_morphism(std::move(m));
    }
    case Kind::ACell: {
      AdjTwoCell c{b.name, amorphism(h[0]), amorphism(h[1]), nat(require(b, "alpha").args[0]),
                   nat(require(b, "beta").args[0])};
      return validate_adj_two_cell(std::move(c));
    }
    case Kind::CMonad: {
      ClassicalMonad m;
      m.name = b.name;
      m.endo = functor(require(b, "endo").args[0]);
      m.unit = nat(require(b, "unit").args[0]);
      m.mult = nat(require(b, "mult").args[0]);
      check_shape(same_category(m.endo.source, category(h[0])), b, "endofunctor is not on the named category");
      return validate_classical_monad(std::move(m));
    }
    case Kind::MMorphism: {
      MonadMorphism m;
      m.name = b.name;
      m.source = cmonad(h[0]);
      m.target = cmonad(h[1]);
      m.P = functor(require(b, "P").args[0]);
      m.phi = nat(require(b, "phi").args[0]);
      return validate_monad_morphism(std::move(m));
    }
    case Kind::MCell: {
      MonadTwoCell c{b.name, mmorphism(h[0]), mmorphism(h[1]), nat(require(b, "theta").args[0])};
      return validate_monad_two_cell(std::move(c));
    }
  }
  fail(Fault::Internal, "unhandled block kind");
}

}  // namespace adj2
