#include "adj2/emnd.hpp"

#include <algorithm>

namespace adj2 {

namespace {

std::string who(const std::string& name, std::string_view kind) {
  return name.empty() ? std::string(kind) : std::string(kind) + " '" + name + "'";
}

bool valid(Mor f, const FinCategory& c) { return f.index >= 0 && f.index < c.morphism_count(); }

}  // namespace

Mor ExtensiveMonad::extend(Obj a, Obj b, Mor h) const {
  auto it = ext.find(Key3{a.index, b.index, h.index});
  if (it == ext.end()) {
    fail(Fault::UnknownEntity, who(name, "monad") + " has no extension for (" + base->id(a) + ", " + base->id(b) +
                                   ", " + base->id(h) + ")");
  }
  return it->second;
}

bool operator==(const ExtensiveMonad& a, const ExtensiveMonad& b) {
  return same_category(a.base, b.base) && a.endo == b.endo && a.unit == b.unit && a.ext == b.ext;
}

MonadPtr validate_extensive_monad(std::string name, ObjectFunction endo, std::vector<Mor> unit,
                                  std::map<Key3, Mor> ext) {
  auto m = std::make_shared<ExtensiveMonad>();
  m->name = std::move(name);
  m->base = endo.source;
  if (!same_category(endo.source, endo.target)) fail(Fault::ShapeMismatch, who(m->name, "monad") + ": S is not an endofunction");
  m->endo = validate_object_function(std::move(endo));
  m->unit = std::move(unit);
  m->ext = std::move(ext);
  const FinCategory& c = *m->base;
  const std::string label = who(m->name, "monad");

  if (m->unit.size() != static_cast<std::size_t>(c.object_count())) fail(Fault::IllTyped, label + ": unit is not total");
  for (Obj a : c.objects()) {
    Mor eta = m->unit_at(a);
    if (!valid(eta, c) || c.source(eta) != a || c.target(eta) != m->S(a)) {
      fail(Fault::IllTyped, label + ": unit at " + c.id(a) + " is not A -> S A");
    }
  }
  std::size_t expected = 0;
  for (Obj a : c.objects()) {
    for (Obj b : c.objects()) {
      for (Mor h : c.hom(a, m->S(b))) {
        ++expected;
        auto it = m->ext.find(Key3{a.index, b.index, h.index});
        if (it == m->ext.end()) {
          fail(Fault::IllTyped, label + ": no extension for h = " + c.id(h) + " with B = " + c.id(b));
        }
        Mor e = it->second;
        if (!valid(e, c) || c.source(e) != m->S(a) || c.target(e) != m->S(b)) {
          fail(Fault::LawB, label + ": extension of h = " + c.id(h) + " is not S A -> S B");
        }
      }
    }
  }
  if (m->ext.size() != expected) fail(Fault::IllTyped, label + ": extension table has entries outside its domain");

  for (Obj a : c.objects()) {
    if (m->extend(a, a, m->unit_at(a)) != c.identity(m->S(a))) {
      fail(Fault::LawA, label + ": (eta A)^{SA} != 1 at A = " + c.id(a));
    }
  }
  for (const auto& [key, e] : m->ext) {
    Obj a{key[0]};
    Mor h{key[2]};
    if (c.compose(e, m->unit_at(a)) != h) fail(Fault::LawB, label + ": h^{SB} . eta A != h at h = " + c.id(h));
  }
  for (const auto& [hk, he] : m->ext) {
    Obj a{hk[0]};
    Obj b{hk[1]};
    Mor h{hk[2]};
    for (Obj cc : c.objects()) {
      for (Mor k : c.hom(b, m->S(cc))) {
        Mor ke = m->extend(b, cc, k);
        if (m->extend(a, cc, c.compose(ke, h)) != c.compose(ke, he)) {
          fail(Fault::LawC, label + ": (k^{SC} . h)^{SC} != k^{SC} . h^{SB} at h = " + c.id(h) + " (B = " +
                                c.id(b) + "), k = " + c.id(k) + " (C = " + c.id(cc) + ")");
        }
      }
    }
  }
  return m;
}

Mor Algebra::extend(Obj a, Mor x) const {
  auto it = ext.find(Key2{a.index, x.index});
  if (it == ext.end()) fail(Fault::UnknownEntity, who(name, "algebra") + " has no extension entry");
  return it->second;
}

Algebra validate_algebra(const ExtensiveMonad& m, Algebra alg) {
  const FinCategory& c = *m.base;
  const std::string label = who(alg.name, "algebra") + " on " + (alg.carrier.index >= 0 ? c.id(alg.carrier) : "?");
  if (alg.carrier.index < 0 || alg.carrier.index >= c.object_count()) fail(Fault::IllTyped, label + ": bad carrier");
  const Obj n = alg.carrier;
  std::size_t expected = 0;
  for (Obj a : c.objects()) {
    for (Mor x : c.hom(a, n)) {
      ++expected;
      auto it = alg.ext.find(Key2{a.index, x.index});
      if (it == alg.ext.end()) fail(Fault::NotAlgebra, label + ": no extension for " + c.id(x));
      Mor e = it->second;
      if (!valid(e, c) || c.source(e) != m.S(a) || c.target(e) != n) {
        fail(Fault::NotAlgebra, label + ": extension of " + c.id(x) + " is not S A -> N");
      }
      if (c.compose(e, m.unit_at(a)) != x) fail(Fault::NotAlgebra, label + ": a^N . eta A != a at a = " + c.id(x));
    }
  }
  if (alg.ext.size() != expected) fail(Fault::NotAlgebra, label + ": table has entries outside its domain");
  for (Obj b : c.objects()) {
    for (Mor y : c.hom(b, n)) {
      Mor ye = alg.extend(b, y);
      for (Obj a : c.objects()) {
        for (Mor h : c.hom(a, m.S(b))) {
          if (alg.extend(a, c.compose(ye, h)) != c.compose(ye, m.extend(a, b, h))) {
            fail(Fault::NotAlgebra, label + ": (b^N . h)^N != b^N . h^{SB} at b = " + c.id(y) + ", h = " + c.id(h));
          }
        }
      }
    }
  }
  return alg;
}

std::optional<std::string> algebra_morphism_violation(const ExtensiveMonad& m, const Algebra& source,
                                                      const Algebra& target, Mor q) {
  const FinCategory& c = *m.base;
  if (c.source(q) != source.carrier || c.target(q) != target.carrier) return "q = " + c.id(q) + " has the wrong type";
  for (Obj a : c.objects()) {
    for (Mor x : c.hom(a, source.carrier)) {
      if (target.extend(a, c.compose(q, x)) != c.compose(q, source.extend(a, x))) {
        return "(q . a)^N != q . a^M at q = " + c.id(q) + ", a = " + c.id(x);
      }
    }
  }
  return std::nullopt;
}

Algebra free_algebra(const ExtensiveMonad& m, Obj a) {
  Algebra alg;
  alg.carrier = m.S(a);
  for (Obj x : m.base->objects()) {
    for (Mor h : m.base->hom(x, alg.carrier)) alg.ext.emplace(Key2{x.index, h.index}, m.extend(x, a, h));
  }
  return alg;
}

std::optional<Obj> AlgebraCategory::find(const Algebra& alg) const {
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    if (algebras[i] == alg) return Obj{static_cast<int>(i)};
  }
  return std::nullopt;
}

Mor AlgebraCategory::morphism_over(Obj src, Obj tgt, Mor q) const {
  for (Mor f : category->hom(src, tgt)) {
    if (forgetful(f) == q) return f;
  }
  fail(Fault::NotAlgebraMorphism, "no morphism " + category->id(src) + " -> " + category->id(tgt) + " of " +
                                      category->name() + " lies over " + forgetful.target->id(q));
}

AlgebraCategory enumerate_algebras(const ExtensiveMonad& m, SearchBudget budget) {
  const FinCategory& c = *m.base;
  struct Found {
    Algebra alg;
    std::string id;
  };
  std::vector<Found> found;

  for (Obj n : c.objects()) {
    struct Entry {
      Key2 key;
      std::vector<Mor> candidates;
    };
    std::vector<Entry> entries;
    bool empty = false;
    std::uint64_t tables = 1;
    for (Obj a : c.objects()) {
      for (Mor x : c.hom(a, n)) {
        Entry e{{a.index, x.index}, {}};
        for (Mor cand : c.hom(m.S(a), n)) {
          if (c.compose(cand, m.unit_at(a)) == x) e.candidates.push_back(cand);
        }
        if (e.candidates.empty()) empty = true;
        tables = (tables > budget.limit) ? tables : tables * std::max<std::uint64_t>(1, e.candidates.size());
        entries.push_back(std::move(e));
      }
    }
    if (empty) continue;
    if (tables > budget.limit) {
      fail(Fault::SearchBudgetExceeded, "algebra search on carrier " + c.id(n) + " of " + m.name + " needs more than " +
                                            std::to_string(budget.limit) + " candidate tables");
    }
    std::vector<std::size_t> pick(entries.size(), 0);
    std::vector<Algebra> on_carrier;
    while (true) {
      Algebra alg;
      alg.carrier = n;
      for (std::size_t i = 0; i < entries.size(); ++i) alg.ext.emplace(entries[i].key, entries[i].candidates[pick[i]]);
      try {
        on_carrier.push_back(validate_algebra(m, std::move(alg)));
      } catch (const LawError&) {
      }
      std::size_t i = 0;
      while (i < entries.size() && ++pick[i] == entries[i].candidates.size()) pick[i++] = 0;
      if (i == entries.size()) break;
    }
    for (std::size_t k = 0; k < on_carrier.size(); ++k) {
      std::string id = on_carrier.size() == 1 ? c.id(n) : c.id(n) + "#" + std::to_string(k);
      on_carrier[k].name = id;
      found.push_back({std::move(on_carrier[k]), id});
    }
  }

  bool plain_ids = true;
  for (std::size_t i = 0; i + 1 < found.size(); ++i) {
    if (found[i].alg.carrier == found[i + 1].alg.carrier) plain_ids = false;
  }

  struct Arrow {
    std::size_t src, tgt;
    Mor q;
    std::string id;
  };
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < found.size(); ++j) {
      for (Mor q : c.hom(found[i].alg.carrier, found[j].alg.carrier)) {
        if (algebra_morphism_violation(m, found[i].alg, found[j].alg, q)) continue;
        std::string id = plain_ids ? c.id(q) : c.id(q) + "[" + found[i].id + "|" + found[j].id + "]";
        arrows.push_back({i, j, q, id});
      }
    }
  }

  CategoryDescription d;
  d.name = "Alg(" + m.name + ")";
  for (const auto& f : found) d.objects.push_back(f.id);
  auto arrow_over = [&](std::size_t src, std::size_t tgt, Mor q) -> const Arrow& {
    for (const auto& a : arrows) {
      if (a.src == src && a.tgt == tgt && a.q == q) return a;
    }
    fail(Fault::Internal, "algebra morphisms are not closed under composition in " + d.name);
  };
  for (const auto& a : arrows) d.morphisms.push_back({a.id, found[a.src].id, found[a.tgt].id});
  for (std::size_t i = 0; i < found.size(); ++i) {
    d.identities.emplace_back(found[i].id, arrow_over(i, i, c.identity(found[i].alg.carrier)).id);
  }
  for (const auto& g : arrows) {
    for (const auto& f : arrows) {
      if (f.tgt != g.src) continue;
      d.composites.push_back({g.id, f.id, arrow_over(f.src, g.tgt, c.compose(g.q, f.q)).id});
    }
  }

  AlgebraCategory result;
  result.category = validate_category(d);
  const FinCategory& alg_cat = *result.category;
  result.algebras.resize(found.size());
  for (const auto& f : found) result.algebras[static_cast<std::size_t>(alg_cat.object(f.id).index)] = f.alg;

  result.forgetful.source = result.category;
  result.forgetful.target = m.base;
  for (Obj a : alg_cat.objects()) result.forgetful.objects.push_back(result.algebra(a).carrier);
  result.forgetful.morphisms.resize(static_cast<std::size_t>(alg_cat.morphism_count()));
  for (const auto& a : arrows) result.forgetful.morphisms[static_cast<std::size_t>(alg_cat.morphism(a.id).index)] = a.q;
  result.forgetful = validate_functor(std::move(result.forgetful));

  result.free.source = m.base;
  result.free.target = result.category;
  for (Obj a : c.objects()) {
    auto obj = result.find(free_algebra(m, a));
    if (!obj) fail(Fault::Internal, "free algebra on " + c.id(a) + " is missing from " + d.name);
    result.free.objects.push_back(*obj);
  }
  return result;
}

Mor EMndMorphism::extend(Obj d, Obj a, Mor p) const {
  auto it = ext.find(Key3{d.index, a.index, p.index});
  if (it == ext.end()) fail(Fault::UnknownEntity, who(name, "1-cell") + " has no extension entry");
  return it->second;
}

Algebra EMndMorphism::algebra_at(Obj a) const {
  Algebra alg;
  alg.carrier = P(source->S(a));
  const FinCategory& d = *target->base;
  for (Obj x : d.objects()) {
    for (Mor p : d.hom(x, alg.carrier)) {
      auto it = ext.find(Key3{x.index, a.index, p.index});
      if (it != ext.end()) alg.ext.emplace(Key2{x.index, p.index}, it->second);
    }
  }
  return alg;
}

bool operator==(const EMndMorphism& a, const EMndMorphism& b) {
  return *a.source == *b.source && *a.target == *b.target && a.P == b.P && a.ext == b.ext;
}

EMndMorphism validate_emnd_morphism(EMndMorphism m) {
  const std::string label = who(m.name, "1-cell");
  if (!m.source || !m.target) fail(Fault::IllTyped, label + " lacks endpoints");
  const ExtensiveMonad& s = *m.source;
  const ExtensiveMonad& t = *m.target;
  if (!same_category(m.P.source, s.base) || !same_category(m.P.target, t.base)) {
    fail(Fault::ShapeMismatch, label + ": P has the wrong shape");
  }
  const FinCategory& c = *s.base;
  const FinCategory& d = *t.base;
  std::size_t expected = 0;
  for (Obj a : c.objects()) {
    Algebra alg = m.algebra_at(a);
    for (Obj x : d.objects()) expected += d.hom(x, alg.carrier).size();
    alg.name = "P S " + c.id(a);
    try {
      validate_algebra(t, std::move(alg));
    } catch (const LawError& e) {
      fail(Fault::NotAlgebra, label + ": (PSA, (-)^{PSA}) is not a T-algebra at A = " + c.id(a) + ": " + e.witness());
    }
  }
  if (m.ext.size() != expected) fail(Fault::IllTyped, label + ": extension table has entries outside its domain");
  for (Obj a : c.objects()) {
    Algebra from = m.algebra_at(a);
    for (Obj b : c.objects()) {
      Algebra to = m.algebra_at(b);
      for (Mor h : c.hom(a, s.S(b))) {
        if (auto why = algebra_morphism_violation(t, from, to, m.P(s.extend(a, b, h)))) {
          fail(Fault::NotAlgebraMorphism, label + ": P h^{SB} is not a T-algebra morphism at h = " + c.id(h) + ": " + *why);
        }
      }
    }
  }
  return m;
}

EMndMorphism identity_emnd_morphism(const MonadPtr& m) {
  EMndMorphism e;
  e.source = m;
  e.target = m;
  e.P = identity_functor(m->base);
  for (Obj x : m->base->objects()) {
    for (Obj a : m->base->objects()) {
      for (Mor p : m->base->hom(x, m->S(a))) e.ext.emplace(Key3{x.index, a.index, p.index}, m->extend(x, a, p));
    }
  }
  return e;
}

EMndMorphism emnd_compose(const EMndMorphism& second, const EMndMorphism& first) {
  if (!(*first.target == *second.source)) fail(Fault::ShapeMismatch, "1-cell composite of non-adjacent 1-cells");
  const ExtensiveMonad& s = *first.source;
  const ExtensiveMonad& t = *first.target;
  const FinCategory& c = *s.base;
  const FinCategory& x = *second.target->base;
  EMndMorphism e;
  e.source = first.source;
  e.target = second.target;
  e.P = compose(second.P, first.P);
  for (Obj a : c.objects()) {
    const Obj psa = first.P(s.S(a));
    // W (1_{PSA})^{PSA} : W T P S A -> W P S A
    const Mor collapse = second.P(first.extend(psa, a, t.base->identity(psa)));
    const Mor lift = second.P(t.unit_at(psa));
    for (Obj xo : x.objects()) {
      for (Mor w : x.hom(xo, e.P(s.S(a)))) {
        Mor inner = second.extend(xo, psa, x.compose(lift, w));
        e.ext.emplace(Key3{xo.index, a.index, w.index}, x.compose(collapse, inner));
      }
    }
  }
  try {
    return validate_emnd_morphism(std::move(e));
  } catch (const LawError& err) {
    fail(Fault::Internal, "composite 1-cell failed validation: " + std::string(err.what()));
  }
}

bool operator==(const EMndTwoCell& a, const EMndTwoCell& b) {
  return a.source == b.source && a.target == b.target && a.theta == b.theta;
}

EMndTwoCell validate_emnd_two_cell(EMndTwoCell c) {
  const std::string label = who(c.name, "2-cell");
  if (!(*c.source.source == *c.target.source) || !(*c.source.target == *c.target.target)) {
    fail(Fault::ShapeMismatch, label + ": 1-cells are not parallel");
  }
  if (!(c.theta.source == c.source.P) || !(c.theta.target == c.target.P)) {
    fail(Fault::ShapeMismatch, label + ": theta is not P -> Q");
  }
  c.theta = validate_nat_trans(std::move(c.theta));
  const ExtensiveMonad& s = *c.source.source;
  for (Obj a : s.base->objects()) {
    if (auto why = algebra_morphism_violation(*c.source.target, c.source.algebra_at(a), c.target.algebra_at(a),
                                              c.theta[s.S(a)])) {
      fail(Fault::NotAlgebraMorphism, label + ": theta S A is not a T-algebra morphism at A = " + s.base->id(a) + ": " + *why);
    }
  }
  return c;
}

EMndTwoCell identity_emnd_two_cell(const EMndMorphism& m) {
  return EMndTwoCell{"", m, m, identity_transformation(m.P)};
}

EMndTwoCell emnd_vertical(const EMndTwoCell& second, const EMndTwoCell& first) {
  if (!(first.target == second.source)) fail(Fault::ShapeMismatch, "vertical composite of non-adjacent 2-cells");
  return validate_emnd_two_cell(EMndTwoCell{"", first.source, second.target, vertical(second.theta, first.theta)});
}

EMndTwoCell emnd_whisker_forward(const EMndMorphism& w, const EMndTwoCell& c) {
  return validate_emnd_two_cell(
      EMndTwoCell{"", emnd_compose(w, c.source), emnd_compose(w, c.target), whisker_left(w.P, c.theta)});
}

EMndTwoCell emnd_whisker_back(const EMndTwoCell& c, const EMndMorphism& q) {
  return validate_emnd_two_cell(
      EMndTwoCell{"", emnd_compose(c.source, q), emnd_compose(c.target, q), whisker_right(c.theta, q.P)});
}

EMndTwoCell emnd_horizontal(const EMndTwoCell& outer, const EMndTwoCell& inner) {
  return emnd_vertical(emnd_whisker_back(outer, inner.target), emnd_whisker_forward(outer.source, inner));
}

EMndTwoCell emnd_horizontal_transposed(const EMndTwoCell& outer, const EMndTwoCell& inner) {
  return emnd_vertical(emnd_whisker_forward(outer.target, inner), emnd_whisker_back(outer, inner.source));
}

}  // namespace adj2
