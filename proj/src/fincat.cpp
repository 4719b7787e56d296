#include "adj2/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace adj2 {

namespace {

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

const std::string& FinCategory::id(Obj a) const {
  return object_ids_.at(static_cast<std::size_t>(a.index));
}

const std::string& FinCategory::id(Mor f) const {
  return arrows_.at(static_cast<std::size_t>(f.index)).id;
}

Obj FinCategory::source(Mor f) const { return arrows_.at(static_cast<std::size_t>(f.index)).source; }

Obj FinCategory::target(Mor f) const { return arrows_.at(static_cast<std::size_t>(f.index)).target; }

Mor FinCategory::identity(Obj a) const { return identities_.at(static_cast<std::size_t>(a.index)); }

bool FinCategory::is_identity(Mor f) const { return identity(source(f)) == f; }

bool FinCategory::composable(Mor g, Mor f) const { return target(f) == source(g); }

Mor FinCategory::compose(Mor g, Mor f) const {
  if (!composable(g, f)) {
    fail(Fault::ShapeMismatch, "in " + name_ + ": cannot compose " + describe(g) + " after " + describe(f));
  }
  return Mor{compose_[static_cast<std::size_t>(g.index * morphism_count() + f.index)]};
}

const std::vector<Mor>& FinCategory::hom(Obj a, Obj b) const {
  return homs_.at(static_cast<std::size_t>(a.index * object_count() + b.index));
}

std::optional<Obj> FinCategory::find_object(std::string_view id) const {
  auto it = std::lower_bound(object_ids_.begin(), object_ids_.end(), id);
  if (it == object_ids_.end() || *it != id) return std::nullopt;
  return Obj{static_cast<int>(it - object_ids_.begin())};
}

std::optional<Mor> FinCategory::find_morphism(std::string_view id) const {
  auto it = std::lower_bound(arrows_.begin(), arrows_.end(), id,
                             [](const Arrow& a, std::string_view key) { return a.id < key; });
  if (it == arrows_.end() || it->id != id) return std::nullopt;
  return Mor{static_cast<int>(it - arrows_.begin())};
}

Obj FinCategory::object(std::string_view id) const {
  if (auto a = find_object(id)) return *a;
  fail(Fault::UnknownEntity, "object " + quoted(id) + " in category " + name_);
}

Mor FinCategory::morphism(std::string_view id) const {
  if (auto f = find_morphism(id)) return *f;
  fail(Fault::UnknownEntity, "morphism " + quoted(id) + " in category " + name_);
}

std::string FinCategory::describe(Mor f) const {
  return id(f) + " : " + id(source(f)) + " -> " + id(target(f));
}

CategoryDescription FinCategory::description() const {
  CategoryDescription d;
  d.name = name_;
  d.objects = object_ids_;
  for (const auto& a : arrows_) d.morphisms.push_back({a.id, id(a.source), id(a.target)});
  for (Obj a : objects()) d.identities.emplace_back(id(a), id(identity(a)));
  for (Mor g : morphisms()) {
    for (Mor f : morphisms()) {
      if (composable(g, f)) d.composites.push_back({id(g), id(f), id(compose(g, f))});
    }
  }
  return d;
}

bool operator==(const FinCategory& a, const FinCategory& b) {
  if (a.object_ids_ != b.object_ids_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto& x = a.arrows_[i];
    const auto& y = b.arrows_[i];
    if (x.id != y.id || x.source != y.source || x.target != y.target) return false;
  }
  return a.identities_ == b.identities_ && a.compose_ == b.compose_;
}

CatPtr validate_category(const CategoryDescription& raw) {
  auto cat = std::make_shared<FinCategory>();
  cat->name_ = raw.name;
  const std::string where = " in category " + raw.name;

  cat->object_ids_ = raw.objects;
  std::sort(cat->object_ids_.begin(), cat->object_ids_.end());
  if (auto dup = std::adjacent_find(cat->object_ids_.begin(), cat->object_ids_.end());
      dup != cat->object_ids_.end()) {
    fail(Fault::IllTyped, "duplicate object " + quoted(*dup) + where);
  }

  std::vector<CategoryDescription::Arrow> arrows = raw.morphisms;
  std::sort(arrows.begin(), arrows.end(), [](const auto& x, const auto& y) { return x.id < y.id; });
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (arrows[i].id == arrows[i + 1].id) fail(Fault::IllTyped, "duplicate morphism " + quoted(arrows[i].id) + where);
  }
  for (const auto& a : arrows) {
    auto s = cat->find_object(a.source);
    auto t = cat->find_object(a.target);
    if (!s || !t) fail(Fault::IllTyped, "morphism " + quoted(a.id) + " has an undeclared endpoint" + where);
    cat->arrows_.push_back({a.id, *s, *t});
  }

  const int n = cat->object_count();
  const int m = cat->morphism_count();

  cat->identities_.assign(static_cast<std::size_t>(n), Mor{});
  for (const auto& [obj, mor] : raw.identities) {
    auto a = cat->find_object(obj);
    auto f = cat->find_morphism(mor);
    if (!a || !f) fail(Fault::BadIdentity, "identity " + quoted(obj) + " = " + quoted(mor) + " names unknown cells" + where);
    if (cat->source(*f) != *a || cat->target(*f) != *a) {
      fail(Fault::BadIdentity, "identity of " + quoted(obj) + " is " + cat->describe(*f) + where);
    }
    auto& slot = cat->identities_[static_cast<std::size_t>(a->index)];
    if (slot.index >= 0 && slot != *f) fail(Fault::BadIdentity, "two identities for " + quoted(obj) + where);
    slot = *f;
  }
  for (Obj a : cat->objects()) {
    if (cat->identity(a).index < 0) fail(Fault::BadIdentity, "no identity for object " + quoted(cat->id(a)) + where);
  }

  cat->compose_.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), -1);
  for (const auto& c : raw.composites) {
    auto g = cat->find_morphism(c.second);
    auto f = cat->find_morphism(c.first);
    auto h = cat->find_morphism(c.result);
    const std::string entry = quoted(c.second + " . " + c.first + " = " + c.result);
    if (!g || !f || !h) fail(Fault::IllTyped, "composite " + entry + " names unknown morphisms" + where);
    if (!cat->composable(*g, *f)) fail(Fault::IllTyped, "composite " + entry + " is not composable" + where);
    if (cat->source(*h) != cat->source(*f) || cat->target(*h) != cat->target(*g)) {
      fail(Fault::IllTyped, "composite " + entry + " has the wrong type" + where);
    }
    int& slot = cat->compose_[static_cast<std::size_t>(g->index * m + f->index)];
    if (slot >= 0 && slot != h->index) fail(Fault::IllTyped, "conflicting composite " + entry + where);
    slot = h->index;
  }

  for (Mor g : cat->morphisms()) {
    for (Mor f : cat->morphisms()) {
      if (cat->composable(g, f) && cat->compose_[static_cast<std::size_t>(g.index * m + f.index)] < 0) {
        fail(Fault::MissingComposite, quoted(cat->id(g) + " . " + cat->id(f)) + where);
      }
    }
  }

  for (Mor f : cat->morphisms()) {
    if (cat->compose(cat->identity(cat->target(f)), f) != f || cat->compose(f, cat->identity(cat->source(f))) != f) {
      fail(Fault::BadIdentity, "unit law fails at " + cat->describe(f) + where);
    }
  }

  for (Mor h : cat->morphisms()) {
    for (Mor g : cat->morphisms()) {
      if (!cat->composable(h, g)) continue;
      for (Mor f : cat->morphisms()) {
        if (!cat->composable(g, f)) continue;
        if (cat->compose(h, cat->compose(g, f)) != cat->compose(cat->compose(h, g), f)) {
          fail(Fault::NonAssociative,
               quoted(cat->id(h)) + ", " + quoted(cat->id(g)) + ", " + quoted(cat->id(f)) + where);
        }
      }
    }
  }

  cat->homs_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
  for (Mor f : cat->morphisms()) {
    cat->homs_[static_cast<std::size_t>(cat->source(f).index * n + cat->target(f).index)].push_back(f);
  }
  return cat;
}

bool same_category(const CatPtr& a, const CatPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Functor& a, const Functor& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target) && a.objects == b.objects &&
         a.morphisms == b.morphisms;
}

bool operator==(const NatTrans& a, const NatTrans& b) {
  return a.source == b.source && a.target == b.target && a.components == b.components;
}

bool operator==(const ObjectFunction& a, const ObjectFunction& b) {
  return same_category(a.source, b.source) && same_category(a.target, b.target) && a.objects == b.objects;
}

namespace {

std::string label(const std::string& name, std::string_view kind) {
  return name.empty() ? std::string(kind) : std::string(kind) + " " + quoted(name);
}

bool in_range(Obj a, const FinCategory& c) { return a.index >= 0 && a.index < c.object_count(); }
bool in_range(Mor f, const FinCategory& c) { return f.index >= 0 && f.index < c.morphism_count(); }

}  // namespace

Functor validate_functor(Functor cand) {
  const std::string who = label(cand.name, "functor");
  if (!cand.source || !cand.target) fail(Fault::IllTyped, who + " lacks a source or target category");
  const FinCategory& c = *cand.source;
  const FinCategory& d = *cand.target;
  if (cand.objects.size() != static_cast<std::size_t>(c.object_count()) ||
      cand.morphisms.size() != static_cast<std::size_t>(c.morphism_count())) {
    fail(Fault::NotFunctorial, who + " is not total");
  }
  for (Obj a : c.objects()) {
    if (!in_range(cand(a), d)) fail(Fault::NotFunctorial, who + " has no image for object " + quoted(c.id(a)));
  }
  for (Mor f : c.morphisms()) {
    if (!in_range(cand(f), d)) fail(Fault::NotFunctorial, who + " has no image for morphism " + quoted(c.id(f)));
    if (d.source(cand(f)) != cand(c.source(f)) || d.target(cand(f)) != cand(c.target(f))) {
      fail(Fault::NotFunctorial, who + " breaks source/target at " + c.describe(f));
    }
  }
  for (Obj a : c.objects()) {
    if (cand(c.identity(a)) != d.identity(cand(a))) {
      fail(Fault::NotFunctorial, who + " does not preserve the identity of " + quoted(c.id(a)));
    }
  }
  for (Mor g : c.morphisms()) {
    for (Mor f : c.morphisms()) {
      if (c.composable(g, f) && cand(c.compose(g, f)) != d.compose(cand(g), cand(f))) {
        fail(Fault::NotFunctorial, who + " does not preserve " + quoted(c.id(g) + " . " + c.id(f)));
      }
    }
  }
  return cand;
}

NatTrans validate_nat_trans(NatTrans cand) {
  const std::string who = label(cand.name, "transformation");
  const Functor& f = cand.source;
  const Functor& g = cand.target;
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target)) {
    fail(Fault::ShapeMismatch, who + " between non-parallel functors");
  }
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  if (cand.components.size() != static_cast<std::size_t>(c.object_count())) {
    fail(Fault::NotNatural, who + " is not total");
  }
  for (Obj a : c.objects()) {
    Mor t = cand[a];
    if (!in_range(t, d) || d.source(t) != f(a) || d.target(t) != g(a)) {
      fail(Fault::NotNatural, who + " has a mistyped component at " + quoted(c.id(a)));
    }
  }
  for (Mor m : c.morphisms()) {
    if (d.compose(g(m), cand[c.source(m)]) != d.compose(cand[c.target(m)], f(m))) {
      fail(Fault::NotNatural, who + " fails naturality at " + c.describe(m));
    }
  }
  return cand;
}

ObjectFunction validate_object_function(ObjectFunction cand) {
  if (!cand.source || !cand.target) fail(Fault::IllTyped, "object function lacks a source or target category");
  if (cand.objects.size() != static_cast<std::size_t>(cand.source->object_count())) {
    fail(Fault::IllTyped, "object function is not total on " + cand.source->name());
  }
  for (Obj a : cand.source->objects()) {
    if (!in_range(cand(a), *cand.target)) {
      fail(Fault::IllTyped, "object function has no image for " + quoted(cand.source->id(a)));
    }
  }
  return cand;
}

Functor identity_functor(const CatPtr& c) {
  Functor f;
  f.source = c;
  f.target = c;
  for (Obj a : c->objects()) f.objects.push_back(a);
  for (Mor m : c->morphisms()) f.morphisms.push_back(m);
  return f;
}

Functor compose(const Functor& g, const Functor& f) {
  if (!same_category(f.target, g.source)) {
    fail(Fault::ShapeMismatch, "functor composite: " + f.target->name() + " vs " + g.source->name());
  }
  Functor h;
  h.source = f.source;
  h.target = g.target;
  for (Obj a : f.objects) h.objects.push_back(g(a));
  for (Mor m : f.morphisms) h.morphisms.push_back(g(m));
  return h;
}

ObjectFunction object_part(const Functor& f) { return {f.source, f.target, f.objects}; }

NatTrans identity_transformation(const Functor& f) {
  NatTrans t;
  t.source = f;
  t.target = f;
  for (Obj a : f.source->objects()) t.components.push_back(f.target->identity(f(a)));
  return t;
}

bool is_identity_transformation(const NatTrans& t) {
  return t.source == t.target && t == identity_transformation(t.source);
}

NatTrans vertical(const NatTrans& second, const NatTrans& first) {
  if (!(first.target == second.source)) fail(Fault::ShapeMismatch, "vertical composite of non-adjacent transformations");
  NatTrans t;
  t.source = first.source;
  t.target = second.target;
  const FinCategory& d = *first.source.target;
  for (Obj a : first.source.source->objects()) t.components.push_back(d.compose(second[a], first[a]));
  return t;
}

NatTrans whisker_left(const Functor& h, const NatTrans& a) {
  NatTrans t;
  t.source = compose(h, a.source);
  t.target = compose(h, a.target);
  for (Mor m : a.components) t.components.push_back(h(m));
  return t;
}

NatTrans whisker_right(const NatTrans& a, const Functor& h) {
  NatTrans t;
  t.source = compose(a.source, h);
  t.target = compose(a.target, h);
  for (Obj x : h.source->objects()) t.components.push_back(a[h(x)]);
  return t;
}

NatTrans horizontal(const NatTrans& outer, const NatTrans& inner) {
  return vertical(whisker_right(outer, inner.target), whisker_left(outer.source, inner));
}

std::optional<Obj> interchange_witness(const NatTrans& outer, const NatTrans& inner) {
  NatTrans one = vertical(whisker_right(outer, inner.target), whisker_left(outer.source, inner));
  NatTrans two = vertical(whisker_left(outer.target, inner), whisker_right(outer, inner.source));
  for (Obj a : inner.source.source->objects()) {
    if (one[a] != two[a]) return a;
  }
  return std::nullopt;
}

namespace {

void spend(std::uint64_t& used, SearchBudget budget, std::string_view what) {
  if (++used > budget.limit) {
    fail(Fault::SearchBudgetExceeded, std::string(what) + " exceeded " + std::to_string(budget.limit) + " candidates");
  }
}

struct FunctorSearch {
  const FinCategory& c;
  const FinCategory& d;
  SearchBudget budget;
  std::uint64_t used = 0;
  Functor current;
  std::vector<Functor> found;

  bool consistent(int upto) const {
    const Mor last{upto};
    for (Mor g : c.morphisms()) {
      if (g.index > upto) break;
      for (Mor f : c.morphisms()) {
        if (f.index > upto) break;
        if (!c.composable(g, f) || (g != last && f != last && c.compose(g, f) != last)) continue;
        Mor gf = c.compose(g, f);
        if (gf.index > upto) continue;
        if (current(gf) != d.compose(current(g), current(f))) return false;
      }
    }
    return true;
  }

  void morphisms_from(int k) {
    if (k == c.morphism_count()) {
      found.push_back(current);
      return;
    }
    const Mor f{k};
    const Obj s = current(c.source(f));
    const Obj t = current(c.target(f));
    if (c.is_identity(f)) {
      current.morphisms[static_cast<std::size_t>(k)] = d.identity(s);
      spend(used, budget, "functor enumeration");
      if (consistent(k)) morphisms_from(k + 1);
      return;
    }
    for (Mor g : d.hom(s, t)) {
      current.morphisms[static_cast<std::size_t>(k)] = g;
      spend(used, budget, "functor enumeration");
      if (consistent(k)) morphisms_from(k + 1);
    }
  }

  void objects_from(int k) {
    if (k == c.object_count()) {
      morphisms_from(0);
      return;
    }
    for (Obj b : d.objects()) {
      current.objects[static_cast<std::size_t>(k)] = b;
      spend(used, budget, "functor enumeration");
      objects_from(k + 1);
    }
  }
};

}  // namespace

std::vector<Functor> enumerate_functors(const CatPtr& c, const CatPtr& d, SearchBudget budget) {
  FunctorSearch search{*c, *d, budget, 0, {}, {}};
  search.current.source = c;
  search.current.target = d;
  search.current.objects.assign(static_cast<std::size_t>(c->object_count()), Obj{});
  search.current.morphisms.assign(static_cast<std::size_t>(c->morphism_count()), Mor{});
  search.objects_from(0);
  return search.found;
}

std::vector<NatTrans> enumerate_transformations(const Functor& f, const Functor& g, SearchBudget budget) {
  if (!same_category(f.source, g.source) || !same_category(f.target, g.target)) {
    fail(Fault::ShapeMismatch, "transformations between non-parallel functors");
  }
  const FinCategory& c = *f.source;
  const FinCategory& d = *f.target;
  std::vector<NatTrans> found;
  NatTrans current{"", f, g, std::vector<Mor>(static_cast<std::size_t>(c.object_count()))};
  std::uint64_t used = 0;

  auto natural_upto = [&](int k) {
    for (Mor m : c.morphisms()) {
      Obj s = c.source(m);
      Obj t = c.target(m);
      if (s.index > k || t.index > k || (s.index != k && t.index != k)) continue;
      if (d.compose(g(m), current[s]) != d.compose(current[t], f(m))) return false;
    }
    return true;
  };

  auto search = [&](auto&& self, int k) -> void {
    if (k == c.object_count()) {
      found.push_back(current);
      return;
    }
    for (Mor t : d.hom(f(Obj{k}), g(Obj{k}))) {
      current.components[static_cast<std::size_t>(k)] = t;
      spend(used, budget, "transformation enumeration");
      if (natural_upto(k)) self(self, k + 1);
    }
  };
  search(search, 0);
  return found;
}

}  // namespace adj2
