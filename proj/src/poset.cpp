#include "adj2/poset.hpp"

#include <algorithm>

namespace adj2 {

std::string poset_arrow_id(const std::string& a, const std::string& b) { return a + "→" + b; }

CatPtr poset_category(std::string name, const std::vector<std::string>& elements,
                      const std::function<bool(std::size_t, std::size_t)>& leq) {
  CategoryDescription d;
  d.name = std::move(name);
  d.objects = elements;
  const std::size_t n = elements.size();
  for (std::size_t a = 0; a < n; ++a) {
    d.identities.emplace_back(elements[a], poset_arrow_id(elements[a], elements[a]));
    for (std::size_t b = 0; b < n; ++b) {
      if (!leq(a, b)) continue;
      d.morphisms.push_back({poset_arrow_id(elements[a], elements[b]), elements[a], elements[b]});
      for (std::size_t c = 0; c < n; ++c) {
        if (leq(b, c)) {
          d.composites.push_back({poset_arrow_id(elements[b], elements[c]), poset_arrow_id(elements[a], elements[b]),
                                  poset_arrow_id(elements[a], elements[c])});
        }
      }
    }
  }
  return validate_category(d);
}

bool is_thin(const FinCategory& c) {
  for (Obj a : c.objects()) {
    for (Obj b : c.objects()) {
      if (c.hom(a, b).size() > 1) return false;
    }
  }
  return true;
}

Mor thin_arrow(const FinCategory& c, Obj a, Obj b) {
  const auto& h = c.hom(a, b);
  if (h.empty()) fail(Fault::NoWitness, "no morphism " + c.id(a) + " -> " + c.id(b) + " in " + c.name());
  if (h.size() > 1) fail(Fault::AmbiguousWitness, "several morphisms " + c.id(a) + " -> " + c.id(b) + " in " + c.name());
  return h.front();
}

Functor monotone_functor(const CatPtr& source, const CatPtr& target, const std::vector<Obj>& images) {
  Functor f;
  f.source = source;
  f.target = target;
  f.objects = images;
  for (Mor m : source->morphisms()) {
    f.morphisms.push_back(thin_arrow(*target, f(source->source(m)), f(source->target(m))));
  }
  return validate_functor(std::move(f));
}

Functor monotone_functor(const CatPtr& source, const CatPtr& target,
                         const std::vector<std::pair<std::string, std::string>>& images) {
  std::vector<Obj> map(static_cast<std::size_t>(source->object_count()));
  for (const auto& [a, b] : images) map[static_cast<std::size_t>(source->object(a).index)] = target->object(b);
  return monotone_functor(source, target, map);
}

std::pair<CatPtr, Functor> full_subcategory(std::string name, const CatPtr& c, const std::vector<Obj>& keep) {
  auto kept = [&](Obj a) { return std::find(keep.begin(), keep.end(), a) != keep.end(); };
  CategoryDescription d;
  d.name = std::move(name);
  for (Obj a : c->objects()) {
    if (!kept(a)) continue;
    d.objects.push_back(c->id(a));
    d.identities.emplace_back(c->id(a), c->id(c->identity(a)));
  }
  for (Mor f : c->morphisms()) {
    if (kept(c->source(f)) && kept(c->target(f))) d.morphisms.push_back({c->id(f), c->id(c->source(f)), c->id(c->target(f))});
  }
  for (Mor g : c->morphisms()) {
    for (Mor f : c->morphisms()) {
      if (!c->composable(g, f) || !kept(c->source(f)) || !kept(c->target(f)) || !kept(c->target(g))) continue;
      d.composites.push_back({c->id(g), c->id(f), c->id(c->compose(g, f))});
    }
  }
  CatPtr sub = validate_category(d);
  Functor incl;
  incl.source = sub;
  incl.target = c;
  for (Obj a : sub->objects()) incl.objects.push_back(c->object(sub->id(a)));
  for (Mor f : sub->morphisms()) incl.morphisms.push_back(c->morphism(sub->id(f)));
  return {sub, validate_functor(std::move(incl))};
}

}  // namespace adj2
