#include "adj2/bridge.hpp"

#include <algorithm>
#include <set>

namespace adj2 {

namespace {

std::string wrap(std::string_view f, const std::string& name) { return std::string(f) + "(" + name + ")"; }

// Describes the first difference between two 1-cells with equal endpoints.
std::string emnd_difference(const EMndMorphism& a, const EMndMorphism& b) {
  if (!(a.P == b.P)) return "underlying functors differ";
  const FinCategory& d = *a.target->base;
  for (const auto& [key, m] : a.ext) {
    auto it = b.ext.find(key);
    if (it == b.ext.end() || it->second != m) {
      return "extension differs at (" + d.id(Obj{key[0]}) + ", " + a.source->base->id(Obj{key[1]}) + ", " +
             d.id(Mor{key[2]}) + ")";
    }
  }
  return "extension tables differ";
}

std::string uarr_difference(const UArrMorphism& a, const UArrMorphism& b) {
  if (!(a.J == b.J)) return "J differs";
  if (!(a.V == b.V)) return "V differs";
  if (!(a.rho == b.rho)) return "rho differs";
  if (!(a.rho_inv == b.rho_inv)) return "rho inverse differs";
  return "endpoints differ";
}

template <typename F>
CheckOutcome guarded(F&& body) {
  try {
    return body();
  } catch (const LawError& e) {
    return CheckOutcome{false, e.what()};
  }
}

}  // namespace

MonadPtr phi_on_object(const UniversalArrow& u) {
  const FinCategory& c = *u.base;
  ObjectFunction endo{u.base, u.base, {}};
  for (Obj a : c.objects()) endo.objects.push_back(u.right(u.left(a)));
  std::map<Key3, Mor> ext;
  for (Obj a : c.objects()) {
    for (Obj b : c.objects()) {
      for (Mor h : c.hom(a, endo(b))) {
        ext.emplace(Key3{a.index, b.index, h.index}, u.right(u.transpose(a, u.left(b), h)));
      }
    }
  }
  return validate_extensive_monad(wrap("phi", u.name), std::move(endo), u.unit, std::move(ext));
}

EMndMorphism phi_on_morphism(const UArrMorphism& m) {
  const UniversalArrow& u = *m.source;
  const UniversalArrow& t = *m.target;
  const FinCategory& d = *t.base;
  EMndMorphism e;
  e.name = wrap("phi", m.name);
  e.source = phi_on_object(u);
  e.target = phi_on_object(t);
  e.P = m.J;
  for (Obj a : u.base->objects()) {
    const Obj la = u.left(a);
    const Obj jrla = m.J(u.right(la));
    for (Obj x : d.objects()) {
      for (Mor p : d.hom(x, jrla)) {
        Mor w = t.transpose(x, m.V(la), d.compose(m.rho[la], p));
        e.ext.emplace(Key3{x.index, a.index, p.index}, d.compose(m.rho_inv[la], t.right(w)));
      }
    }
  }
  return validate_emnd_morphism(std::move(e));
}

EMndTwoCell phi_on_two_cell(const UArrTwoCell& c) {
  return validate_emnd_two_cell(
      EMndTwoCell{wrap("phi", c.name), phi_on_morphism(c.source), phi_on_morphism(c.target), c.alpha});
}

EmConstruction psi_on_object(const MonadPtr& m, SearchBudget budget) {
  EmConstruction em;
  em.monad = m;
  em.algebras = enumerate_algebras(*m, budget);
  em.algebras.forgetful.name = wrap("forget", m->name);
  em.arrow = validate_universal_arrow(wrap("psi", m->name), em.algebras.forgetful, em.algebras.free, m->unit);
  const FinCategory& alg = *em.algebras.category;
  for (const auto& [key, w] : em.arrow->zeta) {
    Obj a{key[0]};
    Obj n{key[1]};
    Mor v{key[2]};
    Mor expected = em.algebras.morphism_over(em.algebras.free(a), n, em.algebras.algebra(n).extend(a, v));
    if (expected != w) {
      fail(Fault::Internal, "transpose in " + em.arrow->name + " at algebra " + alg.id(n) + " is " + alg.id(w) +
                                " but v^N lies over " + alg.id(expected));
    }
  }
  return em;
}

UArrMorphism psi_on_morphism(const EMndMorphism& m, const EmConstruction& source, const EmConstruction& target) {
  if (!(*m.source == *source.monad) || !(*m.target == *target.monad)) {
    fail(Fault::ShapeMismatch, "algebra categories do not match the endpoints of " + m.name);
  }
  const ExtensiveMonad& s = *m.source;
  const FinCategory& c = *s.base;
  const FinCategory& d = *m.target->base;
  const FinCategory& cs = *source.algebras.category;
  const FinCategory& dt = *target.algebras.category;

  Functor hat;
  hat.name = wrap("lift", m.name);
  hat.source = source.algebras.category;
  hat.target = target.algebras.category;
  for (Obj n : cs.objects()) {
    const Algebra& alg = source.algebras.algebra(n);
    const Obj carrier = alg.carrier;
    Algebra image;
    image.carrier = m.P(carrier);
    const Mor collapse = m.P(alg.extend(carrier, c.identity(carrier)));
    const Mor lift = m.P(s.unit_at(carrier));
    for (Obj x : d.objects()) {
      for (Mor q : d.hom(x, image.carrier)) {
        image.ext.emplace(Key2{x.index, q.index}, d.compose(collapse, m.extend(x, carrier, d.compose(lift, q))));
      }
    }
    auto found = target.algebras.find(image);
    if (!found) {
      fail(Fault::MissingImageAlgebra, "lift of algebra " + cs.id(n) + " along " + m.name + " is not in " + dt.name());
    }
    hat.objects.push_back(*found);
  }
  for (Mor f : cs.morphisms()) {
    hat.morphisms.push_back(
        target.algebras.morphism_over(hat(cs.source(f)), hat(cs.target(f)), m.P(source.algebras.forgetful(f))));
  }
  hat = validate_functor(std::move(hat));

  UArrMorphism u;
  u.name = wrap("psi", m.name);
  u.source = source.arrow;
  u.target = target.arrow;
  u.J = m.P;
  u.V = hat;
  Functor jr = compose(u.J, source.algebras.forgetful);
  Functor rv = compose(target.algebras.forgetful, u.V);
  if (!(jr == rv)) fail(Fault::Internal, "P U^S and U^T P-hat disagree for " + m.name);
  u.rho = identity_transformation(jr);
  u.rho.target = rv;
  u.rho_inv = identity_transformation(rv);
  u.rho_inv.target = jr;
  return validate_uarr_morphism(std::move(u));
}

UArrMorphism psi_on_morphism(const EMndMorphism& m, SearchBudget budget) {
  return psi_on_morphism(m, psi_on_object(m.source, budget), psi_on_object(m.target, budget));
}

UArrTwoCell psi_on_two_cell(const EMndTwoCell& c, const EmConstruction& source, const EmConstruction& target) {
  UArrTwoCell u;
  u.name = wrap("psi", c.name);
  u.source = psi_on_morphism(c.source, source, target);
  u.target = psi_on_morphism(c.target, source, target);
  u.alpha = c.theta;
  u.beta.name = wrap("lift", c.name);
  u.beta.source = u.source.V;
  u.beta.target = u.target.V;
  const FinCategory& cs = *source.algebras.category;
  for (Obj n : cs.objects()) {
    u.beta.components.push_back(
        target.algebras.morphism_over(u.source.V(n), u.target.V(n), c.theta[source.algebras.algebra(n).carrier]));
  }
  return validate_uarr_two_cell(std::move(u));
}

UArrTwoCell psi_on_two_cell(const EMndTwoCell& c, SearchBudget budget) {
  return psi_on_two_cell(c, psi_on_object(c.source.source, budget), psi_on_object(c.source.target, budget));
}

std::map<std::size_t, std::size_t> witness_histogram(const UniversalArrow& u) {
  std::map<std::size_t, std::size_t> hist;
  for (Obj a : u.base->objects()) {
    for (Obj x : u.upstairs->objects()) {
      for (Mor v : u.base->hom(a, u.right(x))) ++hist[universal_witnesses(u, a, x, v).size()];
    }
  }
  return hist;
}

Functor comparison_functor(const UniversalArrow& u, const EmConstruction& em) {
  const FinCategory& c = *u.base;
  const FinCategory& x = *u.upstairs;
  Functor k;
  k.name = wrap("compare", u.name);
  k.source = u.upstairs;
  k.target = em.algebras.category;
  for (Obj xo : x.objects()) {
    Algebra alg;
    alg.carrier = u.right(xo);
    for (Obj a : c.objects()) {
      for (Mor v : c.hom(a, alg.carrier)) alg.ext.emplace(Key2{a.index, v.index}, u.right(u.transpose(a, xo, v)));
    }
    auto found = em.algebras.find(alg);
    if (!found) fail(Fault::MissingImageAlgebra, "comparison image of " + x.id(xo) + " is not an algebra of " + em.monad->name);
    k.objects.push_back(*found);
  }
  for (Mor w : x.morphisms()) k.morphisms.push_back(em.algebras.morphism_over(k(x.source(w)), k(x.target(w)), u.right(w)));
  return validate_functor(std::move(k));
}

UArrMorphism unit_component(const ArrowPtr& u, SearchBudget budget) {
  EmConstruction em = psi_on_object(phi_on_object(*u), budget);
  UArrMorphism m;
  m.name = wrap("unit", u->name);
  m.source = u;
  m.target = em.arrow;
  m.J = identity_functor(u->base);
  m.V = comparison_functor(*u, em);
  m.rho.source = compose(m.J, u->right);
  m.rho.target = compose(em.algebras.forgetful, m.V);
  for (Obj x : u->upstairs->objects()) m.rho.components.push_back(u->base->identity(u->right(x)));
  m.rho_inv = m.rho;
  std::swap(m.rho_inv.source, m.rho_inv.target);
  return validate_uarr_morphism(std::move(m));
}

EMndMorphism counit_component(const MonadPtr& m, SearchBudget budget) {
  EmConstruction em = psi_on_object(m, budget);
  MonadPtr back = phi_on_object(*em.arrow);
  if (!(*back == *m)) fail(Fault::Internal, "phi psi of " + m->name + " differs from " + m->name);
  EMndMorphism e = identity_emnd_morphism(m);
  e.name = wrap("counit", m->name);
  e.source = back;
  return validate_emnd_morphism(std::move(e));
}

CheckOutcome check_triangle(const ArrowPtr& u, SearchBudget budget) {
  return guarded([&] {
    MonadPtr phi_u = phi_on_object(*u);
    EMndMorphism composite = emnd_compose(counit_component(phi_u, budget), phi_on_morphism(unit_component(u, budget)));
    EMndMorphism expected = identity_emnd_morphism(phi_u);
    if (composite == expected) return CheckOutcome{};
    return CheckOutcome{false, emnd_difference(composite, expected)};
  });
}

CheckOutcome check_triangle(const MonadPtr& m, SearchBudget budget) {
  return guarded([&] {
    EmConstruction em = psi_on_object(m, budget);
    EMndMorphism counit = counit_component(m, budget);
    UArrMorphism lifted = psi_on_morphism(counit, psi_on_object(counit.source, budget), em);
    UArrMorphism composite = uarr_compose(lifted, unit_component(em.arrow, budget));
    UArrMorphism expected = identity_uarr_morphism(em.arrow);
    if (composite == expected) return CheckOutcome{};
    return CheckOutcome{false, uarr_difference(composite, expected)};
  });
}

NaturalityVerdict check_unit_2naturality(const UArrTwoCell& c) {
  const UniversalArrow& u = *c.source.source;
  const UniversalArrow& t = *c.source.target;
  const FinCategory& d = *t.base;
  for (Obj x : u.upstairs->objects()) {
    Mor lhs = c.alpha[u.right(x)];
    Mor rhs = t.right(c.beta[x]);
    if (lhs != rhs) {
      return NaturalityVerdict{false, x,
                               "alpha at R " + u.upstairs->id(x) + " is " + d.describe(lhs) + " but R' beta at " +
                                   u.upstairs->id(x) + " is " + d.describe(rhs)};
    }
  }
  return NaturalityVerdict{};
}

std::vector<EMndMorphism> enumerate_emnd_morphisms(const MonadPtr& source, const MonadPtr& target,
                                                   SearchBudget budget) {
  const ExtensiveMonad& s = *source;
  const ExtensiveMonad& t = *target;
  const FinCategory& c = *s.base;
  const FinCategory& d = *t.base;
  std::vector<EMndMorphism> result;
  for (const Functor& p : enumerate_functors(s.base, t.base, budget)) {
    struct Entry {
      Key3 key;
      std::vector<Mor> candidates;
    };
    std::vector<Entry> entries;
    bool empty = false;
    std::uint64_t tables = 1;
    for (Obj x : d.objects()) {
      for (Obj a : c.objects()) {
        const Obj psa = p(s.S(a));
        for (Mor q : d.hom(x, psa)) {
          Entry e{{x.index, a.index, q.index}, {}};
          for (Mor cand : d.hom(t.S(x), psa)) {
            if (d.compose(cand, t.unit_at(x)) == q) e.candidates.push_back(cand);
          }
          if (e.candidates.empty()) empty = true;
          if (tables <= budget.limit) tables *= std::max<std::size_t>(1, e.candidates.size());
          entries.push_back(std::move(e));
        }
      }
    }
    if (empty) continue;
    if (tables > budget.limit) {
      fail(Fault::SearchBudgetExceeded, "1-cell search " + s.name + " -> " + t.name + " needs more than " +
                                            std::to_string(budget.limit) + " candidate tables");
    }
    std::vector<std::size_t> pick(entries.size(), 0);
    while (true) {
      EMndMorphism m;
      m.source = source;
      m.target = target;
      m.P = p;
      for (std::size_t i = 0; i < entries.size(); ++i) m.ext.emplace(entries[i].key, entries[i].candidates[pick[i]]);
      try {
        result.push_back(validate_emnd_morphism(std::move(m)));
      } catch (const LawError&) {
      }
      std::size_t i = 0;
      while (i < entries.size() && ++pick[i] == entries[i].candidates.size()) pick[i++] = 0;
      if (i == entries.size()) break;
    }
  }
  return result;
}

std::vector<UArrMorphism> enumerate_strict_uarr_morphisms(const ArrowPtr& source, const ArrowPtr& target,
                                                          SearchBudget budget) {
  std::vector<UArrMorphism> result;
  auto vs = enumerate_functors(source->upstairs, target->upstairs, budget);
  for (const Functor& j : enumerate_functors(source->base, target->base, budget)) {
    Functor jr = compose(j, source->right);
    for (const Functor& v : vs) {
      Functor rv = compose(target->right, v);
      if (!(jr == rv)) continue;
      UArrMorphism m;
      m.source = source;
      m.target = target;
      m.J = j;
      m.V = v;
      m.rho = identity_transformation(jr);
      m.rho.target = rv;
      m.rho_inv = identity_transformation(rv);
      m.rho_inv.target = jr;
      result.push_back(validate_uarr_morphism(std::move(m)));
    }
  }
  return result;
}

HomBijection check_hom_bijection(const ArrowPtr& u, const MonadPtr& m, SearchBudget budget) {
  HomBijection r;
  MonadPtr phi_u = phi_on_object(*u);
  EmConstruction em_phi = psi_on_object(phi_u, budget);
  EmConstruction em_m = psi_on_object(m, budget);
  UArrMorphism unit = unit_component(u, budget);
  auto emnd_homs = enumerate_emnd_morphisms(phi_u, m, budget);
  auto uarr_homs = enumerate_strict_uarr_morphisms(u, em_m.arrow, budget);
  r.emnd_count = emnd_homs.size();
  r.uarr_count = uarr_homs.size();
  std::set<std::size_t> hit;
  for (std::size_t i = 0; i < emnd_homs.size(); ++i) {
    UArrMorphism image = uarr_compose(psi_on_morphism(emnd_homs[i], em_phi, em_m), unit);
    auto it = std::find(uarr_homs.begin(), uarr_homs.end(), image);
    if (it == uarr_homs.end()) {
      r.lands = false;
      if (r.witness.empty()) r.witness = "image of 1-cell #" + std::to_string(i) + " is not a strict 1-cell";
      continue;
    }
    if (!hit.insert(static_cast<std::size_t>(it - uarr_homs.begin())).second) {
      r.injective = false;
      if (r.witness.empty()) r.witness = "1-cell #" + std::to_string(i) + " collides with an earlier image";
    }
  }
  r.surjective = hit.size() == uarr_homs.size();
  if (!r.surjective && r.witness.empty()) {
    for (std::size_t j = 0; j < uarr_homs.size(); ++j) {
      if (!hit.count(j)) {
        r.witness = "strict 1-cell #" + std::to_string(j) + " is not hit";
        break;
      }
    }
  }
  return r;
}

}  // namespace adj2
