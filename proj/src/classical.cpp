#include "adj2/classical.hpp"

namespace adj2 {

namespace {

std::string wrap(std::string_view f, const std::string& name) { return std::string(f) + "(" + name + ")"; }

std::string who(const std::string& name, std::string_view kind) {
  return name.empty() ? std::string(kind) : std::string(kind) + " '" + name + "'";
}

NatTrans make_nat(const Functor& source, const Functor& target, std::vector<Mor> components, std::string name = {}) {
  return NatTrans{std::move(name), source, target, std::move(components)};
}

void expect_shape(bool ok, const std::string& label, std::string_view what) {
  if (!ok) fail(Fault::ShapeMismatch, label + ": " + std::string(what));
}

}  // namespace

bool operator==(const Adjunction& a, const Adjunction& b) {
  return a.left == b.left && a.right == b.right && a.unit == b.unit && a.counit == b.counit;
}

AdjPtr validate_adjunction(Adjunction a) {
  const std::string label = who(a.name, "adjunction");
  expect_shape(a.left.source && a.left.target && a.right.source && a.right.target, label, "missing functors");
  expect_shape(same_category(a.left.source, a.right.target) && same_category(a.left.target, a.right.source), label,
               "L and R are not opposed");
  a.left = validate_functor(std::move(a.left));
  a.right = validate_functor(std::move(a.right));
  expect_shape(a.unit.source == identity_functor(a.base()) && a.unit.target == compose(a.right, a.left), label,
               "unit is not 1 -> R L");
  expect_shape(a.counit.source == compose(a.left, a.right) && a.counit.target == identity_functor(a.upstairs()),
               label, "counit is not L R -> 1");
  a.unit = validate_nat_trans(std::move(a.unit));
  a.counit = validate_nat_trans(std::move(a.counit));
  const FinCategory& c = *a.base();
  const FinCategory& x = *a.upstairs();
  for (Obj xo : x.objects()) {
    Obj rx = a.right(xo);
    if (c.compose(a.right(a.counit[xo]), a.unit[rx]) != c.identity(rx)) {
      fail(Fault::NotAdjunction, label + ": R eps . eta R != 1 at " + x.id(xo));
    }
  }
  for (Obj ao : c.objects()) {
    Obj la = a.left(ao);
    if (x.compose(a.counit[la], a.left(a.unit[ao])) != x.identity(la)) {
      fail(Fault::NotAdjunction, label + ": eps L . L eta != 1 at " + c.id(ao));
    }
  }
  return std::make_shared<const Adjunction>(std::move(a));
}

bool operator==(const AdjMorphism& a, const AdjMorphism& b) {
  return *a.source == *b.source && *a.target == *b.target && a.J == b.J && a.V == b.V && a.rho == b.rho &&
         a.rho_inv == b.rho_inv && a.lambda == b.lambda;
}

NatTrans dual_adjoint_image(const AdjMorphism& m, const NatTrans& lambda) {
  const Adjunction& s = *m.source;
  const Adjunction& t = *m.target;
  const FinCategory& d = *t.base();
  std::vector<Mor> comps;
  for (Obj x : s.upstairs()->objects()) {
    Obj rx = s.right(x);
    comps.push_back(d.compose(t.right(m.V(s.counit[x])), t.right(lambda[rx]), t.unit[m.J(rx)]));
  }
  return make_nat(compose(m.J, s.right), compose(t.right, m.V), std::move(comps));
}

AdjMorphism validate_adj_morphism(AdjMorphism m) {
  const std::string label = who(m.name, "1-cell");
  if (!m.source || !m.target) fail(Fault::IllTyped, label + " lacks endpoints");
  const Adjunction& s = *m.source;
  const Adjunction& t = *m.target;
  expect_shape(same_category(m.J.source, s.base()) && same_category(m.J.target, t.base()) &&
                   same_category(m.V.source, s.upstairs()) && same_category(m.V.target, t.upstairs()),
               label, "J or V has the wrong shape");
  Functor jr = compose(m.J, s.right);
  Functor rv = compose(t.right, m.V);
  expect_shape(m.rho.source == jr && m.rho.target == rv, label, "rho is not J R -> R' V");
  expect_shape(m.rho_inv.source == rv && m.rho_inv.target == jr, label, "rho inverse is not R' V -> J R");
  expect_shape(m.lambda.source == compose(t.left, m.J) && m.lambda.target == compose(m.V, s.left), label,
               "lambda is not L' J -> V L");
  m.rho = validate_nat_trans(std::move(m.rho));
  m.rho_inv = validate_nat_trans(std::move(m.rho_inv));
  m.lambda = validate_nat_trans(std::move(m.lambda));
  const FinCategory& d = *t.base();
  for (Obj x : s.upstairs()->objects()) {
    if (d.compose(m.rho_inv[x], m.rho[x]) != d.identity(jr(x)) || d.compose(m.rho[x], m.rho_inv[x]) != d.identity(rv(x))) {
      fail(Fault::NotInvertible, label + ": rho is not inverted at " + s.upstairs()->id(x));
    }
  }
  NatTrans image = dual_adjoint_image(m, m.lambda);
  for (Obj x : s.upstairs()->objects()) {
    if (image[x] != m.rho[x]) {
      fail(Fault::NotAdjunction, label + ": lambda is not the dual adjoint of rho at " + s.upstairs()->id(x));
    }
  }
  return m;
}

std::vector<NatTrans> dual_adjoints(const AdjMorphism& m, SearchBudget budget) {
  std::vector<NatTrans> found;
  for (NatTrans& l : enumerate_transformations(compose(m.target->left, m.J), compose(m.V, m.source->left), budget)) {
    if (dual_adjoint_image(m, l).components == m.rho.components) found.push_back(std::move(l));
  }
  return found;
}

bool operator==(const AdjTwoCell& a, const AdjTwoCell& b) {
  return a.source == b.source && a.target == b.target && a.alpha == b.alpha && a.beta == b.beta;
}

AdjTwoCell validate_adj_two_cell(AdjTwoCell c) {
  const std::string label = who(c.name, "2-cell");
  expect_shape(*c.source.source == *c.target.source && *c.source.target == *c.target.target, label,
               "1-cells are not parallel");
  expect_shape(c.alpha.source == c.source.J && c.alpha.target == c.target.J, label, "alpha is not J -> K");
  expect_shape(c.beta.source == c.source.V && c.beta.target == c.target.V, label, "beta is not V -> W");
  c.alpha = validate_nat_trans(std::move(c.alpha));
  c.beta = validate_nat_trans(std::move(c.beta));
  const Adjunction& s = *c.source.source;
  const Adjunction& t = *c.source.target;
  const FinCategory& d = *t.base();
  const FinCategory& y = *t.upstairs();
  for (Obj x : s.upstairs()->objects()) {
    if (d.compose(t.right(c.beta[x]), c.source.rho[x]) != d.compose(c.target.rho[x], c.alpha[s.right(x)])) {
      fail(Fault::NotCylinder, label + ": cylinder condition fails at " + s.upstairs()->id(x));
    }
  }
  for (Obj a : s.base()->objects()) {
    if (y.compose(c.target.lambda[a], t.left(c.alpha[a])) != y.compose(c.beta[s.left(a)], c.source.lambda[a])) {
      fail(Fault::NotCylinder, label + ": lambda' . L'alpha != beta L . lambda at " + s.base()->id(a));
    }
  }
  return c;
}

bool operator==(const ClassicalMonad& a, const ClassicalMonad& b) {
  return a.endo == b.endo && a.unit == b.unit && a.mult == b.mult;
}

CMonadPtr validate_classical_monad(ClassicalMonad m) {
  const std::string label = who(m.name, "monad");
  expect_shape(m.endo.source && same_category(m.endo.source, m.endo.target), label, "S is not an endofunctor");
  m.endo = validate_functor(std::move(m.endo));
  expect_shape(m.unit.source == identity_functor(m.base()) && m.unit.target == m.endo, label, "unit is not 1 -> S");
  expect_shape(m.mult.source == compose(m.endo, m.endo) && m.mult.target == m.endo, label, "mult is not S S -> S");
  m.unit = validate_nat_trans(std::move(m.unit));
  m.mult = validate_nat_trans(std::move(m.mult));
  const FinCategory& c = *m.base();
  for (Obj a : c.objects()) {
    Obj sa = m.endo(a);
    if (c.compose(m.mult[a], m.unit[sa]) != c.identity(sa)) fail(Fault::NotMonad, label + ": mu . eta S != 1 at " + c.id(a));
    if (c.compose(m.mult[a], m.endo(m.unit[a])) != c.identity(sa)) {
      fail(Fault::NotMonad, label + ": mu . S eta != 1 at " + c.id(a));
    }
    if (c.compose(m.mult[a], m.mult[sa]) != c.compose(m.mult[a], m.endo(m.mult[a]))) {
      fail(Fault::NotMonad, label + ": mu . mu S != mu . S mu at " + c.id(a));
    }
  }
  return std::make_shared<const ClassicalMonad>(std::move(m));
}

bool operator==(const MonadMorphism& a, const MonadMorphism& b) {
  return *a.source == *b.source && *a.target == *b.target && a.P == b.P && a.phi == b.phi;
}

MonadMorphism validate_monad_morphism(MonadMorphism m) {
  const std::string label = who(m.name, "1-cell");
  if (!m.source || !m.target) fail(Fault::IllTyped, label + " lacks endpoints");
  const ClassicalMonad& s = *m.source;
  const ClassicalMonad& t = *m.target;
  expect_shape(same_category(m.P.source, s.base()) && same_category(m.P.target, t.base()), label,
               "P has the wrong shape");
  expect_shape(m.phi.source == compose(t.endo, m.P) && m.phi.target == compose(m.P, s.endo), label,
               "phi is not T P -> P S");
  m.P = validate_functor(std::move(m.P));
  m.phi = validate_nat_trans(std::move(m.phi));
  const FinCategory& d = *t.base();
  for (Obj a : s.base()->objects()) {
    Obj pa = m.P(a);
    if (d.compose(m.phi[a], t.unit[pa]) != m.P(s.unit[a])) {
      fail(Fault::NotMonadMorphism, label + ": phi . eta P != P eta at " + s.base()->id(a));
    }
    if (d.compose(m.phi[a], t.mult[pa]) != d.compose(m.P(s.mult[a]), m.phi[s.endo(a)], t.endo(m.phi[a]))) {
      fail(Fault::NotMonadMorphism, label + ": phi . mu P != P mu . phi S . T phi at " + s.base()->id(a));
    }
  }
  return m;
}

bool operator==(const MonadTwoCell& a, const MonadTwoCell& b) {
  return a.source == b.source && a.target == b.target && a.theta == b.theta;
}

MonadTwoCell validate_monad_two_cell(MonadTwoCell c) {
  const std::string label = who(c.name, "2-cell");
  expect_shape(*c.source.source == *c.target.source && *c.source.target == *c.target.target, label,
               "1-cells are not parallel");
  expect_shape(c.theta.source == c.source.P && c.theta.target == c.target.P, label, "theta is not P -> Q");
  c.theta = validate_nat_trans(std::move(c.theta));
  const ClassicalMonad& s = *c.source.source;
  const ClassicalMonad& t = *c.source.target;
  const FinCategory& d = *t.base();
  for (Obj a : s.base()->objects()) {
    if (d.compose(c.target.phi[a], t.endo(c.theta[a])) != d.compose(c.theta[s.endo(a)], c.source.phi[a])) {
      fail(Fault::NotMonadMorphism, label + ": psi . T theta != theta S . phi at " + s.base()->id(a));
    }
  }
  return c;
}

AdjPtr F_on_object(const UniversalArrow& u) {
  const FinCategory& c = *u.base;
  const FinCategory& x = *u.upstairs;
  Adjunction a;
  a.name = wrap("F", u.name);
  a.right = u.right;
  a.left.name = wrap("left", u.name);
  a.left.source = u.base;
  a.left.target = u.upstairs;
  a.left.objects = u.left.objects;
  for (Mor f : c.morphisms()) {
    Obj b = c.target(f);
    a.left.morphisms.push_back(u.transpose(c.source(f), u.left(b), c.compose(u.unit_at(b), f)));
  }
  a.left = validate_functor(std::move(a.left));
  a.unit = make_nat(identity_functor(u.base), compose(a.right, a.left), u.unit, wrap("unit", u.name));
  std::vector<Mor> eps;
  for (Obj xo : x.objects()) eps.push_back(u.transpose(u.right(xo), xo, c.identity(u.right(xo))));
  a.counit = make_nat(compose(a.left, a.right), identity_functor(u.upstairs), std::move(eps), wrap("counit", u.name));
  return validate_adjunction(std::move(a));
}

AdjMorphism F_on_morphism(const UArrMorphism& m) {
  const UniversalArrow& s = *m.source;
  const UniversalArrow& t = *m.target;
  const FinCategory& d = *t.base;
  AdjMorphism a;
  a.name = wrap("F", m.name);
  a.source = F_on_object(s);
  a.target = F_on_object(t);
  a.J = m.J;
  a.V = m.V;
  a.rho = m.rho;
  a.rho_inv = m.rho_inv;
  std::vector<Mor> comps;
  for (Obj ao : s.base->objects()) {
    Obj la = s.left(ao);
    comps.push_back(t.transpose(m.J(ao), m.V(la), d.compose(m.rho[la], m.J(s.unit_at(ao)))));
  }
  a.lambda = make_nat(compose(a.target->left, m.J), compose(m.V, a.source->left), std::move(comps));
  return validate_adj_morphism(std::move(a));
}

AdjTwoCell F_on_two_cell(const UArrTwoCell& c) {
  return validate_adj_two_cell(
      AdjTwoCell{wrap("F", c.name), F_on_morphism(c.source), F_on_morphism(c.target), c.alpha, c.beta});
}

ArrowPtr G_on_object(const Adjunction& a) {
  ArrowPtr u = validate_universal_arrow(wrap("G", a.name), a.right, object_part(a.left), a.unit.components);
  const FinCategory& x = *a.upstairs();
  for (const auto& [key, w] : u->zeta) {
    Obj xo{key[1]};
    Mor expected = x.compose(a.counit[xo], a.left(Mor{key[2]}));
    if (expected != w) {
      fail(Fault::Internal, "transpose in " + u->name + " at " + x.id(xo) + " is " + x.id(w) + " but eps . L v is " +
                                x.id(expected));
    }
  }
  return u;
}

UArrMorphism G_on_morphism(const AdjMorphism& m) {
  UArrMorphism u{wrap("G", m.name), G_on_object(*m.source), G_on_object(*m.target), m.J, m.V, m.rho, m.rho_inv};
  return validate_uarr_morphism(std::move(u));
}

UArrTwoCell G_on_two_cell(const AdjTwoCell& c) {
  return validate_uarr_two_cell(
      UArrTwoCell{wrap("G", c.name), G_on_morphism(c.source), G_on_morphism(c.target), c.alpha, c.beta});
}

CMonadPtr H_on_object(const ExtensiveMonad& m) {
  const FinCategory& c = *m.base;
  ClassicalMonad cm;
  cm.name = wrap("H", m.name);
  cm.endo.name = wrap("endo", m.name);
  cm.endo.source = m.base;
  cm.endo.target = m.base;
  cm.endo.objects = m.endo.objects;
  for (Mor f : c.morphisms()) {
    Obj b = c.target(f);
    cm.endo.morphisms.push_back(m.extend(c.source(f), b, c.compose(m.unit_at(b), f)));
  }
  cm.endo = validate_functor(std::move(cm.endo));
  cm.unit = make_nat(identity_functor(m.base), cm.endo, m.unit, wrap("unit", m.name));
  std::vector<Mor> mu;
  for (Obj a : c.objects()) mu.push_back(m.extend(m.S(a), a, c.identity(m.S(a))));
  cm.mult = make_nat(compose(cm.endo, cm.endo), cm.endo, std::move(mu), wrap("mult", m.name));
  return validate_classical_monad(std::move(cm));
}

MonadMorphism H_on_morphism(const EMndMorphism& m) {
  MonadMorphism mm;
  mm.name = wrap("H", m.name);
  mm.source = H_on_object(*m.source);
  mm.target = H_on_object(*m.target);
  mm.P = m.P;
  std::vector<Mor> comps;
  for (Obj a : m.source->base->objects()) comps.push_back(m.extend(m.P(a), a, m.P(m.source->unit_at(a))));
  mm.phi = make_nat(compose(mm.target->endo, m.P), compose(m.P, mm.source->endo), std::move(comps));
  return validate_monad_morphism(std::move(mm));
}

MonadTwoCell H_on_two_cell(const EMndTwoCell& c) {
  return validate_monad_two_cell(
      MonadTwoCell{wrap("H", c.name), H_on_morphism(c.source), H_on_morphism(c.target), c.theta});
}

MonadPtr K_on_object(const ClassicalMonad& m) {
  const FinCategory& c = *m.base();
  std::map<Key3, Mor> ext;
  for (Obj a : c.objects()) {
    for (Obj b : c.objects()) {
      for (Mor h : c.hom(a, m.endo(b))) ext.emplace(Key3{a.index, b.index, h.index}, c.compose(m.mult[b], m.endo(h)));
    }
  }
  return validate_extensive_monad(wrap("K", m.name), object_part(m.endo), m.unit.components, std::move(ext));
}

EMndMorphism K_on_morphism(const MonadMorphism& m) {
  const ClassicalMonad& s = *m.source;
  const ClassicalMonad& t = *m.target;
  const FinCategory& d = *t.base();
  EMndMorphism e;
  e.name = wrap("K", m.name);
  e.source = K_on_object(s);
  e.target = K_on_object(t);
  e.P = m.P;
  for (Obj a : s.base()->objects()) {
    Obj sa = s.endo(a);
    Mor collapse = d.compose(m.P(s.mult[a]), m.phi[sa]);
    for (Obj x : d.objects()) {
      for (Mor r : d.hom(x, m.P(sa))) e.ext.emplace(Key3{x.index, a.index, r.index}, d.compose(collapse, t.endo(r)));
    }
  }
  return validate_emnd_morphism(std::move(e));
}

EMndTwoCell K_on_two_cell(const MonadTwoCell& c) {
  return validate_emnd_two_cell(
      EMndTwoCell{wrap("K", c.name), K_on_morphism(c.source), K_on_morphism(c.target), c.theta});
}

CMonadPtr phi_e_on_object(const Adjunction& a) { return H_on_object(*phi_on_object(*G_on_object(a))); }

MonadMorphism phi_e_on_morphism(const AdjMorphism& m) { return H_on_morphism(phi_on_morphism(G_on_morphism(m))); }

MonadTwoCell phi_e_on_two_cell(const AdjTwoCell& c) { return H_on_two_cell(phi_on_two_cell(G_on_two_cell(c))); }

AdjPtr psi_e_on_object(const ClassicalMonad& m, SearchBudget budget) {
  return F_on_object(*psi_on_object(K_on_object(m), budget).arrow);
}

AdjMorphism psi_e_on_morphism(const MonadMorphism& m, SearchBudget budget) {
  return F_on_morphism(psi_on_morphism(K_on_morphism(m), budget));
}

AdjTwoCell psi_e_on_two_cell(const MonadTwoCell& c, SearchBudget budget) {
  return F_on_two_cell(psi_on_two_cell(K_on_two_cell(c), budget));
}

}  // namespace adj2
