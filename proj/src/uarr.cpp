#include "adj2/uarr.hpp"

#include <algorithm>

namespace adj2 {

namespace {

std::string triple(const UniversalArrow& u, Obj a, Obj x, Mor v) {
  return "(A=" + u.base->id(a) + ", X=" + u.upstairs->id(x) + ", v=" + u.base->id(v) + ")";
}

std::string cell_name(const std::string& name, std::string_view kind) {
  return name.empty() ? std::string(kind) : std::string(kind) + " '" + name + "'";
}

}  // namespace

Mor UniversalArrow::transpose(Obj a, Obj x, Mor v) const {
  auto it = zeta.find(Key3{a.index, x.index, v.index});
  if (it == zeta.end()) fail(Fault::UnknownEntity, "no transpose for " + triple(*this, a, x, v) + " in " + name);
  return it->second;
}

bool operator==(const UniversalArrow& a, const UniversalArrow& b) {
  return same_category(a.base, b.base) && same_category(a.upstairs, b.upstairs) && a.right == b.right &&
         a.left == b.left && a.unit == b.unit && a.zeta == b.zeta;
}

std::vector<Mor> universal_witnesses(const UniversalArrow& u, Obj a, Obj x, Mor v) {
  const FinCategory& c = *u.base;
  if (c.source(v) != a || c.target(v) != u.right(x)) {
    fail(Fault::IllTyped, "v is not a morphism A -> R X at " + triple(u, a, x, v));
  }
  std::vector<Mor> found;
  for (Mor w : u.upstairs->hom(u.left(a), x)) {
    if (c.compose(u.right(w), u.unit_at(a)) == v) found.push_back(w);
  }
  return found;
}

Mor compute_zeta(const UniversalArrow& u, Obj a, Obj x, Mor v) {
  auto found = universal_witnesses(u, a, x, v);
  if (found.size() == 1) return found.front();
  std::string list;
  for (Mor w : found) list += (list.empty() ? "" : ", ") + u.upstairs->id(w);
  std::string where = cell_name(u.name, "arrow") + " at " + triple(u, a, x, v);
  if (found.empty()) fail(Fault::NoWitness, where + "; candidates in Hom(L A, X) all fail");
  fail(Fault::AmbiguousWitness, where + "; witnesses [" + list + "]");
}

ArrowPtr validate_universal_arrow(std::string name, Functor right, ObjectFunction left, std::vector<Mor> unit) {
  auto u = std::make_shared<UniversalArrow>();
  u->name = std::move(name);
  u->base = right.target;
  u->upstairs = right.source;
  if (!same_category(left.source, u->base) || !same_category(left.target, u->upstairs)) {
    fail(Fault::ShapeMismatch, cell_name(u->name, "arrow") + ": left object function has the wrong shape");
  }
  u->right = std::move(right);
  u->left = validate_object_function(std::move(left));
  u->unit = std::move(unit);
  const FinCategory& c = *u->base;
  const FinCategory& x = *u->upstairs;
  if (u->unit.size() != static_cast<std::size_t>(c.object_count())) {
    fail(Fault::IllTyped, cell_name(u->name, "arrow") + ": unit is not total");
  }
  for (Obj a : c.objects()) {
    Mor eta = u->unit_at(a);
    if (eta.index < 0 || eta.index >= c.morphism_count() || c.source(eta) != a ||
        c.target(eta) != u->right(u->left(a))) {
      fail(Fault::IllTyped, cell_name(u->name, "arrow") + ": unit at " + c.id(a) + " is not A -> R L A");
    }
  }
  for (Obj a : c.objects()) {
    for (Obj xo : x.objects()) {
      const auto& vs = c.hom(a, u->right(xo));
      std::vector<Mor> image;
      for (Mor v : vs) {
        Mor w = compute_zeta(*u, a, xo, v);
        u->zeta.emplace(Key3{a.index, xo.index, v.index}, w);
        image.push_back(w);
      }
      std::sort(image.begin(), image.end());
      bool injective = std::adjacent_find(image.begin(), image.end()) == image.end();
      if (!injective || image.size() != x.hom(u->left(a), xo).size()) {
        fail(Fault::Internal, cell_name(u->name, "arrow") + ": transpose is not a bijection at (A=" + c.id(a) +
                                  ", X=" + x.id(xo) + ")");
      }
    }
  }
  return u;
}

bool UArrMorphism::has_identity_rho() const { return is_identity_transformation(rho); }

bool operator==(const UArrMorphism& a, const UArrMorphism& b) {
  return *a.source == *b.source && *a.target == *b.target && a.J == b.J && a.V == b.V && a.rho == b.rho &&
         a.rho_inv == b.rho_inv;
}

UArrMorphism validate_uarr_morphism(UArrMorphism m) {
  const std::string who = cell_name(m.name, "1-cell");
  if (!m.source || !m.target) fail(Fault::IllTyped, who + " lacks endpoints");
  const UniversalArrow& u = *m.source;
  const UniversalArrow& t = *m.target;
  if (!same_category(m.J.source, u.base) || !same_category(m.J.target, t.base) ||
      !same_category(m.V.source, u.upstairs) || !same_category(m.V.target, t.upstairs)) {
    fail(Fault::ShapeMismatch, who + ": J or V has the wrong shape");
  }
  Functor jr = compose(m.J, u.right);
  Functor rv = compose(t.right, m.V);
  if (!(m.rho.source == jr) || !(m.rho.target == rv)) fail(Fault::ShapeMismatch, who + ": rho is not J R -> R' V");
  if (!(m.rho_inv.source == rv) || !(m.rho_inv.target == jr)) {
    fail(Fault::ShapeMismatch, who + ": rho inverse is not R' V -> J R");
  }
  m.rho = validate_nat_trans(std::move(m.rho));
  m.rho_inv = validate_nat_trans(std::move(m.rho_inv));
  const FinCategory& d = *t.base;
  for (Obj x : u.upstairs->objects()) {
    if (d.compose(m.rho_inv[x], m.rho[x]) != d.identity(jr(x)) ||
        d.compose(m.rho[x], m.rho_inv[x]) != d.identity(rv(x))) {
      fail(Fault::NotInvertible, who + ": rho is not inverted at " + u.upstairs->id(x));
    }
  }
  return m;
}

UArrMorphism identity_uarr_morphism(const ArrowPtr& u) {
  UArrMorphism m;
  m.source = u;
  m.target = u;
  m.J = identity_functor(u->base);
  m.V = identity_functor(u->upstairs);
  m.rho = identity_transformation(u->right);
  m.rho_inv = m.rho;
  return m;
}

UArrMorphism uarr_compose(const UArrMorphism& second, const UArrMorphism& first) {
  if (!(*first.target == *second.source)) fail(Fault::ShapeMismatch, "1-cell composite of non-adjacent 1-cells");
  UArrMorphism m;
  m.source = first.source;
  m.target = second.target;
  m.J = compose(second.J, first.J);
  m.V = compose(second.V, first.V);
  m.rho = vertical(whisker_right(second.rho, first.V), whisker_left(second.J, first.rho));
  m.rho_inv = vertical(whisker_left(second.J, first.rho_inv), whisker_right(second.rho_inv, first.V));
  return m;
}

bool operator==(const UArrTwoCell& a, const UArrTwoCell& b) {
  return a.source == b.source && a.target == b.target && a.alpha == b.alpha && a.beta == b.beta;
}

std::optional<Obj> cylinder_witness(const UArrTwoCell& c) {
  const UniversalArrow& u = *c.source.source;
  const UniversalArrow& t = *c.source.target;
  const FinCategory& d = *t.base;
  for (Obj x : u.upstairs->objects()) {
    Mor lhs = d.compose(t.right(c.beta[x]), c.source.rho[x]);
    Mor rhs = d.compose(c.target.rho[x], c.alpha[u.right(x)]);
    if (lhs != rhs) return x;
  }
  return std::nullopt;
}

UArrTwoCell validate_uarr_two_cell(UArrTwoCell c) {
  const std::string who = cell_name(c.name, "2-cell");
  if (!(*c.source.source == *c.target.source) || !(*c.source.target == *c.target.target)) {
    fail(Fault::ShapeMismatch, who + ": 1-cells are not parallel");
  }
  if (!(c.alpha.source == c.source.J) || !(c.alpha.target == c.target.J)) {
    fail(Fault::ShapeMismatch, who + ": alpha is not J -> K");
  }
  if (!(c.beta.source == c.source.V) || !(c.beta.target == c.target.V)) {
    fail(Fault::ShapeMismatch, who + ": beta is not V -> W");
  }
  c.alpha = validate_nat_trans(std::move(c.alpha));
  c.beta = validate_nat_trans(std::move(c.beta));
  if (auto x = cylinder_witness(c)) {
    fail(Fault::NotCylinder, who + ": cylinder condition fails at " + c.source.source->upstairs->id(*x));
  }
  return c;
}

UArrTwoCell identity_uarr_two_cell(const UArrMorphism& m) {
  return UArrTwoCell{"", m, m, identity_transformation(m.J), identity_transformation(m.V)};
}

UArrTwoCell uarr_vertical(const UArrTwoCell& second, const UArrTwoCell& first) {
  if (!(first.target == second.source)) fail(Fault::ShapeMismatch, "vertical composite of non-adjacent 2-cells");
  return validate_uarr_two_cell(UArrTwoCell{"", first.source, second.target, vertical(second.alpha, first.alpha),
                                            vertical(second.beta, first.beta)});
}

UArrTwoCell uarr_whisker_forward(const UArrMorphism& m, const UArrTwoCell& c) {
  return validate_uarr_two_cell(UArrTwoCell{"", uarr_compose(m, c.source), uarr_compose(m, c.target),
                                            whisker_left(m.J, c.alpha), whisker_left(m.V, c.beta)});
}

UArrTwoCell uarr_whisker_back(const UArrTwoCell& c, const UArrMorphism& m) {
  return validate_uarr_two_cell(UArrTwoCell{"", uarr_compose(c.source, m), uarr_compose(c.target, m),
                                            whisker_right(c.alpha, m.J), whisker_right(c.beta, m.V)});
}

UArrTwoCell uarr_horizontal(const UArrTwoCell& outer, const UArrTwoCell& inner) {
  return uarr_vertical(uarr_whisker_back(outer, inner.target), uarr_whisker_forward(outer.source, inner));
}

UArrTwoCell uarr_horizontal_transposed(const UArrTwoCell& outer, const UArrTwoCell& inner) {
  return uarr_vertical(uarr_whisker_forward(outer.target, inner), uarr_whisker_back(outer, inner.source));
}

}  // namespace adj2
