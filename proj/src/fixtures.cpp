#include "adj2/fixtures.hpp"

#include <algorithm>
#include <random>

#include "adj2/poset.hpp"

namespace adj2 {

namespace {

Functor named(Functor f, std::string name) {
  f.name = std::move(name);
  return f;
}

NatTrans thin_nat(const Functor& f, const Functor& g, std::string name = {}) {
  NatTrans t{std::move(name), f, g, {}};
  for (Obj a : f.source->objects()) t.components.push_back(thin_arrow(*f.target, f(a), g(a)));
  return validate_nat_trans(std::move(t));
}

Functor constant_functor(const CatPtr& c, const CatPtr& d, Obj value) {
  return monotone_functor(c, d, std::vector<Obj>(static_cast<std::size_t>(c->object_count()), value));
}

std::vector<Obj> identities_of(const FinCategory& c) {
  std::vector<Obj> out;
  for (Obj a : c.objects()) out.push_back(a);
  return out;
}

std::vector<Mor> identity_components(const FinCategory& c) {
  std::vector<Mor> out;
  for (Obj a : c.objects()) out.push_back(c.identity(a));
  return out;
}

ArrowPtr identity_arrow(std::string name, const CatPtr& c) {
  return validate_universal_arrow(std::move(name), named(identity_functor(c), "Id" + c->name()),
                                  ObjectFunction{c, c, identities_of(*c)}, identity_components(*c));
}

MonadPtr identity_monad(std::string name, const CatPtr& c) {
  std::map<Key3, Mor> ext;
  for (Obj a : c->objects()) {
    for (Obj b : c->objects()) {
      for (Mor h : c->hom(a, b)) ext.emplace(Key3{a.index, b.index, h.index}, h);
    }
  }
  return validate_extensive_monad(std::move(name), ObjectFunction{c, c, identities_of(*c)}, identity_components(*c),
                                  std::move(ext));
}

// Closure operator on a thin category given by its object images.
MonadPtr closure_monad(std::string name, const CatPtr& c, const std::vector<Obj>& images) {
  std::vector<Mor> unit;
  for (Obj a : c->objects()) unit.push_back(thin_arrow(*c, a, images[static_cast<std::size_t>(a.index)]));
  std::map<Key3, Mor> ext;
  for (Obj a : c->objects()) {
    for (Obj b : c->objects()) {
      Obj sa = images[static_cast<std::size_t>(a.index)];
      Obj sb = images[static_cast<std::size_t>(b.index)];
      for (Mor h : c->hom(a, sb)) ext.emplace(Key3{a.index, b.index, h.index}, thin_arrow(*c, sa, sb));
    }
  }
  return validate_extensive_monad(std::move(name), ObjectFunction{c, c, images}, std::move(unit), std::move(ext));
}

// Inclusion of the closed elements, with the closure as left part.
ArrowPtr closure_arrow(std::string name, const CatPtr& c, const CatPtr& closed, const Functor& incl,
                       const std::vector<Obj>& images) {
  ObjectFunction left{c, closed, {}};
  std::vector<Mor> unit;
  for (Obj a : c->objects()) {
    Obj ca = images[static_cast<std::size_t>(a.index)];
    left.objects.push_back(closed->object(c->id(ca)));
    unit.push_back(thin_arrow(*c, a, ca));
  }
  return validate_universal_arrow(std::move(name), incl, std::move(left), std::move(unit));
}

UArrMorphism strict_uarr(std::string name, const ArrowPtr& s, const ArrowPtr& t, Functor j, Functor v) {
  UArrMorphism m;
  m.name = std::move(name);
  m.source = s;
  m.target = t;
  m.J = std::move(j);
  m.V = std::move(v);
  Functor jr = compose(m.J, s->right);
  Functor rv = compose(t->right, m.V);
  m.rho = NatTrans{"", jr, rv, {}};
  for (Obj x : s->upstairs->objects()) m.rho.components.push_back(t->base->identity(jr(x)));
  m.rho_inv = NatTrans{"", rv, jr, m.rho.components};
  return validate_uarr_morphism(std::move(m));
}

// A 1-cell between monads on thin categories; every extension is the unique arrow.
EMndMorphism thin_emnd(std::string name, const MonadPtr& s, const MonadPtr& t, Functor p) {
  EMndMorphism m;
  m.name = std::move(name);
  m.source = s;
  m.target = t;
  m.P = std::move(p);
  const FinCategory& d = *t->base;
  for (Obj x : d.objects()) {
    for (Obj a : s->base->objects()) {
      Obj psa = m.P(s->S(a));
      for (Mor q : d.hom(x, psa)) m.ext.emplace(Key3{x.index, a.index, q.index}, thin_arrow(d, t->S(x), psa));
    }
  }
  return validate_emnd_morphism(std::move(m));
}

// Closure monad in classical form: c, the unit below it and the identity multiplication.
CMonadPtr thin_cmonad(std::string name, const Functor& endo) {
  ClassicalMonad m;
  m.name = name;
  m.endo = endo;
  m.unit = thin_nat(identity_functor(endo.source), endo, name + ".unit");
  m.mult = thin_nat(compose(endo, endo), endo, name + ".mult");
  return validate_classical_monad(std::move(m));
}

AdjPtr thin_adjunction(std::string name, const Functor& left, const Functor& right) {
  Adjunction a;
  a.name = name;
  a.left = left;
  a.right = right;
  a.unit = thin_nat(identity_functor(left.source), compose(right, left), name + ".unit");
  a.counit = thin_nat(compose(left, right), identity_functor(right.source), name + ".counit");
  return validate_adjunction(std::move(a));
}

AdjMorphism thin_adj_morphism(std::string name, const AdjPtr& s, const AdjPtr& t, Functor j, Functor v) {
  AdjMorphism m;
  m.name = name;
  m.source = s;
  m.target = t;
  m.J = std::move(j);
  m.V = std::move(v);
  m.rho = thin_nat(compose(m.J, s->right), compose(t->right, m.V));
  m.rho_inv = thin_nat(compose(t->right, m.V), compose(m.J, s->right));
  m.lambda = thin_nat(compose(t->left, m.J), compose(m.V, s->left));
  return validate_adj_morphism(std::move(m));
}

MonadMorphism thin_monad_morphism(std::string name, const CMonadPtr& s, const CMonadPtr& t, Functor p) {
  MonadMorphism m;
  m.name = name;
  m.source = s;
  m.target = t;
  m.P = std::move(p);
  m.phi = thin_nat(compose(t->endo, m.P), compose(m.P, s->endo));
  return validate_monad_morphism(std::move(m));
}

Functor functor_by_ids(std::string name, const CatPtr& c, const CatPtr& d,
                       const std::vector<std::pair<std::string, std::string>>& objects,
                       const std::vector<std::pair<std::string, std::string>>& morphisms) {
  Functor f{std::move(name), c, d, std::vector<Obj>(static_cast<std::size_t>(c->object_count())),
            std::vector<Mor>(static_cast<std::size_t>(c->morphism_count()))};
  for (const auto& [a, b] : objects) f.objects[static_cast<std::size_t>(c->object(a).index)] = d->object(b);
  for (const auto& [a, b] : morphisms) f.morphisms[static_cast<std::size_t>(c->morphism(a).index)] = d->morphism(b);
  return validate_functor(std::move(f));
}

NatTrans nat_by_ids(std::string name, const Functor& f, const Functor& g,
                    const std::vector<std::pair<std::string, std::string>>& components) {
  NatTrans t{std::move(name), f, g, std::vector<Mor>(static_cast<std::size_t>(f.source->object_count()))};
  for (const auto& [a, m] : components) t.components[static_cast<std::size_t>(f.source->object(a).index)] = f.target->morphism(m);
  return validate_nat_trans(std::move(t));
}

CatPtr iso2() {
  CategoryDescription d;
  d.name = "Iso2";
  d.objects = {"a", "b"};
  d.morphisms = {{"id_a", "a", "a"}, {"id_b", "b", "b"}, {"f", "a", "b"}, {"g", "b", "a"}};
  d.identities = {{"a", "id_a"}, {"b", "id_b"}};
  d.composites = {{"id_a", "id_a", "id_a"}, {"id_b", "id_b", "id_b"}, {"f", "id_a", "f"}, {"id_b", "f", "f"},
                  {"g", "id_b", "g"},       {"id_a", "g", "g"},       {"g", "f", "id_a"}, {"f", "g", "id_b"}};
  return validate_category(d);
}

std::vector<Obj> objs(const CatPtr& c, const std::vector<std::string>& ids) {
  std::vector<Obj> out;
  for (const auto& id : ids) out.push_back(c->object(id));
  return out;
}

}  // namespace

void add_builtin_fixtures(Workspace& ws) {
  const std::string g = "builtin";
  auto leq = [](std::size_t a, std::size_t b) { return a <= b; };
  CatPtr one = poset_category("One", {"*"}, leq);
  CatPtr two = poset_category("Two", {"0", "2"}, leq);
  CatPtr chain3 = poset_category("Chain3", {"0", "1", "2"}, leq);
  const std::vector<int> divisors{1, 2, 3, 6};
  CatPtr div6 = poset_category("Div6", {"1", "2", "3", "6"},
                               [&](std::size_t a, std::size_t b) { return divisors[b] % divisors[a] == 0; });
  auto [div_closed, div_incl] = full_subcategory("Div6Closed", div6, objs(div6, {"2", "6"}));
  CatPtr iso = iso2();
  for (const auto& c : {one, two, chain3, div6, div_closed, iso}) ws.add(c, g);

  Functor incl = named(monotone_functor(two, chain3, std::vector<std::pair<std::string, std::string>>{{"0", "0"}, {"2", "2"}}), "Incl");
  Functor galois_left = named(
      monotone_functor(chain3, two, std::vector<std::pair<std::string, std::string>>{{"0", "0"}, {"1", "2"}, {"2", "2"}}),
      "GaloisLeft");
  Functor galois_closure = named(
      monotone_functor(chain3, chain3, std::vector<std::pair<std::string, std::string>>{{"0", "0"}, {"1", "2"}, {"2", "2"}}),
      "GaloisClosure");
  Functor closure2 = named(
      monotone_functor(chain3, chain3, std::vector<std::pair<std::string, std::string>>{{"0", "1"}, {"1", "1"}, {"2", "2"}}),
      "Closure2");
  Functor top3 = named(constant_functor(chain3, chain3, chain3->object("2")), "Top3");
  Functor top_two = named(constant_functor(chain3, two, two->object("2")), "TopTwo");
  div_incl.name = "DivIncl";
  Functor swap = functor_by_ids("Swap", iso, iso, {{"a", "b"}, {"b", "a"}},
                                {{"id_a", "id_b"}, {"id_b", "id_a"}, {"f", "g"}, {"g", "f"}});
  Functor pick = functor_by_ids("IsoPick", one, iso, {{"*", "a"}}, {{poset_arrow_id("*", "*"), "id_a"}});
  for (const auto& f : {incl, galois_left, galois_closure, closure2, top3, top_two, div_incl, swap, pick}) ws.add(f, g);

  // universal arrows
  ArrowPtr id_one = identity_arrow("IdOne", one);
  ArrowPtr id_chain = identity_arrow("IdChain3", chain3);
  ArrowPtr id_iso = identity_arrow("IdIso2", iso);
  ArrowPtr galois = closure_arrow("GaloisCR", chain3, two, incl, objs(chain3, {"0", "2", "2"}));
  ArrowPtr div_galois = closure_arrow("DivGalois", div6, div_closed, div_incl, objs(div6, {"2", "2", "6", "6"}));
  ArrowPtr iso_term = validate_universal_arrow("IsoTerm", pick, ObjectFunction{iso, one, objs(one, {"*", "*"})},
                                               {iso->morphism("id_a"), iso->morphism("g")});
  for (const auto& u : {id_one, id_chain, id_iso, galois, div_galois, iso_term}) ws.add(u, g);

  // monads
  MonadPtr id_monad_one = identity_monad("IdMonadOne", one);
  MonadPtr id_monad_chain = identity_monad("IdMonadChain3", chain3);
  MonadPtr clo2 = closure_monad("Clo2", chain3, objs(chain3, {"1", "1", "2"}));
  MonadPtr div_clo = closure_monad("DivClo", div6, objs(div6, {"2", "2", "6", "6"}));
  std::map<Key3, Mor> point_ext;
  for (Obj a : iso->objects()) {
    for (Obj b : iso->objects()) {
      for (Mor h : iso->hom(a, iso->object("a"))) point_ext.emplace(Key3{a.index, b.index, h.index}, iso->morphism("id_a"));
    }
  }
  MonadPtr iso_point = validate_extensive_monad("IsoPoint", ObjectFunction{iso, iso, objs(iso, {"a", "a"})},
                                                {iso->morphism("id_a"), iso->morphism("g")}, std::move(point_ext));
  for (const auto& m : {id_monad_one, id_monad_chain, clo2, div_clo, iso_point}) ws.add(m, g);

  for (const char* carrier : {"1", "2"}) {
    Algebra a = free_algebra(*clo2, chain3->object(carrier));
    a.name = std::string("Clo2Fix") + carrier;
    ws.add(AlgebraEntry{clo2, validate_algebra(*clo2, a)}, g);
  }

  // 1-cells and 2-cells of universal arrows
  UArrMorphism chain_to_galois = strict_uarr("ChainToGalois", id_chain, galois, galois_closure, galois_left);
  UArrMorphism chain_to_top = strict_uarr("ChainToTop", id_chain, galois, top3, top_two);
  UArrTwoCell to_top = validate_uarr_two_cell(
      UArrTwoCell{"ToTop", chain_to_galois, chain_to_top, thin_nat(galois_closure, top3, "ToTop.alpha"),
                  thin_nat(galois_left, top_two, "ToTop.beta")});

  UArrMorphism iso_swap;
  iso_swap.name = "IsoSwap";
  iso_swap.source = id_iso;
  iso_swap.target = id_iso;
  iso_swap.J = id_iso->right;
  iso_swap.V = swap;
  iso_swap.rho = nat_by_ids("IsoSwap.rho", id_iso->right, swap, {{"a", "f"}, {"b", "g"}});
  iso_swap.rho_inv = nat_by_ids("IsoSwap.rho-inv", swap, id_iso->right, {{"a", "g"}, {"b", "f"}});
  iso_swap = validate_uarr_morphism(std::move(iso_swap));

  UArrMorphism iso_term_swap;
  iso_term_swap.name = "IsoTermSwap";
  iso_term_swap.source = iso_term;
  iso_term_swap.target = iso_term;
  iso_term_swap.J = swap;
  iso_term_swap.V = named(identity_functor(one), "IdOne");
  iso_term_swap.rho = nat_by_ids("IsoTermSwap.rho", compose(swap, pick), compose(pick, iso_term_swap.V), {{"*", "g"}});
  iso_term_swap.rho_inv =
      nat_by_ids("IsoTermSwap.rho-inv", compose(pick, iso_term_swap.V), compose(swap, pick), {{"*", "f"}});
  iso_term_swap = validate_uarr_morphism(std::move(iso_term_swap));

  UArrTwoCell iso_swap_id = identity_uarr_two_cell(iso_swap);
  iso_swap_id.name = "IsoSwapId";
  UArrTwoCell iso_term_swap_id = identity_uarr_two_cell(iso_term_swap);
  iso_term_swap_id.name = "IsoTermSwapId";
  for (const auto& m : {chain_to_galois, chain_to_top, iso_swap, iso_term_swap}) ws.add(m, g);
  for (const auto& c : {to_top, iso_swap_id, iso_term_swap_id}) ws.add(c, g);

  // 1-cells and 2-cells of extensive monads
  EMndMorphism id_to_clo = thin_emnd("IdToClo2", id_monad_chain, clo2, closure2);
  EMndMorphism id_to_top = thin_emnd("IdToCloTop", id_monad_chain, clo2, top3);
  EMndMorphism clo_to_id = thin_emnd("Clo2ToId", clo2, id_monad_chain, named(identity_functor(chain3), "IdChain3"));
  EMndTwoCell closure_to_top = validate_emnd_two_cell(
      EMndTwoCell{"ClosureToTop", id_to_clo, id_to_top, thin_nat(closure2, top3, "ClosureToTop.theta")});
  for (const auto& m : {id_to_clo, id_to_top, clo_to_id}) ws.add(m, g);
  ws.add(closure_to_top, g);

  // classical adjunctions and monads
  Functor id_chain_f = named(identity_functor(chain3), "IdChain3");
  AdjPtr id_adj = thin_adjunction("IdAdjChain3", id_chain_f, id_chain_f);
  AdjPtr galois_adj = thin_adjunction("GaloisAdj", galois_left, incl);
  AdjMorphism from_chain = thin_adj_morphism("GaloisFromChain", id_adj, galois_adj, galois_closure, galois_left);
  AdjMorphism adj_to_top = thin_adj_morphism("GaloisToTop", id_adj, galois_adj, top3, top_two);
  AdjTwoCell galois_raise = validate_adj_two_cell(AdjTwoCell{
      "GaloisRaise", from_chain, adj_to_top, thin_nat(galois_closure, top3, "GaloisRaise.alpha"),
      thin_nat(galois_left, top_two, "GaloisRaise.beta")});
  ws.add(id_adj, g);
  ws.add(galois_adj, g);
  ws.add(from_chain, g);
  ws.add(adj_to_top, g);
  ws.add(galois_raise, g);

  CMonadPtr id_cmonad = thin_cmonad("IdCMonadChain3", id_chain_f);
  CMonadPtr clo_cmonad = thin_cmonad("CloMonad", closure2);
  MonadMorphism clo_from_id = thin_monad_morphism("CloFromId", id_cmonad, clo_cmonad, closure2);
  MonadMorphism clo_from_top = thin_monad_morphism("CloFromTop", id_cmonad, clo_cmonad, top3);
  MonadTwoCell clo_raise = validate_monad_two_cell(
      MonadTwoCell{"CloRaise", clo_from_id, clo_from_top, thin_nat(closure2, top3, "CloRaise.theta")});
  ws.add(id_cmonad, g);
  ws.add(clo_cmonad, g);
  ws.add(clo_from_id, g);
  ws.add(clo_from_top, g);
  ws.add(clo_raise, g);
}

ClosureInstance random_closure_instance(std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(index));
  auto chance = [&](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };

  ClosureInstance r;
  r.tag = "R" + std::to_string(index);
  const std::size_t n = 2 + rng() % 4;
  // random order on x0..x{n-1} refined from index order, then a top
  std::vector<std::vector<bool>> le(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t i = 0; i <= n; ++i) {
    le[i][i] = true;
    le[i][n] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) le[i][j] = chance(0.45);
  }
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        if (le[i][k] && le[k][j]) le[i][j] = true;
      }
    }
  }
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("x" + std::to_string(i));
  ids.push_back("top");
  r.poset = poset_category("Poset" + r.tag, ids, [&](std::size_t a, std::size_t b) { return le[a][b]; });

  // closure system: top plus a random subset, accepted when every element has a least closed upper bound
  std::vector<std::size_t> closure_pos;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<bool> closed(n + 1, false);
    closed[n] = true;
    for (std::size_t i = 0; i < n; ++i) closed[i] = chance(0.5);
    if (attempt == 63) std::fill(closed.begin(), closed.end() - 1, false);
    closure_pos.assign(n + 1, n);
    bool ok = true;
    for (std::size_t x = 0; x <= n && ok; ++x) {
      std::optional<std::size_t> least;
      for (std::size_t k = 0; k <= n; ++k) {
        if (!closed[k] || !le[x][k]) continue;
        bool below_all = true;
        for (std::size_t j = 0; j <= n; ++j) {
          if (closed[j] && le[x][j] && !le[k][j]) below_all = false;
        }
        if (below_all) least = k;
      }
      if (!least) ok = false;
      else closure_pos[x] = *least;
    }
    if (ok) break;
  }

  r.closure.resize(ids.size());
  std::vector<Obj> keep;
  for (std::size_t x = 0; x <= n; ++x) {
    Obj o = r.poset->object(ids[x]);
    Obj c = r.poset->object(ids[closure_pos[x]]);
    r.closure[static_cast<std::size_t>(o.index)] = c;
    if (closure_pos[x] == x) keep.push_back(o);
  }
  auto [closed, incl] = full_subcategory("Closed" + r.tag, r.poset, keep);
  incl.name = "Incl" + r.tag;
  r.closed = closed;

  Functor c_endo = named(monotone_functor(r.poset, r.poset, r.closure), "Closure" + r.tag);
  std::vector<Obj> corestricted;
  for (Obj o : r.closure) corestricted.push_back(closed->object(r.poset->id(o)));
  Functor c_left = named(monotone_functor(r.poset, closed, corestricted), "Left" + r.tag);
  const Obj top = r.poset->object("top");
  Functor top_endo = named(constant_functor(r.poset, r.poset, top), "Top" + r.tag);
  Functor top_left = named(constant_functor(r.poset, closed, closed->object("top")), "TopLeft" + r.tag);

  r.identity_arrow = identity_arrow("Id" + r.tag, r.poset);
  r.galois = closure_arrow("Galois" + r.tag, r.poset, closed, incl, r.closure);
  r.identity_monad = identity_monad("IdMonad" + r.tag, r.poset);
  r.monad = closure_monad("Clo" + r.tag, r.poset, r.closure);
  r.corestrict = strict_uarr("Corestrict" + r.tag, r.identity_arrow, r.galois, c_endo, c_left);
  r.to_top = strict_uarr("ToTop" + r.tag, r.identity_arrow, r.galois, top_endo, top_left);
  r.lift = validate_uarr_two_cell(UArrTwoCell{"Lift" + r.tag, r.corestrict, r.to_top,
                                              thin_nat(c_endo, top_endo, "Lift" + r.tag + ".alpha"),
                                              thin_nat(c_left, top_left, "Lift" + r.tag + ".beta")});
  r.into_closure = thin_emnd("IntoClosure" + r.tag, r.identity_monad, r.monad, c_endo);
  r.into_top = thin_emnd("IntoTop" + r.tag, r.identity_monad, r.monad, top_endo);
  r.raise = validate_emnd_two_cell(
      EMndTwoCell{"Raise" + r.tag, r.into_closure, r.into_top, thin_nat(c_endo, top_endo, "Raise" + r.tag + ".theta")});
  return r;
}

void add_random_fixtures(Workspace& ws, int count, std::uint64_t seed) {
  const std::string g = "random";
  for (int i = 0; i < count; ++i) {
    ClosureInstance r = random_closure_instance(seed, i);
    ws.add(r.poset, g);
    ws.add(r.closed, g);
    ws.add(r.identity_arrow, g);
    ws.add(r.galois, g);
    ws.add(r.identity_monad, g);
    ws.add(r.monad, g);
    ws.add(r.corestrict, g);
    ws.add(r.to_top, g);
    ws.add(r.lift, g);
    ws.add(r.into_closure, g);
    ws.add(r.into_top, g);
    ws.add(r.raise, g);
  }
}

}  // namespace adj2
