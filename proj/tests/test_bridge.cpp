#include "support.hpp"

using namespace adj2;
using testing::builtin;

TEST_CASE("phi of an identity arrow is the identity monad") {
  CHECK(*phi_on_object(*builtin().arrow("IdOne")) == *builtin().monad("IdMonadOne"));
  CHECK(*phi_on_object(*builtin().arrow("IdChain3")) == *builtin().monad("IdMonadChain3"));
  MonadPtr m = phi_on_object(*builtin().arrow("GaloisCR"));
  CHECK(m->name == "phi(GaloisCR)");
  CHECK(m->base->id(m->S(m->base->object("1"))) == "2");
}

TEST_CASE("phi preserves identities and composites") {
  ArrowPtr iso = builtin().arrow("IdIso2");
  UArrMorphism s = builtin().umorphism("IsoSwap");
  CHECK(phi_on_morphism(identity_uarr_morphism(iso)) == identity_emnd_morphism(phi_on_object(*iso)));
  CHECK(phi_on_morphism(uarr_compose(s, s)) == emnd_compose(phi_on_morphism(s), phi_on_morphism(s)));
  UArrTwoCell t = builtin().ucell("ToTop");
  CHECK(phi_on_two_cell(t).theta.components == t.alpha.components);
  CHECK(phi_on_two_cell(uarr_vertical(t, identity_uarr_two_cell(t.source))) == phi_on_two_cell(t));
}

TEST_CASE("psi of the closure monad lands on its fixed points") {
  MonadPtr clo = builtin().monad("Clo2");
  EmConstruction em = psi_on_object(clo);
  const ArrowPtr& u = em.arrow;
  CHECK(u->upstairs->object_count() == 2);
  CHECK(u->right == em.algebras.forgetful);
  const FinCategory& c = *clo->base;
  for (const auto& [key, w] : u->zeta) {
    Obj a{key[0]};
    Obj n = u->right(Obj{key[1]});
    CHECK(c.id(u->right(w)) == c.id(clo->S(a)) + "→" + c.id(n));
  }
  auto hist = witness_histogram(*u);
  CHECK(hist.size() == 1);
  CHECK(hist.begin()->first == 1);
}

TEST_CASE("phi after psi is the identity") {
  for (const auto& n : builtin().names(Kind::EMonad)) {
    MonadPtr m = builtin().monad(n);
    CHECK_MESSAGE(*phi_on_object(*psi_on_object(m).arrow) == *m, n);
    CHECK(counit_component(m) == identity_emnd_morphism(m));
  }
}

TEST_CASE("psi on cells") {
  EMndMorphism up = builtin().emorphism("IdToClo2");
  UArrMorphism lifted = psi_on_morphism(up);
  CHECK(lifted.has_identity_rho());
  CHECK(lifted.J == up.P);
  MonadPtr clo = builtin().monad("Clo2");
  CHECK(psi_on_morphism(identity_emnd_morphism(clo)) == identity_uarr_morphism(psi_on_object(clo).arrow));

  EMndTwoCell t = builtin().ecell("ClosureToTop");
  UArrTwoCell pt = psi_on_two_cell(t);
  CHECK(pt.alpha.components == t.theta.components);
  CHECK(psi_on_two_cell(emnd_vertical(t, identity_emnd_two_cell(t.source))) ==
        uarr_vertical(pt, identity_uarr_two_cell(pt.source)));
}

TEST_CASE("unit component is the comparison functor") {
  ArrowPtr g = builtin().arrow("GaloisCR");
  UArrMorphism unit = unit_component(g);
  CHECK(unit.has_identity_rho());
  CHECK(unit.J == identity_functor(g->base));
  EmConstruction em = psi_on_object(phi_on_object(*g));
  Functor k = comparison_functor(*g, em);
  for (Obj x : g->upstairs->objects()) {
    CHECK(em.algebras.algebra(k(x)).carrier == g->right(x));
  }
}

TEST_CASE("triangle identities on the built-in set") {
  for (const auto& n : builtin().names(Kind::UArrow)) CHECK_MESSAGE(check_triangle(builtin().arrow(n)).holds, n);
  for (const auto& n : builtin().names(Kind::EMonad)) CHECK_MESSAGE(check_triangle(builtin().monad(n)).holds, n);
}

TEST_CASE("unit 2-naturality") {
  CHECK(check_unit_2naturality(builtin().ucell("ToTop")).holds);
  NaturalityVerdict v = check_unit_2naturality(builtin().ucell("IsoTermSwapId"));
  CHECK(!v.holds);
  REQUIRE(v.witness);
  CHECK(builtin().arrow("IsoTerm")->upstairs->id(*v.witness) == "*");
  CHECK(!check_unit_2naturality(builtin().ucell("IsoSwapId")).holds);
}

TEST_CASE("hom bijection") {
  ArrowPtr id = builtin().arrow("IdChain3");
  MonadPtr idm = builtin().monad("IdMonadChain3");
  CHECK(enumerate_emnd_morphisms(idm, idm).size() == 10);
  CHECK(enumerate_strict_uarr_morphisms(id, id).size() == 10);
  HomBijection h = check_hom_bijection(id, idm);
  CHECK(h.holds());
  CHECK(h.emnd_count == 10);
  CHECK(check_hom_bijection(builtin().arrow("GaloisCR"), builtin().monad("Clo2")).holds());
  CHECK_FAULT(check_hom_bijection(id, idm, SearchBudget{3}), Fault::SearchBudgetExceeded);
}
