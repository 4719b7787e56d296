#include "support.hpp"

using namespace adj2;
using testing::builtin;

TEST_CASE("F extends the left part to a functor with counit") {
  AdjPtr a = F_on_object(*builtin().arrow("GaloisCR"));
  const FinCategory& two = *a->upstairs();
  for (Obj x : two.objects()) CHECK(two.is_identity(a->counit[x]));
  const FinCategory& c = *a->base();
  CHECK(two.id(a->left(c.morphism("0→1"))) == "0→2");
  CHECK(*a == *builtin().adjunction("GaloisAdj"));
}

TEST_CASE("adjunction triangles are enforced") {
  CatPtr m = testing::idempotent_monoid();
  Functor id = identity_functor(m);
  NatTrans e{"", id, id, {m->morphism("e")}};
  NatTrans one = identity_transformation(id);
  CHECK(validate_adjunction(Adjunction{"Idem", id, id, one, one})->name == "Idem");
  CHECK_FAULT(validate_adjunction(Adjunction{"Bad", id, id, e, one}), Fault::NotAdjunction);
}

TEST_CASE("G and F are inverse") {
  for (const auto& n : builtin().names(Kind::UArrow)) {
    ArrowPtr u = builtin().arrow(n);
    CHECK_MESSAGE(*G_on_object(*F_on_object(*u)) == *u, n);
  }
  for (const auto& n : builtin().names(Kind::Adjunction)) {
    AdjPtr a = builtin().adjunction(n);
    CHECK_MESSAGE(*F_on_object(*G_on_object(*a)) == *a, n);
  }
  for (const auto& n : builtin().names(Kind::UMorphism)) {
    UArrMorphism m = builtin().umorphism(n);
    CHECK_MESSAGE(G_on_morphism(F_on_morphism(m)) == m, n);
  }
  AdjTwoCell c = builtin().acell("GaloisRaise");
  CHECK(F_on_two_cell(G_on_two_cell(c)) == c);
}

TEST_CASE("the dual adjoint is unique") {
  for (const char* n : {"IsoSwap", "IsoTermSwap", "ChainToGalois"}) {
    AdjMorphism f = F_on_morphism(builtin().umorphism(n));
    auto all = dual_adjoints(f);
    REQUIRE_MESSAGE(all.size() == 1, n);
    CHECK(all[0] == f.lambda);
  }
  AdjMorphism from_chain = builtin().amorphism("GaloisFromChain");
  AdjMorphism wrong = from_chain;
  wrong.lambda = builtin().amorphism("GaloisToTop").lambda;
  CHECK(testing::fault_of([&] { validate_adj_morphism(wrong); }).has_value());
}

TEST_CASE("H and K are inverse") {
  MonadPtr clo = builtin().monad("Clo2");
  CMonadPtr h = H_on_object(*clo);
  const FinCategory& c = *clo->base;
  for (Obj a : c.objects()) CHECK(c.is_identity(h->mult[a]));
  CHECK(c.id(h->endo(c.morphism("0→1"))) == "1→1");
  CHECK(*h == *builtin().cmonad("CloMonad"));
  CHECK(*K_on_object(*h) == *clo);
  for (const auto& n : builtin().names(Kind::CMonad)) {
    CMonadPtr m = builtin().cmonad(n);
    CHECK_MESSAGE(*H_on_object(*K_on_object(*m)) == *m, n);
  }
  for (const auto& n : builtin().names(Kind::EMorphism)) {
    EMndMorphism m = builtin().emorphism(n);
    CHECK_MESSAGE(K_on_morphism(H_on_morphism(m)) == m, n);
  }
  MonadTwoCell t = builtin().mcell("CloRaise");
  CHECK(H_on_two_cell(K_on_two_cell(t)) == t);
}

TEST_CASE("monad morphisms must respect units") {
  CatPtr m = testing::idempotent_monoid();
  Functor id = identity_functor(m);
  NatTrans one = identity_transformation(id);
  CMonadPtr idm = validate_classical_monad(ClassicalMonad{"IdemId", id, one, identity_transformation(compose(id, id))});
  NatTrans e{"", id, id, {m->morphism("e")}};
  CHECK(validate_monad_morphism(MonadMorphism{"ok", idm, idm, id, one}).P == id);
  CHECK_FAULT(validate_monad_morphism(MonadMorphism{"bad", idm, idm, id, e}), Fault::NotMonadMorphism);
}

TEST_CASE("conjugated adjunction on classical data") {
  CMonadPtr clo = builtin().cmonad("CloMonad");
  AdjPtr a = psi_e_on_object(*clo);
  CHECK(*phi_e_on_object(*a) == *clo);
  CHECK(*phi_e_on_object(*builtin().adjunction("GaloisAdj")) == *H_on_object(*phi_on_object(*builtin().arrow("GaloisCR"))));
  MonadMorphism f = builtin().mmorphism("CloFromId");
  CHECK(phi_e_on_morphism(psi_e_on_morphism(f)) == f);
}
