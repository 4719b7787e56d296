#include "support.hpp"

using namespace adj2;
using testing::builtin;

namespace {

// Object function and unit of the identity monad on the idempotent monoid.
MonadPtr idem_monad(Mor ext_of_1, Mor ext_of_e) {
  CatPtr m = testing::idempotent_monoid();
  Obj star = m->object("*");
  std::map<Key3, Mor> ext{{Key3{0, 0, m->morphism("1").index}, ext_of_1}, {Key3{0, 0, m->morphism("e").index}, ext_of_e}};
  return validate_extensive_monad("IdemMonad", ObjectFunction{m, m, {star}}, {m->identity(star)}, ext);
}

}  // namespace

TEST_CASE("extension laws are checked") {
  CatPtr m = testing::idempotent_monoid();
  Mor one = m->morphism("1");
  Mor e = m->morphism("e");
  CHECK(idem_monad(one, e)->extend(m->object("*"), m->object("*"), e) == e);
  CHECK_FAULT(idem_monad(e, e), Fault::LawA);
  CHECK_FAULT(idem_monad(one, one), Fault::LawB);
}

TEST_CASE("a missing extension entry is ill-typed") {
  MonadPtr clo = builtin().monad("Clo2");
  auto ext = clo->ext;
  ext.erase(ext.begin());
  CHECK_FAULT(validate_extensive_monad("Gap", clo->endo, clo->unit, ext), Fault::IllTyped);
}

TEST_CASE("algebras of the closure monad are its fixed points") {
  MonadPtr clo = builtin().monad("Clo2");
  const FinCategory& c = *clo->base;
  AlgebraCategory alg = enumerate_algebras(*clo);
  REQUIRE(alg.algebras.size() == 2);
  CHECK(c.id(alg.algebras[0].carrier) == "1");
  CHECK(c.id(alg.algebras[1].carrier) == "2");
  CHECK(alg.category->morphism_count() == 3);
  CHECK(alg.forgetful.target == clo->base);

  Algebra free0 = free_algebra(*clo, c.object("0"));
  CHECK(c.id(free0.carrier) == "1");
  REQUIRE(alg.find(free0));
  CHECK(alg.algebra(*alg.find(free0)) == free0);
  CHECK(!algebra_morphism_violation(*clo, alg.algebras[0], alg.algebras[1], c.morphism("1→2")));
  CHECK(testing::fault_of([&] {
          alg.morphism_over(*alg.find(alg.algebras[1]), *alg.find(alg.algebras[0]), c.morphism("2→2"));
        }).has_value());

  Algebra bottom{"bottom", c.object("0"), {}};
  CHECK(testing::fault_of([&] { validate_algebra(*clo, bottom); }).has_value());
}

TEST_CASE("algebra enumeration respects the budget") {
  CatPtr m = testing::idempotent_monoid();
  MonadPtr id = idem_monad(m->morphism("1"), m->morphism("e"));
  CHECK(enumerate_algebras(*id).algebras.size() == 1);
  // the unit law leaves one candidate per entry, so one table is searched
  CHECK(enumerate_algebras(*id, SearchBudget{1}).algebras.size() == 1);
  CHECK_FAULT(enumerate_algebras(*id, SearchBudget{0}), Fault::SearchBudgetExceeded);
}

TEST_CASE("1-cells between monads compose") {
  EMndMorphism up = builtin().emorphism("IdToClo2");
  EMndMorphism down = builtin().emorphism("Clo2ToId");
  CHECK(emnd_compose(up, identity_emnd_morphism(up.source)) == up);
  CHECK(emnd_compose(identity_emnd_morphism(up.target), up) == up);
  EMndMorphism round = emnd_compose(down, up);
  CHECK(round.P == up.P);
  CHECK(validate_emnd_morphism(round) == round);
  CHECK(up.algebra_at(up.source->base->object("0")).carrier == up.target->base->object("1"));

  EMndMorphism gap = up;
  gap.ext.erase(gap.ext.begin());
  CHECK_FAULT(validate_emnd_morphism(gap), Fault::NotAlgebra);
}

TEST_CASE("2-cells between monad 1-cells") {
  EMndTwoCell t = builtin().ecell("ClosureToTop");
  CHECK(emnd_vertical(identity_emnd_two_cell(t.target), t) == t);
  CHECK(emnd_vertical(t, identity_emnd_two_cell(t.source)) == t);
  EMndMorphism down = builtin().emorphism("Clo2ToId");
  EMndTwoCell outer = identity_emnd_two_cell(down);
  CHECK(emnd_horizontal(outer, t) == emnd_horizontal_transposed(outer, t));
  CHECK(emnd_whisker_forward(down, t).theta.components == t.theta.components);
}
