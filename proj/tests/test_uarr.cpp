#include "support.hpp"

#include "adj2/poset.hpp"

using namespace adj2;
using testing::builtin;

namespace {

CatPtr parallel_pair() {
  CategoryDescription d;
  d.name = "Par";
  d.objects = {"x", "y"};
  d.morphisms = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"u", "x", "y"}, {"v", "x", "y"}};
  d.identities = {{"x", "1x"}, {"y", "1y"}};
  d.composites = {{"1x", "1x", "1x"}, {"1y", "1y", "1y"}, {"u", "1x", "u"},
                  {"v", "1x", "v"},   {"1y", "u", "u"},   {"1y", "v", "v"}};
  return validate_category(d);
}

}  // namespace

TEST_CASE("transpose table of the Galois fixture") {
  ArrowPtr u = builtin().arrow("GaloisCR");
  const FinCategory& c = *u->base;
  const FinCategory& x = *u->upstairs;
  Mor w = u->transpose(c.object("1"), x.object("2"), c.morphism("1→2"));
  CHECK(x.id(w) == "2→2");
  CHECK(u->zeta.size() == 4);  // a <= R x with x in {0, 2}
  CHECK_FAULT(u->transpose(c.object("2"), x.object("0"), c.morphism("0→0")), Fault::UnknownEntity);
}

TEST_CASE("a unit with no factorisation is rejected") {
  CatPtr c = builtin().category("Chain3");
  Functor id = identity_functor(c);
  std::vector<Mor> unit;
  for (Obj a : c->objects()) unit.push_back(thin_arrow(*c, a, c->object("2")));
  ObjectFunction top{c, c, std::vector<Obj>(3, c->object("2"))};
  CHECK_FAULT(validate_universal_arrow("Bad", id, top, unit), Fault::NoWitness);
}

TEST_CASE("a unit with two factorisations is rejected") {
  CatPtr par = parallel_pair();
  CatPtr one = builtin().category("One");
  Functor r{"R", par, one, {one->object("*"), one->object("*")},
            std::vector<Mor>(4, one->identity(one->object("*")))};
  r = validate_functor(r);
  ObjectFunction l{one, par, {par->object("x")}};
  CHECK_FAULT(validate_universal_arrow("Twice", r, l, {one->identity(one->object("*"))}), Fault::AmbiguousWitness);
  CHECK(universal_witnesses(*validate_universal_arrow("Once", identity_functor(par), object_part(identity_functor(par)),
                                                      {par->morphism("1x"), par->morphism("1y")}),
                            par->object("x"), par->object("y"), par->morphism("u"))
            .size() == 1);
}

TEST_CASE("1-cells compose and carry invertible rho") {
  UArrMorphism s = builtin().umorphism("IsoSwap");
  CHECK(!s.has_identity_rho());
  UArrMorphism twice = uarr_compose(s, s);
  CHECK(twice.V == identity_functor(s.V.source));
  CHECK(uarr_compose(identity_uarr_morphism(s.target), s) == s);
  CHECK(uarr_compose(s, identity_uarr_morphism(s.source)) == s);

  UArrMorphism broken = s;
  broken.rho_inv = broken.rho;
  CHECK(testing::fault_of([&] { validate_uarr_morphism(broken); }).has_value());
  broken = s;
  std::swap(broken.rho_inv.components[0], broken.rho_inv.components[1]);
  CHECK(testing::fault_of([&] { validate_uarr_morphism(broken); }).has_value());

  UArrMorphism strict = builtin().umorphism("ChainToGalois");
  CHECK(strict.has_identity_rho());
}

TEST_CASE("2-cells: cylinder condition and composites") {
  UArrTwoCell t = builtin().ucell("ToTop");
  CHECK(!cylinder_witness(t));
  CHECK(uarr_vertical(identity_uarr_two_cell(t.target), t) == t);
  CHECK(uarr_vertical(t, identity_uarr_two_cell(t.source)) == t);

  UArrTwoCell swap_id = builtin().ucell("IsoSwapId");
  UArrMorphism s = builtin().umorphism("IsoSwap");
  UArrTwoCell h = uarr_horizontal(swap_id, swap_id);
  CHECK(h == identity_uarr_two_cell(uarr_compose(s, s)));
  CHECK(uarr_horizontal_transposed(swap_id, swap_id) == h);
  CHECK(uarr_whisker_forward(s, swap_id) == identity_uarr_two_cell(uarr_compose(s, s)));
  CHECK(uarr_whisker_back(swap_id, s) == identity_uarr_two_cell(uarr_compose(s, s)));
}
