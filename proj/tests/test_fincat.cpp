#include "support.hpp"

#include "adj2/poset.hpp"

using namespace adj2;

namespace {

CategoryDescription arrow_category() {
  CategoryDescription d;
  d.name = "Arrow";
  d.objects = {"x", "y"};
  d.morphisms = {{"1x", "x", "x"}, {"1y", "y", "y"}, {"u", "x", "y"}};
  d.identities = {{"x", "1x"}, {"y", "1y"}};
  d.composites = {{"1x", "1x", "1x"}, {"1y", "1y", "1y"}, {"u", "1x", "u"}, {"1y", "u", "u"}};
  return d;
}

CatPtr chain(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return poset_category("Chain" + std::to_string(n), ids, [](std::size_t a, std::size_t b) { return a <= b; });
}

}  // namespace

TEST_CASE("a well-formed category validates and composes") {
  CatPtr c = validate_category(arrow_category());
  CHECK(c->object_count() == 2);
  CHECK(c->morphism_count() == 3);
  Mor u = c->morphism("u");
  CHECK(c->compose(c->identity(c->object("y")), u) == u);
  CHECK(c->hom(c->object("y"), c->object("x")).empty());
  CHECK(c->describe(u) == "u : x -> y");
  CHECK_FAULT(c->compose(u, u), Fault::ShapeMismatch);
  CHECK_FAULT(c->object("z"), Fault::UnknownEntity);
}

TEST_CASE("category validation rejects broken tables") {
  CategoryDescription missing = arrow_category();
  missing.composites.pop_back();
  CHECK_FAULT(validate_category(missing), Fault::MissingComposite);

  CategoryDescription bad_unit = arrow_category();
  bad_unit.identities[0].second = "u";
  CHECK_FAULT(validate_category(bad_unit), Fault::BadIdentity);

  CategoryDescription ill = arrow_category();
  ill.composites[2].result = "1x";
  CHECK_FAULT(validate_category(ill), Fault::IllTyped);

  CategoryDescription dup = arrow_category();
  dup.objects.push_back("x");
  CHECK_FAULT(validate_category(dup), Fault::IllTyped);
}

TEST_CASE("associativity is checked at every triple") {
  // Two loops e, f on one object with e.e = f, f.f = e, e.f = f.e = e is not associative:
  // (e.e).f = f.f = e but e.(e.f) = e.e = f.
  CategoryDescription d;
  d.name = "Loops";
  d.objects = {"*"};
  d.morphisms = {{"1", "*", "*"}, {"e", "*", "*"}, {"f", "*", "*"}};
  d.identities = {{"*", "1"}};
  d.composites = {{"1", "1", "1"}, {"1", "e", "e"}, {"e", "1", "e"}, {"1", "f", "f"}, {"f", "1", "f"},
                  {"e", "e", "f"}, {"f", "f", "e"}, {"e", "f", "e"}, {"f", "e", "e"}};
  CHECK_FAULT(validate_category(d), Fault::NonAssociative);
}

TEST_CASE("poset categories name arrows a→b and are thin") {
  CatPtr c = chain(3);
  CHECK(is_thin(*c));
  CHECK(c->morphism_count() == 6);
  CHECK(c->id(thin_arrow(*c, c->object("0"), c->object("2"))) == "0→2");
  CHECK_FAULT(thin_arrow(*c, c->object("2"), c->object("0")), Fault::NoWitness);
  CHECK(*c == *chain(3));
}

TEST_CASE("functor validation and composition") {
  CatPtr c = chain(3);
  Functor shift = monotone_functor(c, c, std::vector<std::pair<std::string, std::string>>{{"0", "1"}, {"1", "2"}, {"2", "2"}});
  Functor twice = compose(shift, shift);
  CHECK(c->id(twice(c->object("0"))) == "2");
  CHECK(compose(identity_functor(c), shift) == shift);

  Functor broken = shift;
  broken.morphisms[static_cast<std::size_t>(c->morphism("0→1").index)] = c->morphism("2→2");
  CHECK_FAULT(validate_functor(broken), Fault::NotFunctorial);
  CHECK_FAULT(monotone_functor(c, c, std::vector<std::pair<std::string, std::string>>{{"0", "2"}, {"1", "1"}, {"2", "2"}}),
              Fault::NoWitness);
}

TEST_CASE("monotone endomaps of a 3-chain number 10") {
  CatPtr c = chain(3);
  CHECK(enumerate_functors(c, c).size() == 10);
  CHECK_FAULT(enumerate_functors(c, c, SearchBudget{3}), Fault::SearchBudgetExceeded);
}

TEST_CASE("natural transformations: validation, composites and interchange") {
  CatPtr c = chain(3);
  Functor id = identity_functor(c);
  Functor top = monotone_functor(c, c, std::vector<Obj>(3, c->object("2")));
  auto up = enumerate_transformations(id, top);
  REQUIRE(up.size() == 1);
  CHECK(enumerate_transformations(top, id).empty());
  CHECK(vertical(up[0], identity_transformation(id)) == up[0]);
  CHECK(is_identity_transformation(identity_transformation(top)));

  NatTrans bad = up[0];
  bad.components[0] = c->morphism("0→1");
  CHECK_FAULT(validate_nat_trans(bad), Fault::NotNatural);

  NatTrans h = horizontal(up[0], up[0]);
  CHECK(h.source == compose(id, id));
  CHECK(h.target == compose(top, top));
  CHECK(!interchange_witness(up[0], up[0]));
}
