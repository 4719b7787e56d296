#include "support.hpp"

#include <filesystem>

#include "adj2/suites.hpp"

using namespace adj2;
using testing::builtin;

namespace {

const char* const kArrowText = R"(# a two-element chain
category Two
  object lo
  object hi
  morphism lo→lo : lo -> lo
  morphism lo→hi : lo -> hi   # trailing comment
  morphism hi→hi : hi -> hi
  identity lo = lo→lo
  identity hi = hi→hi
  compose lo→lo . lo→lo = lo→lo
  compose lo→hi . lo→lo = lo→hi
  compose hi→hi . lo→hi = lo→hi
  compose hi→hi . hi→hi = hi→hi

functor Id : Two -> Two
  on-object lo => lo
  on-object hi => hi
  on-morphism lo→lo => lo→lo
  on-morphism lo→hi => lo→hi
  on-morphism hi→hi => hi→hi

uarrow Unit : Two | Two
  right Id
  left lo => lo
  left hi => hi
  unit lo => lo→lo
  unit hi => hi→hi
)";

// Every registered entity of `from` must be present in `to` and equal.
void check_same_entities(Workspace& from, const std::string& group, Workspace& to) {
  for (const auto& n : from.names(Kind::Category, group)) CHECK_MESSAGE(*to.category(n) == *from.category(n), n);
  for (const auto& n : from.names(Kind::UArrow, group)) CHECK_MESSAGE(*to.arrow(n) == *from.arrow(n), n);
  for (const auto& n : from.names(Kind::UMorphism, group)) CHECK_MESSAGE(to.umorphism(n) == from.umorphism(n), n);
  for (const auto& n : from.names(Kind::UCell, group)) CHECK_MESSAGE(to.ucell(n) == from.ucell(n), n);
  for (const auto& n : from.names(Kind::EMonad, group)) CHECK_MESSAGE(*to.monad(n) == *from.monad(n), n);
  for (const auto& n : from.names(Kind::Algebra, group)) CHECK_MESSAGE(to.algebra(n).algebra == from.algebra(n).algebra, n);
  for (const auto& n : from.names(Kind::EMorphism, group)) CHECK_MESSAGE(to.emorphism(n) == from.emorphism(n), n);
  for (const auto& n : from.names(Kind::ECell, group)) CHECK_MESSAGE(to.ecell(n) == from.ecell(n), n);
  for (const auto& n : from.names(Kind::Adjunction, group)) CHECK_MESSAGE(*to.adjunction(n) == *from.adjunction(n), n);
  for (const auto& n : from.names(Kind::AMorphism, group)) CHECK_MESSAGE(to.amorphism(n) == from.amorphism(n), n);
  for (const auto& n : from.names(Kind::ACell, group)) CHECK_MESSAGE(to.acell(n) == from.acell(n), n);
  for (const auto& n : from.names(Kind::CMonad, group)) CHECK_MESSAGE(*to.cmonad(n) == *from.cmonad(n), n);
  for (const auto& n : from.names(Kind::MMorphism, group)) CHECK_MESSAGE(to.mmorphism(n) == from.mmorphism(n), n);
  for (const auto& n : from.names(Kind::MCell, group)) CHECK_MESSAGE(to.mcell(n) == from.mcell(n), n);
}

}  // namespace

TEST_CASE("parsing blocks and comments") {
  auto blocks = parse_spec(kArrowText, "inline");
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].kind == Kind::Category);
  CHECK(blocks[1].header == std::vector<std::string>{"Two", "Two"});
  const Directive* right = blocks[2].find("right");
  REQUIRE(right);
  CHECK(right->args == std::vector<std::string>{"Id"});
  CHECK(blocks[0].directives[3].args == std::vector<std::string>{"lo→hi", "lo", "hi"});

  Workspace ws;
  ws.load_text(kArrowText, "inline", "inline");
  ArrowPtr u = ws.arrow("Unit");
  CHECK(u->zeta.size() == 3);
}

TEST_CASE("a hash inside an identifier is not a comment") {
  auto blocks = parse_spec("category C\n  object 1#0\n", "inline");
  REQUIRE(blocks[0].directives.size() == 1);
  CHECK(blocks[0].directives[0].args[0] == "1#0");
}

TEST_CASE("parse errors name the line") {
  try {
    parse_spec("category C\n  object a\n  object a\n", "dup.cat");
    FAIL("expected a parse error");
  } catch (const LawError& e) {
    CHECK(e.kind() == Fault::ParseError);
    CHECK(e.witness().find("dup.cat:3") != std::string::npos);
  }
  CHECK_FAULT(parse_spec("widget W\n", "x"), Fault::ParseError);
  CHECK_FAULT(parse_spec("category C\n  frobnicate a\n", "x"), Fault::ParseError);

  Workspace ws;
  ws.load_text("functor F : Nowhere -> Nowhere\n", "x", "x");
  CHECK_FAULT(ws.functor("F"), Fault::UnknownEntity);
  CHECK_FAULT(ws.load_text("category A\ncategory A\n", "x", "x"), Fault::ParseError);
}

TEST_CASE("a law violation in text is reported when built") {
  std::string text = kArrowText;
  text.replace(text.find("unit hi => hi→hi"), 16, "unit hi => lo→hi");
  Workspace ws;
  ws.load_text(text, "bad", "bad");
  CHECK(testing::fault_of([&] { ws.arrow("Unit"); }).has_value());
  auto records = ws.build_all();
  std::size_t broken = 0;
  for (const auto& r : records) broken += r.error ? 1 : 0;
  CHECK(broken == 1);
}

TEST_CASE("emitted built-ins parse back to equal entities") {
  Emitter out;
  std::string text = dump_workspace(builtin(), "builtin");
  Workspace again;
  again.load_text(text, "dump", "dump");
  check_same_entities(builtin(), "builtin", again);
}

TEST_CASE("shipped fixture files equal the built-in and random sets") {
  Workspace shipped;
  shipped.load_file((std::filesystem::path(ADJ2_FIXTURE_DIR) / "builtin.cat").string());
  check_same_entities(builtin(), "builtin", shipped);

  Workspace random;
  add_random_fixtures(random, 20, 1);
  Workspace shipped_random;
  shipped_random.load_file((std::filesystem::path(ADJ2_FIXTURE_DIR) / "random.cat").string());
  check_same_entities(random, "random", shipped_random);
}

TEST_CASE("derived entities re-parse to equal values") {
  Workspace& ws = builtin();
  struct Case {
    std::string entity, fn;
  };
  for (const Case& c : {Case{"GaloisCR", "phi"}, Case{"ChainToGalois", "phi"}, Case{"ToTop", "phi"}, Case{"Clo2", "psi"},
                        Case{"IdToClo2", "psi"}, Case{"ClosureToTop", "psi"}, Case{"GaloisCR", "F"},
                        Case{"IsoSwap", "F"}, Case{"GaloisAdj", "G"}, Case{"GaloisRaise", "G"}, Case{"Clo2", "H"},
                        Case{"ClosureToTop", "H"}, Case{"CloMonad", "K"}, Case{"CloFromTop", "K"}}) {
    std::string text = cmd_derive(ws, c.entity, c.fn);
    Workspace back;
    back.load_text(text, "derived", "derived");
    std::string name = c.fn + "(" + c.entity + ")";
    CAPTURE(name);
    if (c.fn == "phi" || c.fn == "K") {
      if (back.contains(Kind::EMonad, name)) CHECK(*back.monad(name) == *ws.monad(name));
      else if (back.contains(Kind::EMorphism, name)) CHECK(back.emorphism(name) == ws.emorphism(name));
      else CHECK(back.ecell(name) == ws.ecell(name));
    } else if (c.fn == "psi" || c.fn == "G") {
      if (back.contains(Kind::UArrow, name)) CHECK(*back.arrow(name) == *ws.arrow(name));
      else if (back.contains(Kind::UMorphism, name)) CHECK(back.umorphism(name) == ws.umorphism(name));
      else CHECK(back.ucell(name) == ws.ucell(name));
    } else if (c.fn == "F") {
      if (back.contains(Kind::Adjunction, name)) CHECK(*back.adjunction(name) == *ws.adjunction(name));
      else CHECK(back.amorphism(name) == ws.amorphism(name));
    } else {
      if (back.contains(Kind::CMonad, name)) CHECK(*back.cmonad(name) == *ws.cmonad(name));
      else CHECK(back.mcell(name) == ws.mcell(name));
    }
  }
}
