#include "support.hpp"

#include <filesystem>

#include "adj2/suites.hpp"

using namespace adj2;

namespace {

Workspace fresh() {
  Workspace ws;
  add_builtin_fixtures(ws);
  add_random_fixtures(ws, 4, 3);
  return ws;
}

bool has_check(const Report& r, const std::string& id, Status s) {
  for (const auto& c : r.checks) {
    if (c.id == id) return c.status == s;
  }
  return false;
}

}  // namespace

TEST_CASE("validate passes on the shipped files") {
  Workspace ws;
  for (const char* f : {"builtin.cat", "random.cat"}) {
    ws.load_file((std::filesystem::path(ADJ2_FIXTURE_DIR) / f).string());
  }
  Report r = cmd_validate(ws);
  CHECK(r.all_pass());
  CHECK(r.exit_code() == 0);
  CHECK(r.checks.size() > 100);
}

TEST_CASE("round trip on the closure monad") {
  Workspace ws = fresh();
  Report r = cmd_roundtrip(ws, "Clo2", {});
  CHECK(r.all_pass());
  CHECK(has_check(r, "KH emonad Clo2", Status::Pass));
  Report h = cmd_roundtrip(ws, "CloMonad", {});
  CHECK(has_check(h, "HK cmonad CloMonad", Status::Pass));
  CHECK_FAULT(cmd_roundtrip(ws, "Nothing", {}), Fault::UnknownEntity);
}

TEST_CASE("adjunction suite") {
  Workspace ws = fresh();
  SuiteOptions strict;
  strict.strict = true;
  Report r = cmd_adjunction(ws, "GaloisCR", "phi(GaloisCR)", strict);
  CHECK(r.all_pass());
  CHECK(has_check(r, "triangle uarrow GaloisCR", Status::Pass));

  Report loose = cmd_adjunction(ws, "IdIso2", "IsoPoint", {});
  CHECK(has_check(loose, "2-naturality IsoSwapId", Status::Fail));
  CHECK(loose.exit_code() == 1);
  CHECK(cmd_adjunction(ws, "IdIso2", "IsoPoint", strict).all_pass());
}

TEST_CASE("square suite by group") {
  Workspace ws = fresh();
  Report builtin_only = cmd_square(ws, "builtin", {});
  Report random_only = cmd_square(ws, "random", {});
  Report all = cmd_square(ws, "all", {});
  CHECK(builtin_only.all_pass());
  CHECK(random_only.all_pass());
  CHECK(all.checks.size() == builtin_only.checks.size() + random_only.checks.size());
}

TEST_CASE("reports are deterministic") {
  Workspace a = fresh();
  Workspace b = fresh();
  CHECK(cmd_square(a, "all", {}).text() == cmd_square(b, "all", {}).text());
  CHECK(cmd_adjunction(a, "IsoTerm", "IsoPoint", {}).sidecar() == cmd_adjunction(b, "IsoTerm", "IsoPoint", {}).sidecar());
  CHECK(cmd_validate(a).text() == cmd_validate(b).text());
}

TEST_CASE("report rendering") {
  Report r{"demo", {}};
  r.pass("one");
  r.fail("two", "line\nbreak");
  r.error("three", "boom");
  CHECK(r.count(Status::Pass) == 1);
  CHECK(r.exit_code() == 1);
  CHECK(r.text() == "suite demo\n  pass  one\n  fail  two  -- line break\n  error  three  -- boom\n"
                    "summary: 3 checks, 1 pass, 1 fail, 1 error\n");
  CHECK(r.sidecar().find("check=two\nstatus=fail\nwitness=line break\n") != std::string::npos);
}

TEST_CASE("derive rejects unknown names") {
  Workspace ws = fresh();
  CHECK_FAULT(cmd_derive(ws, "GaloisCR", "chi"), Fault::ParseError);
  CHECK_FAULT(cmd_derive(ws, "Nothing", "phi"), Fault::UnknownEntity);
  CHECK(cmd_derive(ws, "GaloisCR", "phi").find("emonad phi(GaloisCR) on Chain3") != std::string::npos);
}
