// One line per acceptance criterion; exits non-zero if any line fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "adj2/fixtures.hpp"
#include "adj2/suites.hpp"
#include "oracles.hpp"

using namespace adj2;

namespace {

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  void absorb(const Report& r) {
    for (const auto& c : r.checks) expect(c.status == Status::Pass, r.suite + ": " + c.id + " " + c.witness);
  }
};

Workspace fixture_workspace() {
  Workspace ws;
  add_builtin_fixtures(ws);
  add_random_fixtures(ws, 24, 1);
  return ws;
}

std::map<std::string, std::string> on_objects(const Functor& f) {
  std::map<std::string, std::string> out;
  for (Obj a : f.source->objects()) out[f.source->id(a)] = f.target->id(f(a));
  return out;
}

std::map<std::string, std::string> on_objects(const ObjectFunction& f) {
  std::map<std::string, std::string> out;
  for (Obj a : f.source->objects()) out[f.source->id(a)] = f.target->id(f(a));
  return out;
}

std::string id_or_none(const std::optional<std::string>& s) { return s ? *s : "<none>"; }

// Left adjoint of `right` computed by the oracle, as a map on element names.
std::optional<std::map<std::string, std::string>> oracle_left(const Functor& right) {
  auto x = oracle::order_of(*right.source);
  auto c = oracle::order_of(*right.target);
  if (!x || !c) return std::nullopt;
  auto r = on_objects(right);
  std::map<std::string, std::string> out;
  for (const auto& a : c->ids) {
    auto l = oracle::left_adjoint_at(*c, *x, r, a);
    if (!l) return std::nullopt;
    out[a] = *l;
  }
  return out;
}

void criterion_1(Tally& t) {
  Workspace ws = fixture_workspace();
  t.absorb(cmd_validate(ws));
  for (const char* file : {"builtin.cat", "random.cat"}) {
    Workspace shipped;
    shipped.load_file((std::filesystem::path(ADJ2_FIXTURE_DIR) / file).string());
    t.absorb(cmd_validate(shipped));
  }
  for (const auto& n : ws.names(Kind::EMonad)) {
    MonadPtr m = ws.monad(n);
    AlgebraCategory alg = enumerate_algebras(*m);
    t.expect(!alg.algebras.empty(), "no algebras for " + n);
    for (const Algebra& a : alg.algebras) {
      try {
        validate_algebra(*m, a);
        t.expect(true, "");
      } catch (const LawError& e) {
        t.expect(false, "algebra " + a.name + " of " + n + ": " + e.witness());
      }
    }
    for (Mor q : alg.category->morphisms()) {
      const Algebra& s = alg.algebra(alg.category->source(q));
      const Algebra& d = alg.algebra(alg.category->target(q));
      auto bad = algebra_morphism_violation(*m, s, d, alg.forgetful(q));
      t.expect(!bad, "algebra morphism in Alg(" + n + "): " + (bad ? *bad : ""));
    }
  }
}

void criterion_2(Tally& t) {
  Workspace ws = fixture_workspace();
  for (const auto& n : ws.names(Kind::UArrow)) {
    MonadPtr m;
    try {
      m = phi_on_object(*ws.arrow(n));
    } catch (const LawError& e) {
      t.expect(false, "phi(" + n + "): " + e.witness());
      continue;
    }
    const FinCategory& c = *m->base;
    for (Obj a : c.objects()) {
      Obj sa = m->S(a);
      t.expect(m->extend(a, a, m->unit_at(a)) == c.identity(sa), "law a at " + c.id(a) + " in phi(" + n + ")");
      for (Obj b : c.objects()) {
        for (Mor h : c.hom(a, m->S(b))) {
          t.expect(c.compose(m->extend(a, b, h), m->unit_at(a)) == h, "law b at " + c.describe(h) + " in phi(" + n + ")");
          for (Obj d : c.objects()) {
            for (Mor k : c.hom(b, m->S(d))) {
              Mor lhs = m->extend(a, d, c.compose(m->extend(b, d, k), h));
              Mor rhs = c.compose(m->extend(b, d, k), m->extend(a, b, h));
              t.expect(lhs == rhs, "law c at " + c.describe(h) + ", " + c.describe(k) + " in phi(" + n + ")");
            }
          }
        }
      }
    }
  }
}

void criterion_3(Tally& t) {
  Workspace ws = fixture_workspace();
  for (const auto& n : ws.names(Kind::EMonad)) {
    try {
      EmConstruction em = psi_on_object(ws.monad(n));
      auto hist = witness_histogram(*em.arrow);
      bool only_ones = hist.size() == 1 && hist.begin()->first == 1;
      std::ostringstream shape;
      for (const auto& [k, v] : hist) shape << k << ":" << v << " ";
      t.expect(only_ones, "witness histogram of psi(" + n + ") is " + shape.str());
    } catch (const LawError& e) {
      t.expect(false, "psi(" + n + "): " + e.witness());
    }
  }
}

void criterion_4(Tally& t) {
  Workspace ws = fixture_workspace();
  for (const auto& n : ws.names(Kind::UArrow)) {
    CheckOutcome o = check_triangle(ws.arrow(n));
    t.expect(o.holds, "triangle at " + n + ": " + o.witness);
  }
  for (const auto& n : ws.names(Kind::EMonad)) {
    CheckOutcome o = check_triangle(ws.monad(n));
    t.expect(o.holds, "triangle at " + n + ": " + o.witness);
  }
}

void criterion_5(Tally& t) {
  Workspace ws = fixture_workspace();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& u : ws.names(Kind::UArrow, "builtin")) {
    for (const auto& m : ws.names(Kind::EMonad, "builtin")) pairs.emplace_back(u, m);
  }
  for (int k = 0; k < 24; ++k) {
    std::string r = "R" + std::to_string(k);
    for (const auto& u : {"Id" + r, "Galois" + r}) {
      for (const auto& m : {"IdMonad" + r, "Clo" + r}) pairs.emplace_back(u, m);
    }
  }
  for (const auto& [u, m] : pairs) {
    HomBijection h = check_hom_bijection(ws.arrow(u), ws.monad(m));
    t.expect(h.holds(), "hom bijection " + u + ", " + m + ": emnd=" + std::to_string(h.emnd_count) +
                            " uarr=" + std::to_string(h.uarr_count) + " " + h.witness);
  }
}

void criterion_6(Tally& t) {
  Workspace ws = fixture_workspace();
  UArrTwoCell cell = ws.ucell("IsoTermSwapId");
  t.expect(!cell.source.has_identity_rho(), "IsoTermSwap has identity rho");
  NaturalityVerdict v = check_unit_2naturality(cell);
  t.expect(!v.holds && v.witness.has_value(), "IsoTermSwapId: no failure witness");

  SuiteOptions loose;
  Report plain = cmd_adjunction(ws, "IsoTerm", "IsoPoint", loose);
  bool saw_fail = false;
  for (const auto& c : plain.checks) {
    if (c.id == "2-naturality IsoTermSwapId" && c.status == Status::Fail && c.witness.rfind("X=*", 0) == 0) saw_fail = true;
  }
  t.expect(saw_fail, "non-strict suite did not report the witness X=*");

  SuiteOptions strict;
  strict.strict = true;
  Report narrowed = cmd_adjunction(ws, "IsoTerm", "IsoPoint", strict);
  t.absorb(narrowed);
}

void criterion_7(Tally& t) {
  Workspace ws = fixture_workspace();
  for (Kind k : {Kind::UArrow, Kind::UMorphism, Kind::UCell, Kind::EMonad, Kind::EMorphism, Kind::ECell,
                 Kind::Adjunction, Kind::AMorphism, Kind::ACell, Kind::CMonad, Kind::MMorphism, Kind::MCell}) {
    for (const auto& n : ws.names(k)) t.absorb(cmd_roundtrip(ws, n, {}));
  }
}

void criterion_8(Tally& t) {
  Workspace ws = fixture_workspace();
  t.absorb(cmd_square(ws, "all", {}));
}

void criterion_9(Tally& t) {
  Workspace ws = fixture_workspace();

  for (const auto& n : ws.names(Kind::UArrow)) {
    ArrowPtr u = ws.arrow(n);
    auto c = oracle::order_of(*u->base);
    auto x = oracle::order_of(*u->upstairs);
    auto left = oracle_left(u->right);
    if (!c || !x || !left) continue;
    auto r = on_objects(u->right);
    t.expect(on_objects(u->left) == *left, "left part of " + n);
    for (const auto& [key, w] : u->zeta) {
      std::string a = u->base->id(Obj{key[0]});
      std::string xx = u->upstairs->id(Obj{key[1]});
      t.expect(u->upstairs->id(w) == id_or_none(x->arrow(left->at(a), xx)), "zeta of " + n + " at " + a + ", " + xx);
    }
    MonadPtr m = phi_on_object(*u);
    for (const auto& [key, e] : m->ext) {
      std::string a = u->base->id(Obj{key[0]});
      std::string b = u->base->id(Obj{key[1]});
      t.expect(m->base->id(e) == id_or_none(c->arrow(r.at(left->at(a)), r.at(left->at(b)))),
               "ext of phi(" + n + ") at " + a + ", " + b);
    }
    AdjPtr adj = F_on_object(*u);
    for (Obj o : u->upstairs->objects()) {
      std::string xx = u->upstairs->id(o);
      t.expect(u->upstairs->id(adj->counit[o]) == id_or_none(x->arrow(left->at(r.at(xx)), xx)),
               "counit of F(" + n + ") at " + xx);
    }
  }

  for (const auto& n : ws.names(Kind::EMonad)) {
    MonadPtr m = ws.monad(n);
    auto c = oracle::order_of(*m->base);
    if (!c) continue;
    auto s = on_objects(m->endo);
    t.expect(oracle::is_closure_operator(*c, s), n + " is not a closure operator");
    t.expect(oracle::closure_onto(*c, oracle::fixed_points(s)) == s, n + " differs from the closure onto its fixed points");
    for (const auto& [key, e] : m->ext) {
      std::string a = c->ids[static_cast<std::size_t>(key[0])];
      std::string b = c->ids[static_cast<std::size_t>(key[1])];
      t.expect(m->base->id(e) == id_or_none(c->arrow(s.at(a), s.at(b))), "ext of " + n + " at " + a + ", " + b);
    }
    CMonadPtr h = H_on_object(*m);
    for (Obj o : m->base->objects()) {
      std::string a = m->base->id(o);
      t.expect(m->base->id(h->mult[o]) == id_or_none(c->arrow(s.at(s.at(a)), s.at(a))), "mu of H(" + n + ") at " + a);
    }
    EmConstruction em = psi_on_object(m);
    std::vector<std::string> carriers;
    for (const Algebra& alg : em.algebras.algebras) carriers.push_back(m->base->id(alg.carrier));
    std::sort(carriers.begin(), carriers.end());
    std::vector<std::string> fixed = oracle::fixed_points(s);
    std::sort(fixed.begin(), fixed.end());
    t.expect(carriers == fixed, "algebra carriers of " + n + " are not its fixed points");
    const ArrowPtr& up = em.arrow;
    for (const auto& [key, w] : up->zeta) {
      std::string a = m->base->id(Obj{key[0]});
      std::string carrier = m->base->id(up->right(Obj{key[1]}));
      t.expect(m->base->id(up->right(w)) == id_or_none(c->arrow(s.at(a), carrier)),
               "zeta of psi(" + n + ") at " + a + ", " + carrier);
    }
  }

  auto check_emorphism = [&](const EMndMorphism& m, const std::string& label) {
    auto d = oracle::order_of(*m.target->base);
    if (!d || !oracle::order_of(*m.source->base)) return;
    auto p = on_objects(m.P);
    auto s = on_objects(m.source->endo);
    auto tt = on_objects(m.target->endo);
    for (const auto& [key, e] : m.ext) {
      std::string dd = m.target->base->id(Obj{key[0]});
      std::string a = m.source->base->id(Obj{key[1]});
      t.expect(m.target->base->id(e) == id_or_none(d->arrow(tt.at(dd), p.at(s.at(a)))),
               "ext of " + label + " at " + dd + ", " + a);
    }
    MonadMorphism h = H_on_morphism(m);
    for (Obj o : m.source->base->objects()) {
      std::string a = m.source->base->id(o);
      t.expect(m.target->base->id(h.phi[o]) == id_or_none(d->arrow(tt.at(p.at(a)), p.at(s.at(a)))),
               "phi of H(" + label + ") at " + a);
    }
  };
  for (const auto& n : ws.names(Kind::EMorphism)) check_emorphism(ws.emorphism(n), n);

  for (const auto& n : ws.names(Kind::UMorphism)) {
    UArrMorphism m = ws.umorphism(n);
    auto x2 = oracle::order_of(*m.target->upstairs);
    auto l1 = oracle_left(m.source->right);
    auto l2 = oracle_left(m.target->right);
    if (!x2 || !l1 || !l2) continue;
    auto j = on_objects(m.J);
    auto v = on_objects(m.V);
    AdjMorphism f = F_on_morphism(m);
    for (Obj o : m.source->base->objects()) {
      std::string a = m.source->base->id(o);
      t.expect(m.target->upstairs->id(f.lambda[o]) == id_or_none(x2->arrow(l2->at(j.at(a)), v.at(l1->at(a)))),
               "lambda of F(" + n + ") at " + a);
    }
    check_emorphism(phi_on_morphism(m), "phi(" + n + ")");
  }

  for (const auto& n : ws.names(Kind::MMorphism)) {
    MonadMorphism m = ws.mmorphism(n);
    auto d = oracle::order_of(*m.target->base());
    if (!d) continue;
    auto p = on_objects(m.P);
    auto s = on_objects(m.source->endo);
    auto tt = on_objects(m.target->endo);
    for (Obj o : m.source->base()->objects()) {
      std::string a = m.source->base()->id(o);
      t.expect(m.target->base()->id(m.phi[o]) == id_or_none(d->arrow(tt.at(p.at(a)), p.at(s.at(a)))),
               "phi of " + n + " at " + a);
    }
    check_emorphism(K_on_morphism(m), "K(" + n + ")");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"law suites on fixtures and 24 random instances", criterion_1},
      {"phi(U) is an extensive monad for every arrow", criterion_2},
      {"psi(M) has exactly one witness everywhere", criterion_3},
      {"triangle identities", criterion_4},
      {"hom bijection on strict pairs", criterion_5},
      {"2-naturality fails with a witness, holds under --strict", criterion_6},
      {"GF, FG, HK, KH round trips", criterion_7},
      {"square commutes", criterion_8},
      {"derived tables match order-theoretic oracles", criterion_9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const LawError& e) {
      t.expect(false, std::string("uncaught ") + std::string(fault_name(e.kind())) + ": " + e.witness());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = t.failures == 0 && t.checks > 0;
    if (!ok) ++failed;
    std::ostringstream line;
    line << "criterion " << i + 1 << " " << (ok ? "PASS" : "FAIL") << "  " << criteria[i].first << "  (" << t.checks
         << " checks, " << t.failures << " failed, " << std::fixed;
    line.precision(2);
    line << secs << "s)";
    if (!ok) line << "  first failure: " << (t.checks == 0 ? "nothing checked" : t.first);
    std::cout << line.str() << '\n';
  }
  return failed == 0 ? 0 : 1;
}
