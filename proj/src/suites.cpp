#include "adj2/suites.hpp"

#include <array>
#include <functional>

#include "adj2/bridge.hpp"
#include "adj2/classical.hpp"

namespace adj2 {

namespace {

std::string fault_text(const LawError& e) { return std::string(fault_name(e.kind())) + ": " + e.witness(); }

// Runs one check, turning a thrown LawError into an error record.
void run(Report& r, const std::string& id, const std::function<CheckOutcome()>& check) {
  try {
    CheckOutcome out = check();
    r.add(id, out.holds ? Status::Pass : Status::Fail, out.witness);
  } catch (const LawError& e) {
    r.error(id, fault_text(e));
  }
}

template <typename T>
CheckOutcome same(const T& got, const T& want, const std::string& what) {
  if (got == want) return {};
  return {false, what + " differs from the original"};
}

bool resolves(Workspace& ws, Kind kind, const std::string& name) {
  try {
    switch (kind) {
      case Kind::Category: ws.category(name); break;
      case Kind::Functor: ws.functor(name); break;
      case Kind::Nat: ws.nat(name); break;
      case Kind::UArrow: ws.arrow(name); break;
      case Kind::UMorphism: ws.umorphism(name); break;
      case Kind::UCell: ws.ucell(name); break;
      case Kind::EMonad: ws.monad(name); break;
      case Kind::Algebra: ws.algebra(name); break;
      case Kind::EMorphism: ws.emorphism(name); break;
      case Kind::ECell: ws.ecell(name); break;
      case Kind::Adjunction: ws.adjunction(name); break;
      case Kind::AMorphism: ws.amorphism(name); break;
      case Kind::ACell: ws.acell(name); break;
      case Kind::CMonad: ws.cmonad(name); break;
      case Kind::MMorphism: ws.mmorphism(name); break;
      case Kind::MCell: ws.mcell(name); break;
    }
    return true;
  } catch (const LawError& e) {
    if (e.kind() == Fault::UnknownEntity) return false;
    throw;
  }
}

void emit(Emitter& out, Workspace& ws, Kind kind, const std::string& name) {
  switch (kind) {
    case Kind::Category: out.category(ws.category(name)); break;
    case Kind::Functor: out.functor(ws.functor(name), name); break;
    case Kind::Nat: out.nat(ws.nat(name), name); break;
    case Kind::UArrow: out.arrow(*ws.arrow(name)); break;
    case Kind::UMorphism: out.umorphism(ws.umorphism(name)); break;
    case Kind::UCell: out.ucell(ws.ucell(name)); break;
    case Kind::EMonad: out.monad(*ws.monad(name)); break;
    case Kind::Algebra: {
      AlgebraEntry a = ws.algebra(name);
      out.algebra(*a.monad, a.algebra);
      break;
    }
    case Kind::EMorphism: out.emorphism(ws.emorphism(name)); break;
    case Kind::ECell: out.ecell(ws.ecell(name)); break;
    case Kind::Adjunction: out.adjunction(*ws.adjunction(name)); break;
    case Kind::AMorphism: out.amorphism(ws.amorphism(name)); break;
    case Kind::ACell: out.acell(ws.acell(name)); break;
    case Kind::CMonad: out.cmonad(*ws.cmonad(name)); break;
    case Kind::MMorphism: out.mmorphism(ws.mmorphism(name)); break;
    case Kind::MCell: out.mcell(ws.mcell(name)); break;
  }
}

// Domain and codomain kinds of each 2-functor, by cell level.
struct Translation {
  std::array<Kind, 3> from;
  std::array<Kind, 3> to;
};

std::optional<Translation> translation(const std::string& fn) {
  const std::array<Kind, 3> uarr{Kind::UArrow, Kind::UMorphism, Kind::UCell};
  const std::array<Kind, 3> emnd{Kind::EMonad, Kind::EMorphism, Kind::ECell};
  const std::array<Kind, 3> adj{Kind::Adjunction, Kind::AMorphism, Kind::ACell};
  const std::array<Kind, 3> mnd{Kind::CMonad, Kind::MMorphism, Kind::MCell};
  if (fn == "phi") return Translation{uarr, emnd};
  if (fn == "psi") return Translation{emnd, uarr};
  if (fn == "F") return Translation{uarr, adj};
  if (fn == "G") return Translation{adj, uarr};
  if (fn == "H") return Translation{emnd, mnd};
  if (fn == "K") return Translation{mnd, emnd};
  return std::nullopt;
}

bool same_arrow(const ArrowPtr& a, const ArrowPtr& b) { return a == b || *a == *b; }
bool has_identity_rhos(const UArrTwoCell& c) { return c.source.has_identity_rho() && c.target.has_identity_rho(); }

}  // namespace

Report cmd_validate(Workspace& ws) {
  Report r{"validate", {}};
  for (const BuildRecord& b : ws.build_all()) {
    std::string id = std::string(kind_keyword(b.kind)) + " " + b.name;
    if (b.error) r.error(id, fault_text(*b.error));
    else r.pass(id);
  }
  return r;
}

std::string cmd_derive(Workspace& ws, const std::string& entity, const std::string& fn) {
  auto t = translation(fn);
  if (!t) fail(Fault::ParseError, "unknown 2-functor '" + fn + "'");
  for (std::size_t level = 0; level < 3; ++level) {
    if (!resolves(ws, t->from[level], entity)) continue;
    Emitter out;
    emit(out, ws, t->to[level], fn + "(" + entity + ")");
    return out.text();
  }
  fail(Fault::UnknownEntity, "no " + std::string(kind_keyword(t->from[0])) + ", " +
                                 std::string(kind_keyword(t->from[1])) + " or " +
                                 std::string(kind_keyword(t->from[2])) + " named '" + entity + "'");
}

Report cmd_adjunction(Workspace& ws, const std::string& arrow, const std::string& monad, const SuiteOptions& opts) {
  Report r{"adjunction " + arrow + " " + monad + (opts.strict ? " strict" : ""), {}};
  ArrowPtr u = ws.arrow(arrow);
  MonadPtr m = ws.monad(monad);

  run(r, "triangle uarrow " + arrow, [&] { return check_triangle(u, opts.budget); });
  run(r, "triangle emonad " + monad, [&] { return check_triangle(m, opts.budget); });
  run(r, "hom-bijection " + arrow + " " + monad, [&] {
    HomBijection h = check_hom_bijection(u, m, opts.budget);
    std::string counts = "emnd=" + std::to_string(h.emnd_count) + " uarr=" + std::to_string(h.uarr_count);
    if (h.holds()) return CheckOutcome{true, counts};
    return CheckOutcome{false, counts + (h.witness.empty() ? "" : "; " + h.witness)};
  });

  // registered 2-cells out of 1-cells leaving the arrow, then identity cells of those 1-cells
  std::vector<UArrTwoCell> cells;
  for (const auto& name : ws.names(Kind::UCell)) {
    UArrTwoCell c = ws.ucell(name);
    if (same_arrow(c.source.source, u)) cells.push_back(c);
  }
  for (const auto& name : ws.names(Kind::UMorphism)) {
    UArrMorphism one = ws.umorphism(name);
    if (!same_arrow(one.source, u)) continue;
    UArrTwoCell id = identity_uarr_two_cell(one);
    id.name = "identity on " + name;
    bool listed = false;
    for (const auto& c : cells) listed = listed || c == id;
    if (!listed) cells.push_back(id);
  }
  std::size_t checked = 0;
  for (const auto& c : cells) {
    if (opts.strict && !has_identity_rhos(c)) continue;
    ++checked;
    run(r, "2-naturality " + c.name, [&] {
      NaturalityVerdict v = check_unit_2naturality(c);
      if (v.holds) return CheckOutcome{};
      std::string at = v.witness ? "X=" + c.source.source->upstairs->id(*v.witness) : "X=?";
      return CheckOutcome{false, at + (v.detail.empty() ? "" : ": " + v.detail)};
    });
  }
  if (checked == 0) r.pass("2-naturality", std::string(opts.strict ? "no 2-cells with identity rho" : "no 2-cells") + " out of " + arrow);
  return r;
}

Report cmd_roundtrip(Workspace& ws, const std::string& entity, const SuiteOptions&) {
  Report r{"roundtrip " + entity, {}};
  std::size_t found = 0;

  auto gf_arrow = [&](const ArrowPtr& u) {
    run(r, "GF uarrow " + u->name, [&] { return same(*G_on_object(*F_on_object(*u)), *u, "G(F(" + u->name + "))"); });
  };
  auto gf_morphism = [&](const UArrMorphism& m) {
    gf_arrow(m.source);
    if (m.target != m.source) gf_arrow(m.target);
    run(r, "GF umorphism " + m.name, [&] { return same(G_on_morphism(F_on_morphism(m)), m, "G(F(" + m.name + "))"); });
  };
  auto fg_adj = [&](const AdjPtr& a) {
    run(r, "FG adjunction " + a->name,
        [&] { return same(*F_on_object(*G_on_object(*a)), *a, "F(G(" + a->name + "))"); });
  };
  auto fg_morphism = [&](const AdjMorphism& m) {
    fg_adj(m.source);
    if (m.target != m.source) fg_adj(m.target);
    run(r, "FG amorphism " + m.name, [&] { return same(F_on_morphism(G_on_morphism(m)), m, "F(G(" + m.name + "))"); });
  };
  auto kh_monad = [&](const MonadPtr& m) {
    run(r, "KH emonad " + m->name, [&] { return same(*K_on_object(*H_on_object(*m)), *m, "K(H(" + m->name + "))"); });
  };
  auto kh_morphism = [&](const EMndMorphism& m) {
    kh_monad(m.source);
    if (m.target != m.source) kh_monad(m.target);
    run(r, "KH emorphism " + m.name, [&] { return same(K_on_morphism(H_on_morphism(m)), m, "K(H(" + m.name + "))"); });
  };
  auto hk_monad = [&](const CMonadPtr& m) {
    run(r, "HK cmonad " + m->name, [&] { return same(*H_on_object(*K_on_object(*m)), *m, "H(K(" + m->name + "))"); });
  };
  auto hk_morphism = [&](const MonadMorphism& m) {
    hk_monad(m.source);
    if (m.target != m.source) hk_monad(m.target);
    run(r, "HK mmorphism " + m.name, [&] { return same(H_on_morphism(K_on_morphism(m)), m, "H(K(" + m.name + "))"); });
  };

  if (resolves(ws, Kind::UArrow, entity)) ++found, gf_arrow(ws.arrow(entity));
  if (resolves(ws, Kind::UMorphism, entity)) ++found, gf_morphism(ws.umorphism(entity));
  if (resolves(ws, Kind::UCell, entity)) {
    ++found;
    UArrTwoCell c = ws.ucell(entity);
    gf_morphism(c.source);
    gf_morphism(c.target);
    run(r, "GF ucell " + entity, [&] { return same(G_on_two_cell(F_on_two_cell(c)), c, "G(F(" + entity + "))"); });
  }
  if (resolves(ws, Kind::Adjunction, entity)) ++found, fg_adj(ws.adjunction(entity));
  if (resolves(ws, Kind::AMorphism, entity)) ++found, fg_morphism(ws.amorphism(entity));
  if (resolves(ws, Kind::ACell, entity)) {
    ++found;
    AdjTwoCell c = ws.acell(entity);
    fg_morphism(c.source);
    fg_morphism(c.target);
    run(r, "FG acell " + entity, [&] { return same(F_on_two_cell(G_on_two_cell(c)), c, "F(G(" + entity + "))"); });
  }
  if (resolves(ws, Kind::EMonad, entity)) ++found, kh_monad(ws.monad(entity));
  if (resolves(ws, Kind::EMorphism, entity)) ++found, kh_morphism(ws.emorphism(entity));
  if (resolves(ws, Kind::ECell, entity)) {
    ++found;
    EMndTwoCell c = ws.ecell(entity);
    kh_morphism(c.source);
    kh_morphism(c.target);
    run(r, "KH ecell " + entity, [&] { return same(K_on_two_cell(H_on_two_cell(c)), c, "K(H(" + entity + "))"); });
  }
  if (resolves(ws, Kind::CMonad, entity)) ++found, hk_monad(ws.cmonad(entity));
  if (resolves(ws, Kind::MMorphism, entity)) ++found, hk_morphism(ws.mmorphism(entity));
  if (resolves(ws, Kind::MCell, entity)) {
    ++found;
    MonadTwoCell c = ws.mcell(entity);
    hk_morphism(c.source);
    hk_morphism(c.target);
    run(r, "HK mcell " + entity, [&] { return same(H_on_two_cell(K_on_two_cell(c)), c, "H(K(" + entity + "))"); });
  }
  if (found == 0) fail(Fault::UnknownEntity, "no arrow, monad, adjunction or cell named '" + entity + "'");
  return r;
}

Report cmd_square(Workspace& ws, const std::string& group, const SuiteOptions& opts) {
  const std::string g = group == "all" ? std::string{} : group;
  Report r{"square " + (g.empty() ? std::string("all") : g), {}};
  const SearchBudget b = opts.budget;

  for (const auto& n : ws.names(Kind::UArrow, g)) {
    run(r, "H.phi = phiE.F uarrow " + n, [&] {
      ArrowPtr u = ws.arrow(n);
      return same(*H_on_object(*phi_on_object(*u)), *phi_e_on_object(*F_on_object(*u)), "H(phi(" + n + "))");
    });
  }
  for (const auto& n : ws.names(Kind::UMorphism, g)) {
    run(r, "H.phi = phiE.F umorphism " + n, [&] {
      UArrMorphism m = ws.umorphism(n);
      return same(H_on_morphism(phi_on_morphism(m)), phi_e_on_morphism(F_on_morphism(m)), "H(phi(" + n + "))");
    });
  }
  for (const auto& n : ws.names(Kind::UCell, g)) {
    run(r, "H.phi = phiE.F ucell " + n, [&] {
      UArrTwoCell c = ws.ucell(n);
      return same(H_on_two_cell(phi_on_two_cell(c)), phi_e_on_two_cell(F_on_two_cell(c)), "H(phi(" + n + "))");
    });
  }

  for (const auto& n : ws.names(Kind::Adjunction, g)) {
    run(r, "phi.G = K.phiE adjunction " + n, [&] {
      AdjPtr a = ws.adjunction(n);
      return same(*phi_on_object(*G_on_object(*a)), *K_on_object(*phi_e_on_object(*a)), "phi(G(" + n + "))");
    });
  }
  for (const auto& n : ws.names(Kind::AMorphism, g)) {
    run(r, "phi.G = K.phiE amorphism " + n, [&] {
      AdjMorphism m = ws.amorphism(n);
      return same(phi_on_morphism(G_on_morphism(m)), K_on_morphism(phi_e_on_morphism(m)), "phi(G(" + n + "))");
    });
  }
  for (const auto& n : ws.names(Kind::ACell, g)) {
    run(r, "phi.G = K.phiE acell " + n, [&] {
      AdjTwoCell c = ws.acell(n);
      return same(phi_on_two_cell(G_on_two_cell(c)), K_on_two_cell(phi_e_on_two_cell(c)), "phi(G(" + n + "))");
    });
  }

  for (const auto& n : ws.names(Kind::EMonad, g)) {
    run(r, "F.psi = psiE.H emonad " + n, [&] {
      MonadPtr m = ws.monad(n);
      return same(*F_on_object(*psi_on_object(m, b).arrow), *psi_e_on_object(*H_on_object(*m), b), "F(psi(" + n + "))");
    });
  }
  for (const auto& n : ws.names(Kind::EMorphism, g)) {
    run(r, "F.psi = psiE.H emorphism " + n, [&] {
      EMndMorphism m = ws.emorphism(n);
      return same(F_on_morphism(psi_on_morphism(m, b)), psi_e_on_morphism(H_on_morphism(m), b), "F(psi(" + n + "))");
    });
  }
  for (const auto& n : ws.names(Kind::ECell, g)) {
    run(r, "F.psi = psiE.H ecell " + n, [&] {
      EMndTwoCell c = ws.ecell(n);
      return same(F_on_two_cell(psi_on_two_cell(c, b)), psi_e_on_two_cell(H_on_two_cell(c), b), "F(psi(" + n + "))");
    });
  }

  for (const auto& n : ws.names(Kind::CMonad, g)) {
    run(r, "psi.K = G.psiE cmonad " + n, [&] {
      CMonadPtr m = ws.cmonad(n);
      return same(*psi_on_object(K_on_object(*m), b).arrow, *G_on_object(*psi_e_on_object(*m, b)), "psi(K(" + n + "))");
    });
  }
  for (const auto& n : ws.names(Kind::MMorphism, g)) {
    run(r, "psi.K = G.psiE mmorphism " + n, [&] {
      MonadMorphism m = ws.mmorphism(n);
      return same(psi_on_morphism(K_on_morphism(m), b), G_on_morphism(psi_e_on_morphism(m, b)), "psi(K(" + n + "))");
    });
  }
  for (const auto& n : ws.names(Kind::MCell, g)) {
    run(r, "psi.K = G.psiE mcell " + n, [&] {
      MonadTwoCell c = ws.mcell(n);
      return same(psi_on_two_cell(K_on_two_cell(c), b), G_on_two_cell(psi_e_on_two_cell(c, b)), "psi(K(" + n + "))");
    });
  }
  return r;
}

std::string dump_workspace(Workspace& ws, const std::string& group) {
  Emitter out;
  for (int k = 0; k <= static_cast<int>(Kind::MCell); ++k) {
    Kind kind = static_cast<Kind>(k);
    for (const auto& n : ws.names(kind, group)) emit(out, ws, kind, n);
  }
  return out.text();
}

}  // namespace adj2
