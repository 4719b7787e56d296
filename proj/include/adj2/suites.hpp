#pragma once

#include <string>

#include "adj2/report.hpp"
#include "adj2/workspace.hpp"

namespace adj2 {

struct SuiteOptions {
  SearchBudget budget;
  bool strict = false;  // keep only 2-cells whose 1-cells have identity rho
};

/// Builds every registered entity; one check per entity.
Report cmd_validate(Workspace& ws);

/// Spec text for fn(entity), fn one of phi, psi, F, G, H, K. The entity may be
/// an object, 1-cell or 2-cell of the functor's domain.
std::string cmd_derive(Workspace& ws, const std::string& entity, const std::string& fn);

/// Triangle identities at the arrow and the monad, the hom bijection between
/// them, and 2-naturality of the unit at every 2-cell out of the arrow's 1-cells.
Report cmd_adjunction(Workspace& ws, const std::string& arrow, const std::string& monad, const SuiteOptions& opts);

/// GF, FG, HK or KH on the entity and on every cell it is built from.
Report cmd_roundtrip(Workspace& ws, const std::string& entity, const SuiteOptions& opts);

/// H.phi = phiE.F, phi.G = K.phiE, F.psi = psiE.H and psi.K = G.psiE on every
/// registered cell of the group; an empty group or "all" means every group.
Report cmd_square(Workspace& ws, const std::string& group, const SuiteOptions& opts);

/// Every registered entity of the group as spec text.
std::string dump_workspace(Workspace& ws, const std::string& group = {});

}  // namespace adj2
