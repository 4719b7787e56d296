#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adj2/workspace.hpp"

namespace adj2 {

/// Registers the built-in set under the group "builtin": the categories One,
/// Two, Chain3, Div6 and Iso2, the arrows, monads, adjunctions and their
/// 1-cells and 2-cells.
void add_builtin_fixtures(Workspace& ws);

/// A random finite poset with a top element, a closure operator on it, and the
/// cells built from that pair.
struct ClosureInstance {
  std::string tag;  // e.g. "R3"
  CatPtr poset;
  CatPtr closed;             // full subcategory of closed elements
  std::vector<Obj> closure;  // indexed by poset objects
  ArrowPtr identity_arrow;
  ArrowPtr galois;           // inclusion of closed elements with the closure as left part
  MonadPtr identity_monad;
  MonadPtr monad;            // the closure monad
  UArrMorphism corestrict;   // identity_arrow -> galois, J = closure
  UArrMorphism to_top;       // identity_arrow -> galois, constant at the top
  UArrTwoCell lift;          // corestrict => to_top
  EMndMorphism into_closure; // identity_monad -> monad, P = closure
  EMndMorphism into_top;     // identity_monad -> monad, P constant at the top
  EMndTwoCell raise;         // into_closure => into_top
};

/// Deterministic for a given (seed, index). Posets have 2 to 5 elements plus a top.
ClosureInstance random_closure_instance(std::uint64_t seed, int index);

/// Registers `count` random instances under the group "random".
void add_random_fixtures(Workspace& ws, int count, std::uint64_t seed);

}  // namespace adj2
