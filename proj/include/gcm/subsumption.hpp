#pragma once

#include <optional>
#include <vector>

#include "gcm/model.hpp"

namespace gcm {

/// General theta-subsumption check by backtracking over literal-to-literal
/// matchings, most-constrained literal first. Worst-case exponential; this is
/// the oracle path. psi must be ground.
std::optional<Substitution> subsumes_general(const Clause& phi, const Clause& psi);

/// Polynomial guard-anchored check for k-guarded hypotheses without
/// existential variables. Enumerates mappings of the guard literal set into
/// matching signed-relation occurrences of psi (at most |psi|^k candidates);
/// each consistent anchor determines theta on all hypothesis variables, and
/// is accepted iff every remaining literal lands inside psi.
std::optional<Substitution> subsumes_k_guarded(const Hypothesis& h, const Clause& psi);

/// Complete list of guard-anchored witnesses theta with clause(h) theta
/// contained in psi, deduplicated, in deterministic anchor-enumeration order
/// (psi literal input order).
std::vector<Substitution> guard_anchor_witnesses(const Hypothesis& h, const Clause& psi);

/// Dispatch: guard-anchored check, extended to hypotheses with existential
/// variables (anchor the guard, then match the residual literals with the
/// general checker, treating existential variables as ordinary ones).
std::optional<Substitution> subsumes_hypothesis(const Hypothesis& h, const Clause& psi);

}  // namespace gcm
