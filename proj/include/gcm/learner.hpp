#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gcm/lgig.hpp"
#include "gcm/model.hpp"

namespace gcm {

enum class InconsistentCause { None, NoCommonRelation, SearchExhausted };

struct LearnStats {
  std::uint64_t subsumption_checks = 0;
};

struct LearnResult {
  std::optional<Hypothesis> solution;
  InconsistentCause cause = InconsistentCause::None;
  std::uint64_t guard_tried_count = 0;
  LearnStats stats;

  bool consistent() const { return solution.has_value(); }
};

/// Subset-maximal lgig-guarded solutions, one per accepting guard choice.
struct CanonicalSet {
  std::vector<Hypothesis> solutions;
};

/// Restricts each clause to the signed relation names present in every
/// clause. Returns absent when no common signed relation exists (no guard
/// can exist, the instance is inconsistent by pruning).
std::optional<std::vector<Clause>> prune_relations(const std::vector<Clause>& positives);

/// The reference algorithm for guard width 1: probe clause is the first
/// positive example after dedup and pruning; guards are tried in literal
/// input order; a guard-only hypothesis is returned early when it already
/// rejects all negatives, otherwise lgig-mapped literals of the probe clause
/// are added greedily while subsumption of the positives is preserved.
LearnResult learn(const Instance& instance);

/// Generalisation over merged guards: candidates are all subsets of at most
/// k probe-clause literals, in lexicographic order of index tuples.
LearnResult learn_k_guarded(const Instance& instance);

/// Horn positives, negative-literal guards only; head positions with empty
/// shields become fresh existential variables.
LearnResult learn_datalog_pm(const Instance& instance);

/// Maximal lgig-guarded hypothesis per guard candidate, keeping those that
/// reject every negative example. Maximality per guard is unique and
/// independent of iteration order.
CanonicalSet enumerate_canonical(const Instance& instance);

/// Shrinks a solution to at most k + sum of negative clause sizes literals
/// (guard kept): walks the negative examples and, where the current subset
/// still subsumes one, adds one blocking literal of h per guard-anchored
/// witness.
Hypothesis shrink_solution(const Hypothesis& h, const Instance& instance);

}  // namespace gcm
