#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcm/model.hpp"

namespace gcm {

/// Hitting string problem input: equal-length strings over {0,1,*}.
struct HittingStringInstance {
  std::vector<std::string> strings;
  std::size_t n = 0;  // string length

  static HittingStringInstance of(std::vector<std::string> strings);
};

struct GeneratorParams {
  int relation_count = 2;
  int max_arity = 2;
  int clause_count_pos = 2;
  int clause_count_neg = 2;
  int constant_count = 3;
  int literals_per_clause = 3;
  int k = 1;
  std::uint64_t seed = 0;
};

struct OracleOptions {
  // 0 means the default bound: k + sum of negative clause sizes.
  std::size_t max_hypothesis_size = 0;
  std::uint64_t node_limit = 50'000'000;
};

/// Exhaustive brute-force ILP consistency for small instances: every guard
/// signed-relation multiset of size <= k, every variable equality pattern
/// over its merged positions (set partitions), then depth-first search over
/// subsets of the candidate literals on the guard variables, up to the size
/// bound. Pruned by anti-monotonicity: a hypothesis that fails to subsume
/// some positive example never recovers by adding literals. Returns the
/// first verified solution in deterministic enumeration order.
std::optional<Hypothesis> oracle_consistency(const Instance& instance,
                                             const OracleOptions& options = {});

/// Guard-free variant over a fixed variable budget, used to stress-test the
/// structural claim that solutions of reduction instances are guarded even
/// when unguarded shapes are searched.
std::optional<Clause> oracle_consistency_unguarded(const Instance& instance, int var_budget,
                                                   const OracleOptions& options = {});

/// Transcribes the hitting-string reduction: positives C_0..C_n, negatives
/// D_0..D_n and N_1..N_m over relations G/2, A_j/1, B_j/1 and constants a,b.
/// Requires n >= 1 and m >= 1.
Instance gen_hitting_instance(const HittingStringInstance& hs);

/// Lexicographically first binary hitting string, or absent.
std::optional<std::string> brute_force_hitting(const HittingStringInstance& hs,
                                               std::size_t max_n = 24);

/// Deterministic function of the seed. Positive clauses are generated
/// straight (each signed relation sampled at most once); negatives are
/// unconstrained ground clauses.
Instance random_instance(const GeneratorParams& params);

}  // namespace gcm
