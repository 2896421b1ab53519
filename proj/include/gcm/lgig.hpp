#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcm/model.hpp"

namespace gcm {

/// A guard candidate: an ordered list of pairwise distinct signed relation
/// names. For k > 1 the components are viewed as one merged literal whose
/// argument list concatenates the individual argument lists; all positions
/// below refer to that merged list, 1-based.
struct GuardSpec {
  std::vector<SignedRelationName> components;
  std::vector<std::size_t> component_arities;
  std::size_t merged_arity = 0;

  static GuardSpec of(std::vector<SignedRelationName> comps,
                      const std::map<std::string, std::size_t>& arities);
};

/// Least general induced guard: one variable symbol per merged position,
/// positions sharing a variable iff their terms agree in every inducing
/// clause. Fresh names V1, V2, ... in first-occurrence order.
struct Lgig {
  GuardSpec spec;
  std::vector<std::string> vars;

  /// The guard rendered back into component literals.
  std::vector<Literal> guard_literals() const;
};

struct ShieldSet {
  std::set<std::size_t> positions;  // 1-based merged-guard positions
};

/// The unique occurrence of q in straight clause c. Errors if absent.
const Literal& occurrence(const SignedRelationName& q, const Clause& c);

/// Concatenated argument terms of the guard components' occurrences in c.
std::vector<Term> merged_terms(const GuardSpec& guard, const Clause& c);

/// Merged-guard positions whose term in c equals the term at position i of
/// q's occurrence in c.
ShieldSet relative_shield_clause(const GuardSpec& guard, const SignedRelationName& q,
                                 std::size_t i, const Clause& c);

/// Intersection of the per-clause shields over E.
ShieldSet relative_shield(const GuardSpec& guard, const SignedRelationName& q,
                          std::size_t i, const std::vector<Clause>& examples);

Lgig compute_lgig(const GuardSpec& guard, const std::vector<Clause>& examples);

/// Rewrites ground literal l into lgig guard variables via relative shields:
/// position i carries the variable at the smallest shielded guard position,
/// absent when some shield is empty. All shield positions of an lgig carry
/// the same variable; this is asserted. With datalog_fresh set, positive
/// literals map empty-shield positions to fresh existential variables
/// appended to fresh_vars instead of failing.
std::optional<Literal> lgig_map(const Literal& l, const Lgig& g,
                                const std::vector<Clause>& examples,
                                bool datalog_fresh = false,
                                std::vector<std::string>* fresh_vars = nullptr);

/// Precomputed per-example indexes for one guard, for repeated lgig_map
/// calls over the same example set (same semantics as lgig_map above).
struct GuardContext {
  Lgig lgig;
  // Per example clause: term -> 1-based merged-guard positions holding it.
  std::vector<std::unordered_map<Term, std::vector<std::size_t>, TermHash>> term_positions;
  // Per example clause: signed relation name -> its unique occurrence.
  std::vector<std::map<SignedRelationName, const Literal*>> occurrences;

  static GuardContext build(const GuardSpec& guard, const std::vector<Clause>& examples);
};

std::optional<Literal> lgig_map(const Literal& l, const GuardContext& ctx,
                                bool datalog_fresh = false,
                                std::vector<std::string>* fresh_vars = nullptr);

/// Specialises h so that its guard becomes the lgig induced by examples:
/// each guard variable is mapped to the lgig variable at the same merged
/// position. Requires h to subsume every clause of examples.
Hypothesis specialize_to_lgig(const Hypothesis& h, const std::vector<Clause>& examples);

}  // namespace gcm
