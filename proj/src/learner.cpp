#include "gcm/learner.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "gcm/subsumption.hpp"

namespace gcm {

std::optional<std::vector<Clause>> prune_relations(const std::vector<Clause>& positives) {
  if (positives.empty()) throw Error("no positive examples");
  std::set<SignedRelationName> common = signed_names(positives[0]);
  for (std::size_t i = 1; i < positives.size(); ++i) {
    std::set<SignedRelationName> names = signed_names(positives[i]);
    std::set<SignedRelationName> inter;
    std::set_intersection(common.begin(), common.end(), names.begin(), names.end(),
                          std::inserter(inter, inter.begin()));
    common = std::move(inter);
  }
  if (common.empty()) return std::nullopt;
  std::vector<Clause> out;
  out.reserve(positives.size());
  for (const Clause& c : positives) {
    std::vector<Literal> kept;
    for (const Literal& l : c.literals()) {
      if (common.count(l.signed_name()) != 0) kept.push_back(l);
    }
    out.emplace_back(std::move(kept));
  }
  return out;
}

namespace {

// Guard-determined witness for one example clause: lgig variable -> term.
using Witness = std::unordered_map<std::string, Term>;

struct GuardState {
  GuardContext ctx;
  std::vector<Literal> guard_literals;
  std::vector<Witness> witnesses;  // one per example clause
};

GuardState build_guard_state(const GuardSpec& spec, const std::vector<Clause>& examples) {
  GuardState st{GuardContext::build(spec, examples), {}, {}};
  st.guard_literals = st.ctx.lgig.guard_literals();
  for (const Clause& c : examples) {
    std::vector<Term> merged = merged_terms(spec, c);
    Witness w;
    for (std::size_t p = 0; p < merged.size(); ++p) {
      w.emplace(st.ctx.lgig.vars[p], merged[p]);
    }
    st.witnesses.push_back(std::move(w));
  }
  return st;
}

// Whether the mapped literal lands inside every example clause under the
// guard-determined witness. Unbound (existential) variables match anything;
// since examples are straight, the unique occurrence of the signed relation
// is the only possible target.
bool addable_everywhere(const Literal& mapped, const GuardState& st, LearnStats& stats) {
  for (std::size_t c = 0; c < st.witnesses.size(); ++c) {
    ++stats.subsumption_checks;
    auto it = st.ctx.occurrences[c].find(mapped.signed_name());
    if (it == st.ctx.occurrences[c].end()) return false;
    const Literal& occ = *it->second;
    if (occ.arity() != mapped.arity()) return false;
    const Witness& w = st.witnesses[c];
    for (std::size_t i = 0; i < mapped.arity(); ++i) {
      const Term& t = mapped.args[i];
      if (t.is_constant()) {
        if (t != occ.args[i]) return false;
        continue;
      }
      auto bound = w.find(t.symbol);
      if (bound != w.end() && bound->second != occ.args[i]) return false;
    }
  }
  return true;
}

struct Engine {
  const Instance& instance;
  bool datalog;
  std::vector<Clause> examples;  // deduped, pruned positives
  LearnResult result;

  bool rejects_all_negatives(const Hypothesis& h) {
    for (const Clause& neg : instance.negatives) {
      ++result.stats.subsumption_checks;
      if (subsumes_hypothesis(h, neg)) return false;
    }
    return true;
  }

  // Runs one guard candidate to its maximal hypothesis. With early_return
  // set, stops at the guard-only hypothesis when it already rejects all
  // negatives. Returns the accepted solution, if any.
  std::optional<Hypothesis> try_guard(const std::vector<std::size_t>& guard_indices,
                                      bool early_return) {
    const Clause& probe = examples[0];
    std::vector<SignedRelationName> comps;
    for (std::size_t idx : guard_indices) {
      comps.push_back(probe.literals()[idx].signed_name());
    }
    GuardState st = build_guard_state(GuardSpec::of(std::move(comps), instance.arities()),
                                      examples);
    ++result.guard_tried_count;

    std::vector<Literal> hyp_literals = st.guard_literals;
    std::vector<std::size_t> hyp_guard(hyp_literals.size());
    for (std::size_t i = 0; i < hyp_guard.size(); ++i) hyp_guard[i] = i;

    if (early_return) {
      Hypothesis guard_only{Clause(hyp_literals), hyp_guard};
      if (rejects_all_negatives(guard_only)) return guard_only;
    }

    std::set<std::string> existentials;
    for (std::size_t idx = 0; idx < probe.size(); ++idx) {
      if (std::find(guard_indices.begin(), guard_indices.end(), idx) != guard_indices.end()) {
        continue;
      }
      const Literal& l = probe.literals()[idx];
      // Fresh existential names continue across the hypothesis so far.
      std::vector<std::string> fresh(existentials.begin(), existentials.end());
      std::size_t fresh_start = fresh.size();
      std::optional<Literal> mapped =
          lgig_map(l, st.ctx, datalog && l.positive, datalog ? &fresh : nullptr);
      if (!mapped) continue;
      if (addable_everywhere(*mapped, st, result.stats)) {
        hyp_literals.push_back(*mapped);
        existentials.insert(fresh.begin() + fresh_start, fresh.end());
      }
    }

    Hypothesis h{Clause(hyp_literals), hyp_guard, existentials};
    if (rejects_all_negatives(h)) return h;
    return std::nullopt;
  }

  // Lexicographic index tuples of size 1..k over the eligible probe
  // literal indices. Visits candidates until visit returns true.
  template <typename Visit>
  void for_each_guard(const std::vector<std::size_t>& eligible, int k, Visit visit) {
    std::vector<std::size_t> prefix;
    bool stop = false;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      for (std::size_t i = start; i < eligible.size() && !stop; ++i) {
        prefix.push_back(eligible[i]);
        if (visit(prefix)) {
          stop = true;
        } else if (static_cast<int>(prefix.size()) < k) {
          self(self, i + 1);
        }
        prefix.pop_back();
      }
    };
    rec(rec, 0);
  }

  std::vector<std::size_t> eligible_guard_indices() const {
    const Clause& probe = examples[0];
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < probe.size(); ++i) {
      if (datalog && probe.literals()[i].positive) continue;
      out.push_back(i);
    }
    return out;
  }
};

Engine prepare(const Instance& instance, bool datalog) {
  if (!instance.positives_straight()) throw Error("positive example not straight");
  if (datalog) {
    for (const Clause& c : instance.positives) {
      std::size_t heads = std::count_if(c.literals().begin(), c.literals().end(),
                                        [](const Literal& l) { return l.positive; });
      if (heads != 1) throw Error("positive example not Horn");
    }
  }
  // Duplicate positives carry no information under set semantics.
  std::vector<Clause> deduped;
  for (const Clause& c : instance.positives) {
    if (std::find(deduped.begin(), deduped.end(), c) == deduped.end()) deduped.push_back(c);
  }
  Engine engine{instance, datalog, {}, {}};
  std::optional<std::vector<Clause>> pruned = prune_relations(deduped);
  if (!pruned) {
    engine.result.cause = InconsistentCause::NoCommonRelation;
    return engine;
  }
  engine.examples = std::move(*pruned);
  if (instance.k > static_cast<int>(engine.examples[0].size())) {
    throw Error("k exceeds probe clause size");
  }
  return engine;
}

LearnResult run_learn(const Instance& instance, bool datalog) {
  Engine engine = prepare(instance, datalog);
  if (engine.result.cause == InconsistentCause::NoCommonRelation) return engine.result;
  engine.for_each_guard(engine.eligible_guard_indices(), instance.k,
                        [&](const std::vector<std::size_t>& guard) {
                          if (auto h = engine.try_guard(guard, /*early_return=*/true)) {
                            engine.result.solution = std::move(h);
                            return true;
                          }
                          return false;
                        });
  if (!engine.result.solution) engine.result.cause = InconsistentCause::SearchExhausted;
  return engine.result;
}

}  // namespace

LearnResult learn(const Instance& instance) {
  if (instance.k != 1) throw Error("learn requires k = 1; use learn_k_guarded");
  if (instance.mode != Mode::Guarded) throw Error("learn requires guarded mode");
  return run_learn(instance, /*datalog=*/false);
}

LearnResult learn_k_guarded(const Instance& instance) {
  if (instance.mode != Mode::Guarded) throw Error("learn_k_guarded requires guarded mode");
  return run_learn(instance, /*datalog=*/false);
}

LearnResult learn_datalog_pm(const Instance& instance) {
  if (instance.mode != Mode::DatalogPm) throw Error("learn_datalog_pm requires datalogpm mode");
  return run_learn(instance, /*datalog=*/true);
}

CanonicalSet enumerate_canonical(const Instance& instance) {
  Engine engine = prepare(instance, instance.mode == Mode::DatalogPm);
  CanonicalSet out;
  if (engine.result.cause == InconsistentCause::NoCommonRelation) return out;
  engine.for_each_guard(engine.eligible_guard_indices(), instance.k,
                        [&](const std::vector<std::size_t>& guard) {
                          if (auto h = engine.try_guard(guard, /*early_return=*/false)) {
                            out.solutions.push_back(std::move(*h));
                          }
                          return false;
                        });
  return out;
}

Hypothesis shrink_solution(const Hypothesis& h, const Instance& instance) {
  if (!h.existential_vars.empty()) {
    throw Error("shrink_solution requires a hypothesis without existential variables");
  }
  for (const Clause& pos : instance.positives) {
    if (!subsumes_hypothesis(h, pos)) throw Error("hypothesis is not a solution (positive)");
  }
  for (const Clause& neg : instance.negatives) {
    if (subsumes_hypothesis(h, neg)) throw Error("hypothesis is not a solution (negative)");
  }

  std::vector<Literal> kept = h.guard_literals();
  std::vector<std::size_t> guard_indices(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) guard_indices[i] = i;

  for (const Clause& neg : instance.negatives) {
    Hypothesis current{Clause(kept), guard_indices};
    if (!subsumes_k_guarded(current, neg)) continue;
    for (const Substitution& theta : guard_anchor_witnesses(current, neg)) {
      // h itself rejects neg, so some literal of h fails under theta.
      const Literal* blocker = nullptr;
      for (const Literal& l : h.clause.literals()) {
        Literal grounded = theta.apply(l);
        if (!grounded.is_ground() || !neg.contains(grounded)) {
          blocker = &l;
          break;
        }
      }
      if (blocker == nullptr) throw Error("no blocking literal; hypothesis subsumes negative");
      if (std::find(kept.begin(), kept.end(), *blocker) == kept.end()) kept.push_back(*blocker);
    }
  }
  return Hypothesis{Clause(std::move(kept)), std::move(guard_indices)};
}

}  // namespace gcm
