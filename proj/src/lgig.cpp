#include "gcm/lgig.hpp"

#include <algorithm>

namespace gcm {

GuardSpec GuardSpec::of(std::vector<SignedRelationName> comps,
                        const std::map<std::string, std::size_t>& arities) {
  GuardSpec spec;
  spec.components = std::move(comps);
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.components.size(); ++j) {
      if (spec.components[i] == spec.components[j]) {
        throw Error("guard components must be pairwise distinct");
      }
    }
    auto it = arities.find(spec.components[i].relation);
    if (it == arities.end()) throw Error("unknown relation " + spec.components[i].relation);
    spec.component_arities.push_back(it->second);
    spec.merged_arity += it->second;
  }
  if (spec.components.empty()) throw Error("guard must have at least one component");
  return spec;
}

std::vector<Literal> Lgig::guard_literals() const {
  std::vector<Literal> out;
  std::size_t pos = 0;
  for (std::size_t c = 0; c < spec.components.size(); ++c) {
    Literal l{spec.components[c].positive, spec.components[c].relation, {}};
    for (std::size_t i = 0; i < spec.component_arities[c]; ++i) {
      l.args.push_back(Term::variable(vars[pos++]));
    }
    out.push_back(std::move(l));
  }
  return out;
}

const Literal& occurrence(const SignedRelationName& q, const Clause& c) {
  for (const Literal& l : c.literals()) {
    if (l.positive == q.positive && l.relation == q.relation) return l;
  }
  throw Error("signed relation " + q.relation + " absent from clause");
}

std::vector<Term> merged_terms(const GuardSpec& guard, const Clause& c) {
  std::vector<Term> out;
  out.reserve(guard.merged_arity);
  for (const SignedRelationName& comp : guard.components) {
    const Literal& l = occurrence(comp, c);
    out.insert(out.end(), l.args.begin(), l.args.end());
  }
  return out;
}

ShieldSet relative_shield_clause(const GuardSpec& guard, const SignedRelationName& q,
                                 std::size_t i, const Clause& c) {
  const Literal& occ = occurrence(q, c);
  if (i < 1 || i > occ.arity()) throw Error("shield position out of range");
  const Term& t = occ.args[i - 1];
  ShieldSet out;
  std::vector<Term> merged = merged_terms(guard, c);
  for (std::size_t j = 0; j < merged.size(); ++j) {
    if (merged[j] == t) out.positions.insert(j + 1);
  }
  return out;
}

ShieldSet relative_shield(const GuardSpec& guard, const SignedRelationName& q,
                          std::size_t i, const std::vector<Clause>& examples) {
  if (examples.empty()) throw Error("shield requires at least one clause");
  ShieldSet acc = relative_shield_clause(guard, q, i, examples[0]);
  for (std::size_t c = 1; c < examples.size() && !acc.positions.empty(); ++c) {
    ShieldSet next = relative_shield_clause(guard, q, i, examples[c]);
    std::set<std::size_t> merged;
    std::set_intersection(acc.positions.begin(), acc.positions.end(),
                          next.positions.begin(), next.positions.end(),
                          std::inserter(merged, merged.begin()));
    acc.positions = std::move(merged);
  }
  return acc;
}

Lgig compute_lgig(const GuardSpec& guard, const std::vector<Clause>& examples) {
  if (examples.empty()) throw Error("lgig requires at least one inducing clause");
  std::vector<std::vector<Term>> merged;
  merged.reserve(examples.size());
  for (const Clause& c : examples) merged.push_back(merged_terms(guard, c));

  // Positions share a variable iff their terms agree in every clause.
  Lgig g{guard, {}};
  g.vars.resize(guard.merged_arity);
  std::size_t fresh = 0;
  for (std::size_t i = 0; i < guard.merged_arity; ++i) {
    std::size_t share = i;
    for (std::size_t j = 0; j < i; ++j) {
      bool equal_everywhere = true;
      for (const auto& terms : merged) {
        if (terms[i] != terms[j]) {
          equal_everywhere = false;
          break;
        }
      }
      if (equal_everywhere) {
        share = j;
        break;
      }
    }
    g.vars[i] = (share == i) ? "V" + std::to_string(++fresh) : g.vars[share];
  }
  return g;
}

std::optional<Literal> lgig_map(const Literal& l, const Lgig& g,
                                const std::vector<Clause>& examples, bool datalog_fresh,
                                std::vector<std::string>* fresh_vars) {
  Literal out{l.positive, l.relation, {}};
  for (std::size_t i = 1; i <= l.arity(); ++i) {
    ShieldSet shield = relative_shield(g.spec, l.signed_name(), i, examples);
    if (shield.positions.empty()) {
      if (datalog_fresh && l.positive && fresh_vars != nullptr) {
        std::string fresh = "W" + std::to_string(fresh_vars->size() + 1);
        fresh_vars->push_back(fresh);
        out.args.push_back(Term::variable(std::move(fresh)));
        continue;
      }
      return std::nullopt;
    }
    const std::string& var = g.vars[*shield.positions.begin() - 1];
    for (std::size_t j : shield.positions) {
      if (g.vars[j - 1] != var) {
        throw Error("shield positions disagree; guard is not the lgig of the examples");
      }
    }
    out.args.push_back(Term::variable(var));
  }
  return out;
}

GuardContext GuardContext::build(const GuardSpec& guard, const std::vector<Clause>& examples) {
  GuardContext ctx{compute_lgig(guard, examples), {}, {}};
  for (const Clause& c : examples) {
    std::vector<Term> merged = merged_terms(guard, c);
    std::unordered_map<Term, std::vector<std::size_t>, TermHash> index;
    for (std::size_t j = 0; j < merged.size(); ++j) index[merged[j]].push_back(j + 1);
    ctx.term_positions.push_back(std::move(index));

    std::map<SignedRelationName, const Literal*> occ;
    for (const Literal& l : c.literals()) occ.emplace(l.signed_name(), &l);
    ctx.occurrences.push_back(std::move(occ));
  }
  return ctx;
}

std::optional<Literal> lgig_map(const Literal& l, const GuardContext& ctx, bool datalog_fresh,
                                std::vector<std::string>* fresh_vars) {
  const SignedRelationName name = l.signed_name();
  std::vector<const Literal*> occs;
  occs.reserve(ctx.occurrences.size());
  for (const auto& occ : ctx.occurrences) {
    auto it = occ.find(name);
    if (it == occ.end()) throw Error("signed relation " + l.relation + " absent from clause");
    occs.push_back(it->second);
  }

  Literal out{l.positive, l.relation, {}};
  static const std::vector<std::size_t> kEmpty;
  for (std::size_t i = 0; i < l.arity(); ++i) {
    // Intersect the per-clause shields of position i+1.
    auto lookup = [&](std::size_t c) -> const std::vector<std::size_t>& {
      auto it = ctx.term_positions[c].find(occs[c]->args[i]);
      return it == ctx.term_positions[c].end() ? kEmpty : it->second;
    };
    std::vector<std::size_t> shield = lookup(0);
    for (std::size_t c = 1; c < occs.size() && !shield.empty(); ++c) {
      const std::vector<std::size_t>& next = lookup(c);
      std::vector<std::size_t> merged;
      std::set_intersection(shield.begin(), shield.end(), next.begin(), next.end(),
                            std::back_inserter(merged));
      shield = std::move(merged);
    }
    if (shield.empty()) {
      if (datalog_fresh && l.positive && fresh_vars != nullptr) {
        std::string fresh = "W" + std::to_string(fresh_vars->size() + 1);
        fresh_vars->push_back(fresh);
        out.args.push_back(Term::variable(std::move(fresh)));
        continue;
      }
      return std::nullopt;
    }
    const std::string& var = ctx.lgig.vars[shield.front() - 1];
    for (std::size_t j : shield) {
      if (ctx.lgig.vars[j - 1] != var) {
        throw Error("shield positions disagree; guard is not the lgig of the examples");
      }
    }
    out.args.push_back(Term::variable(var));
  }
  return out;
}

Hypothesis specialize_to_lgig(const Hypothesis& h, const std::vector<Clause>& examples) {
  std::vector<Literal> guard = h.guard_literals();
  std::vector<SignedRelationName> comps;
  std::map<std::string, std::size_t> arities;
  for (const Literal& l : guard) {
    comps.push_back(l.signed_name());
    arities[l.relation] = l.arity();
  }
  GuardSpec spec = GuardSpec::of(std::move(comps), arities);
  Lgig g = compute_lgig(spec, examples);

  Substitution theta;
  std::size_t pos = 0;
  for (const Literal& l : guard) {
    for (const Term& t : l.args) {
      if (t.is_constant()) throw Error("guard with constants cannot be specialised");
      Term target = Term::variable(g.vars[pos]);
      if (auto existing = theta.lookup(t.symbol); existing && *existing != target) {
        throw Error("guard variables conflict with lgig equalities");
      }
      theta.bind(t.symbol, target);
      ++pos;
    }
  }

  Clause specialized = apply(theta, h.clause);
  std::vector<Literal> lgig_guard = g.guard_literals();
  std::vector<std::size_t> guard_indices;
  for (const Literal& gl : lgig_guard) {
    auto it = std::find(specialized.literals().begin(), specialized.literals().end(), gl);
    if (it == specialized.literals().end()) throw Error("specialised guard literal lost");
    guard_indices.push_back(static_cast<std::size_t>(it - specialized.literals().begin()));
  }
  return Hypothesis(std::move(specialized), std::move(guard_indices), h.existential_vars);
}

}  // namespace gcm
