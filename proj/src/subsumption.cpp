#include "gcm/subsumption.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace gcm {

namespace {

using Binding = std::unordered_map<std::string, Term>;

// Tries to match phi literal l onto ground literal target under the current
// binding; records newly bound variables in trail.
bool match_literal(const Literal& l, const Literal& target, Binding& binding,
                   std::vector<std::string>& trail) {
  if (l.positive != target.positive || l.relation != target.relation ||
      l.arity() != target.arity()) {
    return false;
  }
  std::size_t trail_start = trail.size();
  for (std::size_t i = 0; i < l.args.size(); ++i) {
    const Term& t = l.args[i];
    const Term& g = target.args[i];
    if (t.is_constant()) {
      if (t != g) {
        for (std::size_t j = trail.size(); j-- > trail_start;) binding.erase(trail[j]);
        trail.resize(trail_start);
        return false;
      }
      continue;
    }
    auto it = binding.find(t.symbol);
    if (it == binding.end()) {
      binding.emplace(t.symbol, g);
      trail.push_back(t.symbol);
    } else if (it->second != g) {
      for (std::size_t j = trail.size(); j-- > trail_start;) binding.erase(trail[j]);
      trail.resize(trail_start);
      return false;
    }
  }
  return true;
}

void unwind(Binding& binding, std::vector<std::string>& trail, std::size_t mark) {
  while (trail.size() > mark) {
    binding.erase(trail.back());
    trail.pop_back();
  }
}

struct GeneralSearch {
  const std::vector<Literal>& phi;
  const std::vector<Literal>& psi;
  std::vector<bool> done;
  Binding binding;
  std::vector<std::string> trail;

  bool matchable(const Literal& l, const Literal& target) {
    std::size_t mark = trail.size();
    if (!match_literal(l, target, binding, trail)) return false;
    unwind(binding, trail, mark);
    return true;
  }

  bool search(std::size_t remaining) {
    if (remaining == 0) return true;
    // Most-constrained literal first.
    std::size_t best = phi.size();
    std::size_t best_count = psi.size() + 1;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (done[i]) continue;
      std::size_t count = 0;
      for (const Literal& target : psi) {
        if (matchable(phi[i], target)) ++count;
      }
      if (count < best_count) {
        best_count = count;
        best = i;
        if (count == 0) return false;
      }
    }
    done[best] = true;
    for (const Literal& target : psi) {
      std::size_t mark = trail.size();
      if (match_literal(phi[best], target, binding, trail)) {
        if (search(remaining - 1)) return true;
        unwind(binding, trail, mark);
      }
    }
    done[best] = false;
    return false;
  }
};

Literal apply_binding(const Binding& binding, const Literal& l) {
  Literal out{l.positive, l.relation, {}};
  out.args.reserve(l.args.size());
  for (const Term& t : l.args) {
    if (t.is_constant()) {
      out.args.push_back(t);
    } else {
      auto it = binding.find(t.symbol);
      out.args.push_back(it == binding.end() ? t : it->second);
    }
  }
  return out;
}

Substitution to_substitution(const Binding& binding) {
  std::map<std::string, Term> m(binding.begin(), binding.end());
  return Substitution(std::move(m));
}

void require_ground(const Clause& psi) {
  if (!is_ground(psi)) throw Error("subsumption target must be ground");
}

// Enumerates consistent guard anchors in psi literal input order;
// calls sink with the binding for each anchor whose full clause lands in
// psi. sink returns true to stop early.
void for_each_witness(const Hypothesis& h, const Clause& psi,
                      const std::function<bool(const Binding&)>& sink) {
  require_ground(psi);
  if (!h.existential_vars.empty()) {
    throw Error("guard-anchored check requires no existential variables");
  }
  const std::vector<Literal> guard = h.guard_literals();
  Binding binding;
  std::vector<std::string> trail;
  std::vector<bool> in_guard(h.clause.size(), false);
  for (std::size_t idx : h.guard) in_guard[idx] = true;

  bool stop = false;
  auto recurse = [&](auto&& self, std::size_t component) -> void {
    if (stop) return;
    if (component == guard.size()) {
      for (std::size_t i = 0; i < h.clause.size(); ++i) {
        if (in_guard[i]) continue;
        Literal mapped = apply_binding(binding, h.clause.literals()[i]);
        if (!mapped.is_ground() || !psi.contains(mapped)) return;
      }
      stop = sink(binding);
      return;
    }
    for (const Literal& target : psi.literals()) {
      std::size_t mark = trail.size();
      if (match_literal(guard[component], target, binding, trail)) {
        self(self, component + 1);
        unwind(binding, trail, mark);
        if (stop) return;
      }
    }
  };
  recurse(recurse, 0);
}

}  // namespace

std::optional<Substitution> subsumes_general(const Clause& phi, const Clause& psi) {
  require_ground(psi);
  GeneralSearch s{phi.literals(), psi.literals(), std::vector<bool>(phi.size(), false), {}, {}};
  if (s.search(phi.size())) return to_substitution(s.binding);
  return std::nullopt;
}

std::optional<Substitution> subsumes_k_guarded(const Hypothesis& h, const Clause& psi) {
  std::optional<Substitution> witness;
  for_each_witness(h, psi, [&](const Binding& binding) {
    witness = to_substitution(binding);
    return true;
  });
  return witness;
}

std::vector<Substitution> guard_anchor_witnesses(const Hypothesis& h, const Clause& psi) {
  std::vector<Substitution> witnesses;
  for_each_witness(h, psi, [&](const Binding& binding) {
    Substitution s = to_substitution(binding);
    if (std::find(witnesses.begin(), witnesses.end(), s) == witnesses.end()) {
      witnesses.push_back(std::move(s));
    }
    return false;
  });
  return witnesses;
}

std::optional<Substitution> subsumes_hypothesis(const Hypothesis& h, const Clause& psi) {
  if (h.existential_vars.empty()) return subsumes_k_guarded(h, psi);
  require_ground(psi);
  // Anchor the guard (covers all non-existential variables), then let the
  // general checker place the residual literals that still carry variables.
  const std::vector<Literal> guard = h.guard_literals();
  Hypothesis guard_only(Clause(guard), [&] {
    std::vector<std::size_t> idx(guard.size());
    for (std::size_t i = 0; i < guard.size(); ++i) idx[i] = i;
    return idx;
  }());
  for (const Substitution& theta : guard_anchor_witnesses(guard_only, psi)) {
    Clause grounded = apply(theta, h.clause);
    if (auto mu = subsumes_general(grounded, psi)) {
      return Substitution::compose(*mu, theta);
    }
  }
  return std::nullopt;
}

}  // namespace gcm
