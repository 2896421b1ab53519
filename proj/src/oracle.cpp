#include "gcm/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gcm/subsumption.hpp"

namespace gcm {

HittingStringInstance HittingStringInstance::of(std::vector<std::string> strings) {
  HittingStringInstance hs;
  hs.strings = std::move(strings);
  hs.n = hs.strings.empty() ? 0 : hs.strings[0].size();
  for (const std::string& s : hs.strings) {
    if (s.size() != hs.n) throw Error("hitting strings must all have the same length");
    for (char c : s) {
      if (c != '0' && c != '1' && c != '*') throw Error("hitting string alphabet is {0,1,*}");
    }
  }
  return hs;
}

namespace {

struct SearchSpace {
  const Instance& instance;
  const OracleOptions& options;
  std::vector<SignedRelationName> relations;  // common to all positives
  std::size_t size_bound;
  std::uint64_t nodes = 0;

  void tick() {
    if (++nodes > options.node_limit) {
      throw ResourceCapError("oracle enumeration exceeded node limit");
    }
  }

  bool subsumes_all_positives(const Clause& h) {
    for (const Clause& pos : instance.positives) {
      if (!subsumes_general(h, pos)) return false;
    }
    return true;
  }

  bool rejects_all_negatives(const Clause& h) {
    for (const Clause& neg : instance.negatives) {
      if (subsumes_general(h, neg)) return false;
    }
    return true;
  }

  // All candidate literals over the given variables, in deterministic order:
  // relations as sorted, argument tuples lexicographic.
  std::vector<Literal> candidates(const std::vector<std::string>& vars) {
    std::vector<Literal> out;
    for (const SignedRelationName& rel : relations) {
      std::size_t arity = instance.arities().at(rel.relation);
      std::vector<std::size_t> tuple(arity, 0);
      while (true) {
        Literal l{rel.positive, rel.relation, {}};
        for (std::size_t i : tuple) l.args.push_back(Term::variable(vars[i]));
        out.push_back(std::move(l));
        std::size_t pos = arity;
        while (pos > 0 && tuple[pos - 1] + 1 == vars.size()) tuple[--pos] = 0;
        if (pos == 0) break;
        ++tuple[pos - 1];
      }
    }
    return out;
  }

  // Depth-first over candidate subsets in index order; current already
  // subsumes all positives. Returns the first hypothesis rejecting all
  // negatives.
  std::optional<std::vector<Literal>> dfs(std::vector<Literal>& current,
                                          const std::vector<Literal>& cands,
                                          std::size_t start) {
    tick();
    if (rejects_all_negatives(Clause(current))) return current;
    if (current.size() >= size_bound) return std::nullopt;
    for (std::size_t j = start; j < cands.size(); ++j) {
      if (std::find(current.begin(), current.end(), cands[j]) != current.end()) continue;
      current.push_back(cands[j]);
      if (subsumes_all_positives(Clause(current))) {
        if (auto found = dfs(current, cands, j + 1)) return found;
      }
      current.pop_back();
    }
    return std::nullopt;
  }
};

std::vector<SignedRelationName> common_positive_relations(const Instance& instance) {
  std::set<SignedRelationName> common = signed_names(instance.positives[0]);
  for (std::size_t i = 1; i < instance.positives.size(); ++i) {
    std::set<SignedRelationName> names = signed_names(instance.positives[i]);
    std::set<SignedRelationName> inter;
    std::set_intersection(common.begin(), common.end(), names.begin(), names.end(),
                          std::inserter(inter, inter.begin()));
    common = std::move(inter);
  }
  return {common.begin(), common.end()};
}

// Restricted growth strings enumerate set partitions of n positions in
// deterministic order; entry p names the block of position p.
bool next_partition(std::vector<std::size_t>& rgs) {
  std::size_t n = rgs.size();
  for (std::size_t i = n; i-- > 1;) {
    std::size_t max_prefix = *std::max_element(rgs.begin(), rgs.begin() + i);
    if (rgs[i] <= max_prefix) {
      ++rgs[i];
      std::fill(rgs.begin() + i + 1, rgs.end(), 0);
      return true;
    }
  }
  return false;
}

// Multisets of relation indices of size 1..k, non-decreasing, lexicographic.
template <typename Visit>
void for_each_guard_multiset(std::size_t relation_count, int k, Visit visit) {
  std::vector<std::size_t> pick;
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    for (std::size_t i = start; i < relation_count && !stop; ++i) {
      pick.push_back(i);
      if (visit(pick)) {
        stop = true;
      } else if (static_cast<int>(pick.size()) < k) {
        self(self, i);
      }
      pick.pop_back();
    }
  };
  rec(rec, 0);
}

std::size_t default_bound(const Instance& instance, const OracleOptions& options,
                          std::size_t guard_size) {
  if (options.max_hypothesis_size != 0) {
    return std::max(options.max_hypothesis_size, guard_size);
  }
  std::size_t bound = static_cast<std::size_t>(instance.k);
  for (const Clause& neg : instance.negatives) bound += neg.size();
  return std::max(bound, guard_size);
}

}  // namespace

std::optional<Hypothesis> oracle_consistency(const Instance& instance,
                                             const OracleOptions& options) {
  SearchSpace space{instance, options, common_positive_relations(instance), 0};
  if (space.relations.empty()) return std::nullopt;

  std::optional<Hypothesis> found;
  for_each_guard_multiset(
      space.relations.size(), instance.k, [&](const std::vector<std::size_t>& pick) {
        std::size_t merged_arity = 0;
        for (std::size_t i : pick) {
          merged_arity += instance.arities().at(space.relations[i].relation);
        }
        std::vector<std::size_t> rgs(merged_arity, 0);
        do {
          space.tick();
          // Guard literals from the variable equality pattern.
          std::vector<Literal> guard_lits;
          std::vector<std::string> vars;
          std::size_t pos = 0;
          for (std::size_t i : pick) {
            const SignedRelationName& rel = space.relations[i];
            Literal l{rel.positive, rel.relation, {}};
            for (std::size_t a = 0; a < instance.arities().at(rel.relation); ++a, ++pos) {
              std::string v = "x" + std::to_string(rgs[pos] + 1);
              if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
              l.args.push_back(Term::variable(v));
            }
            guard_lits.push_back(std::move(l));
          }
          std::vector<Literal> current = guard_lits;
          // Drop duplicate guard literals (repeated relation, same pattern).
          current.erase(std::unique(current.begin(), current.end()), current.end());
          if (!space.subsumes_all_positives(Clause(current))) continue;

          space.size_bound = default_bound(instance, options, current.size());
          std::vector<Literal> cands = space.candidates(vars);
          if (auto lits = space.dfs(current, cands, 0)) {
            Clause clause(*lits);
            std::vector<std::size_t> guard_indices;
            for (const Literal& g : guard_lits) {
              auto it = std::find(clause.literals().begin(), clause.literals().end(), g);
              std::size_t idx = static_cast<std::size_t>(it - clause.literals().begin());
              if (std::find(guard_indices.begin(), guard_indices.end(), idx) ==
                  guard_indices.end()) {
                guard_indices.push_back(idx);
              }
            }
            found = Hypothesis{std::move(clause), std::move(guard_indices)};
            return true;
          }
        } while (next_partition(rgs));
        return false;
      });
  return found;
}

std::optional<Clause> oracle_consistency_unguarded(const Instance& instance, int var_budget,
                                                   const OracleOptions& options) {
  if (var_budget < 1) throw Error("variable budget must be positive");
  SearchSpace space{instance, options, common_positive_relations(instance), 0};
  if (space.relations.empty()) return std::nullopt;
  std::vector<std::string> vars;
  for (int i = 0; i < var_budget; ++i) vars.push_back("x" + std::to_string(i + 1));
  std::size_t bound = default_bound(instance, options, 1);
  space.size_bound = bound;
  std::vector<Literal> cands = space.candidates(vars);
  for (std::size_t j = 0; j < cands.size(); ++j) {
    std::vector<Literal> current{cands[j]};
    if (!space.subsumes_all_positives(Clause(current))) continue;
    if (auto lits = space.dfs(current, cands, j + 1)) return Clause(*lits);
  }
  return std::nullopt;
}

Instance gen_hitting_instance(const HittingStringInstance& hs) {
  const std::size_t n = hs.n;
  const std::size_t m = hs.strings.size();
  if (n < 1 || m < 1) throw Error("hitting-string reduction requires n >= 1 and m >= 1");

  const Term a = Term::constant("a");
  const Term b = Term::constant("b");
  auto G = [&](const Term& s, const Term& t) { return Literal{true, "G", {s, t}}; };
  auto A = [&](std::size_t j, const Term& t) {
    return Literal{true, "A" + std::to_string(j), {t}};
  };
  auto B = [&](std::size_t j, const Term& t) {
    return Literal{true, "B" + std::to_string(j), {t}};
  };

  std::vector<Clause> positives;
  {
    std::vector<Literal> c0{G(a, b)};
    for (std::size_t j = 1; j <= n; ++j) {
      c0.push_back(A(j, a));
      c0.push_back(B(j, b));
    }
    positives.emplace_back(std::move(c0));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Literal> ci{G(a, b), G(b, a), A(i, a), B(i, a)};
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      ci.push_back(A(j, a));
      ci.push_back(A(j, b));
      ci.push_back(B(j, a));
      ci.push_back(B(j, b));
    }
    positives.emplace_back(std::move(ci));
  }

  std::vector<Clause> negatives;
  {
    std::vector<Literal> d0;
    for (std::size_t j = 1; j <= n; ++j) {
      d0.push_back(A(j, a));
      d0.push_back(A(j, b));
      d0.push_back(B(j, a));
      d0.push_back(B(j, b));
    }
    negatives.emplace_back(std::move(d0));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Literal> di{G(a, b)};
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == i) continue;
      di.push_back(A(j, a));
      di.push_back(B(j, b));
    }
    negatives.emplace_back(std::move(di));
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Literal> ni{G(a, b)};
    for (std::size_t j = 1; j <= n; ++j) {
      char s = hs.strings[i][j - 1];
      if (s == '1') {
        ni.push_back(B(j, b));
      } else if (s == '0') {
        ni.push_back(A(j, a));
      } else {
        ni.push_back(A(j, a));
        ni.push_back(B(j, b));
      }
    }
    negatives.emplace_back(std::move(ni));
  }

  return Instance{std::move(positives), std::move(negatives), 1, Mode::Guarded};
}

std::optional<std::string> brute_force_hitting(const HittingStringInstance& hs,
                                               std::size_t max_n) {
  if (hs.n > max_n) throw ResourceCapError("hitting string length exceeds brute-force cap");
  const std::size_t total = std::size_t{1} << hs.n;
  for (std::size_t bits = 0; bits < total; ++bits) {
    std::string x(hs.n, '0');
    for (std::size_t i = 0; i < hs.n; ++i) {
      if (bits & (std::size_t{1} << (hs.n - 1 - i))) x[i] = '1';
    }
    bool hits_all = true;
    for (const std::string& s : hs.strings) {
      bool agrees = false;
      for (std::size_t i = 0; i < hs.n && !agrees; ++i) {
        agrees = (s[i] == x[i]);
      }
      if (!agrees) {
        hits_all = false;
        break;
      }
    }
    if (hits_all) return x;
  }
  return std::nullopt;
}

Instance random_instance(const GeneratorParams& p) {
  if (p.relation_count < 1 || p.max_arity < 1 || p.clause_count_pos < 1 ||
      p.clause_count_neg < 0 || p.constant_count < 1 || p.literals_per_clause < 1 ||
      p.k < 1) {
    throw Error("generator parameters must be positive");
  }
  std::mt19937_64 rng(p.seed);
  auto uniform = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  std::vector<std::size_t> arities(p.relation_count);
  for (auto& a : arities) a = static_cast<std::size_t>(uniform(1, p.max_arity));
  auto relation = [&](int i) { return "R" + std::to_string(i + 1); };
  auto constant = [&]() { return Term::constant("c" + std::to_string(uniform(1, p.constant_count))); };

  auto random_literal = [&](int rel, bool positive) {
    Literal l{positive, relation(rel), {}};
    for (std::size_t i = 0; i < arities[static_cast<std::size_t>(rel)]; ++i) {
      l.args.push_back(constant());
    }
    return l;
  };

  std::vector<Clause> positives;
  for (int c = 0; c < p.clause_count_pos; ++c) {
    // Straight by construction: sample signed relations without repetition.
    std::vector<std::pair<int, bool>> pool;
    for (int r = 0; r < p.relation_count; ++r) {
      pool.emplace_back(r, true);
      pool.emplace_back(r, false);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    int count = std::min<int>(uniform(1, p.literals_per_clause), static_cast<int>(pool.size()));
    std::vector<Literal> lits;
    for (int i = 0; i < count; ++i) {
      lits.push_back(random_literal(pool[static_cast<std::size_t>(i)].first,
                                    pool[static_cast<std::size_t>(i)].second));
    }
    positives.emplace_back(std::move(lits));
  }

  std::vector<Clause> negatives;
  for (int c = 0; c < p.clause_count_neg; ++c) {
    int count = uniform(1, p.literals_per_clause);
    std::vector<Literal> lits;
    for (int i = 0; i < count; ++i) {
      lits.push_back(random_literal(uniform(0, p.relation_count - 1), uniform(0, 1) == 1));
    }
    negatives.emplace_back(std::move(lits));
  }

  return Instance{std::move(positives), std::move(negatives), p.k, Mode::Guarded};
}

}  // namespace gcm
