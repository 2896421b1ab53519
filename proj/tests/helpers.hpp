#pragma once

#include <gcm/io.hpp>
#include <gcm/model.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace tst {

using namespace gcm;

inline Term C(std::string s) { return Term::constant(std::move(s)); }
inline Term V(std::string s) { return Term::variable(std::move(s)); }

inline Literal L(std::string rel, std::vector<Term> args) {
  return Literal{true, std::move(rel), std::move(args)};
}
inline Literal N(std::string rel, std::vector<Term> args) {
  return Literal{false, std::move(rel), std::move(args)};
}

inline Clause Cl(std::vector<Literal> lits) { return Clause{std::move(lits)}; }

// The running three-person "fan of / talks about" example used throughout the
// tests: two positive ground clauses and one negative ground clause.
inline Instance fan_instance(size_t k = 1) {
  Clause p1 = Cl({N("TalkAbout", {C("a"), C("b"), C("a")}),
                  N("FanOf", {C("a"), C("a")}),
                  N("Influences", {C("a"), C("b")}),
                  L("FanOf", {C("b"), C("a")})});
  Clause p2 = Cl({N("TalkAbout", {C("a"), C("c"), C("d")}),
                  N("FanOf", {C("a"), C("d")}),
                  N("Influences", {C("a"), C("c")}),
                  L("FanOf", {C("c"), C("d")}),
                  L("Parent", {C("c"), C("b")})});
  Clause n1 = Cl({N("TalkAbout", {C("d"), C("b"), C("e")}),
                  N("Influences", {C("d"), C("b")}),
                  L("FanOf", {C("d"), C("e")})});
  return Instance{{p1, p2}, {n1}, static_cast<int>(k)};
}

// The rule that the fan instance is expected to produce:
// FanOf(Y,Z) :- TalkAbout(X,Y,Z), FanOf(X,Z), Influences(X,Y).
inline Clause fan_rule() {
  return Cl({N("TalkAbout", {V("X"), V("Y"), V("Z")}),
             N("FanOf", {V("X"), V("Z")}),
             N("Influences", {V("X"), V("Y")}),
             L("FanOf", {V("Y"), V("Z")})});
}

inline std::set<Literal> lit_set(const Clause& c) {
  return {c.literals().begin(), c.literals().end()};
}

// Variables renamed to V1..Vn in first-occurrence order; literal set equality
// under this renaming is equality up to a consistent variable renaming as long
// as both sides list literals in a comparable order, so tests sort first.
inline Clause rename_first_occurrence(const Clause& c) {
  std::vector<Literal> lits(c.literals());
  std::sort(lits.begin(), lits.end());
  std::map<std::string, std::string> names;
  for (auto& l : lits)
    for (auto& t : l.args)
      if (t.is_variable()) {
        auto it = names.find(t.symbol);
        if (it == names.end())
          it = names.emplace(t.symbol, "V" + std::to_string(names.size() + 1)).first;
        t.symbol = it->second;
      }
  return Clause{lits};
}

inline bool same_up_to_renaming(const Clause& a, const Clause& b) {
  return lit_set(rename_first_occurrence(a)) == lit_set(rename_first_occurrence(b));
}

inline bool subset_up_to_shared_names(const Clause& small, const Clause& big) {
  auto bs = lit_set(big);
  for (const auto& l : small.literals())
    if (!bs.count(l)) return false;
  return true;
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  size_t below(size_t n) {
    return std::uniform_int_distribution<size_t>(0, n - 1)(eng);
  }
  size_t between(size_t lo, size_t hi) {
    return std::uniform_int_distribution<size_t>(lo, hi)(eng);
  }
  bool coin() { return below(2) == 0; }
};

// A random ground clause over relations R1..Rm (arities given) and constants
// c1..cN. Literal polarity is random; duplicates collapse in the Clause.
inline Clause random_ground_clause(Rng& rng, const std::vector<size_t>& arities,
                                   size_t constants, size_t literals) {
  std::vector<Literal> lits;
  for (size_t i = 0; i < literals; ++i) {
    size_t r = rng.below(arities.size());
    std::vector<Term> args;
    for (size_t j = 0; j < arities[r]; ++j)
      args.push_back(C("c" + std::to_string(rng.between(1, constants))));
    lits.push_back(Literal{rng.coin(), "R" + std::to_string(r + 1), args});
  }
  return Clause{lits};
}

// A random k-guarded hypothesis over the same vocabulary: a guard tuple of up
// to k literals whose fresh variables cover everything, plus extra literals
// over those variables.
inline Hypothesis random_hypothesis(Rng& rng, const std::vector<size_t>& arities,
                                    size_t k, size_t extra_literals) {
  size_t guard_count = rng.between(1, k);
  std::vector<Literal> lits;
  std::vector<Term> vars;
  for (size_t g = 0; g < guard_count; ++g) {
    for (int attempt = 0; attempt < 16; ++attempt) {
      size_t r = rng.below(arities.size());
      std::vector<Term> args;
      for (size_t j = 0; j < arities[r]; ++j) {
        // Reuse an existing guard variable sometimes so guards overlap.
        if (!vars.empty() && rng.coin()) {
          args.push_back(vars[rng.below(vars.size())]);
        } else {
          Term v = V("X" + std::to_string(vars.size() + 1));
          vars.push_back(v);
          args.push_back(v);
        }
      }
      Literal l{rng.coin(), "R" + std::to_string(r + 1), args};
      if (std::find(lits.begin(), lits.end(), l) == lits.end()) {
        lits.push_back(l);
        break;
      }
    }
  }
  std::vector<size_t> guard_idx;
  for (size_t g = 0; g < lits.size(); ++g) guard_idx.push_back(g);
  // Recollect variables from the accepted guard literals only; a discarded
  // duplicate draw may have minted a variable no accepted literal uses.
  vars.clear();
  for (const auto& l : lits)
    for (const auto& t : l.args)
      if (t.is_variable() &&
          std::find(vars.begin(), vars.end(), t) == vars.end())
        vars.push_back(t);
  if (vars.empty()) extra_literals = 0;
  for (size_t i = 0; i < extra_literals; ++i) {
    size_t r = rng.below(arities.size());
    std::vector<Term> args;
    for (size_t j = 0; j < arities[r]; ++j)
      args.push_back(vars[rng.below(vars.size())]);
    Literal l{rng.coin(), "R" + std::to_string(r + 1), args};
    if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
  }
  return Hypothesis{Clause{lits}, guard_idx};
}

inline std::vector<size_t> random_arities(Rng& rng, size_t relations,
                                          size_t max_arity) {
  std::vector<size_t> out;
  for (size_t i = 0; i < relations; ++i) out.push_back(rng.between(1, max_arity));
  return out;
}

}  // namespace tst
