// End-to-end acceptance suite: one pass/fail line per criterion, nonzero exit
// when any criterion fails.

#include <gcm/io.hpp>
#include <gcm/learner.hpp>
#include <gcm/model.hpp>
#include <gcm/oracle.hpp>
#include <gcm/subsumption.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace gcm;
using namespace tst;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int number, const std::string& what, bool ok, double seconds) {
  std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number, what.c_str(),
              seconds);
  if (!ok) ++failures;
}

bool is_solution(const Hypothesis& h, const Instance& inst) {
  for (const auto& p : inst.positives)
    if (!subsumes_hypothesis(h, p)) return false;
  for (const auto& n : inst.negatives)
    if (subsumes_hypothesis(h, n)) return false;
  return true;
}

Instance load(const std::string& name, ParseOptions opts) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  if (!in) throw Error("missing data file: " + name);
  return parse_instance(in, opts);
}

GeneratorParams small_params(uint64_t seed) {
  GeneratorParams p;
  p.seed = seed;
  p.relation_count = 1 + int(seed % 3);
  p.max_arity = 1 + int(seed % 2);
  p.clause_count_pos = 1 + int(seed % 3);
  p.clause_count_neg = int(seed % 3);
  p.constant_count = 2 + int(seed % 2);
  p.literals_per_clause = 1 + int(seed % 4);
  return p;
}

// Saved (instance, solution) pairs feeding the shrink and specialization
// criteria below.
std::vector<std::pair<Instance, Hypothesis>> learned_solutions;
std::vector<std::pair<Instance, Hypothesis>> oracle_solutions;

void criterion_1() {
  Timer t;
  bool ok = false;
  Instance fan = fan_instance();
  CanonicalSet s = enumerate_canonical(fan);
  if (s.solutions.size() == 2) {
    bool has_rule = false;
    for (const auto& h : s.solutions) {
      if (same_up_to_renaming(h.clause, fan_rule())) has_rule = true;
      learned_solutions.emplace_back(fan, h);
    }
    ok = has_rule;
  }
  double secs = t.seconds();
  report(1, "social-network instance has exactly two canonical solutions incl. the rule",
         ok && secs < 1.0, secs);
}

void criterion_2() {
  Timer t;
  size_t total = 0, agree = 0;
  for (uint64_t seed = 1; seed <= 1000; ++seed) {
    Instance inst = random_instance(small_params(seed));
    LearnResult fast = learn(inst);
    auto slow = oracle_consistency(inst);
    ++total;
    bool same = fast.consistent() == slow.has_value();
    if (same && fast.consistent()) {
      same = is_solution(*fast.solution, inst) && is_solution(*slow, inst);
      learned_solutions.emplace_back(inst, *fast.solution);
      oracle_solutions.emplace_back(inst, *slow);
    }
    if (same) ++agree;
  }
  double secs = t.seconds();
  std::ostringstream what;
  what << "learner agrees with the exhaustive oracle on " << agree << "/" << total
       << " random instances";
  report(2, what.str(), total >= 1000 && agree == total && secs < 300.0, secs);
}

void criterion_3() {
  Timer t;
  size_t total = 0, agree = 0;
  std::mt19937_64 eng(424242);
  for (int it = 0; it < 500; ++it) {
    size_t n = 1 + it % 4;
    size_t m = 1 + (it / 4) % 4;
    std::vector<std::string> strings;
    for (size_t i = 0; i < m; ++i) {
      std::string s;
      for (size_t j = 0; j < n; ++j) s += "01*"[eng() % 3];
      strings.push_back(s);
    }
    auto hs = HittingStringInstance::of(strings);
    Instance inst = gen_hitting_instance(hs);
    auto sol = oracle_consistency(inst);
    auto direct = brute_force_hitting(hs);
    ++total;
    bool same = sol.has_value() == direct.has_value();
    if (same && sol) {
      same = is_solution(*sol, inst);
      oracle_solutions.emplace_back(inst, *sol);
      learned_solutions.emplace_back(inst, *sol);
    }
    if (same) ++agree;
  }
  double secs = t.seconds();
  std::ostringstream what;
  what << "reduction instances solvable iff a hitting string exists, " << agree << "/" << total;
  report(3, what.str(), total >= 500 && agree == total && secs < 600.0, secs);
}

void criterion_4() {
  Timer t;
  Rng rng(9001);
  size_t total = 0, agree = 0;
  while (total < 5000) {
    auto arities = random_arities(rng, rng.between(1, 3), rng.between(1, 3));
    size_t k = rng.between(1, 2);
    Hypothesis h = random_hypothesis(rng, arities, k, rng.between(0, 3));
    Clause psi = random_ground_clause(rng, arities, rng.between(1, 3), rng.between(1, 6));
    ++total;
    if (subsumes_k_guarded(h, psi).has_value() == subsumes_general(h.clause, psi).has_value())
      ++agree;
  }
  double secs = t.seconds();
  std::ostringstream what;
  what << "guard-anchored subsumption matches the general checker on " << agree << "/" << total
       << " random pairs";
  report(4, what.str(), agree == total, secs);
}

void criterion_5() {
  Timer t;
  size_t total = 0, good = 0;
  for (const auto& [inst, sol] : learned_solutions) {
    ++total;
    Hypothesis shrunk = shrink_solution(sol, inst);
    size_t bound = static_cast<size_t>(inst.k);
    for (const auto& n : inst.negatives) bound += n.size();
    if (is_solution(shrunk, inst) && shrunk.clause.size() <= bound) ++good;
  }
  double secs = t.seconds();
  std::ostringstream what;
  what << "shrunk solutions stay correct within the size bound, " << good << "/" << total;
  report(5, what.str(), total > 0 && good == total, secs);
}

void criterion_6() {
  Timer t;
  // Top up with further random instances if the agreement run produced fewer
  // than 200 consistent straight instances.
  for (uint64_t seed = 20001; oracle_solutions.size() < 400 && seed < 22000; ++seed) {
    Instance inst = random_instance(small_params(seed));
    if (auto sol = oracle_consistency(inst)) oracle_solutions.emplace_back(inst, *sol);
  }
  size_t total = 0, good = 0;
  for (const auto& [inst, sol] : oracle_solutions) {
    if (!inst.positives_straight()) continue;  // reduction instances excluded
    if (total >= 200) break;
    ++total;
    Hypothesis spec = specialize_to_lgig(sol, inst.positives);
    bool ok = is_solution(spec, inst);
    if (ok) {
      CanonicalSet canon = enumerate_canonical(inst);
      bool contained = false;
      for (const auto& c : canon.solutions)
        if (c.guard_literals()[0].signed_name() == spec.guard_literals()[0].signed_name() &&
            subset_up_to_shared_names(spec.clause, c.clause))
          contained = true;
      ok = contained;
    }
    if (ok) ++good;
  }
  double secs = t.seconds();
  std::ostringstream what;
  what << "lgig-specialised oracle solutions stay correct and embed in a canonical solution, "
       << good << "/" << total;
  report(6, what.str(), total >= 200 && good == total, secs);
}

void criterion_7() {
  Timer t;
  ParseOptions o1;
  o1.k = 1;
  Instance k1 = load("transitive.clauses", o1);
  ParseOptions o2;
  o2.k = 2;
  Instance k2 = load("transitive.clauses", o2);
  bool ok = !learn_k_guarded(k1).consistent();
  LearnResult r = learn_k_guarded(k2);
  Clause tc = Cl({N("T", {V("X"), V("Y")}), N("R", {V("Y"), V("Z")}),
                  L("T", {V("X"), V("Z")})});
  ok = ok && r.consistent() && same_up_to_renaming(r.solution->clause, tc);
  report(7, "transitivity needs guard width 2 and yields exactly the chain rule", ok,
         t.seconds());
}

void criterion_8() {
  Timer t;
  std::vector<std::pair<size_t, size_t>> sizes = {
      {10, 100}, {22, 215}, {46, 464}, {100, 1000}};
  std::vector<double> xs, ys;
  double largest_secs = 0;
  bool ran_ok = true;
  for (auto [relations, clauses] : sizes) {
    std::mt19937_64 eng(relations * 1315423911ull);
    std::vector<Clause> positives;
    for (size_t c = 0; c + 1 < clauses; ++c) {
      std::vector<Literal> lits;
      for (size_t r = 0; r < relations; ++r) {
        std::vector<Term> args;
        for (int j = 0; j < 5; ++j)
          args.push_back(Term::constant("c" + std::to_string(eng() % (relations / 2 + 5))));
        lits.push_back(Literal{true, "R" + std::to_string(r + 1), args});
      }
      positives.push_back(Clause{lits});
    }
    // The first positive doubles as a negative example: no hypothesis can
    // separate them, so the learner exhausts every guard and every addition.
    Instance inst{positives, {positives.front()}, 1};
    Timer inner;
    LearnResult r = learn(inst);
    double secs = inner.seconds();
    largest_secs = secs;
    if (r.consistent()) ran_ok = false;
    xs.push_back(std::log(double(relations) * double(clauses)));
    ys.push_back(std::log(double(r.stats.subsumption_checks + 1)));
  }
  double n = double(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  double secs = t.seconds();
  std::ostringstream what;
  what << "scaling fit: work grows with log-log slope " << std::round(slope * 100) / 100
       << ", largest run " << std::round(largest_secs * 100) / 100 << "s";
  report(8, what.str(), ran_ok && slope <= 3.5 && largest_secs < 30.0, secs);
}

void criterion_9() {
  Timer t;
  ParseOptions o;
  o.mode = Mode::DatalogPm;
  Instance inst = load("ancestor.clauses", o);
  CanonicalSet s = enumerate_canonical(inst);
  bool ok = s.solutions.size() == 1;
  if (ok) {
    Hypothesis canon = canonical_rename(s.solutions[0]);
    Clause expected = Cl({N("Person", {V("X")}), L("Ancestor", {V("E_1"), V("X")})});
    ok = lit_set(canon.clause) == lit_set(expected) &&
         canon.existential_vars == std::set<std::string>{"E_1"} && is_solution(canon, inst);
  }
  report(9, "existential ancestor rule recovered exactly up to renaming", ok, t.seconds());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures == 0) {
    std::printf("all 9 criteria passed\n");
  } else {
    std::printf("%d criteria failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
