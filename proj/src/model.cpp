#include "gcm/model.hpp"

#include <algorithm>

namespace gcm {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

std::size_t TermHash::operator()(const Term& t) const {
  return hash_combine(std::hash<int>()(static_cast<int>(t.kind)),
                      std::hash<std::string>()(t.symbol));
}

std::size_t LiteralHash::operator()(const Literal& l) const {
  std::size_t h = std::hash<bool>()(l.positive);
  h = hash_combine(h, std::hash<std::string>()(l.relation));
  for (const Term& t : l.args) h = hash_combine(h, TermHash()(t));
  return h;
}

bool Literal::is_ground() const {
  return std::all_of(args.begin(), args.end(),
                     [](const Term& t) { return t.is_constant(); });
}

Clause::Clause(std::vector<Literal> literals) {
  for (Literal& l : literals) {
    if (index_.insert(l).second) literals_.push_back(std::move(l));
  }
  if (literals_.empty()) throw Error("empty clause");
}

std::vector<std::string> Clause::variables() const {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (const Literal& l : literals_) {
    for (const Term& t : l.args) {
      if (t.is_variable() && seen.insert(t.symbol).second) out.push_back(t.symbol);
    }
  }
  return out;
}

bool Clause::operator==(const Clause& other) const {
  if (literals_.size() != other.literals_.size()) return false;
  return std::all_of(literals_.begin(), literals_.end(),
                     [&](const Literal& l) { return other.contains(l); });
}

std::optional<Term> Substitution::lookup(const std::string& var) const {
  auto it = mapping_.find(var);
  if (it == mapping_.end()) return std::nullopt;
  return it->second;
}

Term Substitution::apply(const Term& t) const {
  if (t.is_constant()) return t;
  auto it = mapping_.find(t.symbol);
  return it == mapping_.end() ? t : it->second;
}

Literal Substitution::apply(const Literal& l) const {
  Literal out{l.positive, l.relation, {}};
  out.args.reserve(l.args.size());
  for (const Term& t : l.args) out.args.push_back(apply(t));
  return out;
}

Substitution Substitution::compose(const Substitution& outer, const Substitution& inner) {
  std::map<std::string, Term> m;
  for (const auto& [var, t] : inner.mapping_) m.emplace(var, outer.apply(t));
  for (const auto& [var, t] : outer.mapping_) m.emplace(var, t);
  return Substitution(std::move(m));
}

bool is_ground(const Clause& c) {
  return std::all_of(c.literals().begin(), c.literals().end(),
                     [](const Literal& l) { return l.is_ground(); });
}

bool is_straight(const Clause& c) {
  std::set<SignedRelationName> seen;
  for (const Literal& l : c.literals()) {
    if (!seen.insert(l.signed_name()).second) return false;
  }
  return true;
}

namespace {

bool covers_all(const Clause& c, const std::vector<std::size_t>& picks,
                const std::vector<std::string>& vars) {
  std::unordered_set<std::string> covered;
  for (std::size_t idx : picks) {
    for (const Term& t : c.literals()[idx].args) {
      if (t.is_variable()) covered.insert(t.symbol);
    }
  }
  return std::all_of(vars.begin(), vars.end(),
                     [&](const std::string& v) { return covered.count(v) != 0; });
}

bool next_combination(std::vector<std::size_t>& picks, std::size_t n) {
  std::size_t r = picks.size();
  for (std::size_t i = r; i-- > 0;) {
    if (picks[i] + (r - i) < n) {
      ++picks[i];
      for (std::size_t j = i + 1; j < r; ++j) picks[j] = picks[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> is_k_guarded(const Clause& c, int k) {
  if (k < 1) throw Error("k must be positive");
  std::vector<std::string> vars = c.variables();
  if (vars.empty()) return std::vector<std::size_t>{0};
  std::size_t n = c.size();
  std::size_t kk = std::min<std::size_t>(static_cast<std::size_t>(k), n);
  for (std::size_t r = 1; r <= kk; ++r) {
    std::vector<std::size_t> picks(r);
    for (std::size_t i = 0; i < r; ++i) picks[i] = i;
    do {
      if (covers_all(c, picks, vars)) return picks;
    } while (next_combination(picks, n));
  }
  return std::nullopt;
}

std::set<SignedRelationName> signed_names(const Clause& c) {
  std::set<SignedRelationName> out;
  for (const Literal& l : c.literals()) out.insert(l.signed_name());
  return out;
}

Clause apply(const Substitution& s, const Clause& c) {
  std::vector<Literal> lits;
  lits.reserve(c.size());
  for (const Literal& l : c.literals()) lits.push_back(s.apply(l));
  return Clause(std::move(lits));
}

Hypothesis::Hypothesis(Clause c, std::vector<std::size_t> guard_indices,
                       std::set<std::string> existentials)
    : clause(std::move(c)),
      guard(std::move(guard_indices)),
      existential_vars(std::move(existentials)) {
  if (guard.empty()) throw Error("hypothesis needs at least one guard literal");
  std::unordered_set<std::string> covered;
  for (std::size_t idx : guard) {
    if (idx >= clause.size()) throw Error("guard index out of range");
    for (const Term& t : clause.literals()[idx].args) {
      if (t.is_variable()) covered.insert(t.symbol);
    }
  }
  for (const std::string& v : clause.variables()) {
    if (covered.count(v) == 0 && existential_vars.count(v) == 0) {
      throw Error("guard does not cover variable " + v);
    }
  }
  if (!existential_vars.empty()) {
    for (const Literal& l : clause.literals()) {
      if (l.positive) continue;
      for (const Term& t : l.args) {
        if (t.is_variable() && existential_vars.count(t.symbol) != 0) {
          throw Error("existential variable " + t.symbol + " in negative literal");
        }
      }
    }
  }
}

std::vector<Literal> Hypothesis::guard_literals() const {
  std::vector<Literal> out;
  out.reserve(guard.size());
  for (std::size_t idx : guard) out.push_back(clause.literals()[idx]);
  return out;
}

Instance::Instance(std::vector<Clause> pos, std::vector<Clause> neg, int k_width, Mode m)
    : positives(std::move(pos)), negatives(std::move(neg)), k(k_width), mode(m) {
  if (k < 1) throw Error("k must be positive");
  if (positives.empty()) throw Error("instance needs at least one positive example");
  auto check = [&](const std::vector<Clause>& side, const char* name) {
    for (const Clause& c : side) {
      if (!gcm::is_ground(c)) throw Error(std::string("variable in ground ") + name + " example");
      for (const Literal& l : c.literals()) {
        auto [it, inserted] = arities_.emplace(l.relation, l.arity());
        if (!inserted && it->second != l.arity()) {
          throw Error("arity mismatch for relation " + l.relation);
        }
      }
    }
  };
  check(positives, "positive");
  check(negatives, "negative");
}

bool Instance::positives_straight() const {
  return std::all_of(positives.begin(), positives.end(),
                     [](const Clause& c) { return is_straight(c); });
}

}  // namespace gcm
