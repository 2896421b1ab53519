#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace gcm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

// Thrown when an exhaustive search exceeds its configured ceiling.
struct ResourceCapError : Error {
  using Error::Error;
};

enum class TermKind { Constant, Variable };

/// A constant or variable symbol. Constants and variables live in disjoint
/// namespaces: equal symbols with different kinds are distinct terms.
struct Term {
  TermKind kind;
  std::string symbol;

  static Term constant(std::string s) { return {TermKind::Constant, std::move(s)}; }
  static Term variable(std::string s) { return {TermKind::Variable, std::move(s)}; }

  bool is_variable() const { return kind == TermKind::Variable; }
  bool is_constant() const { return kind == TermKind::Constant; }

  auto operator<=>(const Term&) const = default;
};

/// Relation name together with the polarity of the literal it appears in.
struct SignedRelationName {
  bool positive;
  std::string relation;

  auto operator<=>(const SignedRelationName&) const = default;
};

struct Literal {
  bool positive;
  std::string relation;
  std::vector<Term> args;

  std::size_t arity() const { return args.size(); }
  bool is_ground() const;
  SignedRelationName signed_name() const { return {positive, relation}; }

  auto operator<=>(const Literal&) const = default;
};

struct TermHash {
  std::size_t operator()(const Term& t) const;
};

struct LiteralHash {
  std::size_t operator()(const Literal& l) const;
};

/// A duplicate-free, non-empty set of literals read as their disjunction.
/// Input order of literals is preserved for deterministic iteration;
/// equality is set-based.
class Clause {
 public:
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool contains(const Literal& l) const { return index_.count(l) != 0; }

  /// Distinct variable symbols in first-occurrence order.
  std::vector<std::string> variables() const;

  bool operator==(const Clause& other) const;
  bool operator!=(const Clause& other) const { return !(*this == other); }

 private:
  std::vector<Literal> literals_;
  std::unordered_set<Literal, LiteralHash> index_;
};

/// Variable substitution; identity outside its domain.
class Substitution {
 public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, Term> mapping) : mapping_(std::move(mapping)) {}

  void bind(const std::string& var, Term t) { mapping_[var] = std::move(t); }
  std::optional<Term> lookup(const std::string& var) const;

  Term apply(const Term& t) const;
  Literal apply(const Literal& l) const;

  /// compose(mu, theta): applying the result equals applying theta, then mu.
  static Substitution compose(const Substitution& outer, const Substitution& inner);

  const std::map<std::string, Term>& mapping() const { return mapping_; }

  bool operator==(const Substitution&) const = default;

 private:
  std::map<std::string, Term> mapping_;
};

bool is_ground(const Clause& c);

/// True iff no signed relation name occurs twice in c.
bool is_straight(const Clause& c);

/// Witnessing set of <= k literal indices covering all variables of c, or
/// absent. Smallest witness sets are tried first, in lexicographic index
/// order. Ground clauses yield {0}.
std::optional<std::vector<std::size_t>> is_k_guarded(const Clause& c, int k);

std::set<SignedRelationName> signed_names(const Clause& c);

/// Maps every literal through s; result deduplicated as a set.
Clause apply(const Substitution& s, const Clause& c);

/// A clause plus the indices of its guard literals. Every variable of the
/// clause except the existential ones occurs in the guard literals' args.
struct Hypothesis {
  Clause clause;
  std::vector<std::size_t> guard;
  std::set<std::string> existential_vars;

  Hypothesis(Clause c, std::vector<std::size_t> guard_indices,
             std::set<std::string> existentials = {});

  std::vector<Literal> guard_literals() const;
};

enum class Mode { Guarded, DatalogPm };

/// Positive/negative ground example sets with the guard width k and mode.
/// Construction validates groundness and per-relation arity consistency.
/// Straightness of the positives is a learner precondition, not enforced
/// here: the hitting-string reduction emits non-straight positives that only
/// the brute-force oracle may consume.
struct Instance {
  std::vector<Clause> positives;
  std::vector<Clause> negatives;
  int k = 1;
  Mode mode = Mode::Guarded;

  Instance(std::vector<Clause> pos, std::vector<Clause> neg, int k_width = 1,
           Mode m = Mode::Guarded);

  bool positives_straight() const;

  const std::map<std::string, std::size_t>& arities() const { return arities_; }

 private:
  std::map<std::string, std::size_t> arities_;
};

}  // namespace gcm
