#pragma once

#include <iosfwd>
#include <string>

#include "gcm/learner.hpp"
#include "gcm/model.hpp"
#include "gcm/oracle.hpp"

namespace gcm {

enum class OutputFormat { Text, Json };

struct ParseOptions {
  int k = 1;
  Mode mode = Mode::Guarded;
  // Reject non-straight positive examples at parse time (the learner path).
  // The oracle path accepts non-straight positives, e.g. reduction output.
  bool require_straight = true;
};

/// Parses a clause file: one labeled example per line, '+' positive,
/// '-' negative, literals separated by ';', '~' for negation, lowercase
/// constants, uppercase variables, '#' comments. Example clauses must be
/// ground.
Instance parse_instance(std::istream& in, const ParseOptions& options);

/// Parses a hypothesis: one unlabeled clause line in the same literal
/// grammar, variables allowed. Variables starting with "E_" are existential.
/// The guard is the smallest witnessing literal set for the given k.
Hypothesis parse_hypothesis(std::istream& in, int k);

/// One string per line over {0,1,*}; '#' comments; blank lines ignored.
HittingStringInstance parse_hitting_file(std::istream& in);

std::string render_literal(const Literal& l);
std::string render_clause(const Clause& c);

/// Clause form plus, for Horn hypotheses, rule form "head :- body".
/// Variables are renamed to X,Y,Z when at most three are distinct, else
/// V1..Vn; existential variables render as E_1, E_2, ...
std::string render_hypothesis(const Hypothesis& h);

/// Renames variables as in render_hypothesis; used for canonical comparison.
Hypothesis canonical_rename(const Hypothesis& h);

std::string render_result(const LearnResult& r, OutputFormat format);
std::string render_result(const CanonicalSet& s, OutputFormat format);

/// Serializes an instance back to the clause-file format.
std::string render_instance(const Instance& instance);

}  // namespace gcm
