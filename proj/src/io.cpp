#include "gcm/io.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace gcm {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;
  int line = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(pos + 1) +
                     ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  std::string identifier(const char* what) {
    skip_ws();
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) {
      fail(std::string("expected ") + what);
    }
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    return text.substr(start, pos - start);
  }
};

Term parse_term(Cursor& c) {
  std::string sym = c.identifier("term");
  return std::isupper(static_cast<unsigned char>(sym[0])) ? Term::variable(sym)
                                                          : Term::constant(sym);
}

Literal parse_literal(Cursor& c) {
  c.skip_ws();
  bool negated = c.eat('~');
  std::string rel = c.identifier("relation name");
  c.skip_ws();
  if (!c.eat('(')) c.fail("expected '('");
  std::vector<Term> args{parse_term(c)};
  c.skip_ws();
  while (c.eat(',')) {
    args.push_back(parse_term(c));
    c.skip_ws();
  }
  if (!c.eat(')')) c.fail("expected ')'");
  return Literal{!negated, rel, std::move(args)};
}

Clause parse_clause(Cursor& c) {
  std::vector<Literal> lits{parse_literal(c)};
  c.skip_ws();
  while (c.eat(';')) {
    lits.push_back(parse_literal(c));
    c.skip_ws();
  }
  if (c.pos != c.text.size()) c.fail("trailing input after clause");
  return Clause(std::move(lits));
}

std::string strip_comment(const std::string& line) {
  std::size_t hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

Instance parse_instance(std::istream& in, const ParseOptions& options) {
  std::vector<Clause> positives;
  std::vector<Clause> negatives;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string body = strip_comment(raw);
    if (blank(body)) continue;
    Cursor c{body, 0, line_no};
    c.skip_ws();
    bool positive;
    if (c.eat('+')) {
      positive = true;
    } else if (c.eat('-')) {
      positive = false;
    } else {
      c.fail("expected '+' or '-' example label");
    }
    Clause clause = parse_clause(c);
    if (!gcm::is_ground(clause)) c.fail("variable in ground example");
    if (positive) {
      if (options.require_straight && !is_straight(clause)) {
        c.fail("positive example not straight");
      }
      positives.push_back(std::move(clause));
    } else {
      negatives.push_back(std::move(clause));
    }
  }
  return Instance{std::move(positives), std::move(negatives), options.k, options.mode};
}

Hypothesis parse_hypothesis(std::istream& in, int k) {
  std::optional<Clause> clause;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string body = strip_comment(raw);
    if (blank(body)) continue;
    if (clause) throw ParseError("hypothesis file must contain exactly one clause");
    Cursor c{body, 0, line_no};
    clause = parse_clause(c);
  }
  if (!clause) throw ParseError("hypothesis file is empty");

  std::set<std::string> existentials;
  for (const std::string& v : clause->variables()) {
    if (v.rfind("E_", 0) == 0) existentials.insert(v);
  }

  // Smallest witnessing guard set covering the non-existential variables.
  std::vector<std::string> to_cover;
  for (const std::string& v : clause->variables()) {
    if (existentials.count(v) == 0) to_cover.push_back(v);
  }
  std::vector<std::size_t> guard;
  std::vector<std::size_t> prefix;
  auto covered = [&](const std::vector<std::size_t>& picks) {
    std::set<std::string> vars;
    for (std::size_t idx : picks) {
      for (const Term& t : clause->literals()[idx].args) {
        if (t.is_variable()) vars.insert(t.symbol);
      }
    }
    return std::all_of(to_cover.begin(), to_cover.end(),
                       [&](const std::string& v) { return vars.count(v) != 0; });
  };
  for (int size = 1; size <= k && guard.empty(); ++size) {
    auto rec = [&](auto&& self, std::size_t start, int depth) -> bool {
      if (depth == 0) return covered(prefix);
      for (std::size_t i = start; i < clause->size(); ++i) {
        prefix.push_back(i);
        if (self(self, i + 1, depth - 1)) return true;
        prefix.pop_back();
      }
      return false;
    };
    prefix.clear();
    if (rec(rec, 0, size)) guard = prefix;
  }
  if (guard.empty()) throw ParseError("hypothesis is not k-guarded for k = " + std::to_string(k));
  return Hypothesis{std::move(*clause), std::move(guard), std::move(existentials)};
}

HittingStringInstance parse_hitting_file(std::istream& in) {
  std::vector<std::string> strings;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string body = strip_comment(raw);
    if (blank(body)) continue;
    std::size_t start = body.find_first_not_of(" \t\r");
    std::size_t end = body.find_last_not_of(" \t\r");
    std::string s = body.substr(start, end - start + 1);
    for (char c : s) {
      if (c != '0' && c != '1' && c != '*') {
        throw ParseError("line " + std::to_string(line_no) +
                         ": hitting string alphabet is {0,1,*}");
      }
    }
    strings.push_back(std::move(s));
  }
  return HittingStringInstance::of(std::move(strings));
}

std::string render_literal(const Literal& l) {
  std::string out = l.positive ? "" : "~";
  out += l.relation;
  out += '(';
  for (std::size_t i = 0; i < l.args.size(); ++i) {
    if (i > 0) out += ',';
    out += l.args[i].symbol;
  }
  out += ')';
  return out;
}

std::string render_clause(const Clause& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += " ; ";
    out += render_literal(c.literals()[i]);
  }
  return out;
}

Hypothesis canonical_rename(const Hypothesis& h) {
  std::vector<std::string> universals;
  std::vector<std::string> existentials;
  for (const std::string& v : h.clause.variables()) {
    if (h.existential_vars.count(v) != 0) {
      existentials.push_back(v);
    } else {
      universals.push_back(v);
    }
  }
  Substitution rename;
  static const char* kLetters[] = {"X", "Y", "Z"};
  for (std::size_t i = 0; i < universals.size(); ++i) {
    std::string fresh =
        universals.size() <= 3 ? kLetters[i] : "V" + std::to_string(i + 1);
    rename.bind(universals[i], Term::variable(fresh));
  }
  std::set<std::string> renamed_existentials;
  for (std::size_t i = 0; i < existentials.size(); ++i) {
    std::string fresh = "E_" + std::to_string(i + 1);
    rename.bind(existentials[i], Term::variable(fresh));
    renamed_existentials.insert(fresh);
  }
  return Hypothesis{apply(rename, h.clause), h.guard, std::move(renamed_existentials)};
}

std::string render_hypothesis(const Hypothesis& h) {
  Hypothesis r = canonical_rename(h);
  std::string out = render_clause(r.clause);
  std::vector<const Literal*> heads;
  std::vector<const Literal*> body;
  for (const Literal& l : r.clause.literals()) {
    (l.positive ? heads : body).push_back(&l);
  }
  if (heads.size() == 1 && !body.empty()) {
    out += '\n';
    out += render_literal(*heads[0]);
    out += " :- ";
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (i > 0) out += ", ";
      Literal flipped = *body[i];
      flipped.positive = true;
      out += render_literal(flipped);
    }
  }
  return out;
}

namespace {

nlohmann::ordered_json hypothesis_json(const Hypothesis& h) {
  Hypothesis r = canonical_rename(h);
  nlohmann::ordered_json lits = nlohmann::ordered_json::array();
  for (const Literal& l : r.clause.literals()) {
    nlohmann::ordered_json args = nlohmann::ordered_json::array();
    for (const Term& t : l.args) args.push_back(t.symbol);
    lits.push_back({{"neg", !l.positive}, {"rel", l.relation}, {"args", args}});
  }
  nlohmann::ordered_json out;
  out["literals"] = lits;
  out["guard"] = r.guard;
  out["existential"] = std::vector<std::string>(r.existential_vars.begin(),
                                               r.existential_vars.end());
  return out;
}

}  // namespace

std::string render_result(const LearnResult& r, OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json out;
    out["outcome"] = r.consistent() ? "solution" : "inconsistent";
    out["hypotheses"] = nlohmann::ordered_json::array();
    if (r.solution) out["hypotheses"].push_back(hypothesis_json(*r.solution));
    out["stats"] = {{"guards_tried", r.guard_tried_count},
                    {"subsumption_checks", r.stats.subsumption_checks}};
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  if (r.solution) {
    out << "solution\n" << render_hypothesis(*r.solution) << "\n";
  } else {
    out << "inconsistent";
    if (r.cause == InconsistentCause::NoCommonRelation) out << " (no common signed relation)";
    out << "\n";
  }
  return out.str();
}

std::string render_result(const CanonicalSet& s, OutputFormat format) {
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json out;
    out["outcome"] = s.solutions.empty() ? "inconsistent" : "solution";
    out["hypotheses"] = nlohmann::ordered_json::array();
    for (const Hypothesis& h : s.solutions) out["hypotheses"].push_back(hypothesis_json(h));
    out["stats"] = {{"solutions", s.solutions.size()}};
    return out.dump(2) + "\n";
  }
  std::ostringstream out;
  if (s.solutions.empty()) {
    out << "inconsistent\n";
  } else {
    out << s.solutions.size() << " canonical solution" << (s.solutions.size() == 1 ? "" : "s")
        << "\n";
    for (const Hypothesis& h : s.solutions) out << render_hypothesis(h) << "\n";
  }
  return out.str();
}

std::string render_instance(const Instance& instance) {
  std::ostringstream out;
  for (const Clause& c : instance.positives) out << "+ " << render_clause(c) << "\n";
  for (const Clause& c : instance.negatives) out << "- " << render_clause(c) << "\n";
  return out.str();
}

}  // namespace gcm
