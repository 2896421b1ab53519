#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gcm/io.hpp"
#include "gcm/learner.hpp"
#include "gcm/oracle.hpp"
#include "gcm/subsumption.hpp"

namespace {

constexpr int kExitSolution = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitError = 2;

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gcm::Error("cannot open file: " + path);
  return in;
}

struct CommonFlags {
  int k = 1;
  std::string mode = "guarded";
  std::string format = "text";

  void attach(CLI::App* cmd) {
    cmd->add_option("--k", k, "guard width")->check(CLI::PositiveNumber);
    cmd->add_option("--mode", mode, "hypothesis language")
        ->check(CLI::IsMember({"guarded", "datalogpm"}));
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
  }

  gcm::Mode parsed_mode() const {
    return mode == "datalogpm" ? gcm::Mode::DatalogPm : gcm::Mode::Guarded;
  }
  gcm::OutputFormat parsed_format() const {
    return format == "json" ? gcm::OutputFormat::Json : gcm::OutputFormat::Text;
  }
};

int run_learn(const std::string& path, const CommonFlags& flags) {
  auto in = open_or_throw(path);
  gcm::Instance instance =
      gcm::parse_instance(in, {flags.k, flags.parsed_mode(), /*require_straight=*/true});
  gcm::LearnResult result = instance.mode == gcm::Mode::DatalogPm
                                ? gcm::learn_datalog_pm(instance)
                                : gcm::learn_k_guarded(instance);
  std::cout << gcm::render_result(result, flags.parsed_format());
  return result.consistent() ? kExitSolution : kExitInconsistent;
}

int run_enumerate(const std::string& path, const CommonFlags& flags) {
  auto in = open_or_throw(path);
  gcm::Instance instance =
      gcm::parse_instance(in, {flags.k, flags.parsed_mode(), /*require_straight=*/true});
  gcm::CanonicalSet set = gcm::enumerate_canonical(instance);
  std::cout << gcm::render_result(set, flags.parsed_format());
  return set.solutions.empty() ? kExitInconsistent : kExitSolution;
}

int run_check(const std::string& hyp_path, const std::string& inst_path,
              const CommonFlags& flags) {
  auto hin = open_or_throw(hyp_path);
  gcm::Hypothesis h = gcm::parse_hypothesis(hin, flags.k);
  auto in = open_or_throw(inst_path);
  gcm::Instance instance =
      gcm::parse_instance(in, {flags.k, flags.parsed_mode(), /*require_straight=*/false});

  bool ok = true;
  auto verify = [&](const gcm::Clause& c, bool want_subsumed, const char* side, std::size_t i) {
    bool anchored = gcm::subsumes_hypothesis(h, c).has_value();
    if (h.existential_vars.empty()) {
      bool general = gcm::subsumes_general(h.clause, c).has_value();
      if (general != anchored) {
        throw gcm::Error("subsumption checkers disagree; this is a bug");
      }
    }
    if (anchored != want_subsumed) {
      std::cout << (want_subsumed ? "fails to subsume" : "subsumes") << " " << side
                << " example " << (i + 1) << "\n";
      ok = false;
    }
  };
  for (std::size_t i = 0; i < instance.positives.size(); ++i) {
    verify(instance.positives[i], true, "positive", i);
  }
  for (std::size_t i = 0; i < instance.negatives.size(); ++i) {
    verify(instance.negatives[i], false, "negative", i);
  }
  std::cout << (ok ? "solution" : "not a solution") << "\n";
  return ok ? kExitSolution : kExitInconsistent;
}

int run_gen_hitting(const std::string& path) {
  auto in = open_or_throw(path);
  gcm::HittingStringInstance hs = gcm::parse_hitting_file(in);
  std::cout << gcm::render_instance(gcm::gen_hitting_instance(hs));
  return kExitSolution;
}

int run_oracle(const std::string& path, const CommonFlags& flags, std::size_t max_size) {
  auto in = open_or_throw(path);
  gcm::Instance instance =
      gcm::parse_instance(in, {flags.k, flags.parsed_mode(), /*require_straight=*/false});
  gcm::OracleOptions options;
  options.max_hypothesis_size = max_size;
  gcm::LearnResult result;
  result.solution = gcm::oracle_consistency(instance, options);
  if (!result.solution) result.cause = gcm::InconsistentCause::SearchExhausted;
  std::cout << gcm::render_result(result, flags.parsed_format());
  return result.consistent() ? kExitSolution : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Guarded clause mining from positive/negative example clauses"};
  app.require_subcommand(1);

  std::string file;
  std::string hyp_file;
  std::size_t max_size = 0;
  CommonFlags learn_flags, enum_flags, check_flags, oracle_flags;
  gcm::GeneratorParams gen_params;

  CLI::App* learn = app.add_subcommand("learn", "decide consistency and print one solution");
  learn->add_option("file", file, "clause file")->required();
  learn_flags.attach(learn);

  CLI::App* enumerate = app.add_subcommand("enumerate", "print all canonical solutions");
  enumerate->add_option("file", file, "clause file")->required();
  enum_flags.attach(enumerate);

  CLI::App* check = app.add_subcommand("check", "verify a hypothesis against an instance");
  check->add_option("--hypothesis", hyp_file, "hypothesis file")->required();
  check->add_option("file", file, "clause file")->required();
  check_flags.attach(check);

  CLI::App* gen = app.add_subcommand("gen", "instance generators");
  gen->require_subcommand(1);
  CLI::App* hitting = gen->add_subcommand("hitting", "hitting-string reduction instance");
  hitting->add_option("file", file, "strings file, one string over {0,1,*} per line")
      ->required();

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force consistency for small instances");
  oracle->add_option("file", file, "clause file")->required();
  oracle->add_option("--max-size", max_size, "hypothesis size cap (default: k + sum |E-|)");
  oracle_flags.attach(oracle);

  CLI::App* random = app.add_subcommand("random", "emit a seeded random instance");
  random->add_option("--seed", gen_params.seed, "rng seed")->required();
  random->add_option("--relations", gen_params.relation_count, "relation count");
  random->add_option("--max-arity", gen_params.max_arity, "maximum arity");
  random->add_option("--pos", gen_params.clause_count_pos, "positive clause count");
  random->add_option("--neg", gen_params.clause_count_neg, "negative clause count");
  random->add_option("--constants", gen_params.constant_count, "constant pool size");
  random->add_option("--literals", gen_params.literals_per_clause, "max literals per clause");

  CLI11_PARSE(app, argc, argv);

  try {
    if (learn->parsed()) return run_learn(file, learn_flags);
    if (enumerate->parsed()) return run_enumerate(file, enum_flags);
    if (check->parsed()) return run_check(hyp_file, file, check_flags);
    if (gen->parsed()) return run_gen_hitting(file);
    if (oracle->parsed()) return run_oracle(file, oracle_flags, max_size);
    if (random->parsed()) {
      std::cout << gcm::render_instance(gcm::random_instance(gen_params));
      return kExitSolution;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
