#include "valiant/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "valiant/bench.hpp"
#include "valiant/grammar.hpp"
#include "valiant/matrix_file.hpp"
#include "valiant/oracles.hpp"

namespace valiant {

namespace {

struct InputOptions {
  std::string grammar;
  std::string input;
  std::string tokens = "chars";
};

void add_input_options(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("--grammar", o.grammar, "CNF grammar file")->required();
  cmd->add_option("--input", o.input, "input string")->required();
  cmd->add_option("--tokens", o.tokens, "tokenization: one token per character, or "
                                        "whitespace-separated tokens")
      ->check(CLI::IsMember({"chars", "whitespace"}));
}

std::vector<std::string> input_tokens(const InputOptions& o) {
  auto tokens = tokenize(o.input, o.tokens == "chars" ? TokenMode::chars
                                                      : TokenMode::whitespace);
  if (tokens.empty()) throw std::invalid_argument("empty input: the empty string is not parsed");
  return tokens;
}

int cmd_recognize(const InputOptions& o, std::ostream& out) {
  const Grammar g = load_grammar_file(o.grammar);
  const bool yes = recognize(g, input_tokens(o));
  out << (yes ? "yes" : "no") << '\n';
  return yes ? kExitOk : kExitNegative;
}

int cmd_parse(const InputOptions& o, bool check, std::ostream& out, std::ostream& err) {
  const Grammar g = load_grammar_file(o.grammar);
  const auto tokens = input_tokens(o);
  const auto tree = parse(g, tokens);
  if (!tree) {
    err << "input not recognized\n";
    return kExitNegative;
  }
  const std::string text = to_sexpr(g, *tree);
  out << text << '\n';
  if (check && !validate_tree(g, tokens, tree_from_sexpr(g, text))) {
    err << "printed tree does not validate\n";
    return kExitInputError;
  }
  return kExitOk;
}

int cmd_closure(const std::string& semiring, const std::string& matrix,
                const std::string& oracle, std::ostream& out) {
  const MatrixFile file = read_matrix_file(matrix);
  if (!semiring.empty() && semiring_from_name(semiring) != file.semiring)
    throw MatrixFileError("--semiring " + semiring + " does not match the file's '" +
                          semiring_name(file.semiring) + "'");
  out << write_matrix_file(close_matrix_file(file, closure_method_from_name(oracle)));
  return kExitOk;
}

int print_report(const LawReport& report, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& r : report.results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.law;
    if (!r.passed) out << "  " << r.counterexample;
    out << '\n';
    passed += r.passed ? 1 : 0;
  }
  out << passed << "/" << report.results.size() << " laws hold\n";
  return report.all_passed() ? kExitOk : kExitNegative;
}

int cmd_check_laws(const std::string& semiring, const std::string& grammar,
                   std::size_t samples, std::uint64_t seed, std::ostream& out) {
  if (samples == 0) throw std::invalid_argument("--samples must be at least 1");
  if (!grammar.empty())
    return print_report(check_laws(GrammarSnr(load_grammar_file(grammar)), samples, seed),
                        out);
  if (semiring_from_name(semiring) == SemiringKind::boolean)
    return print_report(check_laws(BoolSnr{}, samples, seed), out);
  return print_report(check_laws(MinPlusSnr{}, samples, seed), out);
}

int cmd_bench(const std::string& grammar, const std::vector<std::size_t>& sizes,
              std::size_t reps, std::uint64_t seed, std::ostream& out) {
  const Grammar g = load_grammar_file(grammar);
  out << bench_csv(run_bench(g, sizes, reps, seed));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transitive closure of strictly upper-triangular matrices over "
               "semi-near-rings, and CNF recognition/parsing built on it."};
  app.require_subcommand(1);

  InputOptions rec_opts;
  auto* rec = app.add_subcommand("recognize", "decide membership (prints yes/no)");
  add_input_options(rec, rec_opts);

  InputOptions parse_opts;
  bool check = false;
  auto* par = app.add_subcommand("parse", "print one derivation as an S-expression");
  add_input_options(par, parse_opts);
  par->add_flag("--check", check)->group("");  // hidden: re-read and validate output

  std::string semiring, matrix, oracle = "valiant";
  auto* clo = app.add_subcommand("closure", "close a MatrixFile (JSON) and print it");
  clo->add_option("--semiring", semiring, "bool or minplus (defaults to the file's)")
      ->check(CLI::IsMember({"bool", "minplus"}));
  clo->add_option("--matrix", matrix, "MatrixFile path")->required();
  clo->add_option("--oracle", oracle, "algorithm")
      ->check(CLI::IsMember({"valiant", "kleene", "cyk"}));

  std::string law_semiring, law_grammar;
  std::size_t samples = 500;
  std::uint64_t seed = 1;
  auto* laws = app.add_subcommand("check-laws", "sample the semi-near-ring laws");
  auto* ls = laws->add_option("--semiring", law_semiring, "bool or minplus")
                 ->check(CLI::IsMember({"bool", "minplus"}));
  auto* lg = laws->add_option("--grammar", law_grammar, "use the grammar's nonterminal sets");
  ls->excludes(lg);
  laws->add_option("--samples", samples, "number of sampled triples");
  laws->add_option("--seed", seed, "sampling seed");

  std::string bench_grammar;
  std::vector<std::size_t> sizes{64, 128, 256, 512};
  std::size_t reps = 3;
  std::uint64_t bench_seed = 2024;
  auto* ben = app.add_subcommand("bench", "time valiant/cyk/kleene on parenthesis inputs");
  ben->add_option("--grammar", bench_grammar, "grammar over '(' and ')'")->required();
  ben->add_option("--sizes", sizes, "input lengths (even)")->delimiter(',');
  ben->add_option("--reps", reps, "repetitions per size (median reported)");
  ben->add_option("--seed", bench_seed, "input generator seed");

  std::vector<const char*> argv{"valiant"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (rec->parsed()) return cmd_recognize(rec_opts, out);
    if (par->parsed()) return cmd_parse(parse_opts, check, out, err);
    if (clo->parsed()) return cmd_closure(semiring, matrix, oracle, out);
    if (laws->parsed()) {
      if (law_semiring.empty() && law_grammar.empty()) {
        err << "check-laws: one of --semiring or --grammar is required\n";
        return kExitInputError;
      }
      return cmd_check_laws(law_semiring, law_grammar, samples, seed, out);
    }
    if (ben->parsed()) return cmd_bench(bench_grammar, sizes, reps, bench_seed, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace valiant
