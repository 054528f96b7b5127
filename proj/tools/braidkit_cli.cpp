#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "braidkit/commutator.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/harness.hpp"
#include "braidkit/io.hpp"
#include "braidkit/matrix2.hpp"
#include "braidkit/representations.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kExitResource = 66;

braidkit::SMode parse_mode(const std::string& mode) {
  if (mode == "linear") return braidkit::SMode::linear;
  if (mode == "cyclic") return braidkit::SMode::cyclic;
  throw CLI::ValidationError("--mode must be 'linear' or 'cyclic'");
}

// lo:hi or a single integer
void parse_range(const std::string& text, int& lo, int& hi) {
  auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, colon));
      hi = std::stoi(text.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw braidkit::ParseError("bad range '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace braidkit;

  CLI::App app{"computational engine for braid-group word algebra and "
               "free-group automorphisms"};
  app.require_subcommand(1);

  int n = 0;
  std::string mode = "cyclic";
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::string format = "json";
  long long max_len = 0;
  std::string n_range = "5:8";
  int samples = 100;
  int threads = 0;
  bool timings = false;
  std::string word_a, word_b, braid_text, free_text;

  if (const char* env = std::getenv("BRAIDKIT_MAX_LEN")) {
    max_len = std::atoll(env);
  }
  if (const char* env = std::getenv("BRAIDKIT_TOL")) {
    tol = std::atof(env);
  }

  auto add_common = [&](CLI::App* cmd, bool needs_n) {
    auto* opt = cmd->add_option("--n", n, "strand count / rank");
    if (needs_n) opt->required();
    cmd->add_option("--max-len", max_len, "word-length guard override");
  };

  auto* nf_cmd = app.add_subcommand("nf", "left-greedy normal form of a word");
  add_common(nf_cmd, true);
  nf_cmd->add_option("word", word_a, "braid word")->required();

  auto* eq_cmd = app.add_subcommand("eq", "decide equality of two words");
  add_common(eq_cmd, true);
  eq_cmd->add_option("lhs", word_a)->required();
  eq_cmd->add_option("rhs", word_b)->required();

  auto* artin_cmd =
      app.add_subcommand("artin", "apply the action of a braid to a free word");
  add_common(artin_cmd, true);
  artin_cmd->add_option("--braid", braid_text, "acting braid word")->required();
  artin_cmd->add_option("--word", free_text, "free word")->required();

  auto* mu_cmd = app.add_subcommand("mu", "underlying permutation of a word");
  add_common(mu_cmd, true);
  mu_cmd->add_option("word", word_a)->required();

  auto* expsum_cmd = app.add_subcommand("expsum", "exponent sum of a word");
  add_common(expsum_cmd, true);
  expsum_cmd->add_option("word", word_a)->required();

  auto* rewrite_cmd = app.add_subcommand(
      "rewrite", "express a zero-exponent word over the difference generators");
  add_common(rewrite_cmd, true);
  rewrite_cmd->add_option("--mode", mode, "index scheme (cyclic)");
  rewrite_cmd->add_option("word", word_a)->required();

  auto* comm_cmd = app.add_subcommand(
      "commutators", "express a zero-exponent word as a commutator product");
  add_common(comm_cmd, true);
  comm_cmd->add_option("word", word_a)->required();

  auto* inner_cmd = app.add_subcommand(
      "inner", "inner-automorphism test for the action of a braid");
  add_common(inner_cmd, true);
  inner_cmd->add_option("word", word_a)->required();

  auto* verify_cmd =
      app.add_subcommand("verify", "run the identity and hypothesis suite");
  verify_cmd->add_option("--n-range", n_range, "strand range lo:hi");
  verify_cmd->add_option("--seed", seed, "deterministic seed");
  verify_cmd->add_option("--samples", samples, "samples per randomized check");
  verify_cmd->add_option("--format", format, "json or text");
  verify_cmd->add_option("--threads", threads, "0 = all, 1 = serial");
  verify_cmd->add_flag("--timings", timings,
                       "include wallclock (breaks byte determinism)");
  verify_cmd->add_option("--tol", tol, "matrix comparison tolerance");
  verify_cmd->add_option("--max-len", max_len, "word-length guard override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (max_len > 0) set_max_word_length(static_cast<std::size_t>(max_len));

    if (nf_cmd->parsed()) {
      std::cout << normal_form(parse_braid(word_a, n)).to_string() << "\n";
    } else if (eq_cmd->parsed()) {
      bool equal = words_equal(parse_braid(word_a, n), parse_braid(word_b, n));
      std::cout << (equal ? "true" : "false") << "\n";
    } else if (artin_cmd->parsed()) {
      FreeEndo phi = artin(parse_braid(braid_text, n));
      FreeWord image = apply_endo(phi, parse_free(free_text, n));
      std::cout << render_letters(image.letters) << "\n";
    } else if (mu_cmd->parsed()) {
      std::cout << mu(parse_braid(word_a, n)).to_string() << "\n";
    } else if (expsum_cmd->parsed()) {
      std::cout << exponent_sum(parse_braid(word_a, n)) << "\n";
    } else if (rewrite_cmd->parsed()) {
      if (parse_mode(mode) != SMode::cyclic)
        throw DomainError("rewriting is defined for the cyclic scheme");
      SWord s = rewrite_in_S(parse_braid(word_a, n));
      std::cout << render_letters(s.letters) << "\n";
    } else if (comm_cmd->parsed()) {
      auto pairs = commutator_expression(parse_braid(word_a, n));
      for (const auto& [a, b] : pairs)
        std::cout << render_letters(a.letters) << " | "
                  << render_letters(b.letters) << "\n";
    } else if (inner_cmd->parsed()) {
      auto witness = is_inner(artin(parse_braid(word_a, n)));
      if (witness)
        std::cout << "inner: " << render_letters(witness->letters) << "\n";
      else
        std::cout << "not-inner\n";
    } else if (verify_cmd->parsed()) {
      SuiteOptions opts;
      parse_range(n_range, opts.n_lo, opts.n_hi);
      opts.seed = seed;
      opts.samples = samples;
      opts.threads = threads;
      opts.timings = timings;
      opts.tol = tol;
      Report report = run_suite(opts);
      if (format == "json")
        std::cout << emit_json(report) << "\n";
      else if (format == "text")
        std::cout << emit_text(report);
      else
        throw DomainError("unknown format '" + format + "'");
      Summary s = report.summary();
      std::cerr << "pass " << s.pass << " fail " << s.fail << " error "
                << s.error << " skip " << s.skip << "\n";
      return report_exit_code(report);
    }
    return 0;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
