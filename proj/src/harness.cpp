#include "braidkit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

#include "braidkit/commutator.hpp"
#include "braidkit/garside.hpp"
#include "braidkit/io.hpp"
#include "braidkit/matrix2.hpp"
#include "braidkit/representations.hpp"
#include "braidkit/sampling.hpp"

namespace braidkit {

namespace {

struct Outcome {
  bool pass = false;
  std::string witness;
};

struct CheckSpec {
  std::string id;
  std::string variant;
  std::vector<std::pair<std::string, long long>> params;
  std::string skip_reason;  // nonempty: recorded as a skip, not run
  std::function<Outcome()> run;
};

using Specs = std::vector<CheckSpec>;

BraidWord cyclic_word(int n, long long i) {
  return cyclic_generator(n, cyclic_index(i, n));
}

BraidWord cyclic_s(int n, long long i) {
  return s_letter(cyclic_index(i, n), n, SMode::cyclic);
}

// ---- catalog ------------------------------------------------------------

void add_c1(Specs& specs, const SuiteOptions& opts, int n) {
  for (int i = 1; i + 1 <= n - 1; ++i) {
    specs.push_back({"C1-homomorphy",
                     "braid-relation",
                     {{"n", n}, {"i", i}},
                     "",
                     [n, i] {
                       BraidWord lhs = make_braid_word(n, {i, i + 1, i});
                       BraidWord rhs = make_braid_word(n, {i + 1, i, i + 1});
                       return Outcome{endo_equal(artin(lhs), artin(rhs)), ""};
                     }});
  }
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 2; j <= n - 1; ++j) {
      specs.push_back({"C1-homomorphy",
                       "far-commutation",
                       {{"n", n}, {"i", i}, {"j", j}},
                       "",
                       [n, i, j] {
                         BraidWord lhs = make_braid_word(n, {i, j});
                         BraidWord rhs = make_braid_word(n, {j, i});
                         return Outcome{endo_equal(artin(lhs), artin(rhs)), ""};
                       }});
    }
  }
  std::uint64_t seed = opts.seed;
  for (int s = 0; s < opts.samples; ++s) {
    specs.push_back(
        {"C1-homomorphy",
         "product-sample",
         {{"n", n}, {"sample", s}},
         "",
         [n, s, seed] {
           SplitMix64 rng(derive_seed(seed, "C1-homomorphy/product-sample",
                                      static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(s)));
           BraidWord u = random_braid_word(rng, n, 12);
           BraidWord v = random_braid_word(rng, n, 12);
           bool ok = endo_equal(artin(concat(u, v)),
                                compose(artin(u), artin(v)));
           return Outcome{ok, ""};
         }});
  }
}

void add_c2_to_c5(Specs& specs, const SuiteOptions&, int n) {
  if (n < 5) {
    for (const char* id : {"C2-eq1", "C3-normality", "C4-commutator", "C5-chain"})
      specs.push_back({id, "", {{"n", n}}, "needs n >= 5", {}});
    return;
  }
  for (int i = 1; i <= n; ++i) {
    specs.push_back({"C2-eq1",
                     "",
                     {{"n", n}, {"i", i}},
                     "",
                     [n, i] {
                       BraidWord g = concat(concat(cyclic_word(n, i),
                                                   cyclic_word(n, i + 1)),
                                            cyclic_word(n, i + 2));
                       bool ok = verify_conjugation(g, cyclic_s(n, i),
                                                    cyclic_s(n, i + 1));
                       return Outcome{ok, ""};
                     }});
    for (int j = 1; j <= n; ++j) {
      specs.push_back(
          {"C3-normality",
           "",
           {{"n", n}, {"i", i}, {"j", j}},
           "",
           [n, i, j] {
             BraidWord diff =
                 concat(cyclic_word(n, j), invert(cyclic_word(n, i + 3)));
             BraidWord lhs = conjugate(cyclic_s(n, i), cyclic_word(n, j));
             BraidWord rhs = conjugate(cyclic_s(n, i), diff);
             return Outcome{words_equal(lhs, rhs), ""};
           }});
    }
    specs.push_back({"C4-commutator",
                     "",
                     {{"n", n}, {"i", i}},
                     "",
                     [n, i] {
                       auto [a, b] = perfectness_witness(i, n, SMode::cyclic);
                       if (exponent_sum(a) != 0 || exponent_sum(b) != 0)
                         return Outcome{false, "nonzero exponent sum"};
                       BraidWord comm = concat(concat(a, b),
                                               concat(invert(a), invert(b)));
                       return Outcome{words_equal(comm, cyclic_s(n, i)), ""};
                     }});
    specs.push_back({"C5-chain",
                     "",
                     {{"n", n}, {"i", i}},
                     "",
                     [n, i] {
                       BraidWord g = conjugacy_chain_witness(i, n);
                       if (exponent_sum(g) != 0)
                         return Outcome{false, "nonzero exponent sum"};
                       bool ok = verify_conjugation(g, cyclic_s(n, i),
                                                    cyclic_s(n, i + 1));
                       return Outcome{ok, render_letters(g.letters)};
                     }});
  }
}

void add_c6(Specs& specs, int n) {
  specs.push_back({"C6-center",
                   "",
                   {{"n", n}},
                   "",
                   [n] {
                     FreeEndo phi = artin(full_twist(n));
                     if (!endo_equal(phi, conj_endo(boundary_word(n))))
                       return Outcome{false, "not the boundary conjugation"};
                     auto r = center_power_detect(phi);
                     return Outcome{r.has_value() && *r == 1, "r=1"};
                   }});
}

void add_c7(Specs& specs, const SuiteOptions& opts, int n) {
  std::uint64_t seed = opts.seed;
  for (int s = 0; s < opts.samples; ++s) {
    specs.push_back(
        {"C7-artin-image",
         "",
         {{"n", n}, {"sample", s}},
         "",
         [n, s, seed] {
           SplitMix64 rng(derive_seed(seed, "C7-artin-image/",
                                      static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(s)));
           BraidWord b = random_braid_word(rng, n, 16);
           auto cert = artin_conditions(artin(b));
           if (!cert) return Outcome{false, "no certificate"};
           return Outcome{cert->tau == mu(b), ""};
         }});
  }
}

void add_c8(Specs& specs, const SuiteOptions& opts, int n) {
  if (n < 3 || n > 7) {
    specs.push_back({"C8-cross-oracle", "", {{"n", n}},
                     "cross-oracle range is 3..7", {}});
    return;
  }
  std::uint64_t seed = opts.seed;
  for (int s = 0; s < opts.samples; ++s) {
    specs.push_back(
        {"C8-cross-oracle",
         "",
         {{"n", n}, {"sample", s}},
         "",
         [n, s, seed] {
           SplitMix64 rng(derive_seed(seed, "C8-cross-oracle/",
                                      static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(s)));
           BraidWord u = random_braid_word(rng, n, 24);
           BraidWord v;
           int kind = static_cast<int>(rng.below(3));
           if (kind == 0) {
             v = insert_random_relator(rng, u);
             v = insert_random_relator(rng, v);
           } else if (kind == 1) {
             v = concat(u, random_braid_word(rng, n, 2));
           } else {
             v = random_braid_word(rng, n, 24);
           }
           bool garside = words_equal(u, v);
           bool action = artin_equal(u, v);
           if (garside != action) return Outcome{false, "oracle disagreement"};
           if (kind == 0 && !garside)
             return Outcome{false, "relator insertion changed the element"};
           return Outcome{true, ""};
         }});
  }
}

void add_c9_c10(Specs& specs, const SuiteOptions& opts) {
  specs.push_back({"C9-b4b3", "", {}, "", [] {
                     return Outcome{check_homomorphism_b4_b3(), ""};
                   }});
  double tol = opts.tol;
  specs.push_back({"C10-b3sl2",
                   "",
                   {},
                   "",
                   [tol] {
                     std::vector<Mat2> images = sl2_triple_images();
                     if (!check_braid_relations(images, tol))
                       return Outcome{false, "braid relation broken"};
                     if (image_abelian(images))
                       return Outcome{false, "image unexpectedly abelian"};
                     double norm = commutator_norm(images);
                     return Outcome{norm >= 1.0,
                                    "commutator norm " + std::to_string(norm)};
                   }});
}

void add_c11(Specs& specs, int n) {
  if (n >= 5 && n <= 8) {
    specs.push_back({"C11-hypotheses",
                     "cyclic-sigma-k2",
                     {{"n", n}, {"k", 2}},
                     "",
                     [n] {
                       std::vector<BraidWord> taus = cyclic_generators(n);
                       std::vector<BraidWord> wits(n, delta(n));
                       auto rep = cyclic_family_hypotheses(taus, 2, wits);
                       return Outcome{rep.passes(), ""};
                     }});
  }
  if (n >= 7 && n <= 9) {
    specs.push_back({"C11-hypotheses",
                     "cyclic-s-k3",
                     {{"n", n}, {"k", 3}},
                     "",
                     [n] {
                       std::vector<BraidWord> taus, wits;
                       for (int i = 1; i <= n; ++i) {
                         taus.push_back(s_letter(i, n, SMode::cyclic));
                         wits.push_back(conjugacy_chain_witness(i, n));
                       }
                       auto rep = cyclic_family_hypotheses(taus, 3, wits);
                       return Outcome{rep.passes(), ""};
                     }});
  }
}

void add_c11_threshold(Specs& specs) {
  specs.push_back({"C11-hypotheses",
                   "threshold-fail",
                   {{"n", 4}, {"k", 2}},
                   "",
                   [] {
                     std::vector<BraidWord> taus = cyclic_generators(4);
                     std::vector<BraidWord> wits(4, delta(4));
                     auto rep = cyclic_family_hypotheses(taus, 2, wits);
                     bool ok = !rep.passes() && !rep.threshold_ok;
                     return Outcome{ok, "4 < 2k+1"};
                   }});
}

void add_c12(Specs& specs, int n) {
  if (n < 3) {
    specs.push_back({"C12-stabilizer", "", {{"n", n}},
                     "no proper sub-family below 3 strands", {}});
    return;
  }
  if (n >= 3) {
    specs.push_back({"C12-stabilizer",
                     "subgroup-fixes-new-point",
                     {{"n", n}},
                     "",
                     [n] {
                       std::vector<BraidWord> gens;
                       for (int i = 1; i <= n - 2; ++i)
                         gens.push_back(generator(n, i));
                       return Outcome{stabilizer_check(gens, n), ""};
                     }});
    specs.push_back({"C12-stabilizer",
                     "moving-generator",
                     {{"n", n}},
                     "",
                     [n] {
                       std::vector<BraidWord> gens = {generator(n, n - 1)};
                       return Outcome{!stabilizer_check(gens, n), ""};
                     }});
  }
  if (n >= 6 && n % 2 == 0) {
    int g = (n - 2) / 2;
    specs.push_back({"C12-stabilizer",
                     "global-fixed-point",
                     {{"n", n}, {"g", g}},
                     "",
                     [n, g] {
                       std::vector<BraidWord> gens;
                       for (int i = 1; i <= 2 * g; ++i)
                         gens.push_back(generator(n, i));
                       return Outcome{stabilizer_check(gens, 2 * g + 2), ""};
                     }});
  }
}

void add_c13(Specs& specs, const SuiteOptions& opts, int n) {
  if (n < 5 || n > 8) {
    specs.push_back({"C13-rewrite", "", {{"n", n}},
                     "rewrite range is 5..8", {}});
    return;
  }
  std::uint64_t seed = opts.seed;
  for (int s = 0; s < opts.samples; ++s) {
    bool with_commutators = (s % 4 == 0);
    specs.push_back(
        {"C13-rewrite",
         with_commutators ? "with-commutators" : "rewrite-only",
         {{"n", n}, {"sample", s}},
         "",
         [n, s, seed, with_commutators] {
           SplitMix64 rng(derive_seed(seed, "C13-rewrite/",
                                      static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(s)));
           BraidWord w = random_zero_exponent_word(rng, n, 16);
           SWord sw = rewrite_in_S(w, false);
           if (!words_equal(eval_sword(sw), w))
             return Outcome{false, "rewrite round trip failed"};
           if (with_commutators) {
             auto pairs = commutator_expression(w, false);
             BraidWord prod{n, {}};
             for (const auto& [a, b] : pairs)
               prod = concat(prod,
                             concat(concat(a, b), concat(invert(a), invert(b))));
             if (!words_equal(prod, w))
               return Outcome{false, "commutator product differs"};
           }
           return Outcome{true,
                          "s-length " + std::to_string(sw.letters.size())};
         }});
  }
}

void add_c14(Specs& specs, const SuiteOptions& opts, int n) {
  if (n < 3 || n > 6) {
    specs.push_back({"C14-faithful", "", {{"n", n}},
                     "faithfulness range is 3..6", {}});
    return;
  }
  std::uint64_t seed = opts.seed;
  for (int s = 0; s < opts.samples; ++s) {
    specs.push_back(
        {"C14-faithful",
         "",
         {{"n", n}, {"sample", s}},
         "",
         [n, s, seed] {
           SplitMix64 rng(derive_seed(seed, "C14-faithful/",
                                      static_cast<std::uint64_t>(n),
                                      static_cast<std::uint64_t>(s)));
           for (int attempt = 0; attempt < 100; ++attempt) {
             BraidWord b = random_braid_word(rng, n, 20);
             if (is_trivial(b)) continue;
             return Outcome{!is_identity_endo(artin(b)), ""};
           }
           return Outcome{false, "no nontrivial sample found"};
         }});
  }
}

// ---- execution ----------------------------------------------------------

CheckResult run_one(const CheckSpec& spec, bool timings) {
  CheckResult result;
  result.id = spec.id;
  result.variant = spec.variant;
  result.params = spec.params;
  if (!spec.skip_reason.empty()) {
    result.status = CheckStatus::skip;
    result.witness = spec.skip_reason;
    return result;
  }
  auto start = std::chrono::steady_clock::now();
  try {
    Outcome outcome = spec.run();
    result.status = outcome.pass ? CheckStatus::pass : CheckStatus::fail;
    result.witness = outcome.witness;
  } catch (const std::exception& e) {
    result.status = CheckStatus::error;
    result.witness = e.what();
  }
  if (timings) {
    auto stop = std::chrono::steady_clock::now();
    result.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    stop - start)
                    .count();
  }
  return result;
}

bool result_less(const CheckResult& x, const CheckResult& y) {
  if (x.id != y.id) return x.id < y.id;
  if (x.variant != y.variant) return x.variant < y.variant;
  return x.params < y.params;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
    case CheckStatus::skip: return "skip";
  }
  return "error";
}

}  // namespace

Summary Report::summary() const {
  Summary s;
  for (const CheckResult& r : results) {
    switch (r.status) {
      case CheckStatus::pass: ++s.pass; break;
      case CheckStatus::fail: ++s.fail; break;
      case CheckStatus::error: ++s.error; break;
      case CheckStatus::skip: ++s.skip; break;
    }
  }
  return s;
}

Report run_suite(const SuiteOptions& opts) {
  if (opts.n_lo < 2 || opts.n_hi > 12 || opts.n_lo > opts.n_hi)
    throw DomainError("strand range must lie within [2, 12]");
  if (opts.samples < 1) throw DomainError("sample count must be positive");

  Specs specs;
  for (int n = opts.n_lo; n <= opts.n_hi; ++n) {
    add_c1(specs, opts, n);
    add_c2_to_c5(specs, opts, n);
    add_c6(specs, n);
    add_c7(specs, opts, n);
    add_c8(specs, opts, n);
    add_c11(specs, n);
    add_c12(specs, n);
    add_c13(specs, opts, n);
    add_c14(specs, opts, n);
  }
  add_c9_c10(specs, opts);
  add_c11_threshold(specs);

  Report report;
  report.version = kSuiteVersion;
  report.seed = opts.seed;
  report.results.resize(specs.size());

  long long count = static_cast<long long>(specs.size());
#ifdef _OPENMP
  int threads = opts.threads > 0 ? opts.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < count; ++i)
    report.results[i] = run_one(specs[i], opts.timings);
#else
  for (long long i = 0; i < count; ++i)
    report.results[i] = run_one(specs[i], opts.timings);
#endif

  std::sort(report.results.begin(), report.results.end(), result_less);
  return report;
}

std::string emit_json(const Report& report) {
  nlohmann::json doc;
  doc["version"] = report.version;
  doc["seed"] = report.seed;
  doc["results"] = nlohmann::json::array();
  for (const CheckResult& r : report.results) {
    nlohmann::json entry;
    entry["id"] = r.id;
    nlohmann::json params = nlohmann::json::object();
    if (!r.variant.empty()) params["variant"] = r.variant;
    for (const auto& [key, value] : r.params) params[key] = value;
    entry["params"] = params;
    entry["status"] = status_name(r.status);
    entry["witness"] = r.witness;
    entry["ms"] = r.ms;
    doc["results"].push_back(entry);
  }
  Summary s = report.summary();
  doc["summary"] = {{"pass", s.pass},
                    {"fail", s.fail},
                    {"error", s.error},
                    {"skip", s.skip}};
  return doc.dump();
}

std::string emit_text(const Report& report) {
  std::string out;
  for (const CheckResult& r : report.results) {
    std::string params;
    if (!r.variant.empty()) params += "variant=" + r.variant;
    for (const auto& [key, value] : r.params) {
      if (!params.empty()) params += ',';
      params += key + "=" + std::to_string(value);
    }
    out += r.id + "\t" + params + "\t" + status_name(r.status) + "\t" +
           r.witness + "\t" + std::to_string(r.ms) + "\n";
  }
  return out;
}

int report_exit_code(const Report& report) {
  Summary s = report.summary();
  if (s.error > 0) return 2;
  if (s.fail > 0) return 1;
  return 0;
}

}  // namespace braidkit
