// Acceptance suite. Usage: acceptance [criterion ...]; no argument runs all.
// Prints one PASS/FAIL line per criterion followed by indented details.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "imaginarity/cli.hpp"
#include "imaginarity/harness.hpp"
#include "imaginarity/monotones.hpp"
#include "qubit_grid_oracle.hpp"

using namespace imag;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

const std::vector<double> kAlphas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
const std::vector<double> kBetas{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};

SuiteConfig suite(long trials) {
  SuiteConfig cfg;
  cfg.seed = 20240601;
  cfg.trials = trials;
  cfg.record_timing = false;
  return cfg;
}

void require_check(Outcome& o, const std::string& id, long trials, double tol) {
  SuiteConfig cfg = suite(trials);
  cfg.tolerance_overrides[id] = tol;
  const CheckReport r = run_check(id, cfg);
  o.require(r.passed(), id + fmt(": trials=%.0f failures=%.0f worst_violation=%.3g", r.trials, r.failures,
                                 r.worst_violation) +
                            fmt(" (tol %.0e)", tol));
}

// Runs a corrected counterpart and reports it without affecting the verdict.
void info_check(Outcome& o, const std::string& id, long trials) {
  const CheckReport r = run_check(id, suite(trials));
  o.details.push_back("info corrected " + id + fmt(": trials=%.0f failures=%.0f worst_violation=%.3g", r.trials,
                                                  r.failures, r.worst_violation));
}

// 1. Werner endpoint value.
Outcome werner_endpoint() {
  Outcome o;
  const auto rho = werner(1.0);
  double worst = 0.0;
  for (double a : kAlphas)
    for (double b : kBetas) {
      const double expected = (std::pow(2.0, -b) - 1.0) / ((a - 1.0) * b);
      worst = std::max(worst, std::abs(mh(rho, {a, b}) - expected));
    }
  o.require(worst <= 1e-9, fmt("mh(werner(1)) vs (2^-beta - 1)/((alpha - 1) beta) on 9x10 grid: max error %.6g", worst));
  const double v = mh(rho, {0.5, 0.5});
  o.require(std::abs(v - 1.1715729) <= 1e-7, fmt("alpha = beta = 1/2: mh = %.10f, expected 1.1715729", v));
  o.details.push_back(fmt("info werner(1) is pure (purity %.12f), so tr(rho^a rho*^(1-a)) = 0 and mh = 1/((1-a) b) = %.6f",
                          purity(rho), 1.0 / (0.5 * 0.5)));
  o.details.push_back(fmt("info the quoted closed form gives %.10f at k = 1", werner_mh_closed_form(1.0, {0.5, 0.5})));
  info_check(o, "eq26_corrected", 0);
  return o;
}

// 2. Werner zero.
Outcome werner_zero() {
  Outcome o;
  double worst = 0.0;
  for (double a : kAlphas)
    for (double b : kBetas) worst = std::max(worst, std::abs(mh(werner(0.0), {a, b})));
  o.require(worst <= 1e-10, fmt("mh(werner(0)) max |value| %.3g", worst));
  o.require(werner_linear_entropy(0.0) == 0.75, "linear entropy at k = 0 is exactly 0.75");
  o.require(werner_linear_entropy(1.0) == 0.0, "linear entropy at k = 1 is exactly 0");
  return o;
}

// 3. Isotropic / Werner equivalence.
Outcome isotropic_equivalence() {
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double k = i / 100.0;
    const auto w = werner(k), s = isotropic((3.0 * k + 1.0) / 4.0);
    for (double a : kAlphas)
      for (double b : kBetas) worst = std::max(worst, std::abs(mh(s, {a, b}) - mh(w, {a, b})));
  }
  o.require(worst <= 1e-9, fmt("101 k values x 9x10 grid: max |mh(iso) - mh(werner)| = %.3g", worst));
  return o;
}

// 4. Qubit minimization oracle.
Outcome qubit_me_oracle() {
  Outcome o;
  const std::vector<MonotoneParams> params{{0.1, 0.3}, {0.25, 2.0 / 3.0}, {0.5, 0.5}, {0.5, 1.0}, {0.7, 0.2}, {0.9, 0.9}};
  Rng rng(4242);
  double worst_grid = 0.0, worst_numeric = 0.0;
  for (int t = 0; t < 100; ++t) {
    const BlochVector v = random_bloch(rng);
    const auto rho = bloch_to_density(v);
    for (const auto& p : params) {
      const double closed = me_qubit_closed_form(v, p).value;
      const auto grid = test::qubit_grid_maximum(v, p.alpha);
      worst_grid = std::max(worst_grid, std::abs(closed - h_alpha_beta(grid.trace, p.alpha, p.beta)));
      OptimizerConfig cfg;
      cfg.rng_seed = static_cast<std::uint64_t>(t);
      worst_numeric = std::max(worst_numeric, std::abs(me_numeric(rho, p, cfg).value - closed));
    }
  }
  o.require(worst_grid <= 1e-4, fmt("closed form vs 400x400 refined grid: max error %.3g (tol 1e-4)", worst_grid));
  o.require(worst_numeric <= 1e-6, fmt("numeric optimizer vs closed form: max error %.3g (tol 1e-6)", worst_numeric));
  return o;
}

// 5. Closed-form maximizer of the two-variable qubit objective.
Outcome lemma3_check() {
  Outcome o;
  require_check(o, "lemma3", 50, 1e-6);
  const auto sol = lemma3_maximize({1.0, 0.6, 0.0, 0.5});
  o.require(std::abs(sol.x0 - 0.0588235) <= 1e-7, fmt("reference x0 = %.10f (expected 0.0588235)", sol.x0));
  o.require(std::abs(sol.f_max - 1.6492422) <= 1e-7, fmt("reference f_max = %.10f (expected 1.6492422)", sol.f_max));
  return o;
}

// 6. Axiom-derived checks, 1000 trials per dimension in {2, 4}.
Outcome axioms() {
  Outcome o;
  for (const char* id : {"m1", "m2", "m3", "m4", "thm3", "thm9_1", "cor1", "thm9_2"}) require_check(o, id, 2000, 1e-9);
  for (const char* id : {"m3_beta_one", "thm3_reverse", "thm9_1_reverse"}) info_check(o, id, 2000);
  return o;
}

// 7. Structural statements.
Outcome structural() {
  Outcome o;
  require_check(o, "thm2", 1000, 1e-10);
  for (const char* id : {"thm4", "thm9_3", "thm5", "thm9_4", "remark1", "thm6", "thm9_5"}) require_check(o, id, 0, 1e-9);
  require_check(o, "thm7", 200, 1e-9);
  return o;
}

// 8. Conjugation commutation and the direct-sum minimizer.
Outcome lemma2_lemma4() {
  Outcome o;
  require_check(o, "lemma2", 100, 1e-12);
  require_check(o, "lemma4", 100, 1e-6);
  info_check(o, "lemma4_power_mean", 100);
  return o;
}

// 9. mh >= me on the (0, r2, 0) family; general states as telemetry.
Outcome remark3() {
  Outcome o;
  SuiteConfig cfg = suite(500);
  const auto r = run_check("remark3", cfg);
  o.require(r.passed(), fmt("(0, r2, 0) family, 101 r2 x 9x10 grid: failures=%.0f worst=%.3g", r.failures,
                            r.worst_violation));
  o.details.push_back("info telemetry " + r.telemetry.dump());
  return o;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  std::getline(ss, line);  // header
  while (std::getline(ss, line)) {
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string x; std::getline(ls, x, ',');) f.push_back(x);
    rows.push_back(f);
  }
  return rows;
}

// 10. Figure data.
Outcome figures() {
  Outcome o;
  const auto a = cli::figure_data("1a");
  const auto b = cli::figure_data("1b");
  const auto two = cli::figure_data("2");
  o.require(a.size() == 2 && b.size() == 2 && two.size() == 1, "figures 1a, 1b, 2 emit 2, 2 and 1 CSV files");

  const auto mh_rows = parse_csv(a[0].content), me_rows = parse_csv(a[1].content);
  bool below = mh_rows.size() == 3600 && me_rows.size() == 3600;
  for (std::size_t i = 0; below && i < mh_rows.size(); ++i) below = std::stod(me_rows[i][2]) <= std::stod(mh_rows[i][2]) + 1e-12;
  o.require(below, "figure 1a: me surface <= mh surface at all 3600 grid points");
  o.require(parse_csv(b[0].content).size() == 3600 && parse_csv(b[1].content).size() == 3600,
            "figure 1b: two 60x60 surfaces");

  std::map<std::string, std::vector<double>> series;
  for (const auto& row : parse_csv(two[0].content)) series[row[2]].push_back(std::stod(row[1]));
  bool counts = series.size() == 3;
  for (const auto& [name, vals] : series) counts = counts && vals.size() == 201;
  o.require(counts, "figure 2: three series of 201 k-points");
  for (const auto& [name, vals] : series) {
    const bool inc = name != "L";
    bool mono = true;
    for (std::size_t i = 1; i < vals.size(); ++i) mono = mono && (inc ? vals[i] >= vals[i - 1] - 1e-12 : vals[i] <= vals[i - 1] + 1e-12);
    o.require(mono, "figure 2 series " + name + (inc ? " nondecreasing in k" : " nonincreasing in k"));
  }
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "Werner endpoint", 1.0, werner_endpoint},
      {2, "Werner zero", 1.0, werner_zero},
      {3, "isotropic equivalence", 5.0, isotropic_equivalence},
      {4, "qubit minimization oracle", 120.0, qubit_me_oracle},
      {5, "closed-form maximizer", 30.0, lemma3_check},
      {6, "axioms", 300.0, axioms},
      {7, "structural statements", 300.0, structural},
      {8, "conjugation commutation and direct-sum minimizer", 60.0, lemma2_lemma4},
      {9, "mh >= me on the imaginary-axis family", 120.0, remark3},
      {10, "figure data", 120.0, figures},
  };
  std::vector<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.push_back(std::stoi(argv[i]));

  bool all_pass = true;
  for (const auto& c : all) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < c.budget_s, fmt("runtime %.2f s (budget %.0f s)", secs, c.budget_s));
    all_pass = all_pass && o.pass;
    std::printf("criterion %2d: %s  %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
