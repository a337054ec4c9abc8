#include "imaginarity/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "imaginarity/descriptor.hpp"
#include "imaginarity/entropy.hpp"
#include "imaginarity/errors.hpp"
#include "imaginarity/monotones.hpp"
#include "imaginarity/states.hpp"

namespace imag {

using ojson = nlohmann::ordered_json;

std::string to_string(CheckKind k) {
  switch (k) {
    case CheckKind::claim:
      return "claim";
    case CheckKind::corrected:
      return "corrected";
  }
  return "unknown";
}

void SuiteConfig::validate() const {
  if (trials < 0) throw ParamOutOfRange("trials must be >= 1 (or 0 for check defaults)");
  if (dims.empty()) throw ParamOutOfRange("dimension list is empty");
  for (auto d : dims)
    if (d < 2 || d > 16) throw ParamOutOfRange("dimensions must lie in [2, 16]");
  for (double a : alpha_grid)
    if (!(a > 0.0 && a < 1.0)) throw ParamOutOfRange("alpha grid values must lie in (0, 1)");
  for (double b : beta_grid)
    if (!(b > 0.0 && b <= 1.0)) throw ParamOutOfRange("beta grid values must lie in (0, 1]");
  for (double t : z_fractions)
    if (!(t >= 0.0 && t < 1.0)) throw ParamOutOfRange("z fractions must lie in [0, 1)");
  for (const auto& [id, tol] : tolerance_overrides)
    if (!(tol >= 0.0) || !std::isfinite(tol)) throw ParamOutOfRange("tolerance for " + id + " must be finite and >= 0");
  if (alpha_grid.size() < 2 || beta_grid.size() < 2) throw ParamOutOfRange("grids need at least two points");
}

namespace {

constexpr std::size_t kMaxCounterexamples = 10;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ojson dense(const DensityMatrix& rho) { return ojson(to_dense_descriptor(rho)); }

ojson params_json(const MonotoneParams& p) { return ojson{{"alpha", p.alpha}, {"beta", p.beta}}; }

/// Shared per-check state: trial seeding, violation accounting, counterexamples.
class Context {
 public:
  Context(const SuiteConfig& cfg, CheckReport& report, long default_trials)
      : cfg_(cfg),
        report_(report),
        trials_(cfg.trials > 0 ? cfg.trials : default_trials),
        base_(Rng::derive(cfg.seed, fnv1a(report.check_id))) {}

  const SuiteConfig& cfg() const { return cfg_; }
  long trials() const { return trials_; }
  double tol() const { return report_.tolerance; }
  Rng rng(std::uint64_t stream) const { return Rng(Rng::derive(base_, stream)); }

  /// One trial with raw excess; the payload is built only on failure.
  void record(double excess, const std::function<Counterexample()>& payload) {
    ++report_.trials;
    if (!(excess >= 0.0)) excess = std::isnan(excess) ? std::numeric_limits<double>::infinity() : 0.0;
    report_.worst_violation = std::max(report_.worst_violation, excess);
    if (excess > tol()) {
      ++report_.failures;
      if (report_.counterexamples.size() < kMaxCounterexamples) report_.counterexamples.push_back(payload());
    }
  }

  ojson& telemetry() { return report_.telemetry; }

 private:
  const SuiteConfig& cfg_;
  CheckReport& report_;
  long trials_;
  std::uint64_t base_;
};

MonotoneParams sample_params(Rng& rng) { return {rng.uniform(0.05, 0.95), rng.uniform(0.05, 1.0)}; }

std::size_t pick_dim(const Context& ctx, long trial) {
  const auto& dims = ctx.cfg().dims;
  return dims[static_cast<std::size_t>(trial) % dims.size()];
}

/// Mixed or pure complex state; pure states exercise the rank-deficient paths.
DensityMatrix sample_state(std::size_t d, Rng& rng) {
  return rng.index(4) == 0 ? random_pure(d, rng) : random_density(d, rng);
}

double mh_value(const DensityMatrix& rho, const MonotoneParams& p) { return mh(rho, p); }
double me_value(const DensityMatrix& rho, const MonotoneParams& p) { return me(rho, p, {}).value; }

using Measure = double (*)(const DensityMatrix&, const MonotoneParams&);

struct NamedMeasure {
  const char* name;
  Measure fn;
};

constexpr NamedMeasure kBoth[] = {{"mh", mh_value}, {"me", me_value}};

double positive(double x) { return std::max(0.0, x); }

Counterexample ce(ojson input, ojson observed) { return {std::move(input), std::move(observed)}; }

double entropy(const DensityMatrix& r, const DensityMatrix& s, const MonotoneParams& p) {
  return unified_relative_entropy(r, s, {p.alpha, p.beta});
}

// ---------------------------------------------------------------- divergence

void lemma1_i(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    const auto p = sample_params(rng);
    const auto rho = sample_state(d, rng), sigma = random_density(d, rng);
    const double cross = entropy(rho, sigma, p), self = entropy(rho, rho, p);
    ctx.record(std::max(positive(-cross), std::abs(self)), [&] {
      return ce({{"rho", dense(rho)}, {"sigma", dense(sigma)}, {"params", params_json(p)}},
                {{"d_rho_sigma", cross}, {"d_rho_rho", self}});
    });
  }
}

void lemma1_ii(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    const auto p = sample_params(rng);
    const auto rho = sample_state(d, rng), sigma = random_density(d, rng);
    const auto ch = random_kraus(d, 1 + rng.index(3), rng);
    const double before = entropy(rho, sigma, p);
    const double after = entropy(apply_channel(rho, ch), apply_channel(sigma, ch), p);
    ctx.record(positive(after - before), [&] {
      return ce({{"rho", dense(rho)}, {"sigma", dense(sigma)}, {"params", params_json(p)}},
                {{"before", before}, {"after", after}});
    });
  }
}

void lemma1_iii(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    const auto p = sample_params(rng);
    double w[3], wsum = 0.0;
    for (double& x : w) wsum += (x = rng.uniform(0.05, 1.0));
    ComplexMatrix mr(d), ms(d);
    double rhs = 0.0;
    for (double x : w) {
      const auto r = sample_state(d, rng), s = random_density(d, rng);
      mr += r.mat() * cplx(x / wsum);
      ms += s.mat() * cplx(x / wsum);
      rhs += x / wsum * entropy(r, s, p);
    }
    const DensityMatrix rho(mr), sigma(ms);
    const double lhs = entropy(rho, sigma, p);
    ctx.record(positive(lhs - rhs), [&] {
      return ce({{"rho_mix", dense(rho)}, {"sigma_mix", dense(sigma)}, {"params", params_json(p)}},
                {{"joint", lhs}, {"average", rhs}});
    });
  }
}

void lemma1_iv(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t da = 2, db = 2 + static_cast<std::size_t>(t % 2);
    const auto p = sample_params(rng);
    const auto rho = sample_state(da * db, rng), sigma = random_density(da * db, rng);
    const Keep keep = rng.index(2) == 0 ? Keep::first : Keep::second;
    const double full = entropy(rho, sigma, p);
    const double reduced = entropy(partial_trace(rho, da, db, keep), partial_trace(sigma, da, db, keep), p);
    ctx.record(positive(reduced - full), [&] {
      return ce({{"rho", dense(rho)}, {"sigma", dense(sigma)}, {"params", params_json(p)}},
                {{"full", full}, {"reduced", reduced}});
    });
  }
}

/// Walks a parameter grid and records the worst step against the expected direction.
template <typename F>
void grid_monotone(Context& ctx, const std::vector<double>& grid, bool increasing, F&& value,
                   const std::function<ojson()>& input) {
  double worst = 0.0;
  std::vector<double> seen;
  for (double g : grid) seen.push_back(value(g));
  for (std::size_t i = 0; i + 1 < seen.size(); ++i) {
    const double step = seen[i + 1] - seen[i];
    worst = std::max(worst, positive(increasing ? -step : step));
  }
  ctx.record(worst, [&] { return ce(input(), {{"grid", grid}, {"values", seen}}); });
}

void lemma1_v(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    const auto rho = sample_state(d, rng), sigma = random_density(d, rng);
    for (double beta : ctx.cfg().beta_grid) {
      grid_monotone(
          ctx, ctx.cfg().alpha_grid, true, [&](double a) { return entropy(rho, sigma, {a, beta}); },
          [&] { return ojson{{"rho", dense(rho)}, {"sigma", dense(sigma)}, {"beta", beta}}; });
    }
  }
}

void lemma1_vi(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    const auto rho = sample_state(d, rng), sigma = random_density(d, rng);
    for (double alpha : ctx.cfg().alpha_grid) {
      grid_monotone(
          ctx, ctx.cfg().beta_grid, false, [&](double b) { return entropy(rho, sigma, {alpha, b}); },
          [&] { return ojson{{"rho", dense(rho)}, {"sigma", dense(sigma)}, {"alpha", alpha}}; });
    }
  }
}

void lemma2(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    const auto rho = sample_state(d, rng);
    const auto ch = random_real_kraus(d, 1 + rng.index(3), rng);
    const double gap = max_abs_diff(apply_channel(conjugate(rho), ch).mat(), conjugate(apply_channel(rho, ch)).mat());
    ctx.record(gap, [&] { return ce({{"rho", dense(rho)}}, {{"max_abs_diff", gap}}); });
  }
}

void lemma3(Context& ctx) {
  constexpr int kGrid = 400;
  auto run = [&](const Lemma3Problem& prob) {
    const auto sol = lemma3_maximize(prob);
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= kGrid; ++i) {
      const double x = 0.5 * i / kGrid;  // f(x) and f(1-x) coincide after theta -> theta + pi
      for (int j = 0; j < kGrid; ++j) best = std::max(best, prob.objective(x, 2.0 * std::numbers::pi * j / kGrid));
    }
    const double at_opt = prob.objective(sol.x0, sol.theta0);
    const double excess = std::max({positive(best - sol.f_max), std::abs(at_opt - sol.f_max),
                                    positive(-sol.x0), positive(sol.x0 - 0.5)});
    ctx.record(excess, [&] {
      return ce({{"A", prob.a}, {"B", prob.b}, {"C", prob.c}, {"alpha", prob.alpha}},
                {{"x0", sol.x0}, {"theta0", sol.theta0}, {"f_max", sol.f_max}, {"grid_max", best}});
    });
    return sol;
  };
  const auto fixed = run({1.0, 0.6, 0.0, 0.5});
  ctx.telemetry()["reference_instance"] = {{"x0", fixed.x0}, {"theta0", fixed.theta0}, {"f_max", fixed.f_max}};
  for (long t = 1; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const double b = rng.uniform(-1.0, 1.0), c = rng.uniform(-1.0, 1.0);
    run({std::hypot(b, c) + rng.uniform(0.01, 1.0), b, c, rng.uniform(0.05, 0.95)});
  }
}

// ---------------------------------------------------------------- direct sums

struct BlockPair {
  double p;
  DensityMatrix a, b;
};

BlockPair sample_blocks(std::size_t d, Rng& rng) {
  const double p = rng.uniform(0.05, 0.95);
  auto a = sample_state(d, rng);
  auto b = sample_state(d, rng);
  return {p, std::move(a), std::move(b)};
}

ojson blocks_json(const BlockPair& bp, const MonotoneParams& p) {
  return {{"p", bp.p}, {"rho1", dense(bp.a)}, {"rho2", dense(bp.b)}, {"params", params_json(p)}};
}

/// sign > 0 asserts joint >= average, sign < 0 asserts joint <= average,
/// sign == 0 asserts equality.
void direct_sum_relation(Context& ctx, Measure m, int sign, bool beta_one) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    MonotoneParams p = sample_params(rng);
    if (beta_one) p.beta = 1.0;
    const auto bp = sample_blocks(d, rng);
    const double joint = m(direct_sum(bp.p, bp.a, bp.b), p);
    const double average = bp.p * m(bp.a, p) + (1.0 - bp.p) * m(bp.b, p);
    const double excess = sign > 0 ? positive(average - joint) : sign < 0 ? positive(joint - average)
                                                                          : std::abs(joint - average);
    ctx.record(excess, [&] { return ce(blocks_json(bp, p), {{"joint", joint}, {"weighted_sum", average}}); });
  }
}

void lemma4(Context& ctx, bool power_mean) {
  long strict = 0;
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const auto p = sample_params(rng);
    const auto bp = sample_blocks(2, rng);
    const double t1 = me_qubit_closed_form(density_to_bloch(bp.a), p).achieved_trace;
    const double t2 = me_qubit_closed_form(density_to_bloch(bp.b), p).achieved_trace;
    OptimizerConfig cfg;
    cfg.rng_seed = rng.next_u64();
    const MEResult joint = me_numeric(direct_sum(bp.p, bp.a, bp.b), p, cfg);
    const double predicted_t =
        power_mean ? std::pow(bp.p * std::pow(t1, 1.0 / p.alpha) + (1.0 - bp.p) * std::pow(t2, 1.0 / p.alpha), p.alpha)
                   : bp.p * t1 + (1.0 - bp.p) * t2;
    const double predicted = h_alpha_beta(predicted_t, p.alpha, p.beta);
    if (joint.value < predicted - ctx.tol()) ++strict;
    ctx.record(std::abs(joint.value - predicted), [&] {
      return ce(blocks_json(bp, p), {{"numeric", joint.value},
                                     {"predicted", predicted},
                                     {"block_traces", {t1, t2}},
                                     {"numeric_trace", joint.achieved_trace}});
    });
  }
  if (!power_mean) ctx.telemetry()["numeric_below_prediction"] = strict;
}

// ---------------------------------------------------------------- axioms

void m1(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    const auto p = sample_params(rng);
    const auto complex_state = sample_state(d, rng);
    const auto real_state = random_real_density(d, rng);
    for (const auto& m : kBoth) {
      const double on_complex = m.fn(complex_state, p), on_real = m.fn(real_state, p);
      // A complex state must score strictly above the tolerance; a miss counts as a unit violation.
      const double faithful = max_imag(complex_state.mat()) > 1e-6 && on_complex <= ctx.tol() ? 1.0 : 0.0;
      ctx.record(std::max({positive(-on_complex), std::abs(on_real), faithful}), [&] {
        return ce({{"measure", m.name}, {"complex_state", dense(complex_state)}, {"real_state", dense(real_state)},
                   {"params", params_json(p)}},
                  {{"on_complex", on_complex}, {"on_real", on_real}});
      });
    }
  }
}

void m2(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    const auto p = sample_params(rng);
    const auto rho = sample_state(d, rng);
    const auto ch = random_real_kraus(d, 1 + rng.index(3), rng);
    const auto out = apply_channel(rho, ch);
    for (const auto& m : kBoth) {
      const double before = m.fn(rho, p), after = m.fn(out, p);
      ctx.record(positive(after - before), [&] {
        return ce({{"measure", m.name}, {"rho", dense(rho)}, {"params", params_json(p)}},
                  {{"before", before}, {"after", after}});
      });
    }
  }
}

void m3(Context& ctx, bool mh_beta_one) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    auto p = sample_params(rng);
    if (mh_beta_one) p.beta = 1.0;
    const auto rho = sample_state(d, rng);
    const auto outcomes = kraus_selective_outcomes(rho, random_real_kraus(d, 2 + rng.index(2), rng));
    for (const auto& m : kBoth) {
      if (mh_beta_one && m.fn != mh_value) continue;
      double average = 0.0;
      for (const auto& o : outcomes) average += o.probability * m.fn(o.state, p);
      const double before = m.fn(rho, p);
      ctx.record(positive(average - before), [&] {
        return ce({{"measure", m.name}, {"rho", dense(rho)}, {"params", params_json(p)}},
                  {{"before", before}, {"outcome_average", average}});
      });
    }
  }
}

void m4(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    const auto p = sample_params(rng);
    double w[3], wsum = 0.0;
    for (double& x : w) wsum += (x = rng.uniform(0.05, 1.0));
    std::vector<DensityMatrix> parts;
    ComplexMatrix mix(d);
    for (double x : w) {
      parts.push_back(sample_state(d, rng));
      mix += parts.back().mat() * cplx(x / wsum);
    }
    const DensityMatrix rho(mix);
    for (const auto& m : kBoth) {
      double average = 0.0;
      for (std::size_t i = 0; i < 3; ++i) average += w[i] / wsum * m.fn(parts[i], p);
      const double joint = m.fn(rho, p);
      ctx.record(positive(joint - average), [&] {
        return ce({{"measure", m.name}, {"mixture", dense(rho)}, {"params", params_json(p)}},
                  {{"of_mixture", joint}, {"average", average}});
      });
    }
  }
}

// ---------------------------------------------------------------- mh theorems

void thm2(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    const auto p = sample_params(rng);
    const auto rho = sample_state(d, rng);
    const double lhs = mh(rho, {1.0 - p.alpha, p.beta}) / (1.0 - p.alpha);
    const double rhs = mh(rho, p) / p.alpha;
    ctx.record(std::abs(lhs - rhs), [&] {
      return ce({{"rho", dense(rho)}, {"params", params_json(p)}}, {{"lhs", lhs}, {"rhs", rhs}});
    });
  }
}

void cor1(Context& ctx) {
  long strict = 0, sampled = 0;
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const std::size_t d = pick_dim(ctx, t);
    MonotoneParams p = sample_params(rng);
    const auto bp = sample_blocks(d, rng);
    // beta = 1: additive on arbitrary blocks.
    const MonotoneParams p1{p.alpha, 1.0};
    const double joint = mh(direct_sum(bp.p, bp.a, bp.b), p1);
    const double average = bp.p * mh(bp.a, p1) + (1.0 - bp.p) * mh(bp.b, p1);
    // beta < 1: additive when both blocks share the same trace (identical blocks).
    const double same = mh(direct_sum(bp.p, bp.a, bp.a), p);
    const double single = mh(bp.a, p);
    ctx.record(std::max(std::abs(joint - average), std::abs(same - single)), [&] {
      return ce(blocks_json(bp, p), {{"beta_one_joint", joint},
                                     {"beta_one_sum", average},
                                     {"identical_blocks", same},
                                     {"single_block", single}});
    });
    if (p.beta < 1.0) {
      ++sampled;
      const double mixed = bp.p * mh(bp.a, p) + (1.0 - bp.p) * mh(bp.b, p);
      if (mh(direct_sum(bp.p, bp.a, bp.b), p) < mixed - 1e-9) ++strict;
    }
  }
  ctx.telemetry()["beta_below_one_distinct_blocks"] = sampled;
  ctx.telemetry()["strictly_below_weighted_sum"] = strict;
}

void m5(Context& ctx) { direct_sum_relation(ctx, mh_value, 0, true); }

struct Bipartite {
  std::size_t da, db;
};

constexpr Bipartite kCuts[] = {{2, 2}, {2, 3}};

void partial_trace_check(Context& ctx, Measure m) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const Bipartite cut = kCuts[t % 2];
    const auto p = sample_params(rng);
    const auto rho = sample_state(cut.da * cut.db, rng);
    const double full = m(rho, p);
    for (Keep keep : {Keep::first, Keep::second}) {
      const double reduced = m(partial_trace(rho, cut.da, cut.db, keep), p);
      ctx.record(positive(reduced - full), [&] {
        return ce({{"rho", dense(rho)}, {"dims", {cut.da, cut.db}}, {"params", params_json(p)}},
                  {{"full", full}, {"reduced", reduced}});
      });
    }
  }
}

void tensor_check(Context& ctx, Measure m) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const auto p = sample_params(rng);
    const auto rho = sample_state(2, rng);
    const auto tau = sample_state(t % 2 == 0 ? 2 : 3, rng);
    const auto real = random_real_density(2, rng);
    const double joint = m(tensor(rho, tau), p);
    const double sum = m(rho, p) + m(tau, p);
    const double with_real = m(tensor(rho, real), p), alone = m(rho, p);
    ctx.record(std::max(positive(joint - sum), std::abs(with_real - alone)), [&] {
      return ce({{"rho", dense(rho)}, {"tau", dense(tau)}, {"real_factor", dense(real)}, {"params", params_json(p)}},
                {{"tensor", joint}, {"sum", sum}, {"with_real_factor", with_real}, {"alone", alone}});
    });
  }
}

void beta_monotone(Context& ctx, Measure m) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const auto rho = sample_state(pick_dim(ctx, t), rng);
    for (double alpha : ctx.cfg().alpha_grid) {
      grid_monotone(
          ctx, ctx.cfg().beta_grid, false, [&](double b) { return m(rho, {alpha, b}); },
          [&] { return ojson{{"rho", dense(rho)}, {"alpha", alpha}}; });
    }
  }
}

void thm6(Context& ctx) {
  beta_monotone(ctx, mh_value);
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(1000000 + t);
    const auto rho = sample_state(pick_dim(ctx, t), rng);
    for (double beta : ctx.cfg().beta_grid) {
      grid_monotone(
          ctx, ctx.cfg().alpha_grid, true, [&](double a) { return mh(rho, {a, beta}); },
          [&] { return ojson{{"rho", dense(rho)}, {"beta", beta}}; });
    }
  }
}

void thm7(Context& ctx) {
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const auto rho = sample_state(pick_dim(ctx, t), rng);
    for (double alpha : ctx.cfg().alpha_grid) {
      const double tsallis = m_tsallis(rho, alpha);
      // z = alpha is only admissible for alpha >= 1/2.
      const double renyi = alpha >= 0.5 ? m_alpha_z(rho, {alpha, alpha}) : -1.0;
      const double zmin = std::max(alpha, 1.0 - alpha);
      for (double frac : ctx.cfg().z_fractions) {
        const double z = zmin + frac * (0.99 - zmin);
        const double alpha_z = m_alpha_z(rho, {alpha, z});
        for (double beta : ctx.cfg().beta_grid) {
          const double h = mh(rho, {alpha, beta});
          const double excess = std::max({alpha >= 0.5 ? positive(renyi - alpha_z) : 0.0,
                                          positive(alpha_z - tsallis), positive(tsallis - h)});
          ctx.record(excess, [&] {
            return ce({{"rho", dense(rho)}, {"alpha", alpha}, {"z", z}, {"beta", beta}},
                      {{"renyi_alpha", renyi}, {"renyi_alpha_z", alpha_z}, {"tsallis", tsallis}, {"mh", h}});
          });
        }
      }
    }
  }
}

void remark1(Context& ctx) {
  const auto rho = remark1_state();
  const auto a = partial_trace(rho, 2, 2, Keep::first), b = partial_trace(rho, 2, 2, Keep::second);
  const double s = 1.0 / std::sqrt(2.0);
  const std::vector<cplx> psi{s, 0.0, 0.0, cplx(0.0, s)};
  for (double alpha : ctx.cfg().alpha_grid)
    for (double beta : ctx.cfg().beta_grid) {
      const MonotoneParams p{alpha, beta};
      const double joint = mh(rho, p), expected = 1.0 / ((1.0 - alpha) * beta);
      const double ma = mh(a, p), mb = mh(b, p), pure = mh_pure(psi, p);
      ctx.record(std::max({std::abs(joint - expected), std::abs(ma), std::abs(mb), std::abs(pure - expected)}),
                 [&] {
                   return ce({{"params", params_json(p)}},
                             {{"joint", joint}, {"expected", expected}, {"marginal_a", ma},
                              {"marginal_b", mb}, {"pure_form", pure}});
                 });
    }
}

void remark3(Context& ctx) {
  // Asserted on the (0, r2, 0) family.
  for (int i = 0; i <= 100; ++i) {
    const BlochVector v{0.0, i / 100.0, 0.0};
    const auto rho = bloch_to_density(v);
    for (double alpha : ctx.cfg().alpha_grid)
      for (double beta : ctx.cfg().beta_grid) {
        const MonotoneParams p{alpha, beta};
        const double h = mh(rho, p), e = me_qubit_closed_form(v, p).value;
        ctx.record(positive(e - h), [&] {
          return ce({{"bloch", {v.r1, v.r2, v.r3}}, {"params", params_json(p)}}, {{"mh", h}, {"me", e}});
        });
      }
  }
  // Reported only: general qubits and d = 4.
  long qubit_violations = 0, d4_violations = 0;
  double worst_gap = 0.0;
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const auto p = sample_params(rng);
    const auto q = sample_state(2, rng);
    const double gq = me(q, p, {}).value - mh(q, p);
    const auto r = sample_state(4, rng);
    const double g4 = me(r, p, {}).value - mh(r, p);
    qubit_violations += gq > 1e-9;
    d4_violations += g4 > 1e-9;
    worst_gap = std::max({worst_gap, gq, g4});
  }
  ctx.telemetry()["random_qubits"] = ctx.trials();
  ctx.telemetry()["qubit_me_above_mh"] = qubit_violations;
  ctx.telemetry()["random_d4"] = ctx.trials();
  ctx.telemetry()["d4_me_above_mh"] = d4_violations;
  ctx.telemetry()["largest_me_minus_mh"] = worst_gap;
}

void eq22_crosscheck(Context& ctx) {
  long skipped = 0;
  for (long t = 0; t < ctx.trials(); ++t) {
    Rng rng = ctx.rng(t);
    const auto p = sample_params(rng);
    const BlochVector v = random_bloch(rng);
    if (!qubit_conjugate_trace(v, p.alpha)) {
      ++skipped;
      continue;
    }
    const double closed = mh_qubit_closed_form(v, p), spectral = mh(bloch_to_density(v), p);
    ctx.record(std::abs(closed - spectral), [&] {
      return ce({{"bloch", {v.r1, v.r2, v.r3}}, {"params", params_json(p)}},
                {{"closed_form", closed}, {"spectral", spectral}});
    });
  }
  ctx.telemetry()["skipped_singular"] = skipped;
}

void werner_check(Context& ctx, bool corrected) {
  for (int i = 0; i <= 100; ++i) {
    const double k = i / 100.0;
    const auto rho = werner(k);
    for (double alpha : ctx.cfg().alpha_grid)
      for (double beta : ctx.cfg().beta_grid) {
        const MonotoneParams p{alpha, beta};
        const double formula = corrected ? werner_mh_spectral_form(k, p) : werner_mh_closed_form(k, p);
        const double spectral = mh(rho, p);
        ctx.record(std::abs(formula - spectral), [&] {
          return ce({{"werner", k}, {"params", params_json(p)}}, {{"formula", formula}, {"spectral", spectral}});
        });
      }
  }
}

// ---------------------------------------------------------------- registry

struct Entry {
  CheckInfo info;
  long default_trials;
  double default_tol;
  std::function<void(Context&)> body;
};

const std::vector<Entry>& entries() {
  using K = CheckKind;
  static const std::vector<Entry> all{
      {{"lemma1_i", K::claim, "divergence is nonnegative and vanishes on identical states"}, 200, 1e-10, lemma1_i},
      {{"lemma1_ii", K::claim, "divergence contracts under arbitrary channels"}, 200, 1e-9, lemma1_ii},
      {{"lemma1_iii", K::claim, "divergence is jointly convex"}, 200, 1e-9, lemma1_iii},
      {{"lemma1_iv", K::claim, "divergence contracts under partial trace"}, 200, 1e-9, lemma1_iv},
      {{"lemma1_v", K::claim, "divergence is nondecreasing in alpha"}, 100, 1e-9, lemma1_v},
      {{"lemma1_vi", K::claim, "divergence is nonincreasing in beta"}, 100, 1e-9, lemma1_vi},
      {{"lemma2", K::claim, "real channels commute with complex conjugation"}, 100, 1e-12, lemma2},
      {{"lemma3", K::claim, "closed-form maximizer beats a 400x400 grid"}, 50, 1e-6, lemma3},
      {{"lemma4", K::claim, "direct-sum minimum equals h at the weighted block traces"}, 100, 1e-6,
       [](Context& c) { lemma4(c, false); }},
      {{"lemma4_power_mean", K::corrected, "direct-sum minimum equals h at the 1/alpha power mean of block traces"},
       100, 1e-6, [](Context& c) { lemma4(c, true); }},
      {{"m1", K::claim, "mh and me are nonnegative and vanish exactly on real states"}, 1000, 1e-9, m1},
      {{"m2", K::claim, "mh and me do not increase under real channels"}, 1000, 1e-9, m2},
      {{"m3", K::claim, "mh and me do not increase on average under selective real Kraus outcomes"}, 1000, 1e-9,
       [](Context& c) { m3(c, false); }},
      {{"m3_beta_one", K::corrected, "mh at beta = 1 does not increase on average under selective outcomes"}, 1000,
       1e-9, [](Context& c) { m3(c, true); }},
      {{"m4", K::claim, "mh and me are convex"}, 1000, 1e-9, m4},
      {{"m5", K::claim, "mh is additive on direct sums at beta = 1"}, 1000, 1e-9, m5},
      {{"thm2", K::claim, "mh(1-alpha)/(1-alpha) equals mh(alpha)/alpha"}, 1000, 1e-10, thm2},
      {{"thm3", K::claim, "mh is superadditive on direct sums"}, 1000, 1e-9,
       [](Context& c) { direct_sum_relation(c, mh_value, +1, false); }},
      {{"thm3_reverse", K::corrected, "mh is subadditive on direct sums"}, 1000, 1e-9,
       [](Context& c) { direct_sum_relation(c, mh_value, -1, false); }},
      {{"thm4", K::claim, "mh does not increase under partial trace"}, 1000, 1e-9,
       [](Context& c) { partial_trace_check(c, mh_value); }},
      {{"thm5", K::claim, "mh is subadditive on tensor products, additive with a real factor"}, 1000, 1e-9,
       [](Context& c) { tensor_check(c, mh_value); }},
      {{"thm6", K::claim, "mh is nondecreasing in alpha and nonincreasing in beta"}, 100, 1e-9, thm6},
      {{"thm7", K::claim, "ordering chain of alpha-z Renyi, Tsallis and mh"}, 200, 1e-9, thm7},
      {{"cor1", K::claim, "mh is additive on direct sums at beta = 1 or equal block traces"}, 1000, 1e-9, cor1},
      {{"thm9_1", K::claim, "me is superadditive on direct sums"}, 1000, 1e-9,
       [](Context& c) { direct_sum_relation(c, me_value, +1, false); }},
      {{"thm9_1_reverse", K::corrected, "me is subadditive on direct sums"}, 1000, 1e-9,
       [](Context& c) { direct_sum_relation(c, me_value, -1, false); }},
      {{"thm9_2", K::claim, "me is additive on direct sums at beta = 1"}, 1000, 1e-9,
       [](Context& c) { direct_sum_relation(c, me_value, 0, true); }},
      {{"thm9_3", K::claim, "me does not increase under partial trace"}, 1000, 1e-9,
       [](Context& c) { partial_trace_check(c, me_value); }},
      {{"thm9_4", K::claim, "me is subadditive on tensor products, additive with a real factor"}, 1000, 1e-9,
       [](Context& c) { tensor_check(c, me_value); }},
      {{"thm9_5", K::claim, "me is nonincreasing in beta"}, 100, 1e-9,
       [](Context& c) { beta_monotone(c, me_value); }},
      {{"remark1", K::claim, "entangled pure state with real marginals has maximal mh"}, 1, 1e-9, remark1},
      {{"remark3", K::claim, "mh >= me on the (0, r2, 0) qubit family; general states reported"}, 500, 1e-9,
       remark3},
      {{"eq22_crosscheck", K::claim, "explicit qubit trace kernel matches the spectral mh"}, 500, 1e-8,
       eq22_crosscheck},
      {{"eq26_crosscheck", K::claim, "quoted Werner closed form matches the spectral mh"}, 1, 1e-9,
       [](Context& c) { werner_check(c, false); }},
      {{"eq26_corrected", K::corrected, "Werner spectrum closed form matches the spectral mh"}, 1, 1e-9,
       [](Context& c) { werner_check(c, true); }},
  };
  return all;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

CheckReport run_check(const std::string& check_id, const SuiteConfig& cfg) {
  cfg.validate();
  const auto& all = entries();
  const auto it = std::find_if(all.begin(), all.end(), [&](const Entry& e) { return e.info.id == check_id; });
  if (it == all.end()) throw UnknownCheck("unknown check id: " + check_id);

  CheckReport report;
  report.check_id = check_id;
  report.kind = it->info.kind;
  const auto tol = cfg.tolerance_overrides.find(check_id);
  report.tolerance = tol == cfg.tolerance_overrides.end() ? it->default_tol : tol->second;

  const auto start = std::chrono::steady_clock::now();
  Context ctx(cfg, report, it->default_trials);
  it->body(ctx);
  if (cfg.record_timing) {
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                            .count();
  }
  return report;
}

std::vector<CheckReport> run_all(const SuiteConfig& cfg) {
  std::vector<CheckReport> out;
  for (const auto& info : check_registry()) out.push_back(run_check(info.id, cfg));
  return out;
}

std::string to_json_line(const CheckReport& r) {
  ojson ces = ojson::array();
  for (const auto& c : r.counterexamples) ces.push_back({{"input", c.input}, {"observed", c.observed}});
  const ojson j{{"check_id", r.check_id},
                {"kind", to_string(r.kind)},
                {"passed", r.passed()},
                {"trials", r.trials},
                {"failures", r.failures},
                {"worst_violation", r.worst_violation},
                {"tolerance", r.tolerance},
                {"counterexamples", std::move(ces)},
                {"elapsed_ms", r.elapsed_ms},
                {"telemetry", r.telemetry}};
  return j.dump();
}

}  // namespace imag
