#include <doctest.h>

#include <cmath>
#include <numbers>

#include "imaginarity/errors.hpp"
#include "imaginarity/monotones.hpp"
#include "qubit_grid_oracle.hpp"

using namespace imag;
using doctest::Approx;

namespace {

const cplx I{0.0, 1.0};

// Independent oracle values (mpmath / scipy multi-start optimization).
constexpr double kWernerHalfMh = 0.402185120104265455;     // mh(werner(1/2)), alpha = beta = 1/2
constexpr double kWernerHalfMe = 0.0991149387962635;        // me(werner(1/2)), alpha = beta = 1/2
constexpr double kWernerHalfMeTrace = 0.951056516295153572;  // cos(pi/10)
constexpr double kFigBMh = 0.07595722579295927;             // mh of Bloch (1/2, 1/4, 1/2), alpha = beta = 1/2
constexpr double kFigBMe = 0.01894315133898372;             // me of the same state
constexpr double kHalfR2Me = 0.06873897831432485;           // me of Bloch (0, 1/2, 0)

}  // namespace

TEST_CASE("monotone parameters") {
  CHECK_THROWS_AS(MonotoneParams({0.0, 0.5}).validate(), ParamOutOfRange);
  CHECK_THROWS_AS(MonotoneParams({1.0, 0.5}).validate(), ParamOutOfRange);
  CHECK_THROWS_AS(MonotoneParams({0.5, 0.0}).validate(), ParamOutOfRange);
  CHECK_THROWS_AS(MonotoneParams({0.5, 1.1}).validate(), ParamOutOfRange);
  CHECK_NOTHROW(MonotoneParams({0.5, 1.0}).validate());
  CHECK_THROWS_AS(mh(werner(0.5), {0.5, 2.0}), ParamOutOfRange);
}

TEST_CASE("mh fixed values") {
  const MonotoneParams half{0.5, 0.5};
  CHECK(mh(random_real_density(3, 1), {0.3, 0.9}) == 0.0);
  CHECK(mh(bloch_to_density({0, 1, 0}), half) == Approx(4.0).epsilon(1e-12));
  CHECK(mh(werner(0.5), half) == Approx(kWernerHalfMh).epsilon(1e-12));
  CHECK(mh(werner(0.3), {0.25, 2.0 / 3.0}) == Approx(0.07444610605593671).epsilon(1e-12));
  CHECK(mh(bloch_to_density({0.5, 0.25, 0.5}), half) == Approx(kFigBMh).epsilon(1e-12));
  // pure state: T = 0, value 1 / ((1 - alpha) beta)
  CHECK(mh(werner(1.0), half) == Approx(4.0).epsilon(1e-12));
}

TEST_CASE("mh pure-state form") {
  const MonotoneParams half{0.5, 0.5};
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(mh_pure({0.6, 0.8}, half) == 0.0);
  CHECK(mh_pure({s, s * I}, half) == Approx(4.0));
  CHECK(mh_pure({s, 0.0, 0.0, s * I}, half) == Approx(4.0));
  CHECK_THROWS_AS(mh_pure({1.0, 1.0}, half), NotNormalized);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<cplx> psi(3);
    double n = 0.0;
    for (auto& x : psi) n += std::norm(x = cplx(rng.normal(), rng.normal()));
    for (auto& x : psi) x /= std::sqrt(n);
    const MonotoneParams p{rng.uniform(0.05, 0.95), rng.uniform(0.05, 1.0)};
    CHECK(std::abs(mh_pure(psi, p) - mh(pure_state(psi), p)) <= 1e-9);
  }
}

TEST_CASE("explicit qubit kernel") {
  const MonotoneParams half{0.5, 0.5};
  CHECK(mh_qubit_closed_form({0.3, 0.0, 0.4}, half) == 0.0);
  CHECK(mh_qubit_closed_form({0, 1, 0}, half) == Approx(4.0));
  CHECK(mh_qubit_closed_form({0.5, 0.25, 0.5}, half) == Approx(kFigBMh).epsilon(1e-10));
  // r = r3 makes the kernel singular; the call delegates to the spectral value
  CHECK_FALSE(qubit_conjugate_trace({0.0, 0.0, 0.5}, 0.5).has_value());
  CHECK_THROWS_AS(mh_qubit_closed_form({1, 1, 0}, half), BlochOutOfBall);
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const auto v = random_bloch(rng);
    const MonotoneParams p{rng.uniform(0.05, 0.95), rng.uniform(0.05, 1.0)};
    CHECK(std::abs(mh_qubit_closed_form(v, p) - mh(bloch_to_density(v), p)) <= 1e-8);
  }
}

TEST_CASE("closed-form maximizer") {
  const auto sol = lemma3_maximize({1.0, 0.6, 0.0, 0.5});
  CHECK(sol.x0 == Approx(1.0 / 17.0).epsilon(1e-14));
  CHECK(sol.theta0 == Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK(sol.f_max == Approx(1.64924225024706418).epsilon(1e-14));
  CHECK(lemma3_maximize({1.0, 1e-9, 0.5, 0.5}).theta0 == Approx(0.0).epsilon(1e-8));
  // rotation of (B, C) leaves f_max unchanged
  const double fa = lemma3_maximize({1.0, 0.3, 0.4, 0.3}).f_max;
  const double fb = lemma3_maximize({1.0, -0.5, 0.0, 0.3}).f_max;
  CHECK(fa == Approx(fb).epsilon(1e-14));
  CHECK_THROWS_AS(lemma3_maximize({0.5, 0.6, 0.0, 0.5}), PreconditionViolated);
  CHECK_THROWS_AS(lemma3_maximize({1.0, 0.0, 0.0, 0.5}), PreconditionViolated);
}

TEST_CASE("me qubit closed form fixed values") {
  const MonotoneParams half{0.5, 0.5};
  auto r = me_qubit_closed_form({0, 0, 0}, half);
  CHECK(r.value == 0.0);

  r = me_qubit_closed_form({0, 0.5, 0}, half);
  CHECK(r.value == Approx(kHalfR2Me).epsilon(1e-12));
  CHECK(r.achieved_trace == Approx(0.5 * (std::sqrt(0.5) + std::sqrt(1.5))).epsilon(1e-14));
  CHECK(max_abs_diff(r.minimizer.mat(), ComplexMatrix::identity(2) * cplx(0.5)) < 1e-15);

  r = me_qubit_closed_form({0, 1, 0}, half);
  CHECK(r.achieved_trace == Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(r.value == Approx(4.0 * (1.0 - std::pow(2.0, -0.25))).epsilon(1e-14));

  r = me_qubit_closed_form({0.5, 0.25, 0.5}, half);
  CHECK(r.value == Approx(kFigBMe).epsilon(1e-11));
  CHECK(is_real_state(r.minimizer));
  CHECK(r.method == MeMethod::qubit_analytic);
  CHECK(std::abs(r.value - unified_relative_entropy(bloch_to_density({0.5, 0.25, 0.5}), r.minimizer, {0.5, 0.5})) <
        1e-12);
}

TEST_CASE("me qubit closed form against the grid oracle") {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    const auto v = random_bloch(rng);
    const MonotoneParams p{rng.uniform(0.05, 0.95), rng.uniform(0.05, 1.0)};
    const auto res = me_qubit_closed_form(v, p);
    const auto grid = test::qubit_grid_maximum(v, p.alpha);
    CHECK(res.achieved_trace >= grid.trace - 1e-12);
    CHECK(std::abs(res.value - h_alpha_beta(grid.trace, p.alpha, p.beta)) <= 1e-4);
    // minimizer reproduces the value and is real
    CHECK(is_real_state(res.minimizer));
    CHECK(std::abs(res.value - unified_relative_entropy(bloch_to_density(v), res.minimizer, {p.alpha, p.beta})) <=
          1e-10);
  }
}

TEST_CASE("me numeric and spectral paths") {
  const MonotoneParams half{0.5, 0.5};
  const auto real = random_real_density(3, 3);
  const auto rr = me_numeric(real, half, {});
  CHECK(rr.value == 0.0);
  CHECK(rr.minimizer.mat() == real.mat());

  const auto w = me_numeric(werner(0.5), half, {});
  CHECK(w.value == Approx(kWernerHalfMe).epsilon(1e-9));
  CHECK(w.achieved_trace == Approx(kWernerHalfMeTrace).epsilon(1e-9));
  CHECK(is_real_state(w.minimizer));
  const auto ws = me_spectral(werner(0.5), half);
  CHECK(ws.value == Approx(kWernerHalfMe).epsilon(1e-11));
  CHECK(ws.achieved_trace == Approx(kWernerHalfMeTrace).epsilon(1e-13));

  // two identical blocks collapse to the single-block value
  const auto one = bloch_to_density({0, 0.5, 0});
  CHECK(std::abs(me_numeric(direct_sum(0.5, one, one), half, {}).value - kHalfR2Me) <= 1e-6);

  Rng rng(21);
  for (int t = 0; t < 10; ++t) {
    const auto v = random_bloch(rng);
    const MonotoneParams p{rng.uniform(0.05, 0.95), rng.uniform(0.05, 1.0)};
    const auto rho = bloch_to_density(v);
    const double closed = me_qubit_closed_form(v, p).value;
    CHECK(std::abs(me_numeric(rho, p, {}).value - closed) <= 1e-6);
    CHECK(std::abs(me_spectral(rho, p).value - closed) <= 1e-10);
    // never above the value at the symmetrized state
    const DensityMatrix sym(0.5 * (rho.mat() + transpose(rho.mat())));
    CHECK(me_numeric(rho, p, {}).value <= unified_relative_entropy(rho, sym, {p.alpha, p.beta}) + 1e-9);
  }
  for (int t = 0; t < 10; ++t) {
    const auto rho = random_density(3, rng);
    const MonotoneParams p{rng.uniform(0.05, 0.95), rng.uniform(0.05, 1.0)};
    CHECK(std::abs(me_numeric(rho, p, {}).value - me_spectral(rho, p).value) <= 1e-6);
  }
}

TEST_CASE("me numeric is deterministic per seed") {
  OptimizerConfig cfg;
  cfg.rng_seed = 4;
  const auto rho = random_density(3, 8);
  const auto a = me_numeric(rho, {0.4, 0.6}, cfg), b = me_numeric(rho, {0.4, 0.6}, cfg);
  CHECK(a.value == b.value);
  CHECK(a.minimizer.mat() == b.minimizer.mat());
  cfg.restarts = 0;
  CHECK_THROWS_AS(me_numeric(rho, {0.4, 0.6}, cfg), ParamOutOfRange);
}

TEST_CASE("me dispatch") {
  const MonotoneParams p{0.3, 0.7};
  const auto rho = bloch_to_density({0.2, 0.5, -0.3});
  const auto a = me(rho, p, {});
  const auto b = me_qubit_closed_form(density_to_bloch(rho), p);
  CHECK(a.value == b.value);
  CHECK(a.method == MeMethod::qubit_analytic);
  CHECK(me(werner(0.5), p, {}).method == MeMethod::spectral);
  for (int i = 0; i <= 10; ++i) {
    const double v = me(werner(i / 10.0), p, {}).value;
    CHECK(std::isfinite(v));
    CHECK(v >= 0.0);
  }
  CHECK(me(bloch_to_density({0, 0, 0}), {0.3, 0.7}, {}).value == 0.0);
}

TEST_CASE("comparison measures") {
  const auto real = random_real_density(3, 2);
  CHECK(std::abs(m_relative_entropy(real)) < 1e-12);
  CHECK(m_tsallis(real, 0.4) == 0.0);
  CHECK(m_alpha_z(real, {0.6, 0.7}) == 0.0);
  const auto y = bloch_to_density({0, 1, 0});
  for (double u : {0.1, 0.5, 0.9}) CHECK(m_tsallis(y, u) == Approx(1.0));
  CHECK(m_relative_entropy(y) == Approx(1.0));
  CHECK_THROWS_AS(m_tsallis(y, 1.0), ParamOutOfRange);

  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const auto rho = random_density(3, rng);
    const double a = rng.uniform(0.05, 0.95);
    CHECK(mh(rho, {a, 1.0}) == Approx(m_tsallis(rho, a) / (1.0 - a)).epsilon(1e-12));
    CHECK(m_relative_entropy(rho) >= -1e-10);
    CHECK(m_alpha_z(rho, {a, std::max(a, 1.0 - a)}) >= -1e-10);
  }
}

TEST_CASE("Werner formulas") {
  const MonotoneParams half{0.5, 0.5};
  CHECK(werner_linear_entropy(0.0) == 0.75);
  CHECK(werner_linear_entropy(1.0) == 0.0);
  CHECK_THROWS_AS(werner_linear_entropy(1.5), ParamOutOfRange);
  for (int i = 0; i <= 20; ++i) {
    const double k = i / 20.0;
    CHECK(werner_linear_entropy(k) == Approx(1.0 - purity(werner(k))).epsilon(1e-12));
    CHECK(werner_mh_spectral_form(k, half) == Approx(mh(werner(k), half)).epsilon(1e-12));
    CHECK(std::abs(mh(isotropic((3 * k + 1) / 4), half) - mh(werner(k), half)) <= 1e-9);
  }
  // the quoted closed form, evaluated literally
  CHECK(werner_mh_closed_form(0.5, half) == Approx(0.1957739348).epsilon(1e-9));
  CHECK(werner_mh_closed_form(1.0, half) == Approx(1.1715728752538).epsilon(1e-12));
  CHECK(werner_mh_closed_form(0.0, half) == Approx(0.0).epsilon(1e-15));
}

TEST_CASE("monotone invariants on random states") {
  Rng rng(40);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + rng.index(3);
    const MonotoneParams p{rng.uniform(0.05, 0.95), rng.uniform(0.05, 1.0)};
    const auto rho = random_density(d, rng);
    CHECK(mh(rho, p) > 1e-9);
    CHECK(me(rho, p, {}).value > 1e-9);
    CHECK(std::abs(mh(random_real_density(d, rng), p)) <= 1e-9);
    // real orthogonal invariance
    const auto o = random_real_kraus(d, 1, rng);
    const auto rotated = apply_channel(rho, o);
    CHECK(std::abs(mh(rotated, p) - mh(rho, p)) <= 1e-9);
    CHECK(std::abs(me(rotated, p, {}).value - me(rho, p, {}).value) <= 1e-9);
  }
}
