#include <doctest.h>

#include <cmath>

#include "imaginarity/descriptor.hpp"
#include "imaginarity/errors.hpp"
#include "imaginarity/states.hpp"

using namespace imag;
using doctest::Approx;

namespace {
const cplx I{0.0, 1.0};
}

TEST_CASE("bloch states") {
  CHECK(max_abs_diff(bloch_to_density({0, 0, 0}).mat(), ComplexMatrix::identity(2) * cplx(0.5)) == 0.0);
  const ComplexMatrix y{{0.5, -0.5 * I}, {0.5 * I, 0.5}};
  CHECK(max_abs_diff(bloch_to_density({0, 1, 0}).mat(), y) < 1e-15);
  const ComplexMatrix fig{{0.75, cplx(0.25, -0.125)}, {cplx(0.25, 0.125), 0.25}};
  CHECK(max_abs_diff(bloch_to_density({0.5, 0.25, 0.5}).mat(), fig) < 1e-15);
  CHECK_THROWS_AS(bloch_to_density({1.0, 0.1, 0.0}), BlochOutOfBall);
  CHECK_THROWS_AS(density_to_bloch(random_density(3, 1)), DimMismatch);

  Rng rng(2);
  for (int t = 0; t < 1000; ++t) {
    const auto v = random_bloch(rng);
    const auto back = density_to_bloch(bloch_to_density(v));
    CHECK(std::abs(back.r1 - v.r1) <= 1e-12);
    CHECK(std::abs(back.r2 - v.r2) <= 1e-12);
    CHECK(std::abs(back.r3 - v.r3) <= 1e-12);
  }
  // conjugation flips r2
  const auto c = density_to_bloch(conjugate(bloch_to_density({0.3, 0.4, -0.5})));
  CHECK(c.r2 == Approx(-0.4));
  CHECK(c.r1 == Approx(0.3));
}

TEST_CASE("werner and isotropic families") {
  CHECK(max_abs_diff(werner(0).mat(), ComplexMatrix::identity(4) * cplx(0.25)) == 0.0);
  CHECK(is_real_state(werner(0)));
  CHECK(is_real_state(isotropic(0.25)));
  CHECK(purity(werner(1)) == Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(werner(1.1), ParamOutOfRange);
  CHECK_THROWS_AS(isotropic(-0.1), ParamOutOfRange);
  for (double k : {0.1, 0.4, 0.9}) {
    const auto w = werner(k).spectrum().values;
    CHECK(w[0] == Approx((1 - k) / 4).epsilon(1e-13));
    CHECK(w[2] == Approx((1 - k) / 4).epsilon(1e-13));
    CHECK(w[3] == Approx((1 + 3 * k) / 4).epsilon(1e-13));
    const auto s = isotropic((3 * k + 1) / 4).spectrum().values;
    for (std::size_t i = 0; i < 4; ++i) CHECK(s[i] == Approx(w[i]).epsilon(1e-13));
  }
}

TEST_CASE("remark1 state") {
  const auto rho = remark1_state();
  const auto half = ComplexMatrix::identity(2) * cplx(0.5);
  CHECK(max_abs_diff(partial_trace(rho, 2, 2, Keep::first).mat(), half) < 1e-15);
  CHECK(max_abs_diff(partial_trace(rho, 2, 2, Keep::second).mat(), half) < 1e-15);
  CHECK(purity(rho) == Approx(1.0));
  CHECK_FALSE(is_real_state(rho));
  CHECK(rho.mat()(0, 3) == cplx(0.0, -0.5));
}

TEST_CASE("pure states") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(purity(pure_state({s, s * I})) == Approx(1.0));
  CHECK_THROWS_AS(pure_state({1.0, 1.0}), NotNormalized);
}

TEST_CASE("random states") {
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    const std::size_t d = 1 + rng.index(5);
    const auto r = random_real_density(d, rng);
    CHECK(is_real_state(r));
    CHECK(max_abs_diff(r.mat(), transpose(r.mat())) == 0.0);
    CHECK(purity(random_pure(d, rng)) == Approx(1.0).epsilon(1e-12));
    double sum = 0.0;
    const auto full = random_density(d, rng);
    for (double x : full.spectrum().values) sum += x;
    CHECK(std::abs(sum - 1.0) <= 1e-12);
  }
  CHECK(random_density(3, 17).mat() == random_density(3, 17).mat());
  CHECK_FALSE(random_density(3, 17).mat() == random_density(3, 18).mat());
  CHECK(Rng::derive(1, 2) == Rng::derive(1, 2));
  CHECK(Rng::derive(1, 2) != Rng::derive(1, 3));
}

TEST_CASE("real Kraus sets") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto ch = random_real_kraus(3, 1 + seed % 3, seed);
    CHECK(ch.completeness_defect() <= 1e-10);
    for (const auto& k : ch.ops)
      for (auto x : k.entries()) CHECK(x.imag() == 0.0);
  }
  const auto o = random_real_kraus(3, 1, 5).ops.front();
  CHECK(max_abs_diff(transpose(o) * o, ComplexMatrix::identity(3)) < 1e-12);
}

TEST_CASE("channels") {
  const auto rho = random_density(3, 1);
  const KrausSet id{{ComplexMatrix::identity(3)}};
  CHECK(max_abs_diff(apply_channel(rho, id).mat(), rho.mat()) < 1e-15);

  const auto dephased = apply_channel(bloch_to_density({0, 1, 0}), dephasing_channel(2));
  CHECK(max_abs_diff(dephased.mat(), ComplexMatrix::identity(2) * cplx(0.5)) < 1e-15);
  CHECK(is_real_state(dephased));
  CHECK_THROWS_AS(apply_channel(random_density(2, 1), id), DimMismatch);

  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const auto r = random_density(3, rng);
    const auto ch = random_real_kraus(3, 1 + rng.index(3), rng);
    const auto out = apply_channel(r, ch);
    CHECK(max_abs_diff(apply_channel(conjugate(r), ch).mat(), conjugate(out.mat())) <= 1e-12);
    const auto outcomes = kraus_selective_outcomes(r, ch);
    double total = 0.0;
    ComplexMatrix mix(3);
    for (const auto& o : outcomes) {
      total += o.probability;
      mix += o.state.mat() * cplx(o.probability);
    }
    CHECK(std::abs(total - 1.0) <= 1e-10);
    CHECK(max_abs_diff(mix, out.mat()) <= 1e-10);
  }
}

TEST_CASE("selective outcomes on fixed inputs") {
  const auto rho = bloch_to_density({0, 0, 0});
  const auto one = kraus_selective_outcomes(rho, KrausSet{{ComplexMatrix::identity(2)}});
  REQUIRE(one.size() == 1);
  CHECK(one[0].probability == Approx(1.0));
  const auto two = kraus_selective_outcomes(rho, dephasing_channel(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].probability == Approx(0.5));
  CHECK(two[0].state.mat()(0, 0) == cplx(1.0));
  // zero-probability outcome dropped
  const auto up = bloch_to_density({0, 0, 1});
  CHECK(kraus_selective_outcomes(up, dephasing_channel(2)).size() == 1);
}

TEST_CASE("is_real_state") {
  CHECK(is_real_state(bloch_to_density({0, 0, 0})));
  CHECK_FALSE(is_real_state(bloch_to_density({0, 1, 0})));
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    auto v = random_bloch(rng);
    CHECK(is_real_state(bloch_to_density({v.r1, 0.0, v.r3})));
  }
}

TEST_CASE("JSON state descriptors") {
  CHECK(max_abs_diff(parse_state(std::string(R"({"bloch":[0,1,0]})")).mat(), bloch_to_density({0, 1, 0}).mat()) == 0.0);
  CHECK(parse_state(std::string(R"({"werner":0.5})")).mat() == werner(0.5).mat());
  CHECK(parse_state(std::string(R"({"isotropic":0.5})")).mat() == isotropic(0.5).mat());
  CHECK(parse_state(std::string(R"({"remark1":true})")).mat() == remark1_state().mat());
  const auto p = parse_state(std::string(R"({"pure":{"re":[0.6,0],"im":[0,0.8]}})"));
  CHECK(p.mat()(0, 1) == cplx(0.0, -0.48));
  const auto d = parse_state(std::string(R"({"dense":{"dim":2,"re":[[0.5,0],[0,0.5]],"im":[[0,-0.1],[0.1,0]]}})"));
  CHECK(d.mat()(0, 1) == cplx(0.0, -0.1));

  for (const char* bad : {R"({"bloch":[0,1]})", R"({"bloch":[0,1,0],"werner":1})", R"({})", R"([1,2])",
                          R"({"nope":1})", R"({"werner":"x"})", R"({"remark1":false})", R"({"dense":{"dim":2}})",
                          R"({"dense":{"dim":2,"re":[[1,0]]}})", "not json"}) {
    CHECK_THROWS_AS(parse_state(std::string(bad)), ParseError);
  }
  CHECK_THROWS_AS(parse_state(std::string(R"({"bloch":[1,1,0]})")), BlochOutOfBall);
  CHECK_THROWS_AS(parse_state(std::string(R"({"werner":2})")), ParamOutOfRange);

  const auto r = random_density(3, 7);
  const auto round = parse_state(to_dense_descriptor(r));
  CHECK(round.mat() == r.mat());
}
