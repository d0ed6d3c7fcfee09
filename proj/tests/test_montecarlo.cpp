// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "test_helpers.hpp"
#include "traincap/capacity.hpp"
#include "traincap/errors.hpp"
#include "traincap/montecarlo.hpp"

using namespace traincap;
using testing::random_spd;
using testing::rel_frobenius;
using testing::sample_cov_2;

TEST_CASE("SplitMix64 matches the reference sequence") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);

  SplitMix64 other(42);
  CHECK(other.next() == 0xBDD732262FEB6E95ull);
}

TEST_CASE("unit uniforms stay inside the half-open interval") {
  SplitMix64 rng(7);
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.next_unit();
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
  }
}

TEST_CASE("GaussianSampler implements the documented transform") {
  // Two normals consume exactly two uniforms: radius from the first, angle
  // from the second, cosine variate first.
  SplitMix64 uniforms(99);
  const double u1 = uniforms.next_unit();
  const double u2 = uniforms.next_unit();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;

  GaussianSampler gauss(99);
  CHECK(gauss.next() == radius * std::cos(angle));
  CHECK(gauss.next() == radius * std::sin(angle));
}

TEST_CASE("GaussianSampler moments") {
  GaussianSampler gauss(5);
  const int n = 100000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = gauss.next();
    sum += g;
    sum_sq += g * g;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) < 0.02);
  CHECK(var == doctest::Approx(1.0).epsilon(0.03));
}

TEST_CASE("covariance_factor reproduces the covariance") {
  SUBCASE("positive definite") {
    const ChannelStats stats(sample_cov_2());
    const MatX f = covariance_factor(stats);
    CHECK(rel_frobenius(f * f.transpose(), stats.covariance().matrix()) <
          1e-14);
  }
  SUBCASE("singular positive semidefinite") {
    MatX rank_one(2, 2);
    rank_one << 1.0, 1.0, 1.0, 1.0;
    const ChannelStats stats{SymMatrixX(rank_one)};
    const MatX f = covariance_factor(stats);
    CHECK(rel_frobenius(f * f.transpose(), rank_one) < 1e-12);
  }
}

TEST_CASE("sample_gaussian_vector is deterministic given the generator state") {
  GaussianSampler a(3);
  GaussianSampler b(3);
  const VecX va = sample_gaussian_vector(4, a);
  const VecX vb = sample_gaussian_vector(4, b);
  CHECK(va.size() == 4);
  CHECK((va - vb).norm() == 0.0);
}

TEST_CASE("simulation reports are bit-identical for equal seeds") {
  const SimConfig config{ChannelStats(sample_cov_2()), LinkBudget(100.0, 100),
                         TrainingPlan{4}, 77, 4000};
  const SimReport a = run_estimation_sim(config);
  const SimReport b = run_estimation_sim(config);
  CHECK((a.empirical_c_hat - b.empirical_c_hat).norm() == 0.0);
  CHECK((a.empirical_c_tilde - b.empirical_c_tilde).norm() == 0.0);
  CHECK((a.cross_cov - b.cross_cov).norm() == 0.0);
  CHECK(a.frobenius_rel_err_c_tilde == b.frobenius_rel_err_c_tilde);
  CHECK(a.num_trials == b.num_trials);
  CHECK(a.seed == b.seed);

  const SimConfig reseeded{config.stats, config.budget, config.plan, 78, 4000};
  const SimReport c = run_estimation_sim(reseeded);
  CHECK((a.empirical_c_tilde - c.empirical_c_tilde).norm() > 0.0);
}

TEST_CASE("simulation statistics approach the analytic covariances") {
  const ChannelStats stats(sample_cov_2());
  const LinkBudget budget(100.0, 100);
  const TrainingPlan plan{4};
  const SimConfig config{stats, budget, plan, 1, 20000};
  const SimReport report = run_estimation_sim(config);

  CHECK(report.frobenius_rel_err_c_tilde < 0.1);
  const EstimatorStats analytic = estimator_stats(stats, budget, plan);
  CHECK(rel_frobenius(report.empirical_c_hat, analytic.estimate_cov.matrix()) <
        0.1);
}

TEST_CASE("zero power produces a zero estimate and the prior as error") {
  const ChannelStats stats(sample_cov_2());
  const SimConfig config{stats, LinkBudget(0.0, 100), TrainingPlan{4}, 9,
                         20000};
  const SimReport report = run_estimation_sim(config);
  CHECK(report.empirical_c_hat.norm() == 0.0);
  CHECK(report.cross_cov.norm() == 0.0);
  CHECK(rel_frobenius(report.empirical_c_tilde, stats.covariance().matrix()) <
        0.05);
}

TEST_CASE("trial counts must be positive") {
  const SimConfig config{ChannelStats(sample_cov_2()), LinkBudget(1.0, 10),
                         TrainingPlan{2}, 1, 0};
  CHECK_THROWS_AS(run_estimation_sim(config), InvalidConfigError);
}

TEST_CASE("halving the relative error needs about four times the trials") {
  // A single-seed error ratio has only a few effective degrees of freedom
  // and does not concentrate as the trial count grows, so the 1/sqrt(N)
  // rate is asserted on the geometric mean of the ratio across seeds.
  const ChannelStats stats(sample_cov_2());
  const LinkBudget budget(100.0, 100);
  const TrainingPlan plan{4};
  double sum_log_ratio = 0.0;
  const int num_seeds = 24;
  for (std::uint64_t seed = 1; seed <= num_seeds; ++seed) {
    const SimConfig small{stats, budget, plan, seed, 10000};
    const SimConfig large{stats, budget, plan, seed, 40000};
    const double ratio = run_estimation_sim(small).frobenius_rel_err_c_tilde /
                         run_estimation_sim(large).frobenius_rel_err_c_tilde;
    sum_log_ratio += std::log(ratio);
  }
  const double geometric_mean = std::exp(sum_log_ratio / num_seeds);
  CHECK(geometric_mean > 1.4);
  CHECK(geometric_mean < 3.0);
}

TEST_CASE("random spectra never beat equal power") {
  GaussianSampler gauss(55);
  SplitMix64 uniforms(56);
  for (int rep = 0; rep < 5; ++rep) {
    const ChannelStats stats(random_spd(2, gauss));
    const double power = testing::random_log_uniform(uniforms, 0.05, 20.0);
    const int t_tau = 1 + static_cast<int>(uniforms.next() % 5);
    const LinkBudget budget(power, t_tau + 3);
    const SymMatrixX c_tilde =
        error_covariance(stats, budget, TrainingPlan{t_tau});

    const AmgmOracleReport report =
        amgm_oracle(stats, c_tilde, power, 3, 200, uniforms.next());
    CHECK(report.max_random_mi <= report.equal_power_mi + 1e-9);
    CHECK(report.num_spectra == 200);
  }
}

TEST_CASE("oracle equal-power value matches the capacity formula") {
  const ChannelStats stats(sample_cov_2());
  const LinkBudget budget(2.0, 10);
  const TrainingPlan plan{4};
  const SymMatrixX c_tilde = error_covariance(stats, budget, plan);
  const AmgmOracleReport report =
      amgm_oracle(stats, c_tilde, budget.power, 6, 10, 3);
  const double cap = capacity(stats, budget, plan).bits_per_block;
  CHECK(report.equal_power_mi == doctest::Approx(cap).epsilon(1e-9));
}

TEST_CASE("a lopsided two-symbol spectrum loses to the equal split") {
  MatX one(1, 1);
  one << 1.0;
  const ChannelStats stats{SymMatrixX(one)};
  const LinkBudget budget(1.0, 3);
  const SymMatrixX c_tilde = error_covariance(stats, budget, TrainingPlan{1});
  // c_tilde is the scalar 0.5 here; both sides are small closed forms.
  CHECK(c_tilde(0, 0) == doctest::Approx(0.5).epsilon(1e-14));

  const double unequal = mutual_information_kronecker(InputSpectrum({2.0, 0.0}),
                                                      stats, c_tilde);
  const double equal = mutual_information_kronecker(InputSpectrum({1.0, 1.0}),
                                                    stats, c_tilde);
  CHECK(unequal == doctest::Approx(std::log2(3.0) - 1.0).epsilon(1e-12));
  CHECK(equal == doctest::Approx(2.0 * (1.0 - std::log2(1.5))).epsilon(1e-12));
  CHECK(unequal < equal);
}

TEST_CASE("forced equal spectrum ties the oracle to twelve digits") {
  const ChannelStats stats(sample_cov_2());
  const LinkBudget budget(3.0, 12);
  const TrainingPlan plan{5};
  const SymMatrixX c_tilde = error_covariance(stats, budget, plan);
  const AmgmOracleReport report =
      amgm_oracle(stats, c_tilde, budget.power, 7, 25, 11);
  const double direct = mutual_information_kronecker(
      InputSpectrum(std::vector<double>(7, budget.power)), stats, c_tilde);
  CHECK(std::abs(report.equal_power_mi - direct) < 1e-12);
}

TEST_CASE("oracle validates its arguments") {
  const ChannelStats stats(sample_cov_2());
  const SymMatrixX c_tilde =
      error_covariance(stats, LinkBudget(1.0, 10), TrainingPlan{2});
  CHECK_THROWS_AS(amgm_oracle(stats, c_tilde, 1.0, 1, 10, 0),
                  InvalidConfigError);
  CHECK_THROWS_AS(amgm_oracle(stats, c_tilde, 1.0, 3, 0, 0),
                  InvalidConfigError);
}
