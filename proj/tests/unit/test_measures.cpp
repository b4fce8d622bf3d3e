#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "aucint/errors.hpp"
#include "aucint/mathutil.hpp"
#include "aucint/measures.hpp"
#include "aucint/rng.hpp"
#include "aucint/simgen.hpp"
#include "test_util.hpp"

using aucint::CutWeight;
using aucint::Dataset;
using aucint::StreamRng;
using aucint::WeightKind;
using aucint::auc_at_cut;
using aucint::auc_combined;
using aucint::auc_integrated;
using aucint::auc_integrated_empirical;
using aucint::auc_smoothed;
using aucint::classical_auc;
using aucint::fit_weight;
using aucint::sweep_cuts;
using aucint::theta_obuchowski;
using testutil::make_dataset;
using testutil::vec;

TEST_CASE("auc_at_cut examples") {
  const Eigen::VectorXd y = vec({1, 3, 2, 4});
  const Eigen::VectorXd z = vec({0, 0, 1, 1});
  CHECK(auc_at_cut(y, z, 0.5) == 0.75);      // one discordant pair of four
  CHECK(auc_at_cut(y, z, 2.0) == 0.5);       // no cases left
  CHECK(auc_at_cut(y, z, -1.0) == 0.5);      // no controls
  CHECK(auc_at_cut(y, y, 2.5) == 1.0);       // perfect separation
  CHECK(auc_at_cut(vec({1, 2, 2, 2}), z, 0.5) == 0.75);  // ties at half credit
  CHECK_THROWS_AS(auc_at_cut(vec({1, 2}), vec({1, 2, 3}), 0.5),
                  std::invalid_argument);
}

TEST_CASE("auc_at_cut equals the brute-force definition on random data") {
  StreamRng rng(21);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + int(rng.uniform_index(25));
    const bool ties = rep % 2 == 0;
    const Eigen::VectorXd y = testutil::random_vector(rng, n, ties);
    const Eigen::VectorXd z = testutil::random_vector(rng, n, ties);
    const double c = ties ? double(rng.uniform_index(6)) - 0.5 : rng.normal();
    CHECK(auc_at_cut(y, z, c) == testutil::brute_auc_at_cut(y, z, c));
  }
}

TEST_CASE("sweep_cuts on the identity example") {
  const Eigen::VectorXd v = vec({1, 2, 3});
  const auto res = sweep_cuts(v, v);
  REQUIRE(res.cut.breaks == std::vector<double>{1, 2, 3});
  REQUIRE(res.cut.values.size() == 4);
  CHECK(res.cut.values[0] == 0.5);  // below all data: no controls
  CHECK(res.cut.values[1] == 1.0);
  CHECK(res.cut.values[2] == 1.0);
  CHECK(res.cut.values[3] == 0.5);  // above all data: no cases
  CHECK(res.group_sizes[0] == std::array<Eigen::Index, 2>{3, 0});
  CHECK(res.group_sizes[1] == std::array<Eigen::Index, 2>{2, 1});
  CHECK(res.group_sizes[3] == std::array<Eigen::Index, 2>{0, 3});
}

TEST_CASE("sweep_cuts equals the brute force exactly, ties included") {
  StreamRng rng(22);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + int(rng.uniform_index(29));
    const bool ties = rep % 3 != 0;
    const Eigen::VectorXd y = testutil::random_vector(rng, n, ties);
    const Eigen::VectorXd z = testutil::random_vector(rng, n, ties);
    const auto res = sweep_cuts(y, z);
    const auto brute = testutil::brute_cut_values(y, z);
    REQUIRE(res.cut.values.size() == brute.size());
    for (std::size_t k = 0; k < brute.size(); ++k)
      CHECK(res.cut.values[k] == brute[k]);  // bit-exact
  }
}

TEST_CASE("auc_integrated is one for a perfect marker under an interior weight") {
  const Eigen::VectorXd v = vec({1, 2, 3});
  // Uniform support (mean - sd, mean + sd) = (1, 3) carries no tail mass.
  const auto est = auc_integrated(v, v, fit_weight(WeightKind::UniformAroundMean, v));
  CHECK(est.value == 1.0);
  CHECK(est.weight == WeightKind::UniformAroundMean);
}

TEST_CASE("auc_integrated with a degenerate weight reduces to auc_at_cut") {
  StreamRng rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 3 + int(rng.uniform_index(20));
    const Eigen::VectorXd y = testutil::random_vector(rng, n, rep % 2 == 0);
    const Eigen::VectorXd z = testutil::random_vector(rng, n, rep % 2 == 0);
    const double c = rng.normal();
    CHECK(auc_integrated(y, z, CutWeight::degenerate(c)).value ==
          auc_at_cut(y, z, c));
  }
}

TEST_CASE("empirical integrated index worked examples") {
  // Perfect 3-point marker: cut intervals left of each observation have AUC
  // 1/2, 1, 1, so the empirical average is 5/6.
  const Eigen::VectorXd v = vec({1, 2, 3});
  CHECK(auc_integrated_empirical(v, v).value == doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  // Two subjects: values 1/2 and 1 average to 3/4.
  const Eigen::VectorXd two = vec({1, 2});
  CHECK(auc_integrated_empirical(two, two).value == 0.75);
}

TEST_CASE("empirical integrated index equals the direct average of left limits") {
  StreamRng rng(24);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = 2 + int(rng.uniform_index(25));
    const Eigen::VectorXd y = testutil::random_vector(rng, n, rep % 2 == 0);
    const Eigen::VectorXd z = testutil::random_vector(rng, n, rep % 2 == 0);
    const auto sweep = sweep_cuts(y, z);
    double direct = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) direct += sweep.cut.value_left_of(z[i]);
    direct /= double(n);
    CHECK(auc_integrated_empirical(y, z).value == doctest::Approx(direct).epsilon(1e-14));
  }
}

TEST_CASE("independent score sits near one half") {
  aucint::SimSpec spec;
  aucint::BivariateNormalDesign g;
  g.rho = 0.0;
  spec.design = g;
  spec.n = 100;
  spec.seed = 99;
  const Dataset d = aucint::generate(spec, 0);
  const auto est = auc_integrated(d.x.col(0), d.z, fit_weight(WeightKind::NormalFit, d.z));
  CHECK(std::abs(est.value - 0.5) < 0.15);
}

TEST_CASE("smoothed index four-point example") {
  // Degenerate weight at 1/2 splits (1,2),(3,4) from scores (2,1,4,3); the
  // four sigmoid comparisons at h = 1 average to about 0.861307.
  const Eigen::VectorXd y = vec({2, 1, 4, 3});
  const Eigen::VectorXd z = vec({0, 0, 1, 1});
  const CutWeight w = CutWeight::degenerate(0.5);
  const double expected =
      (aucint::sigmoid(4.0 - 2.0) + aucint::sigmoid(4.0 - 1.0) +
       aucint::sigmoid(3.0 - 2.0) + aucint::sigmoid(3.0 - 1.0)) / 4.0;
  CHECK(auc_smoothed(y, z, w, 1.0).value == doctest::Approx(expected).epsilon(1e-15));
  CHECK(expected == doctest::Approx(0.8613067153520506).epsilon(1e-12));
}

TEST_CASE("smoothed index equals its interval decomposition") {
  StreamRng rng(25);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 3 + int(rng.uniform_index(18));
    const Eigen::VectorXd y = testutil::random_vector(rng, n, rep % 2 == 0);
    Eigen::VectorXd z = testutil::random_vector(rng, n, rep % 3 == 0);
    if (z.minCoeff() == z.maxCoeff()) z[0] += 1.0;  // keep the fit well-posed
    const double h = 0.2 + rng.uniform();
    std::vector<CutWeight> ws;
    ws.push_back(fit_weight(WeightKind::NormalFit, z));
    ws.push_back(fit_weight(WeightKind::EmpiricalCdf, z));
    ws.push_back(CutWeight::degenerate(z.mean()));
    for (const CutWeight& w : ws) {
      CHECK(auc_smoothed(y, z, w, h).value ==
            doctest::Approx(testutil::brute_smoothed(y, z, w, h)).epsilon(1e-12));
    }
  }
}

TEST_CASE("smoothed index approaches the hard index as h shrinks") {
  StreamRng rng(26);
  const int n = 30;
  Eigen::VectorXd y(n), z(n);
  for (int i = 0; i < n; ++i) {
    // Keep score gaps away from zero so the sigmoid saturates.
    y[i] = double(rng.uniform_index(20)) * 0.5;
    z[i] = rng.normal();
  }
  const CutWeight w = fit_weight(WeightKind::NormalFit, z);
  const double hard = auc_integrated(y, z, w).value;
  // Tied scores keep the sigmoid at exactly 1/2, matching the tie credit.
  CHECK(auc_smoothed(y, z, w, 1e-4).value == doctest::Approx(hard).epsilon(1e-6));
}

TEST_CASE("smoothed index flattens to one half as h grows") {
  StreamRng rng(27);
  const int n = 40;
  Eigen::VectorXd y(n), z(n);
  for (int i = 0; i < n; ++i) {
    y[i] = rng.normal();
    z[i] = y[i] + 0.2 * rng.normal();
  }
  const CutWeight w = fit_weight(WeightKind::NormalFit, z);
  CHECK(std::abs(auc_smoothed(y, z, w, 1e7).value - 0.5) < 1e-3);
}

TEST_CASE("weight mass outside the data range contributes one half") {
  const Eigen::VectorXd y = vec({3, 1, 4, 1, 5});
  const Eigen::VectorXd z = vec({0, 1, 2, 3, 4});
  const CutWeight w = CutWeight::degenerate(100.0);
  CHECK(auc_integrated(y, z, w).value == 0.5);
  CHECK(auc_smoothed(y, z, w, 1.0).value == 0.5);
}

TEST_CASE("auc_combined with one variable matches the single-score index") {
  StreamRng rng(28);
  Eigen::MatrixXd x(30, 1);
  Eigen::VectorXd z(30);
  for (int i = 0; i < 30; ++i) {
    x(i, 0) = rng.normal();
    z[i] = rng.normal();
  }
  const Dataset d = make_dataset(x, z);
  const CutWeight w = fit_weight(WeightKind::KernelFit, z);
  CHECK(auc_combined(d, vec({1}), w).value == auc_integrated(x.col(0), z, w).value);
  CHECK_THROWS_AS(auc_combined(d, vec({0}), w), std::invalid_argument);
}

TEST_CASE("hard index is invariant to positive scaling of the combination") {
  StreamRng rng(29);
  Eigen::MatrixXd x(25, 3);
  Eigen::VectorXd z(25);
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 3; ++j) x(i, j) = rng.normal();
    z[i] = x(i, 0) + rng.normal();
  }
  const Dataset d = make_dataset(x, z);
  const CutWeight w = fit_weight(WeightKind::NormalFit, z);
  const Eigen::VectorXd l = vec({1.0, -0.5, 0.25});
  const double base = auc_combined(d, l, w).value;
  CHECK(auc_combined(d, 2.0 * l, w).value == base);  // power of two: bit-exact
  CHECK(auc_combined(d, 3.0 * l, w).value == doctest::Approx(base).epsilon(1e-15));
}

TEST_CASE("smoothed index is invariant to joint scaling of l and h") {
  StreamRng rng(30);
  Eigen::MatrixXd x(25, 3);
  Eigen::VectorXd z(25);
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 3; ++j) x(i, j) = rng.normal();
    z[i] = x(i, 1) + rng.normal();
  }
  const Dataset d = make_dataset(x, z);
  const CutWeight w = fit_weight(WeightKind::KernelFit, z);
  const Eigen::VectorXd l = vec({0.8, 1.0, -0.3});
  const double h = 0.7;
  const double base = auc_combined(d, l, w, true, h).value;
  for (const double k : {2.0, 3.0, 17.5}) {
    CHECK(auc_combined(d, k * l, w, true, k * h).value ==
          doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("monotone transformations leave the hard indexes unchanged") {
  StreamRng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 3 + int(rng.uniform_index(20));
    const Eigen::VectorXd y = testutil::random_vector(rng, n, rep % 2 == 0);
    const Eigen::VectorXd z = testutil::random_vector(rng, n, rep % 2 == 1);
    // Element-wise transforms: vectorized exp can differ from the scalar
    // tail in the last ulp, which is enough to break an exact tie.
    const Eigen::VectorXd y_cubed =
        y.unaryExpr([](double v) { return v * v * v; });
    const Eigen::VectorXd y_exp =
        y.unaryExpr([](double v) { return std::exp(v); });
    const CutWeight w = fit_weight(WeightKind::EmpiricalCdf, z);
    const double base = auc_integrated(y, z, w).value;
    CHECK(auc_integrated(y_cubed, z, w).value == base);
    CHECK(auc_integrated(y_exp, z, w).value == base);
    CHECK(theta_obuchowski(y_cubed, z).value == theta_obuchowski(y, z).value);
  }
}

TEST_CASE("subject order never affects the indexes") {
  StreamRng rng(32);
  const int n = 40;
  Eigen::VectorXd y(n), z(n);
  for (int i = 0; i < n; ++i) {
    y[i] = rng.normal();
    z[i] = 0.5 * y[i] + rng.normal();
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.uniform_index(std::size_t(i) + 1)]);
  Eigen::VectorXd yp(n), zp(n);
  for (int i = 0; i < n; ++i) {
    yp[i] = y[perm[std::size_t(i)]];
    zp[i] = z[perm[std::size_t(i)]];
  }
  for (const WeightKind kind :
       {WeightKind::UniformAroundMean, WeightKind::NormalFit,
        WeightKind::KernelFit, WeightKind::EmpiricalCdf}) {
    const double a = auc_integrated(y, z, fit_weight(kind, z)).value;
    const double b = auc_integrated(yp, zp, fit_weight(kind, zp)).value;
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
  }
  CHECK(auc_smoothed(y, z, fit_weight(WeightKind::NormalFit, z), 0.5).value ==
        doctest::Approx(auc_smoothed(yp, zp, fit_weight(WeightKind::NormalFit, zp), 0.5).value)
            .epsilon(1e-12));
  CHECK(theta_obuchowski(y, z).value == theta_obuchowski(yp, zp).value);
}

TEST_CASE("theta worked examples") {
  // Four subjects, two gold ties: 4 concordant pairs and 2 tie pairs out of
  // 6, so (2*4 + 2) / 12 = 5/6.
  CHECK(theta_obuchowski(vec({1, 2, 3, 4}), vec({0, 0, 1, 1})).value ==
        doctest::Approx(5.0 / 6.0).epsilon(1e-15));
  CHECK(theta_obuchowski(vec({1, 2, 3}), vec({1, 2, 3})).value == 1.0);
  CHECK(theta_obuchowski(vec({5, 5, 5}), vec({1, 2, 3})).value == 0.5);
  // Reversed ranking: everything discordant.
  CHECK(theta_obuchowski(vec({3, 2, 1}), vec({1, 2, 3})).value == 0.0);
}

TEST_CASE("theta matches the known population value under correlation") {
  aucint::SimSpec spec;
  aucint::BivariateNormalDesign g;
  g.rho = 0.5;
  spec.design = g;
  spec.n = 2000;
  spec.seed = 7;
  const Dataset d = aucint::generate(spec, 0);
  const double limit = 0.5 + std::asin(0.5) / aucint::kPi;
  CHECK(theta_obuchowski(d.x.col(0), d.z).value ==
        doctest::Approx(limit).epsilon(0.03));
}

TEST_CASE("classical_auc examples and errors") {
  CHECK(classical_auc(vec({1, 2, 3, 4}), {1, 0, 1, 0}) == 0.25);
  CHECK(classical_auc(vec({1, 2, 3, 4}), {0, 0, 1, 1}) == 1.0);
  CHECK(classical_auc(vec({1, 2, 2, 2}), {0, 0, 1, 1}) == 0.75);
  CHECK_THROWS_AS(classical_auc(vec({1, 2}), {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(classical_auc(vec({1, 2}), {0, 2}), std::invalid_argument);
}

TEST_CASE("binary gold with a degenerate weight reduces to the classical AUC") {
  StreamRng rng(33);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 4 + int(rng.uniform_index(30));
    Eigen::VectorXd y(n), z(n);
    std::vector<int> labels(std::size_t(n), 0);
    bool both = false;
    for (int i = 0; i < n; ++i) {
      y[i] = rep % 2 == 0 ? double(rng.uniform_index(6)) : rng.normal();
      labels[std::size_t(i)] = int(rng.uniform_index(2));
      z[i] = double(labels[std::size_t(i)]);
    }
    both = z.minCoeff() == 0.0 && z.maxCoeff() == 1.0;
    if (!both) {
      labels[0] = 0;
      labels[1] = 1;
      z[0] = 0.0;
      z[1] = 1.0;
    }
    const double c0 = 0.1 + 0.8 * rng.uniform();  // anywhere strictly between codes
    CHECK(auc_integrated(y, z, CutWeight::degenerate(c0)).value ==
          classical_auc(y, labels));
  }
}

TEST_CASE("default smoothing bandwidth follows the cube-root rule") {
  StreamRng rng(34);
  Eigen::VectorXd y(50);
  for (int i = 0; i < 50; ++i) y[i] = rng.normal() * 2.5;
  CHECK(aucint::default_smooth_bandwidth(y) ==
        aucint::sample_sd(y) * std::pow(50.0, -1.0 / 3.0));
  CHECK_THROWS_AS(aucint::default_smooth_bandwidth(vec({1, 1, 1})),
                  aucint::NumericError);
}
