#pragma once

// Shared helpers for the unit suites: brute-force oracles written straight
// from the definitions (no rank tricks, no shared code with the library
// internals), plus small data builders. The oracles are deliberately dumb
// and quadratic; tests compare the fast implementations against them.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "aucint/dataset.hpp"
#include "aucint/rng.hpp"
#include "aucint/weights.hpp"

namespace testutil {

inline Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(Eigen::Index(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline aucint::Dataset make_dataset(const Eigen::MatrixXd& x,
                                    const Eigen::VectorXd& z) {
  aucint::Dataset d;
  d.x = x;
  d.z = z;
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    d.names.push_back("x" + std::to_string(j + 1));
  return d;
}

// Concordance kernel: 1, 1/2 on ties, 0.
inline double psi(double a, double b) {
  if (a > b) return 1.0;
  if (a == b) return 0.5;
  return 0.0;
}

// AUC at one cut directly from the definition.
inline double brute_auc_at_cut(const Eigen::VectorXd& y,
                               const Eigen::VectorXd& z, double c) {
  double num = 0.0;
  long long n1 = 0, n0 = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (z[i] > c) ++n1; else ++n0;
  }
  if (n1 == 0 || n0 == 0) return 0.5;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (z[i] <= c) continue;
    for (Eigen::Index j = 0; j < y.size(); ++j)
      if (z[j] <= c) num += psi(y[i], y[j]);
  }
  return num / (double(n1) * double(n0));
}

// All interval AUC values, using a representative cut per interval.
inline std::vector<double> brute_cut_values(const Eigen::VectorXd& y,
                                            const Eigen::VectorXd& z) {
  std::vector<double> distinct(z.data(), z.data() + z.size());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<double> values;
  values.push_back(brute_auc_at_cut(y, z, distinct.front() - 1.0));
  for (double c : distinct) values.push_back(brute_auc_at_cut(y, z, c));
  return values;
}

// Smoothed integrated index straight from its interval decomposition: the
// weight mass of each cut interval times the sigmoid-averaged comparison of
// the two groups it induces.
inline double brute_smoothed(const Eigen::VectorXd& y, const Eigen::VectorXd& z,
                             const aucint::CutWeight& w, double h) {
  std::vector<double> distinct(z.data(), z.data() + z.size());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const std::size_t m = distinct.size();

  double total = 0.0;
  double prev_cdf = 0.0;
  for (std::size_t k = 0; k <= m; ++k) {
    const double cdf = k < m ? w.cdf(distinct[k]) : 1.0;
    const double mass = cdf - prev_cdf;
    prev_cdf = cdf;
    if (mass == 0.0) continue;
    // Interval k: controls are z <= distinct[k-1]; k = 0 or k = m leaves a
    // group empty and contributes at 1/2.
    if (k == 0 || k == m) {
      total += 0.5 * mass;
      continue;
    }
    const double cut = distinct[k - 1];
    double s = 0.0;
    long long n1 = 0, n0 = 0;
    for (Eigen::Index i = 0; i < y.size(); ++i) (z[i] > cut ? n1 : n0) += 1;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
      if (z[i] <= cut) continue;
      for (Eigen::Index j = 0; j < y.size(); ++j)
        if (z[j] <= cut) s += 1.0 / (1.0 + std::exp(-(y[i] - y[j]) / h));
    }
    total += mass * s / (double(n1) * double(n0));
  }
  return total;
}

// Quadrature of f against a continuous weight, for checking integrate_step on
// the continuous families. The integrand jumps at the step's breakpoints (and,
// for the uniform weight, at the ends of its support), so a single global rule
// stalls at O(dt) accuracy there. Instead split the domain at every jump and
// run Simpson on each smooth piece, where f is a constant factor. `steps` is
// the total budget, shared across pieces.
inline double riemann_step_integral(const aucint::StepFunction& f,
                                    const aucint::CutWeight& w, double lo,
                                    double hi, int steps = 2000000) {
  std::vector<double> edges{lo, hi};
  for (double b : f.breaks)
    if (b > lo && b < hi) edges.push_back(b);
  if (w.kind() == aucint::WeightKind::UniformAroundMean) {
    for (double b : {w.mu() - w.sigma(), w.mu() + w.sigma()})
      if (b > lo && b < hi) edges.push_back(b);
  }
  std::sort(edges.begin(), edges.end());
  const int per_piece = std::max(64, int(steps / int(edges.size()))) & ~1;
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
    const double a = edges[k];
    const double b = edges[k + 1];
    if (!(b > a)) continue;
    const double dt = (b - a) / per_piece;
    // Endpoints nudged inward so a piece bordering a pdf jump only sees its
    // own side's values.
    const double nudge = (b - a) * 1e-9;
    double s = w.pdf(a + nudge) + w.pdf(b - nudge);
    for (int i = 1; i < per_piece; ++i)
      s += w.pdf(a + i * dt) * (i % 2 ? 4.0 : 2.0);
    total += f.value_at(0.5 * (a + b)) * s * dt / 3.0;
  }
  return total;
}

// Kolmogorov-Smirnov distance between a sample and a CDF.
template <typename Cdf>
double ks_distance(std::vector<double> sample, Cdf cdf) {
  std::sort(sample.begin(), sample.end());
  const double n = double(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double f = cdf(sample[i]);
    d = std::max(d, std::abs(f - double(i) / n));
    d = std::max(d, std::abs(f - double(i + 1) / n));
  }
  return d;
}

// Random vectors for property tests; integer support exercises ties.
inline Eigen::VectorXd random_vector(aucint::StreamRng& rng, int n,
                                     bool with_ties) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i)
    v[i] = with_ties ? double(rng.uniform_index(5)) : rng.normal();
  return v;
}

inline std::string write_temp_file(const std::string& tag,
                                   const std::string& content) {
  const std::string path = "aucint_test_" + tag + ".tmp";
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace testutil
