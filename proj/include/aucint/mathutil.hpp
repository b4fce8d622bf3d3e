#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace aucint {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt1_2 = 0.70710678118654752440;

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x * kSqrt1_2); }

inline double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
}

inline double sigmoid(double u) { return 1.0 / (1.0 + std::exp(-u)); }

inline double sample_mean(const Eigen::VectorXd& v) {
  if (v.size() == 0) throw std::invalid_argument("sample_mean: empty vector");
  return v.mean();
}

// Sample standard deviation with the n-1 denominator.
inline double sample_sd(const Eigen::VectorXd& v) {
  const Eigen::Index n = v.size();
  if (n < 2) throw std::invalid_argument("sample_sd: need at least 2 values");
  const double m = v.mean();
  return std::sqrt((v.array() - m).square().sum() / double(n - 1));
}

inline double pearson_correlation(const Eigen::VectorXd& a,
                                  const Eigen::VectorXd& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw std::invalid_argument("pearson_correlation: bad lengths");
  const Eigen::ArrayXd da = a.array() - a.mean();
  const Eigen::ArrayXd db = b.array() - b.mean();
  const double denom = std::sqrt(da.square().sum() * db.square().sum());
  if (denom == 0.0)
    throw std::invalid_argument("pearson_correlation: zero variance");
  return (da * db).sum() / denom;
}

// Linear-interpolation quantile (the common "type 7" rule). Sorts a copy.
inline double quantile(std::vector<double> v, double p) {
  if (v.empty()) throw std::invalid_argument("quantile: empty sample");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile: p outside [0,1]");
  std::sort(v.begin(), v.end());
  const double h = (double(v.size()) - 1.0) * p;
  const std::size_t lo = std::size_t(h);
  if (lo + 1 >= v.size()) return v.back();
  const double frac = h - double(lo);
  return v[lo] + frac * (v[lo + 1] - v[lo]);
}

}  // namespace aucint
