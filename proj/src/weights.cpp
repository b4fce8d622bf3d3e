#include "aucint/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "aucint/errors.hpp"
#include "aucint/mathutil.hpp"

namespace aucint {

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::UniformAroundMean: return "uniform";
    case WeightKind::NormalFit: return "normal";
    case WeightKind::KernelFit: return "kernel";
    case WeightKind::Degenerate: return "degenerate";
    case WeightKind::DiscreteMass: return "discrete";
    case WeightKind::EmpiricalCdf: return "empirical";
  }
  return "?";
}

CutWeight CutWeight::uniform_around_mean(double mu, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("uniform weight: sigma must be positive");
  CutWeight w;
  w.kind_ = WeightKind::UniformAroundMean;
  w.mu_ = mu;
  w.sigma_ = sigma;
  return w;
}

CutWeight CutWeight::normal_fit(double mu, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("normal weight: sigma must be positive");
  CutWeight w;
  w.kind_ = WeightKind::NormalFit;
  w.mu_ = mu;
  w.sigma_ = sigma;
  return w;
}

CutWeight CutWeight::kernel_fit(std::vector<double> sample, double bandwidth) {
  if (sample.empty()) throw std::invalid_argument("kernel weight: empty sample");
  if (!(bandwidth > 0.0))
    throw std::invalid_argument("kernel weight: bandwidth must be positive");
  CutWeight w;
  w.kind_ = WeightKind::KernelFit;
  w.points_ = std::move(sample);
  std::sort(w.points_.begin(), w.points_.end());
  w.bandwidth_ = bandwidth;
  const Eigen::Map<const Eigen::VectorXd> v(w.points_.data(),
                                            Eigen::Index(w.points_.size()));
  w.mu_ = v.mean();
  w.sigma_ = w.points_.size() > 1 ? sample_sd(v) : 0.0;
  return w;
}

CutWeight CutWeight::degenerate(double c0) {
  if (!std::isfinite(c0)) throw std::invalid_argument("degenerate weight: non-finite cut");
  CutWeight w;
  w.kind_ = WeightKind::Degenerate;
  w.c0_ = c0;
  return w;
}

CutWeight CutWeight::discrete_mass(std::vector<double> points,
                                   std::vector<double> masses) {
  if (points.empty() || points.size() != masses.size())
    throw std::invalid_argument("discrete weight: points and masses must match and be nonempty");
  std::vector<std::size_t> order(points.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  CutWeight w;
  w.kind_ = WeightKind::DiscreteMass;
  double total = 0.0;
  for (std::size_t i : order) {
    if (!std::isfinite(points[i]))
      throw std::invalid_argument("discrete weight: non-finite atom");
    if (!(masses[i] >= 0.0))
      throw std::invalid_argument("discrete weight: negative mass");
    if (!w.points_.empty() && points[i] == w.points_.back()) {
      w.masses_.back() += masses[i];
    } else {
      w.points_.push_back(points[i]);
      w.masses_.push_back(masses[i]);
    }
    total += masses[i];
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw std::invalid_argument("discrete weight: masses must sum to 1");
  return w;
}

CutWeight CutWeight::empirical_cdf(std::vector<double> sample) {
  if (sample.empty()) throw std::invalid_argument("empirical weight: empty sample");
  for (double v : sample)
    if (!std::isfinite(v)) throw std::invalid_argument("empirical weight: non-finite value");
  CutWeight w;
  w.kind_ = WeightKind::EmpiricalCdf;
  w.points_ = std::move(sample);
  std::sort(w.points_.begin(), w.points_.end());
  return w;
}

double CutWeight::cdf(double t) const {
  switch (kind_) {
    case WeightKind::UniformAroundMean: {
      const double lo = mu_ - sigma_, hi = mu_ + sigma_;
      if (t <= lo) return 0.0;
      if (t >= hi) return 1.0;
      return (t - lo) / (hi - lo);
    }
    case WeightKind::NormalFit:
      return normal_cdf((t - mu_) / sigma_);
    case WeightKind::KernelFit: {
      double s = 0.0;
      for (double p : points_) s += normal_cdf((t - p) / bandwidth_);
      return s / double(points_.size());
    }
    case WeightKind::Degenerate:
      return t >= c0_ ? 1.0 : 0.0;
    case WeightKind::DiscreteMass: {
      double s = 0.0;
      for (std::size_t i = 0; i < points_.size() && points_[i] <= t; ++i)
        s += masses_[i];
      return s;
    }
    case WeightKind::EmpiricalCdf: {
      const auto it = std::upper_bound(points_.begin(), points_.end(), t);
      return double(it - points_.begin()) / double(points_.size());
    }
  }
  return 0.0;
}

double CutWeight::pdf(double t) const {
  switch (kind_) {
    case WeightKind::UniformAroundMean: {
      const double lo = mu_ - sigma_, hi = mu_ + sigma_;
      return (t > lo && t < hi) ? 1.0 / (hi - lo) : 0.0;
    }
    case WeightKind::NormalFit:
      return normal_pdf((t - mu_) / sigma_) / sigma_;
    case WeightKind::KernelFit: {
      double s = 0.0;
      for (double p : points_) s += normal_pdf((t - p) / bandwidth_);
      return s / (double(points_.size()) * bandwidth_);
    }
    case WeightKind::Degenerate:
    case WeightKind::DiscreteMass:
    case WeightKind::EmpiricalCdf:
      return 0.0;
  }
  return 0.0;
}

double silverman_bandwidth(const Eigen::VectorXd& z) {
  if (z.size() < 2)
    throw std::invalid_argument("silverman_bandwidth: need at least 2 values");
  const double sd = sample_sd(z);
  return 1.06 * sd * std::pow(double(z.size()), -0.2);
}

CutWeight fit_weight(WeightKind kind, const Eigen::VectorXd& z,
                     std::optional<double> bandwidth) {
  if (z.size() == 0) throw std::invalid_argument("fit_weight: empty gold standard");
  switch (kind) {
    case WeightKind::UniformAroundMean:
    case WeightKind::NormalFit:
    case WeightKind::KernelFit: {
      if (z.size() < 2)
        throw std::invalid_argument("fit_weight: need at least 2 values");
      const double mu = z.mean();
      const double sd = sample_sd(z);
      if (sd == 0.0)
        throw NumericError("fit_weight: gold standard has zero variance");
      if (kind == WeightKind::UniformAroundMean)
        return CutWeight::uniform_around_mean(mu, sd);
      if (kind == WeightKind::NormalFit) return CutWeight::normal_fit(mu, sd);
      const double bw = bandwidth ? *bandwidth : silverman_bandwidth(z);
      return CutWeight::kernel_fit(
          std::vector<double>(z.data(), z.data() + z.size()), bw);
    }
    case WeightKind::EmpiricalCdf:
      return CutWeight::empirical_cdf(
          std::vector<double>(z.data(), z.data() + z.size()));
    case WeightKind::Degenerate:
    case WeightKind::DiscreteMass:
      throw std::invalid_argument(
          "fit_weight: " + to_string(kind) + " has nothing to fit; use the constructor");
  }
  throw std::invalid_argument("fit_weight: unknown kind");
}

double StepFunction::value_at(double t) const {
  const auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
  return values[std::size_t(it - breaks.begin())];
}

double StepFunction::value_left_of(double t) const {
  const auto it = std::lower_bound(breaks.begin(), breaks.end(), t);
  return values[std::size_t(it - breaks.begin())];
}

void validate(const StepFunction& f) {
  if (f.values.size() != f.breaks.size() + 1)
    throw std::invalid_argument("step function: need one more value than breaks");
  for (std::size_t k = 0; k < f.breaks.size(); ++k) {
    if (!std::isfinite(f.breaks[k]))
      throw std::invalid_argument("step function: non-finite break");
    if (k > 0 && !(f.breaks[k - 1] < f.breaks[k]))
      throw std::invalid_argument("step function: breaks must be strictly increasing");
  }
  for (double v : f.values)
    if (!std::isfinite(v)) throw std::invalid_argument("step function: non-finite value");
}

double integrate_step(const StepFunction& f, const CutWeight& w) {
  validate(f);
  double total = 0.0;
  double prev = 0.0;
  for (std::size_t k = 0; k < f.breaks.size(); ++k) {
    const double c = w.cdf(f.breaks[k]);
    total += f.values[k] * (c - prev);
    prev = c;
  }
  total += f.values.back() * (1.0 - prev);
  return total;
}

}  // namespace aucint
