#pragma once

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace aucint {

// Families of cut-point weight distributions used to aggregate AUC(t) into a
// single index. The first three are fitted from the observed gold standard;
// the last three are fixed analytic forms used for reductions and tests.
enum class WeightKind {
  UniformAroundMean,  // uniform on (mean - sd, mean + sd)
  NormalFit,          // normal with the sample mean and sd
  KernelFit,          // Gaussian kernel density estimate over the sample
  Degenerate,         // all mass at one cut point
  DiscreteMass,       // finite list of atoms with masses
  EmpiricalCdf,       // one atom of mass 1/n at each observation
};

std::string to_string(WeightKind kind);

// A cut-point weight distribution, addressed through its CDF so that both
// continuous and atom-bearing families integrate through the same code path.
class CutWeight {
 public:
  static CutWeight uniform_around_mean(double mu, double sigma);
  static CutWeight normal_fit(double mu, double sigma);
  static CutWeight kernel_fit(std::vector<double> sample, double bandwidth);
  static CutWeight degenerate(double c0);
  static CutWeight discrete_mass(std::vector<double> points,
                                 std::vector<double> masses);
  static CutWeight empirical_cdf(std::vector<double> sample);

  WeightKind kind() const { return kind_; }

  // Right-continuous CDF: W(t) = P(C <= t).
  double cdf(double t) const;

  // Density for the continuous families; 0 everywhere for atom-bearing ones.
  double pdf(double t) const;

  // Fitted location/scale (continuous families).
  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  // Kernel bandwidth (KernelFit only).
  double bandwidth() const { return bandwidth_; }
  // The single cut point (Degenerate only).
  double atom() const { return c0_; }

 private:
  CutWeight() = default;

  WeightKind kind_ = WeightKind::Degenerate;
  double mu_ = 0.0;
  double sigma_ = 1.0;
  double bandwidth_ = 0.0;
  double c0_ = 0.0;
  std::vector<double> points_;  // kernel/empirical sample or discrete atoms
  std::vector<double> masses_;  // DiscreteMass only
};

// The usual kernel density bandwidth 1.06 * sd * n^(-1/5).
double silverman_bandwidth(const Eigen::VectorXd& z);

// Fits a weight of the requested kind from the gold standard values. The
// bandwidth override only applies to KernelFit; Degenerate and DiscreteMass
// have nothing to fit and must be built through their constructors.
CutWeight fit_weight(WeightKind kind, const Eigen::VectorXd& z,
                     std::optional<double> bandwidth = std::nullopt);

// A right-continuous step function: value values[k] on [breaks[k-1],
// breaks[k]) with values[0] before the first break and values.back() from the
// last break on.
struct StepFunction {
  std::vector<double> breaks;  // strictly increasing
  std::vector<double> values;  // breaks.size() + 1

  double value_at(double t) const;       // value on the interval containing t
  double value_left_of(double t) const;  // left limit at t
};

void validate(const StepFunction& f);

// Exact integral of a step function against a weight distribution, as a sum
// of interval values times CDF increments. An atom sitting exactly on a
// breakpoint is paired with the interval to its left (the CDF is
// right-continuous, so the increment ending at the breakpoint picks it up).
double integrate_step(const StepFunction& f, const CutWeight& w);

}  // namespace aucint
