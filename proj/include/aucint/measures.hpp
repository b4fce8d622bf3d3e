#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "aucint/dataset.hpp"
#include "aucint/weights.hpp"

namespace aucint {

enum class IndexMethod { Hard, Smooth, Theta, Classical };

// A diagnostic index value plus enough provenance to label report rows.
struct AucEstimate {
  double value = 0.5;
  IndexMethod method = IndexMethod::Hard;
  std::optional<WeightKind> weight;
  std::optional<double> smoothing_h;
};

// AUC(t) across every cut interval, produced by one sweep over the data.
// cut.breaks are the distinct gold-standard values; cut.values[k] is the AUC
// with all subjects below the k-th interval as controls and the rest as
// cases. group_sizes[k] = {cases, controls} on that interval.
struct SweepResult {
  StepFunction cut;
  std::vector<std::array<Eigen::Index, 2>> group_sizes;
};

// AUC of score y for discriminating z > c versus z <= c, with the tie value
// 1/2 and the convention 1/2 when either group is empty.
double auc_at_cut(const Eigen::VectorXd& y, const Eigen::VectorXd& z, double c);

// All cut AUCs in O(n log n) via rank counting.
SweepResult sweep_cuts(const Eigen::VectorXd& y, const Eigen::VectorXd& z);

// Integrated AUC: the cut AUC step function integrated against the weight.
AucEstimate auc_integrated(const Eigen::VectorXd& y, const Eigen::VectorXd& z,
                           const CutWeight& w);

// Integrated AUC against the empirical distribution of the observed gold
// standard (an atom of mass 1/n at each observation).
AucEstimate auc_integrated_empirical(const Eigen::VectorXd& y,
                                     const Eigen::VectorXd& z);

// Smoothed integrated AUC: every pairwise comparison goes through the
// sigmoid 1/(1+exp(-(y_i-y_j)/h)) instead of the 0/1/2 concordance kernel.
AucEstimate auc_smoothed(const Eigen::VectorXd& y, const Eigen::VectorXd& z,
                         const CutWeight& w, double h);

// Index of the combined score x*l. Smooth uses bandwidth h, defaulting to
// default_smooth_bandwidth of the combined score when unset.
AucEstimate auc_combined(const Dataset& d, const Eigen::VectorXd& l,
                         const CutWeight& w, bool smooth = false,
                         std::optional<double> h = std::nullopt);

// Concordance probability over all unordered subject pairs, ties (in either
// coordinate) counting 1/2.
AucEstimate theta_obuchowski(const Eigen::VectorXd& y,
                             const Eigen::VectorXd& z);

// Classical two-group AUC for 0/1 labels, same tie handling as auc_at_cut.
double classical_auc(const Eigen::VectorXd& y, const std::vector<int>& labels);

// Default sigmoid bandwidth sd(y) * n^(-1/3).
double default_smooth_bandwidth(const Eigen::VectorXd& y);

// Weights attached to ordered subject pairs (z_i > z_j) when the integrated
// index is rewritten as one sum over pairs: each pair picks up
// mass_k / (cases_k * controls_k) from every cut interval separating it.
// The table depends only on z and the weight, never on scores, so one table
// serves every objective and gradient evaluation during an optimization.
class PairWeightTable {
 public:
  PairWeightTable(const Eigen::VectorXd& z, const CutWeight& w);

  // Weight mass on the two outer intervals where a group is empty; it
  // contributes at the fixed value 1/2.
  double tail_mass() const { return tail_; }

  std::size_t pair_count() const { return pairs_.size(); }

  // Smoothed index of the given scores, bandwidth h.
  double smoothed_value(const Eigen::VectorXd& scores, double h) const;

  // Gradient of smoothed_value(x*l) with respect to l, given the projected
  // scores = x*l.
  Eigen::VectorXd smoothed_gradient(const Eigen::MatrixXd& x,
                                    const Eigen::VectorXd& scores,
                                    double h) const;

 private:
  struct Pair {
    std::int32_t hi;  // subject with the larger z
    std::int32_t lo;
    double weight;
  };
  std::vector<Pair> pairs_;
  double tail_ = 1.0;
  Eigen::Index n_ = 0;
};

}  // namespace aucint
