#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

#include "aucint/dataset.hpp"
#include "aucint/weights.hpp"

namespace aucint {

enum class CombinationMethod { Ols, Lars, Tgdm };

// A linear combination of the candidate variables plus how it was produced.
struct CombinationResult {
  Eigen::VectorXd l;
  CombinationMethod method = CombinationMethod::Ols;

  // TGDM only.
  int anchor = -1;                        // index of the anchor variable
  std::vector<double> trace;              // objective after each iteration
  std::vector<Eigen::VectorXd> iterates;  // l after each iteration
  int iterations = 0;
  bool converged = true;
  double tau = 0.0;
  double h = 0.0;

  // LARS only: 1-based step at which this combination was recorded.
  int lars_step = 0;
};

struct TgdmConfig {
  double tau = 1.0;    // threshold fraction of the largest gradient entry
  double h = 0.0;      // sigmoid bandwidth; <= 0 means sd * n^(-1/3)
  int max_iter = 500;
  double tol = 1e-6;   // stop when the objective gain falls below this
  // Step-size search: log-spaced grid then golden-section refinement.
  double step_min = 1e-4;
  double step_max = 10.0;
  int step_grid = 40;
  int golden_iters = 20;
};

// Least-squares coefficients of the centered gold standard on the centered
// variables, solved through an SVD. Throws NumericError when the normal
// equations are numerically singular (condition above 1e12), suggesting the
// LARS path instead.
CombinationResult ols_combination(const Dataset& d);

// Least angle regression path on the centered data: one combination per step,
// each with one more active variable. With more variables than subjects the
// path stops at the rank bound (at most n-1 active variables). When it runs
// to completion with n > p, the last step equals the least-squares solution.
std::vector<CombinationResult> lars_path(const Dataset& d, int max_steps = -1);

// Anchor choice for TGDM: each variable is oriented so its hard integrated
// AUC is at least 1/2, then the variable whose oriented smoothed index is
// largest becomes the anchor. Returns the anchor index and the orientation
// signs. h <= 0 means each variable uses its own default bandwidth.
std::pair<int, Eigen::VectorXi> select_anchor(const Dataset& d,
                                              const CutWeight& w, double h);

// Gradient of the smoothed integrated AUC of x*l with respect to l.
Eigen::VectorXd tgdm_gradient(const Dataset& d, const Eigen::VectorXd& l,
                              const CutWeight& w, double h);

// Threshold gradient descent on the smoothed integrated AUC. The anchor
// coefficient is fixed at +-1 and never updated; every iteration moves the
// coordinates whose gradient entries reach tau times the largest entry, with
// the step size chosen by a line search. The objective trace is
// nondecreasing because a zero step is always admissible.
CombinationResult tgdm_maximize(const Dataset& d, const CutWeight& w,
                                const TgdmConfig& config = {});

}  // namespace aucint
