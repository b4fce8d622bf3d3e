#include "aucint/combination.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "aucint/errors.hpp"
#include "aucint/mathutil.hpp"
#include "aucint/measures.hpp"

namespace aucint {

namespace {

// Condition bound on the normal equations H^T H; the SVD of H is checked
// against its square root.
constexpr double kMaxNormalEqCondition = 1e12;

void check_tgdm_config(const TgdmConfig& c) {
  if (!(c.tau >= 0.0 && c.tau <= 1.0))
    throw std::invalid_argument("tgdm: tau must lie in [0, 1]");
  if (c.max_iter < 1) throw std::invalid_argument("tgdm: max_iter must be positive");
  if (!(c.tol > 0.0)) throw std::invalid_argument("tgdm: tol must be positive");
  if (!(c.step_min > 0.0) || !(c.step_max > c.step_min))
    throw std::invalid_argument("tgdm: need 0 < step_min < step_max");
  if (c.step_grid < 2) throw std::invalid_argument("tgdm: step_grid must be at least 2");
  if (c.golden_iters < 0) throw std::invalid_argument("tgdm: golden_iters must be nonnegative");
}

}  // namespace

CombinationResult ols_combination(const Dataset& d) {
  validate(d);
  if (d.n() <= d.p())
    throw NumericError("ols_combination: need more subjects than variables");
  auto [h, zt] = center(d);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(h, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double smax = sv[0];
  const double smin = sv[sv.size() - 1];
  if (!(smin > 0.0) || (smax / smin) * (smax / smin) > kMaxNormalEqCondition)
    throw NumericError(
        "ols_combination: normal equations are numerically singular; "
        "consider lars_path");

  CombinationResult res;
  res.l = svd.solve(zt);
  res.method = CombinationMethod::Ols;
  return res;
}

std::vector<CombinationResult> lars_path(const Dataset& d, int max_steps) {
  validate(d);
  const Eigen::Index n = d.n();
  const Eigen::Index p = d.p();
  auto [x, y] = center(d);

  // Centered columns span at most n-1 dimensions.
  const int rank_cap = int(std::min<Eigen::Index>(p, n - 1));
  const int cap = max_steps < 0 ? rank_cap : std::min(max_steps, rank_cap);

  std::vector<int> active;
  std::vector<char> is_active(std::size_t(p), 0);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd resid = y;
  std::vector<CombinationResult> path;

  const double corr_tol = 1e-10 * std::max(1.0, (x.transpose() * y).cwiseAbs().maxCoeff());

  while (int(active.size()) < cap) {
    const Eigen::VectorXd c = x.transpose() * resid;
    int entrant = -1;
    double cmax = 0.0;
    for (Eigen::Index j = 0; j < p; ++j) {
      if (is_active[std::size_t(j)]) continue;
      if (std::abs(c[j]) > cmax) {
        cmax = std::abs(c[j]);
        entrant = int(j);
      }
    }
    if (entrant < 0 || cmax <= corr_tol) break;  // residual already uncorrelated
    active.push_back(entrant);
    is_active[std::size_t(entrant)] = 1;

    // Equiangular direction over the sign-adjusted active columns.
    const int a = int(active.size());
    Eigen::MatrixXd xa(n, a);
    Eigen::VectorXd signs(a);
    for (int k = 0; k < a; ++k) {
      signs[k] = c[active[std::size_t(k)]] >= 0.0 ? 1.0 : -1.0;
      xa.col(k) = signs[k] * x.col(active[std::size_t(k)]);
    }
    const Eigen::MatrixXd g = xa.transpose() * xa;
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(a);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(g);
    const Eigen::VectorXd w0 = ldlt.solve(ones);
    const double denom = w0.sum();
    if (ldlt.info() != Eigen::Success || !(denom > 0.0) ||
        (g * w0 - ones).cwiseAbs().maxCoeff() > 1e-8) {
      // The entrant is collinear with the active set: the path has hit the
      // rank bound, so stop before recording a step for it.
      active.pop_back();
      is_active[std::size_t(entrant)] = 0;
      break;
    }
    const double anorm = 1.0 / std::sqrt(denom);
    const Eigen::VectorXd w = anorm * w0;
    const Eigen::VectorXd u = xa * w;  // unit equiangular vector
    const Eigen::VectorXd acorr = x.transpose() * u;

    // Step to where an inactive variable ties the active correlation, or all
    // the way to the joint least-squares point when none does.
    const double gamma_full = cmax / anorm;
    double gamma = gamma_full;
    for (Eigen::Index j = 0; j < p; ++j) {
      if (is_active[std::size_t(j)]) continue;
      for (const double cand :
           {(cmax - c[j]) / (anorm - acorr[j]), (cmax + c[j]) / (anorm + acorr[j])}) {
        if (std::isfinite(cand) && cand > 1e-14 && cand < gamma) gamma = cand;
      }
    }

    for (int k = 0; k < a; ++k) beta[active[std::size_t(k)]] += gamma * signs[k] * w[k];
    resid -= gamma * u;

    CombinationResult step;
    step.l = beta;
    step.method = CombinationMethod::Lars;
    step.lars_step = int(path.size()) + 1;
    path.push_back(std::move(step));

    if (gamma == gamma_full) break;  // residual now orthogonal to the active set
  }
  return path;
}

std::pair<int, Eigen::VectorXi> select_anchor(const Dataset& d,
                                              const CutWeight& w, double h) {
  validate(d);
  const PairWeightTable table(d.z, w);
  Eigen::VectorXi signs(d.p());
  int anchor = 0;
  double best = -std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < d.p(); ++j) {
    const Eigen::VectorXd col = d.x.col(j);
    // Orient the variable so its hard index sits at or above 1/2, then score
    // the orientation by the smoothed index.
    const double hard = auc_integrated(col, d.z, w).value;
    signs[j] = hard > 0.5 ? 1 : -1;
    const double hj = h > 0.0 ? h : default_smooth_bandwidth(col);
    const double r = table.smoothed_value(double(signs[j]) * col, hj);
    if (r > best) {
      best = r;
      anchor = int(j);
    }
  }
  return {anchor, signs};
}

Eigen::VectorXd tgdm_gradient(const Dataset& d, const Eigen::VectorXd& l,
                              const CutWeight& w, double h) {
  validate(d);
  if (l.size() != d.p())
    throw std::invalid_argument("tgdm_gradient: coefficient length mismatch");
  if (!(h > 0.0)) throw std::invalid_argument("tgdm_gradient: bandwidth must be positive");
  const PairWeightTable table(d.z, w);
  return table.smoothed_gradient(d.x, d.x * l, h);
}

CombinationResult tgdm_maximize(const Dataset& d, const CutWeight& w,
                                const TgdmConfig& config) {
  validate(d);
  check_tgdm_config(config);
  const Eigen::Index p = d.p();

  const auto [anchor, signs] = select_anchor(d, w, config.h);
  const double h = config.h > 0.0
                       ? config.h
                       : default_smooth_bandwidth(d.x.col(anchor));
  const PairWeightTable table(d.z, w);

  CombinationResult res;
  res.method = CombinationMethod::Tgdm;
  res.anchor = anchor;
  res.tau = config.tau;
  res.h = h;
  res.converged = false;

  Eigen::VectorXd l = Eigen::VectorXd::Zero(p);
  l[anchor] = double(signs[anchor]);
  Eigen::VectorXd scores = d.x * l;
  double obj = table.smoothed_value(scores, h);
  res.trace.push_back(obj);
  res.iterates.push_back(l);

  // Log-spaced step grid, with 0 included so no iteration can lose ground.
  std::vector<double> deltas;
  deltas.push_back(0.0);
  for (int i = 0; i < config.step_grid; ++i)
    deltas.push_back(config.step_min *
                     std::pow(config.step_max / config.step_min,
                              double(i) / double(config.step_grid - 1)));

  for (int iter = 1; iter <= config.max_iter; ++iter) {
    const Eigen::VectorXd grad = table.smoothed_gradient(d.x, scores, h);

    // Threshold the raw gradient entries against tau times the largest one;
    // the anchor coordinate is held fixed and never considered.
    double gmax = -std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < p; ++j)
      if (int(j) != anchor) gmax = std::max(gmax, grad[j]);
    Eigen::VectorXd dir = Eigen::VectorXd::Zero(p);
    if (p > 1) {
      for (Eigen::Index j = 0; j < p; ++j)
        if (int(j) != anchor && grad[j] >= config.tau * gmax) dir[j] = grad[j];
    }
    const double dnorm = dir.norm();
    if (dnorm == 0.0) {
      res.converged = true;
      break;
    }
    dir /= dnorm;
    const Eigen::VectorXd dscores = d.x * dir;

    // Grid pass.
    double best_delta = 0.0;
    double best_val = obj;
    for (const double delta : deltas) {
      if (delta == 0.0) continue;
      const double v = table.smoothed_value(scores + delta * dscores, h);
      if (v > best_val) {
        best_val = v;
        best_delta = delta;
      }
    }

    // Golden-section refinement around the best grid point.
    {
      std::size_t bi = 0;
      for (std::size_t k = 0; k < deltas.size(); ++k)
        if (deltas[k] == best_delta) bi = k;
      double a = bi > 0 ? deltas[bi - 1] : 0.0;
      double b = bi + 1 < deltas.size() ? deltas[bi + 1] : deltas.back();
      const double gr = 0.6180339887498949;
      double c1 = b - gr * (b - a);
      double c2 = a + gr * (b - a);
      double f1 = table.smoothed_value(scores + c1 * dscores, h);
      double f2 = table.smoothed_value(scores + c2 * dscores, h);
      for (int it = 0; it < config.golden_iters; ++it) {
        if (f1 >= f2) {
          b = c2;
          c2 = c1;
          f2 = f1;
          c1 = b - gr * (b - a);
          f1 = table.smoothed_value(scores + c1 * dscores, h);
        } else {
          a = c1;
          c1 = c2;
          f1 = f2;
          c2 = a + gr * (b - a);
          f2 = table.smoothed_value(scores + c2 * dscores, h);
        }
        const double fc = std::max(f1, f2);
        const double dc = f1 >= f2 ? c1 : c2;
        if (fc > best_val) {
          best_val = fc;
          best_delta = dc;
        }
      }
    }

    if (best_delta == 0.0) {
      res.converged = true;  // no admissible step improves the objective
      break;
    }

    l += best_delta * dir;
    scores = d.x * l;
    const double newobj = table.smoothed_value(scores, h);
    const double gain = newobj - obj;
    obj = newobj;
    res.trace.push_back(obj);
    res.iterates.push_back(l);
    res.iterations = iter;
    if (std::abs(gain) < config.tol) {
      res.converged = true;
      break;
    }
  }

  res.l = l;
  return res;
}

}  // namespace aucint
