#include "aucint/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "aucint/errors.hpp"
#include "aucint/mathutil.hpp"
#include "aucint/rng.hpp"

namespace aucint {

BootstrapReport bootstrap_variance(const Dataset& d, const Statistic& stat,
                                   int replicates, std::uint64_t seed) {
  validate(d);
  if (!stat.eval) throw std::invalid_argument("bootstrap: statistic has no evaluator");
  if (replicates < 2)
    throw std::invalid_argument("bootstrap: need at least 2 replicates");
  const Eigen::Index n = d.n();

  // Canonical row order, so neither the draws nor the report can depend on
  // how the caller happened to order the file; the point estimate is
  // evaluated on the sorted copy for the same reason. Ties are between
  // identical rows, so index order among them is immaterial.
  std::vector<Eigen::Index> perm(std::size_t(n), 0);
  std::iota(perm.begin(), perm.end(), Eigen::Index(0));
  std::sort(perm.begin(), perm.end(), [&](Eigen::Index a, Eigen::Index b) {
    if (d.z[a] != d.z[b]) return d.z[a] < d.z[b];
    for (Eigen::Index j = 0; j < d.p(); ++j)
      if (d.x(a, j) != d.x(b, j)) return d.x(a, j) < d.x(b, j);
    return false;
  });
  Dataset sorted;
  sorted.x.resize(n, d.p());
  sorted.z.resize(n);
  sorted.names = d.names;
  sorted.z_name = d.z_name;
  for (Eigen::Index i = 0; i < n; ++i) {
    sorted.x.row(i) = d.x.row(perm[std::size_t(i)]);
    sorted.z[i] = d.z[perm[std::size_t(i)]];
  }

  BootstrapReport rep;
  rep.point = stat.eval(sorted);
  rep.replicates_requested = replicates;
  rep.seed = seed;
  rep.statistic = stat.name;

  Dataset boot;
  boot.x.resize(n, d.p());
  boot.z.resize(n);
  boot.names = d.names;
  boot.z_name = d.z_name;

  std::vector<double> values;
  values.reserve(std::size_t(replicates));
  int dropped = 0;
  for (int r = 0; r < replicates; ++r) {
    StreamRng rng(seed, std::uint64_t(r) + 1);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::Index k = Eigen::Index(rng.uniform_index(std::size_t(n)));
      boot.x.row(i) = sorted.x.row(k);
      boot.z[i] = sorted.z[k];
    }
    try {
      values.push_back(stat.eval(boot));
    } catch (const std::exception&) {
      ++dropped;  // degenerate resample (for example a zero-variance column)
    }
  }
  if (10 * dropped > replicates)
    throw NumericError("bootstrap: more than 10% of replicates failed (" +
                       std::to_string(dropped) + " of " +
                       std::to_string(replicates) + ")");

  const Eigen::Map<const Eigen::VectorXd> v(values.data(),
                                            Eigen::Index(values.size()));
  const double m = v.mean();
  rep.variance = (v.array() - m).square().sum() / double(values.size() - 1);
  rep.replicates_used = int(values.size());
  return rep;
}

std::pair<double, double> wald_test(double point, double variance,
                                    double null_value) {
  if (!(variance > 0.0))
    throw NumericError("wald_test: variance must be positive");
  const double stat = (point - null_value) * (point - null_value) / variance;
  // Upper tail of chi-squared with 1 degree of freedom.
  const double p = std::erfc(std::sqrt(stat / 2.0));
  return {stat, p};
}

}  // namespace aucint
