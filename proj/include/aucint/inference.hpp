#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>

#include "aucint/dataset.hpp"

namespace aucint {

// A named scalar statistic of a dataset, with the value it takes under the
// null hypothesis (1/2 for the diagnostic indexes, 0 for a correlation).
struct Statistic {
  std::string name;
  std::function<double(const Dataset&)> eval;
  double null_value = 0.5;
};

struct BootstrapReport {
  double point = 0.0;
  double variance = 0.0;
  int replicates_requested = 0;
  int replicates_used = 0;  // replicates that evaluated without error
  std::uint64_t seed = 0;
  std::string statistic;
};

// Nonparametric pairs bootstrap: rows are resampled jointly and the statistic
// is recomputed on each replicate (any fitted weight is refitted inside the
// statistic). Replicate r draws from the stream (seed, r+1), so results do
// not depend on evaluation order; rows are put in a canonical order first, so
// results do not depend on input row order either. Replicates that throw are
// dropped; more than 10% dropped is an error.
BootstrapReport bootstrap_variance(const Dataset& d, const Statistic& stat,
                                   int replicates, std::uint64_t seed);

// Wald test of point == null_value: returns {statistic, p-value} where the
// statistic is (point - null)^2 / variance, compared against chi-squared with
// one degree of freedom. Requires a positive variance.
std::pair<double, double> wald_test(double point, double variance,
                                    double null_value);

}  // namespace aucint
