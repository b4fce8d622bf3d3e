#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "aucint/dataset.hpp"
#include "aucint/inference.hpp"

namespace aucint {

enum class NoiseFamily { Normal, Cauchy };
enum class GoldFamily { Normal, StudentT2, Cauchy };

// One score, one gold standard, jointly normal.
struct BivariateNormalDesign {
  double mu_y = 1.0;
  double mu_z = 1.0;
  double sigma_y = 1.0;
  double sigma_z = 1.0;
  double rho = 0.0;
};

// Null design: the score is z^2 plus standard normal noise, so it carries no
// monotone information about z. The gold standard is drawn from the stated
// family as-is; heavy-tailed draws are never rescaled or standardized here.
struct NullQuadraticDesign {
  GoldFamily gold = GoldFamily::Normal;
};

// p standard normal scores; the gold standard is a fixed linear combination
// of them plus noise from the stated family.
struct LinearModelDesign {
  int p = 4;
  Eigen::VectorXd coef;  // defaults to (1, 1, 0, ..., 0) when empty
  NoiseFamily noise = NoiseFamily::Normal;
};

using SimDesign =
    std::variant<BivariateNormalDesign, NullQuadraticDesign, LinearModelDesign>;

struct SimSpec {
  SimDesign design;
  int n = 100;
  std::uint64_t seed = 0;
};

// Draws one replicate. Replicate r consumes the stream (seed, r), so any
// subset of replicates can be regenerated independently.
Dataset generate(const SimSpec& spec, int replicate);

// One cell of a simulation table: a spec plus label fields describing it.
struct TableCell {
  std::vector<std::pair<std::string, std::string>> labels;
  SimSpec spec;
  int replicates = 100;
};

// Monte Carlo summary of one statistic in one cell. Quartiles are of the
// absolute error |value - null|. Bootstrap columns are filled only when the
// table ran with bootstrap replicates.
struct CellResult {
  std::vector<std::pair<std::string, std::string>> labels;
  std::string statistic;
  int replicates = 0;
  double mean = 0.0;
  double emp_sd = 0.0;
  double q25 = 0.0;
  double q50 = 0.0;
  double q75 = 0.0;
  bool has_boot = false;
  double mean_boot_sd = 0.0;
  double rejection_rate = 0.0;
  double mean_pvalue = 0.0;
};

// Runs every cell: per replicate, evaluates each statistic and (when
// bootstrap_B >= 2) its bootstrap variance and Wald test at the given level.
// Fully deterministic given the cell seeds.
std::vector<CellResult> run_table(const std::vector<TableCell>& cells,
                                  const std::vector<Statistic>& measures,
                                  int bootstrap_B, double alpha = 0.05);

}  // namespace aucint
