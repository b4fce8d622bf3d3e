#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aucint {

// A complete-case table of candidate scores plus a continuous gold standard.
// Rows are subjects; x columns are the candidate variables.
struct Dataset {
  Eigen::MatrixXd x;               // n by p
  Eigen::VectorXd z;               // gold standard, length n
  std::vector<std::string> names;  // p variable labels
  std::string z_name = "z";

  Eigen::Index n() const { return x.rows(); }
  Eigen::Index p() const { return x.cols(); }
};

// Throws std::invalid_argument when shape or finiteness invariants are broken.
void validate(const Dataset& d);

// Per-column location/scale used by standardize(), kept so results can be
// mapped back to original units.
struct Standardization {
  Eigen::VectorXd x_mean;
  Eigen::VectorXd x_sd;
  double z_mean = 0.0;
  double z_sd = 1.0;
};

struct LoadOptions {
  std::optional<char> delimiter;  // autodetected (tab vs comma) when unset
  bool header = true;
};

// What ingestion did: how many rows were dropped for missing cells and which
// columns were skipped as non-numeric.
struct LoadReport {
  std::size_t rows_seen = 0;
  std::size_t rows_dropped = 0;
  std::vector<std::string> columns_skipped;
};

// Reads a delimited text file. Non-numeric columns are skipped; rows with a
// missing value in any retained column are dropped (listwise deletion) and
// counted in the report. gold_column is a column name, or a 0-based column
// index when it parses as an integer. Throws InputError on unusable input.
Dataset load_delimited(const std::string& path, const std::string& gold_column,
                       const LoadOptions& options = {},
                       LoadReport* report = nullptr);

// Centers and scales every variable and the gold standard to mean 0, sample
// sd 1 (n-1 denominator). Columns with zero variance are rejected by name.
std::pair<Dataset, Standardization> standardize(const Dataset& d);

// Column-centered copies of x and z (no scaling).
std::pair<Eigen::MatrixXd, Eigen::VectorXd> center(const Dataset& d);

}  // namespace aucint
