#include "aucint/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "aucint/errors.hpp"
#include "aucint/mathutil.hpp"

namespace aucint {

void validate(const Dataset& d) {
  if (d.x.rows() != d.z.size())
    throw std::invalid_argument("dataset: x and z row counts differ");
  if (d.x.rows() < 2) throw std::invalid_argument("dataset: need at least 2 rows");
  if (d.x.cols() < 1) throw std::invalid_argument("dataset: need at least 1 variable");
  if (d.names.size() != std::size_t(d.x.cols()))
    throw std::invalid_argument("dataset: name count does not match columns");
  if (!d.x.allFinite() || !d.z.allFinite())
    throw std::invalid_argument("dataset: non-finite entries");
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool is_missing_token(const std::string& t) {
  if (t.empty()) return true;
  std::string low;
  low.reserve(t.size());
  for (char c : t) low.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  return low == "na" || low == "n/a" || low == "nan" || low == "null" ||
         low == "?" || low == ".";
}

enum class Cell { Numeric, Missing, Malformed };

Cell parse_cell(const std::string& raw, double* out) {
  const std::string t = trim(raw);
  if (is_missing_token(t)) return Cell::Missing;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (*first == '+') ++first;  // from_chars rejects an explicit plus
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return Cell::Malformed;
  if (!std::isfinite(v)) return Cell::Missing;
  return (*out = v, Cell::Numeric);
}

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, delim)) out.push_back(field);
  if (!line.empty() && line.back() == delim) out.emplace_back();
  return out;
}

}  // namespace

Dataset load_delimited(const std::string& path, const std::string& gold_column,
                       const LoadOptions& options, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");

  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!trim(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) throw InputError("'" + path + "' is empty");

  const char delim = options.delimiter
                         ? *options.delimiter
                         : (lines[0].find('\t') != std::string::npos ? '\t' : ',');

  std::size_t first_data = 0;
  std::vector<std::string> headers;
  if (options.header) {
    headers = split_line(lines[0], delim);
    for (auto& h : headers) h = trim(h);
    first_data = 1;
  }

  std::vector<std::vector<std::string>> rows;
  std::size_t dropped = 0;
  std::size_t ncols = options.header ? headers.size() : 0;
  for (std::size_t i = first_data; i < lines.size(); ++i) {
    auto fields = split_line(lines[i], delim);
    if (ncols == 0) ncols = fields.size();
    if (fields.size() != ncols) {
      ++dropped;  // ragged row
      continue;
    }
    rows.push_back(std::move(fields));
  }
  if (ncols < 2)
    throw InputError("'" + path + "' needs at least two columns (gold standard plus one variable)");
  if (!options.header) {
    headers.resize(ncols);
    for (std::size_t j = 0; j < ncols; ++j) headers[j] = "v" + std::to_string(j + 1);
  }
  if (headers.size() != ncols)
    throw InputError("'" + path + "': header has " + std::to_string(headers.size()) +
                     " columns but rows have " + std::to_string(ncols));

  // Classify columns: a column is numeric when no cell is malformed and at
  // least one cell parses; everything else is skipped.
  const std::size_t nrows = rows.size();
  std::vector<std::vector<double>> parsed(ncols, std::vector<double>(nrows));
  std::vector<std::vector<bool>> missing(ncols, std::vector<bool>(nrows, false));
  std::vector<bool> numeric(ncols, true);
  std::vector<bool> any_value(ncols, false);
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < nrows; ++i) {
      double v = 0.0;
      switch (parse_cell(rows[i][j], &v)) {
        case Cell::Numeric:
          parsed[j][i] = v;
          any_value[j] = true;
          break;
        case Cell::Missing:
          missing[j][i] = true;
          break;
        case Cell::Malformed:
          numeric[j] = false;
          break;
      }
      if (!numeric[j]) break;
    }
  }

  // Resolve the gold column: exact name first, then 0-based index.
  std::size_t gold = ncols;
  for (std::size_t j = 0; j < ncols; ++j)
    if (headers[j] == gold_column) gold = j;
  if (gold == ncols) {
    int idx = -1;
    auto [p, ec] = std::from_chars(gold_column.data(),
                                   gold_column.data() + gold_column.size(), idx);
    if (ec == std::errc() && p == gold_column.data() + gold_column.size() &&
        idx >= 0 && std::size_t(idx) < ncols)
      gold = std::size_t(idx);
  }
  if (gold == ncols)
    throw InputError("gold column '" + gold_column + "' not found in '" + path + "'");
  if (!numeric[gold] || !any_value[gold])
    throw InputError("gold column '" + headers[gold] + "' is not numeric");

  std::vector<std::size_t> keep;
  std::vector<std::string> skipped;
  for (std::size_t j = 0; j < ncols; ++j) {
    if (j == gold) continue;
    if (numeric[j] && any_value[j])
      keep.push_back(j);
    else
      skipped.push_back(headers[j]);
  }
  if (keep.empty())
    throw InputError("'" + path + "' has no numeric variable columns besides the gold standard");

  // Listwise deletion over the retained columns plus the gold standard.
  std::vector<std::size_t> complete;
  for (std::size_t i = 0; i < nrows; ++i) {
    bool ok = !missing[gold][i];
    for (std::size_t j : keep) ok = ok && !missing[j][i];
    if (ok)
      complete.push_back(i);
    else
      ++dropped;
  }
  if (complete.size() < 2)
    throw InputError("'" + path + "' has fewer than 2 complete rows");

  Dataset d;
  d.x.resize(Eigen::Index(complete.size()), Eigen::Index(keep.size()));
  d.z.resize(Eigen::Index(complete.size()));
  for (std::size_t r = 0; r < complete.size(); ++r) {
    d.z[Eigen::Index(r)] = parsed[gold][complete[r]];
    for (std::size_t c = 0; c < keep.size(); ++c)
      d.x(Eigen::Index(r), Eigen::Index(c)) = parsed[keep[c]][complete[r]];
  }
  for (std::size_t j : keep) d.names.push_back(headers[j]);
  d.z_name = headers[gold];
  validate(d);

  if (report) {
    report->rows_seen = nrows;
    report->rows_dropped = dropped;
    report->columns_skipped = std::move(skipped);
  }
  return d;
}

std::pair<Dataset, Standardization> standardize(const Dataset& d) {
  validate(d);
  Standardization s;
  s.x_mean.resize(d.p());
  s.x_sd.resize(d.p());
  Dataset out = d;
  for (Eigen::Index j = 0; j < d.p(); ++j) {
    const double m = d.x.col(j).mean();
    const double sd = sample_sd(d.x.col(j));
    if (sd == 0.0)
      throw InputError("column '" + d.names[std::size_t(j)] + "' has zero variance");
    s.x_mean[j] = m;
    s.x_sd[j] = sd;
    out.x.col(j) = (d.x.col(j).array() - m) / sd;
  }
  s.z_mean = d.z.mean();
  s.z_sd = sample_sd(d.z);
  if (s.z_sd == 0.0)
    throw InputError("gold column '" + d.z_name + "' has zero variance");
  out.z = (d.z.array() - s.z_mean) / s.z_sd;
  return {std::move(out), std::move(s)};
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> center(const Dataset& d) {
  validate(d);
  Eigen::MatrixXd h = d.x.rowwise() - d.x.colwise().mean();
  Eigen::VectorXd zt = d.z.array() - d.z.mean();
  return {std::move(h), std::move(zt)};
}

}  // namespace aucint
