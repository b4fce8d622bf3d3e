#include "aucint/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "aucint/errors.hpp"
#include "aucint/mathutil.hpp"

namespace aucint {

namespace {

void check_pair(const Eigen::VectorXd& y, const Eigen::VectorXd& z) {
  if (y.size() != z.size())
    throw std::invalid_argument("score and gold standard lengths differ");
  if (y.size() < 2) throw std::invalid_argument("need at least 2 subjects");
  if (!y.allFinite() || !z.allFinite())
    throw std::invalid_argument("non-finite values");
}

// Twice the concordance sum between sorted case scores and one control score:
// 2 per case above it, 1 per case tied with it. Integer so that equal counts
// give bit-identical index values on every code path.
long long concordance2_one(const std::vector<double>& cases_sorted, double v) {
  const auto lo = std::lower_bound(cases_sorted.begin(), cases_sorted.end(), v);
  const auto hi = std::upper_bound(lo, cases_sorted.end(), v);
  const long long above = cases_sorted.end() - hi;
  const long long tied = hi - lo;
  return 2 * above + tied;
}

double auc_from_counts(long long conc2, long long n1, long long n0) {
  if (n1 == 0 || n0 == 0) return 0.5;
  return double(conc2) / (2.0 * double(n1) * double(n0));
}

// Fenwick tree over compressed score ranks (1-based).
class RankCounter {
 public:
  explicit RankCounter(int size) : tree_(std::size_t(size) + 1, 0) {}

  void add(int rank, int delta) {
    total_ += delta;
    for (int i = rank; i < int(tree_.size()); i += i & -i) tree_[std::size_t(i)] += delta;
  }

  long long upto(int rank) const {  // count of ranks <= rank
    long long s = 0;
    for (int i = rank; i > 0; i -= i & -i) s += tree_[std::size_t(i)];
    return s;
  }

  long long below(int rank) const { return upto(rank - 1); }
  long long at(int rank) const { return upto(rank) - upto(rank - 1); }
  long long total() const { return total_; }

 private:
  std::vector<long long> tree_;
  long long total_ = 0;
};

std::vector<int> compress_ranks(const Eigen::VectorXd& y, int* max_rank) {
  std::vector<double> sorted(y.data(), y.data() + y.size());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> ranks(std::size_t(y.size()));
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), y[i]);
    ranks[std::size_t(i)] = int(it - sorted.begin()) + 1;
  }
  *max_rank = int(sorted.size());
  return ranks;
}

std::vector<Eigen::Index> order_by(const Eigen::VectorXd& v) {
  std::vector<Eigen::Index> idx(std::size_t(v.size()));
  std::iota(idx.begin(), idx.end(), Eigen::Index(0));
  std::sort(idx.begin(), idx.end(),
            [&](Eigen::Index a, Eigen::Index b) { return v[a] < v[b]; });
  return idx;
}

}  // namespace

double auc_at_cut(const Eigen::VectorXd& y, const Eigen::VectorXd& z, double c) {
  check_pair(y, z);
  std::vector<double> cases;
  std::vector<double> controls;
  for (Eigen::Index i = 0; i < y.size(); ++i)
    (z[i] > c ? cases : controls).push_back(y[i]);
  if (cases.empty() || controls.empty()) return 0.5;
  std::sort(cases.begin(), cases.end());
  long long conc2 = 0;
  for (double v : controls) conc2 += concordance2_one(cases, v);
  return auc_from_counts(conc2, (long long)cases.size(), (long long)controls.size());
}

SweepResult sweep_cuts(const Eigen::VectorXd& y, const Eigen::VectorXd& z) {
  check_pair(y, z);
  const Eigen::Index n = y.size();

  int max_rank = 0;
  const std::vector<int> rank = compress_ranks(y, &max_rank);
  const std::vector<Eigen::Index> order = order_by(z);

  std::vector<double> breaks;
  for (Eigen::Index i : order)
    if (breaks.empty() || z[i] != breaks.back()) breaks.push_back(z[i]);
  const std::size_t m = breaks.size();

  RankCounter cases(max_rank);
  RankCounter controls(max_rank);
  for (Eigen::Index i = 0; i < n; ++i) cases.add(rank[std::size_t(i)], +1);

  SweepResult out;
  out.cut.breaks = breaks;
  out.cut.values.assign(m + 1, 0.5);
  out.group_sizes.assign(m + 1, {n, 0});

  // Everyone starts as a case (cut below all data). Walking the cut upward,
  // all subjects tied at each gold value cross to the control side together,
  // and the doubled concordance count is adjusted per crossing subject.
  long long conc2 = 0;
  std::size_t pos = 0;
  for (std::size_t k = 0; k < m; ++k) {
    while (pos < std::size_t(n) && z[order[pos]] == breaks[k]) {
      const int r = rank[std::size_t(order[pos])];
      cases.add(r, -1);
      conc2 -= 2 * controls.below(r) + controls.at(r);
      conc2 += 2 * (cases.total() - cases.upto(r)) + cases.at(r);
      controls.add(r, +1);
      ++pos;
    }
    const long long n1 = cases.total();
    const long long n0 = controls.total();
    out.cut.values[k + 1] = auc_from_counts(conc2, n1, n0);
    out.group_sizes[k + 1] = {Eigen::Index(n1), Eigen::Index(n0)};
  }
  return out;
}

AucEstimate auc_integrated(const Eigen::VectorXd& y, const Eigen::VectorXd& z,
                           const CutWeight& w) {
  const SweepResult sweep = sweep_cuts(y, z);
  AucEstimate est;
  est.value = integrate_step(sweep.cut, w);
  est.method = IndexMethod::Hard;
  est.weight = w.kind();
  return est;
}

AucEstimate auc_integrated_empirical(const Eigen::VectorXd& y,
                                     const Eigen::VectorXd& z) {
  return auc_integrated(
      y, z, CutWeight::empirical_cdf(std::vector<double>(z.data(), z.data() + z.size())));
}

PairWeightTable::PairWeightTable(const Eigen::VectorXd& z, const CutWeight& w)
    : n_(z.size()) {
  if (z.size() < 2) throw std::invalid_argument("pair weights: need at least 2 subjects");
  if (!z.allFinite()) throw std::invalid_argument("pair weights: non-finite gold standard");

  const std::vector<Eigen::Index> order = order_by(z);
  std::vector<double> breaks;
  std::vector<std::int32_t> group(std::size_t(n_), 0);  // distinct-value index per subject
  for (Eigen::Index i : order) {
    if (breaks.empty() || z[i] != breaks.back()) breaks.push_back(z[i]);
    group[std::size_t(i)] = std::int32_t(breaks.size() - 1);
  }
  const std::size_t m = breaks.size();

  // Interval masses from CDF increments, then the per-interval pair
  // coefficient mass / (cases * controls). Interval j separates groups
  // {0..j-1} from {j..m-1}; its coefficient reaches exactly the pairs that
  // straddle it, so prefix sums give each pair's total weight.
  std::vector<double> cdf_at(m);
  for (std::size_t j = 0; j < m; ++j) cdf_at[j] = w.cdf(breaks[j]);
  tail_ = cdf_at[0] + (1.0 - cdf_at[m - 1]);

  std::vector<std::size_t> cum(m);  // subjects in groups 0..j
  {
    std::vector<std::size_t> count(m, 0);
    for (Eigen::Index i = 0; i < n_; ++i) ++count[std::size_t(group[std::size_t(i)])];
    std::partial_sum(count.begin(), count.end(), cum.begin());
  }

  std::vector<double> prefix(m, 0.0);  // prefix[g] = sum of coefficients of intervals 1..g
  for (std::size_t j = 1; j < m; ++j) {
    const double mass = cdf_at[j] - cdf_at[j - 1];
    const double n0 = double(cum[j - 1]);
    const double n1 = double(std::size_t(n_) - cum[j - 1]);
    prefix[j] = prefix[j - 1] + mass / (n1 * n0);
  }

  std::vector<std::vector<std::int32_t>> members(m);
  for (Eigen::Index i = 0; i < n_; ++i)
    members[std::size_t(group[std::size_t(i)])].push_back(std::int32_t(i));

  pairs_.reserve(std::size_t(n_) * std::size_t(n_ - 1) / 2);
  for (std::size_t ga = 1; ga < m; ++ga) {
    for (std::size_t gb = 0; gb < ga; ++gb) {
      const double weight = prefix[ga] - prefix[gb];
      if (weight == 0.0) continue;
      for (std::int32_t a : members[ga])
        for (std::int32_t b : members[gb]) pairs_.push_back({a, b, weight});
    }
  }
}

double PairWeightTable::smoothed_value(const Eigen::VectorXd& scores,
                                       double h) const {
  if (scores.size() != n_) throw std::invalid_argument("pair weights: score length mismatch");
  if (!(h > 0.0)) throw std::invalid_argument("pair weights: bandwidth must be positive");
  double acc = 0.0;
  for (const Pair& p : pairs_)
    acc += p.weight * sigmoid((scores[p.hi] - scores[p.lo]) / h);
  return 0.5 * tail_ + acc;
}

Eigen::VectorXd PairWeightTable::smoothed_gradient(const Eigen::MatrixXd& x,
                                                   const Eigen::VectorXd& scores,
                                                   double h) const {
  if (x.rows() != n_ || scores.size() != n_)
    throw std::invalid_argument("pair weights: shape mismatch");
  if (!(h > 0.0)) throw std::invalid_argument("pair weights: bandwidth must be positive");
  // d/dl sum w_ij S((l.(x_i - x_j))/h) = X^T c with per-subject net factors c.
  Eigen::VectorXd c = Eigen::VectorXd::Zero(n_);
  for (const Pair& p : pairs_) {
    const double s = sigmoid((scores[p.hi] - scores[p.lo]) / h);
    const double f = p.weight * s * (1.0 - s) / h;
    c[p.hi] += f;
    c[p.lo] -= f;
  }
  return x.transpose() * c;
}

AucEstimate auc_smoothed(const Eigen::VectorXd& y, const Eigen::VectorXd& z,
                         const CutWeight& w, double h) {
  check_pair(y, z);
  if (!(h > 0.0)) throw std::invalid_argument("auc_smoothed: bandwidth must be positive");
  const PairWeightTable table(z, w);
  AucEstimate est;
  est.value = table.smoothed_value(y, h);
  est.method = IndexMethod::Smooth;
  est.weight = w.kind();
  est.smoothing_h = h;
  return est;
}

AucEstimate auc_combined(const Dataset& d, const Eigen::VectorXd& l,
                         const CutWeight& w, bool smooth,
                         std::optional<double> h) {
  validate(d);
  if (l.size() != d.p())
    throw std::invalid_argument("auc_combined: coefficient length mismatch");
  if (l.isZero(0.0))
    throw std::invalid_argument("auc_combined: coefficients are all zero");
  const Eigen::VectorXd scores = d.x * l;
  if (!smooth) return auc_integrated(scores, d.z, w);
  const double hh = h ? *h : default_smooth_bandwidth(scores);
  return auc_smoothed(scores, d.z, w, hh);
}

AucEstimate theta_obuchowski(const Eigen::VectorXd& y,
                             const Eigen::VectorXd& z) {
  check_pair(y, z);
  const Eigen::Index n = y.size();
  // Per unordered pair: 2 when strictly concordant, 1 when tied in either
  // coordinate, 0 when discordant; normalized by n(n-1).
  long long num = 0;
  for (Eigen::Index i = 1; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      const double dy = y[i] - y[j];
      const double dz = z[i] - z[j];
      if (dy == 0.0 || dz == 0.0)
        num += 1;
      else if ((dy > 0.0) == (dz > 0.0))
        num += 2;
    }
  }
  AucEstimate est;
  est.value = double(num) / (double(n) * double(n - 1));
  est.method = IndexMethod::Theta;
  return est;
}

double classical_auc(const Eigen::VectorXd& y, const std::vector<int>& labels) {
  if (std::size_t(y.size()) != labels.size())
    throw std::invalid_argument("classical_auc: length mismatch");
  std::vector<double> cases;
  std::vector<double> controls;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1)
      throw std::invalid_argument("classical_auc: labels must be 0 or 1");
    (labels[i] == 1 ? cases : controls).push_back(y[Eigen::Index(i)]);
  }
  if (cases.empty() || controls.empty())
    throw std::invalid_argument("classical_auc: need both classes");
  std::sort(cases.begin(), cases.end());
  long long conc2 = 0;
  for (double v : controls) conc2 += concordance2_one(cases, v);
  return auc_from_counts(conc2, (long long)cases.size(), (long long)controls.size());
}

double default_smooth_bandwidth(const Eigen::VectorXd& y) {
  if (y.size() < 2)
    throw std::invalid_argument("default_smooth_bandwidth: need at least 2 values");
  const double sd = sample_sd(y);
  if (sd == 0.0)
    throw NumericError("default_smooth_bandwidth: score has zero variance");
  return sd * std::pow(double(y.size()), -1.0 / 3.0);
}

}  // namespace aucint
