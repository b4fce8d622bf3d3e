// aucint: integrated-AUC diagnostics for continuous gold standards.
//
// Subcommands: evaluate (per-variable indexes), combine (linear combination
// search), simulate (Monte Carlo study tables). Reports are delimited text or
// line-delimited JSON records; the only timestamp lives on one header line so
// repeated runs with the same seed are byte-identical apart from it.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aucint/combination.hpp"
#include "aucint/dataset.hpp"
#include "aucint/errors.hpp"
#include "aucint/inference.hpp"
#include "aucint/mathutil.hpp"
#include "aucint/measures.hpp"
#include "aucint/rng.hpp"
#include "aucint/simgen.hpp"
#include "aucint/weights.hpp"

namespace {

using aucint::CutWeight;
using aucint::Dataset;
using aucint::Statistic;
using aucint::WeightKind;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitNoConverge = 4;

std::string iso_timestamp() {
  const std::time_t now = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  return buf;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_coef(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

// A report is a list of uniform rows plus a config echo; it renders as
// tab-delimited text or as JSON records, one per line.
struct Report {
  std::string subcommand;
  json config;                            // resolved options, seed included
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> notes;

  void add_row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }

  std::string render(const std::string& format) const {
    std::ostringstream os;
    if (format == "records") {
      os << json{{"type", "meta"}, {"timestamp", iso_timestamp()}}.dump() << "\n";
      os << json{{"type", "config"}, {"tool", "aucint"},
                 {"subcommand", subcommand}, {"config", config}}.dump() << "\n";
      for (const auto& [k, v] : notes)
        os << json{{"type", "note"}, {"key", k}, {"value", v}}.dump() << "\n";
      for (const auto& row : rows) {
        json r{{"type", "row"}};
        for (std::size_t i = 0; i < columns.size(); ++i) r[columns[i]] = row[i];
        os << r.dump() << "\n";
      }
      return os.str();
    }
    os << "# aucint " << subcommand << " report\n";
    os << "# timestamp: " << iso_timestamp() << "\n";
    os << "# config: " << config.dump() << "\n";
    for (const auto& [k, v] : notes) os << "# " << k << ": " << v << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
      os << (i ? "\t" : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << row[i];
      os << "\n";
    }
    return os.str();
  }
};

void write_report(const Report& rep, const std::string& out_path,
                  const std::string& format) {
  const std::string text = rep.render(format);
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw aucint::InputError("cannot write '" + out_path + "'");
  out << text;
}

struct CommonOpts {
  std::string input;
  std::string gold;
  std::string delimiter;  // empty = autodetect; "\\t" or "tab" for tabs
  bool no_header = false;
  bool no_standardize = false;
  int boot = 200;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "delimited";
};

void add_io_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--input", o->input, "delimited input file")->required();
  cmd->add_option("--gold", o->gold,
                  "gold standard column (name, or 0-based index)")->required();
  cmd->add_option("--delimiter", o->delimiter,
                  "field delimiter (default: autodetect tab/comma)");
  cmd->add_flag("--no-header", o->no_header, "file has no header row");
  cmd->add_flag("--no-standardize", o->no_standardize,
                "skip standardizing columns to mean 0, sd 1");
}

void add_report_flags(CLI::App* cmd, CommonOpts* o) {
  cmd->add_option("--boot", o->boot, "bootstrap replicates (0 disables)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", o->seed, "RNG seed");
  cmd->add_option("--out", o->out, "output path (default: stdout)");
  cmd->add_option("--format", o->format, "output format")
      ->check(CLI::IsMember({"delimited", "records"}));
}

aucint::LoadOptions load_options(const CommonOpts& o) {
  aucint::LoadOptions opts;
  opts.header = !o.no_header;
  if (!o.delimiter.empty()) {
    if (o.delimiter == "\\t" || o.delimiter == "tab")
      opts.delimiter = '\t';
    else if (o.delimiter.size() == 1)
      opts.delimiter = o.delimiter[0];
    else
      throw aucint::InputError("--delimiter must be a single character");
  }
  return opts;
}

Dataset load_and_prepare(const CommonOpts& o, Report* rep) {
  aucint::LoadReport lr;
  Dataset d = aucint::load_delimited(o.input, o.gold, load_options(o), &lr);
  rep->notes.emplace_back("rows_used", std::to_string(d.n()));
  rep->notes.emplace_back("rows_dropped", std::to_string(lr.rows_dropped));
  if (!lr.columns_skipped.empty()) {
    std::string joined;
    for (const auto& c : lr.columns_skipped)
      joined += (joined.empty() ? "" : ",") + c;
    rep->notes.emplace_back("columns_skipped", joined);
  }
  if (!o.no_standardize) d = aucint::standardize(d).first;
  return d;
}

// Weight selection string: uniform | normal | kernel | empirical |
// degenerate:<cut>. The fitted kinds are refitted inside every bootstrap
// replicate; degenerate has nothing to fit.
struct WeightChoice {
  WeightKind kind = WeightKind::KernelFit;
  double cut = 0.0;                  // Degenerate only
  std::optional<double> bandwidth;   // KernelFit only

  CutWeight fit(const Eigen::VectorXd& z) const {
    if (kind == WeightKind::Degenerate) return CutWeight::degenerate(cut);
    return aucint::fit_weight(kind, z, bandwidth);
  }
};

WeightChoice parse_weight(const std::string& s, std::optional<double> bandwidth) {
  WeightChoice c;
  c.bandwidth = bandwidth;
  if (s == "uniform") c.kind = WeightKind::UniformAroundMean;
  else if (s == "normal") c.kind = WeightKind::NormalFit;
  else if (s == "kernel") c.kind = WeightKind::KernelFit;
  else if (s == "empirical") c.kind = WeightKind::EmpiricalCdf;
  else if (s.rfind("degenerate:", 0) == 0) {
    c.kind = WeightKind::Degenerate;
    try {
      c.cut = std::stod(s.substr(11));
    } catch (const std::exception&) {
      throw aucint::InputError("bad cut point in --weight '" + s + "'");
    }
  } else {
    throw aucint::InputError("unknown weight '" + s + "'");
  }
  return c;
}

std::string weight_label(const WeightChoice& c) {
  switch (c.kind) {
    case WeightKind::UniformAroundMean: return "a_i1";
    case WeightKind::NormalFit: return "a_i2";
    case WeightKind::KernelFit: return "a_i3";
    case WeightKind::EmpiricalCdf: return "a_emp";
    case WeightKind::Degenerate: return "a_deg";
    default: return "a_i";
  }
}

// ---------------------------------------------------------------- evaluate

struct EvaluateOpts {
  CommonOpts common;
  std::string weight = "all";
  double bandwidth = 0.0;
};

int cmd_evaluate(const EvaluateOpts& o) {
  Report rep;
  rep.subcommand = "evaluate";
  std::optional<double> bw;
  if (o.bandwidth > 0.0) bw = o.bandwidth;

  std::vector<WeightChoice> choices;
  if (o.weight == "all") {
    choices.push_back(parse_weight("uniform", bw));
    choices.push_back(parse_weight("normal", bw));
    choices.push_back(parse_weight("kernel", bw));
  } else {
    choices.push_back(parse_weight(o.weight, bw));
  }

  rep.config = {{"input", o.common.input},   {"gold", o.common.gold},
                {"weight", o.weight},        {"boot", o.common.boot},
                {"seed", o.common.seed},     {"format", o.common.format},
                {"standardize", !o.common.no_standardize},
                {"bandwidth", o.bandwidth}};

  const Dataset d = load_and_prepare(o.common, &rep);
  const bool with_boot = o.common.boot >= 2;

  rep.columns = {"variable", "direction"};
  for (const auto& c : choices) {
    const std::string base = weight_label(c);
    rep.columns.push_back(base);
    if (with_boot) {
      rep.columns.push_back(base + "_sd");
      rep.columns.push_back(base + "_p");
    }
  }
  rep.columns.push_back("theta");
  if (with_boot) {
    rep.columns.push_back("theta_sd");
    rep.columns.push_back("theta_p");
  }

  struct Row {
    double sort_key = 0.5;
    std::vector<std::string> cells;
  };
  std::vector<Row> rows;

  for (Eigen::Index j = 0; j < d.p(); ++j) {
    Row row;
    std::vector<std::string> cells{d.names[std::size_t(j)]};
    std::vector<std::string> metric_cells;

    double primary = 0.5;
    for (std::size_t ci = 0; ci < choices.size(); ++ci) {
      const WeightChoice& c = choices[ci];
      Statistic st;
      st.name = weight_label(c);
      st.null_value = 0.5;
      st.eval = [&c, j](const Dataset& dd) {
        return aucint::auc_integrated(dd.x.col(j), dd.z, c.fit(dd.z)).value;
      };
      const double point = st.eval(d);
      // The last fitted kind drives sorting; with --weight all that is a_i3.
      if (ci + 1 == choices.size()) primary = point;
      metric_cells.push_back(fmt(point));
      if (with_boot) {
        const std::uint64_t bseed = aucint::mix64(
            o.common.seed ^ aucint::mix64(0x0E0A ^ (std::uint64_t(ci) << 32) ^ std::uint64_t(j)));
        const auto br = aucint::bootstrap_variance(d, st, o.common.boot, bseed);
        metric_cells.push_back(fmt(std::sqrt(br.variance)));
        if (br.variance > 0.0)
          metric_cells.push_back(fmt(aucint::wald_test(point, br.variance, 0.5).second));
        else
          metric_cells.push_back(point == 0.5 ? "1" : "0");
      }
    }

    {
      Statistic st;
      st.name = "theta";
      st.null_value = 0.5;
      st.eval = [j](const Dataset& dd) {
        return aucint::theta_obuchowski(dd.x.col(j), dd.z).value;
      };
      const double point = st.eval(d);
      metric_cells.push_back(fmt(point));
      if (with_boot) {
        const std::uint64_t bseed =
            aucint::mix64(o.common.seed ^ aucint::mix64(0x7E7A + std::uint64_t(j)));
        const auto br = aucint::bootstrap_variance(d, st, o.common.boot, bseed);
        metric_cells.push_back(fmt(std::sqrt(br.variance)));
        if (br.variance > 0.0)
          metric_cells.push_back(fmt(aucint::wald_test(point, br.variance, 0.5).second));
        else
          metric_cells.push_back(point == 0.5 ? "1" : "0");
      }
    }

    cells.push_back(primary >= 0.5 ? "+" : "-");
    cells.insert(cells.end(), metric_cells.begin(), metric_cells.end());
    row.sort_key = primary;
    row.cells = std::move(cells);
    rows.push_back(std::move(row));
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.sort_key > b.sort_key; });
  for (auto& r : rows) rep.add_row(std::move(r.cells));

  write_report(rep, o.common.out, o.common.format);
  return kExitOk;
}

// ----------------------------------------------------------------- combine

struct CombineOpts {
  CommonOpts common;
  std::string weight = "kernel";
  double bandwidth = 0.0;
  double smooth_h = 0.0;
  double tau = 1.0;
};

int cmd_combine(const CombineOpts& o) {
  Report rep;
  rep.subcommand = "combine";
  std::optional<double> bw;
  if (o.bandwidth > 0.0) bw = o.bandwidth;
  const WeightChoice wc = parse_weight(o.weight, bw);

  rep.config = {{"input", o.common.input},   {"gold", o.common.gold},
                {"weight", o.weight},        {"boot", o.common.boot},
                {"seed", o.common.seed},     {"format", o.common.format},
                {"standardize", !o.common.no_standardize},
                {"bandwidth", o.bandwidth},  {"smooth_h", o.smooth_h},
                {"tau", o.tau}};

  const Dataset d = load_and_prepare(o.common, &rep);
  if (d.p() < 2)
    throw aucint::InputError("combine needs at least 2 variables");
  const CutWeight w = wc.fit(d.z);

  // Cross-covariance combination; falls back to the LARS endpoint when the
  // least-squares system is singular.
  Eigen::VectorXd cc;
  std::string cc_method = "cc";
  try {
    cc = aucint::ols_combination(d).l;
  } catch (const aucint::NumericError&) {
    const auto path = aucint::lars_path(d);
    if (path.empty()) throw;
    cc = path.back().l;
    cc_method = "cc(lars)";
    rep.notes.emplace_back("cc_fallback", "least-squares was singular; using the LARS endpoint");
  }

  aucint::TgdmConfig tcfg;
  tcfg.tau = o.tau;
  tcfg.h = o.smooth_h;
  const aucint::CombinationResult tg = aucint::tgdm_maximize(d, w, tcfg);

  rep.notes.emplace_back("anchor", d.names[std::size_t(tg.anchor)]);
  rep.notes.emplace_back("tgdm_iterations", std::to_string(tg.iterations));
  rep.notes.emplace_back("tgdm_converged", tg.converged ? "yes" : "no");
  rep.notes.emplace_back("tgdm_h", fmt(tg.h));
  rep.notes.emplace_back("tgdm_trace_start", fmt(tg.trace.front()));
  rep.notes.emplace_back("tgdm_trace_end", fmt(tg.trace.back()));

  const bool with_boot = o.common.boot >= 2;
  rep.columns = {"row", "name", "cc", "tgdm"};
  if (with_boot) rep.columns.insert(rep.columns.end(), {"cc_sd", "tgdm_sd"});

  for (Eigen::Index j = 0; j < d.p(); ++j) {
    std::vector<std::string> cells{"coef", d.names[std::size_t(j)],
                                   fmt_coef(cc[j]), fmt_coef(tg.l[j])};
    if (with_boot) cells.insert(cells.end(), {"", ""});
    rep.add_row(std::move(cells));
  }

  // Index rows: the combination is held fixed; resampling refits the weight
  // and re-evaluates the combined score.
  const auto index_row = [&](const std::string& label, const Eigen::VectorXd& lcc,
                             const Eigen::VectorXd& ltg, std::uint64_t tag) {
    std::vector<std::string> cells{label, ""};
    std::vector<std::string> sds;
    for (const Eigen::VectorXd* l : {&lcc, &ltg}) {
      Statistic st;
      st.name = label;
      st.null_value = 0.5;
      if (label == "theta") {
        const Eigen::VectorXd lv = *l;
        st.eval = [lv](const Dataset& dd) {
          return aucint::theta_obuchowski(dd.x * lv, dd.z).value;
        };
      } else {
        const Eigen::VectorXd lv = *l;
        st.eval = [lv, &wc](const Dataset& dd) {
          return aucint::auc_combined(dd, lv, wc.fit(dd.z)).value;
        };
      }
      const double point = st.eval(d);
      cells.push_back(fmt(point));
      if (with_boot) {
        const std::uint64_t bseed = aucint::mix64(o.common.seed ^ aucint::mix64(tag + sds.size()));
        const auto br = aucint::bootstrap_variance(d, st, o.common.boot, bseed);
        sds.push_back(fmt(std::sqrt(br.variance)));
      }
    }
    cells.insert(cells.end(), sds.begin(), sds.end());
    rep.add_row(std::move(cells));
  };

  index_row(weight_label(wc), cc, tg.l, 0xC0DE00);
  index_row("theta", cc, tg.l, 0xC0DE10);

  for (auto& row : rep.rows)
    if (row[0] == "coef" && row[1] == d.names[std::size_t(tg.anchor)])
      row[1] += "*";  // mark the anchor variable

  write_report(rep, o.common.out, o.common.format);
  return tg.converged ? kExitOk : kExitNoConverge;
}

// ---------------------------------------------------------------- simulate

struct SimulateOpts {
  CommonOpts common;  // input/gold unused here
  std::string preset;
  std::string design = "bivariate-normal";
  std::vector<int> n{100};
  std::vector<double> rho{0.0};
  double mu_y = 1.0, mu_z = 1.0;
  std::vector<std::string> sigma{"1,1"};
  std::vector<std::string> gold_family{"normal"};
  std::vector<int> p{4};
  std::string noise = "normal";
  std::string true_coef;
  int replicates = 100;
  double tau = 1.0;
};

aucint::GoldFamily parse_gold_family(const std::string& s) {
  if (s == "normal") return aucint::GoldFamily::Normal;
  if (s == "t2") return aucint::GoldFamily::StudentT2;
  if (s == "cauchy") return aucint::GoldFamily::Cauchy;
  throw aucint::InputError("unknown gold family '" + s + "'");
}

std::pair<double, double> parse_sigma_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos)
    throw aucint::InputError("--sigma expects 'sy,sz'");
  try {
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw aucint::InputError("bad --sigma '" + s + "'");
  }
}

// Statistics for the single-score designs: correlation, the three fitted
// weight indexes, and the concordance probability.
std::vector<Statistic> single_score_stats() {
  std::vector<Statistic> stats;
  stats.push_back({"rho", [](const Dataset& d) {
                     return aucint::pearson_correlation(d.x.col(0), d.z);
                   }, 0.0});
  const WeightKind kinds[] = {WeightKind::UniformAroundMean, WeightKind::NormalFit,
                              WeightKind::KernelFit};
  const char* names[] = {"a_i1", "a_i2", "a_i3"};
  for (int k = 0; k < 3; ++k) {
    const WeightKind kind = kinds[k];
    stats.push_back({names[k], [kind](const Dataset& d) {
                       return aucint::auc_integrated(d.x.col(0), d.z,
                                                     aucint::fit_weight(kind, d.z)).value;
                     }, 0.5});
  }
  stats.push_back({"theta", [](const Dataset& d) {
                     return aucint::theta_obuchowski(d.x.col(0), d.z).value;
                   }, 0.5});
  return stats;
}

// Statistics for the linear-model design: first two single variables, the
// cross-covariance combination, and TGDM, all under the kernel weight.
std::vector<Statistic> combination_stats(double tau,
                                         std::shared_ptr<std::atomic<bool>> nonconverged) {
  std::vector<Statistic> stats;
  for (int j = 0; j < 2; ++j) {
    stats.push_back({"a_i3_x" + std::to_string(j + 1), [j](const Dataset& d) {
                       if (d.p() <= j) throw std::invalid_argument("missing column");
                       return aucint::auc_integrated(
                                  d.x.col(j), d.z,
                                  aucint::fit_weight(WeightKind::KernelFit, d.z)).value;
                     }, 0.5});
  }
  stats.push_back({"a_i3_cc", [](const Dataset& d) {
                     const auto cc = aucint::ols_combination(d);
                     return aucint::auc_combined(
                                d, cc.l, aucint::fit_weight(WeightKind::KernelFit, d.z)).value;
                   }, 0.5});
  stats.push_back({"a_i3_tgdm", [tau, nonconverged](const Dataset& d) {
                     const auto w = aucint::fit_weight(WeightKind::KernelFit, d.z);
                     aucint::TgdmConfig cfg;
                     cfg.tau = tau;
                     const auto tg = aucint::tgdm_maximize(d, w, cfg);
                     if (!tg.converged) nonconverged->store(true);
                     return aucint::auc_combined(d, tg.l, w).value;
                   }, 0.5});
  return stats;
}

void append_cells(std::vector<aucint::TableCell>* cells, const SimulateOpts& o,
                  std::uint64_t* cell_seq) {
  using namespace aucint;
  const auto cell_seed = [&](std::uint64_t k) { return mix64(o.common.seed ^ mix64(k)); };
  if (o.design == "bivariate-normal") {
    for (const std::string& sp : o.sigma) {
      const auto [sy, sz] = parse_sigma_pair(sp);
      for (int n : o.n)
        for (double rho : o.rho) {
          BivariateNormalDesign g;
          g.mu_y = o.mu_y;
          g.mu_z = o.mu_z;
          g.sigma_y = sy;
          g.sigma_z = sz;
          g.rho = rho;
          TableCell cell;
          cell.labels = {{"design", "bivariate-normal"},
                         {"n", std::to_string(n)},
                         {"sigma", fmt(sy) + "," + fmt(sz)},
                         {"rho", fmt(rho)}};
          cell.spec = {g, n, cell_seed((*cell_seq)++)};
          cell.replicates = o.replicates;
          cells->push_back(std::move(cell));
        }
    }
  } else if (o.design == "null-quadratic") {
    for (const std::string& gf : o.gold_family)
      for (int n : o.n) {
        NullQuadraticDesign g;
        g.gold = parse_gold_family(gf);
        TableCell cell;
        cell.labels = {{"design", "null-quadratic"},
                       {"n", std::to_string(n)},
                       {"gold", gf}};
        cell.spec = {g, n, cell_seed((*cell_seq)++)};
        cell.replicates = o.replicates;
        cells->push_back(std::move(cell));
      }
  } else if (o.design == "linear-model") {
    for (int pv : o.p)
      for (int n : o.n) {
        LinearModelDesign g;
        g.p = pv;
        g.noise = o.noise == "cauchy" ? NoiseFamily::Cauchy : NoiseFamily::Normal;
        if (!o.true_coef.empty()) {
          std::vector<double> c;
          std::stringstream ss(o.true_coef);
          for (std::string tok; std::getline(ss, tok, ',');) c.push_back(std::stod(tok));
          g.coef = Eigen::Map<Eigen::VectorXd>(c.data(), Eigen::Index(c.size()));
        }
        TableCell cell;
        cell.labels = {{"design", "linear-model"},
                       {"n", std::to_string(n)},
                       {"p", std::to_string(pv)},
                       {"noise", o.noise}};
        cell.spec = {g, n, cell_seed((*cell_seq)++)};
        cell.replicates = o.replicates;
        cells->push_back(std::move(cell));
      }
  } else {
    throw aucint::InputError("unknown design '" + o.design + "'");
  }
}

int cmd_simulate(SimulateOpts o) {
  using namespace aucint;
  // Presets mirror the standard study grids.
  if (!o.preset.empty()) {
    if (o.preset == "table1") {
      o.design = "bivariate-normal";
      o.n = {50, 100};
      o.rho = {0.0, 0.25, 0.5, 0.75, 1.0};
      o.sigma = {"1,1", "1,2", "2,1", "2,2"};
    } else if (o.preset == "table2") {
      o.design = "null-quadratic";
      o.n = {50, 100};
      o.gold_family = {"normal", "t2", "cauchy"};
    } else if (o.preset == "table3") {
      o.design = "linear-model";
      o.n = {50, 100};
      o.p = {4, 10, 20};
      o.common.boot = 0;  // empirical sds only; bootstrap opt-in via --boot
    } else {
      throw InputError("unknown preset '" + o.preset + "'");
    }
  }

  Report rep;
  rep.subcommand = "simulate";
  rep.config = {{"preset", o.preset},       {"design", o.design},
                {"replicates", o.replicates}, {"boot", o.common.boot},
                {"seed", o.common.seed},    {"format", o.common.format},
                {"tau", o.tau}};

  std::vector<TableCell> cells;
  std::uint64_t cell_seq = 0;
  append_cells(&cells, o, &cell_seq);

  auto nonconverged = std::make_shared<std::atomic<bool>>(false);
  const std::vector<Statistic> stats = o.design == "linear-model"
                                           ? combination_stats(o.tau, nonconverged)
                                           : single_score_stats();

  const std::vector<CellResult> results = run_table(cells, stats, o.common.boot);

  // Union of label keys, in first-seen order.
  std::vector<std::string> label_keys;
  for (const auto& cell : cells)
    for (const auto& [k, v] : cell.labels)
      if (std::find(label_keys.begin(), label_keys.end(), k) == label_keys.end())
        label_keys.push_back(k);

  rep.columns = label_keys;
  rep.columns.insert(rep.columns.end(),
                     {"statistic", "replicates", "mean", "emp_sd", "q25", "q50", "q75"});
  const bool with_boot = o.common.boot >= 2;
  if (with_boot)
    rep.columns.insert(rep.columns.end(), {"boot_sd", "rejection", "mean_p"});

  for (const CellResult& r : results) {
    std::vector<std::string> row;
    for (const std::string& k : label_keys) {
      std::string v;
      for (const auto& [lk, lv] : r.labels)
        if (lk == k) v = lv;
      row.push_back(v);
    }
    row.insert(row.end(), {r.statistic, std::to_string(r.replicates), fmt(r.mean),
                           fmt(r.emp_sd), fmt(r.q25), fmt(r.q50), fmt(r.q75)});
    if (with_boot)
      row.insert(row.end(),
                 {fmt(r.mean_boot_sd), fmt(r.rejection_rate), fmt(r.mean_pvalue)});
    rep.add_row(std::move(row));
  }

  write_report(rep, o.common.out, o.common.format);
  return nonconverged->load() ? kExitNoConverge : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"integrated-AUC diagnostics against a continuous gold standard"};
  app.require_subcommand(1);

  EvaluateOpts ev;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "per-variable diagnostic indexes with bootstrap inference");
  add_io_flags(evaluate, &ev.common);
  evaluate->add_option("--weight", ev.weight,
                       "weight: all | uniform | normal | kernel | empirical | degenerate:<cut>");
  evaluate->add_option("--bandwidth", ev.bandwidth,
                       "kernel density bandwidth (default: 1.06 sd n^-1/5)");
  add_report_flags(evaluate, &ev.common);

  CombineOpts co;
  CLI::App* combine = app.add_subcommand(
      "combine", "best linear combination (cross-covariance and TGDM)");
  add_io_flags(combine, &co.common);
  combine->add_option("--weight", co.weight,
                      "weight: uniform | normal | kernel | empirical | degenerate:<cut>");
  combine->add_option("--bandwidth", co.bandwidth,
                      "kernel density bandwidth (default: 1.06 sd n^-1/5)");
  combine->add_option("--smooth-h", co.smooth_h,
                      "sigmoid bandwidth for TGDM (default: sd n^-1/3)");
  combine->add_option("--tau", co.tau, "TGDM threshold fraction")
      ->check(CLI::Range(0.0, 1.0));
  add_report_flags(combine, &co.common);

  SimulateOpts si;
  CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo study tables");
  simulate->add_option("--preset", si.preset, "table1 | table2 | table3");
  simulate->add_option("--design", si.design,
                       "bivariate-normal | null-quadratic | linear-model");
  simulate->add_option("--n", si.n, "sample sizes");
  simulate->add_option("--rho", si.rho, "correlations (bivariate-normal)");
  simulate->add_option("--mu-y", si.mu_y, "score mean (bivariate-normal)");
  simulate->add_option("--mu-z", si.mu_z, "gold mean (bivariate-normal)");
  simulate->add_option("--sigma", si.sigma, "scale pairs 'sy,sz' (bivariate-normal)");
  simulate->add_option("--gold-family", si.gold_family,
                       "normal | t2 | cauchy (null-quadratic)");
  simulate->add_option("--p", si.p, "variable counts (linear-model)");
  simulate->add_option("--noise", si.noise, "normal | cauchy (linear-model)");
  simulate->add_option("--true-coef", si.true_coef,
                       "comma-separated true coefficients (linear-model)");
  simulate->add_option("--replicates", si.replicates, "Monte Carlo replicates")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--tau", si.tau, "TGDM threshold fraction (linear-model)")
      ->check(CLI::Range(0.0, 1.0));
  add_report_flags(simulate, &si.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (evaluate->parsed()) return cmd_evaluate(ev);
    if (combine->parsed()) return cmd_combine(co);
    return cmd_simulate(si);
  } catch (const aucint::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}
