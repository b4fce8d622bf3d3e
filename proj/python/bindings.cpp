#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aucint/combination.hpp"
#include "aucint/dataset.hpp"
#include "aucint/inference.hpp"
#include "aucint/measures.hpp"
#include "aucint/simgen.hpp"
#include "aucint/weights.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace aucint;

PYBIND11_MODULE(_core, m) {
  m.doc() = "integrated-AUC diagnostics for continuous gold standards";

  py::enum_<WeightKind>(m, "WeightKind")
      .value("UniformAroundMean", WeightKind::UniformAroundMean)
      .value("NormalFit", WeightKind::NormalFit)
      .value("KernelFit", WeightKind::KernelFit)
      .value("Degenerate", WeightKind::Degenerate)
      .value("DiscreteMass", WeightKind::DiscreteMass)
      .value("EmpiricalCdf", WeightKind::EmpiricalCdf);

  py::enum_<IndexMethod>(m, "IndexMethod")
      .value("Hard", IndexMethod::Hard)
      .value("Smooth", IndexMethod::Smooth)
      .value("Theta", IndexMethod::Theta)
      .value("Classical", IndexMethod::Classical);

  py::enum_<CombinationMethod>(m, "CombinationMethod")
      .value("Ols", CombinationMethod::Ols)
      .value("Lars", CombinationMethod::Lars)
      .value("Tgdm", CombinationMethod::Tgdm);

  py::class_<Dataset>(m, "Dataset")
      .def(py::init([](Eigen::MatrixXd x, Eigen::VectorXd z,
                       std::vector<std::string> names, std::string z_name) {
             Dataset d;
             d.x = std::move(x);
             d.z = std::move(z);
             if (names.empty())
               for (Eigen::Index j = 0; j < d.x.cols(); ++j)
                 names.push_back("x" + std::to_string(j + 1));
             d.names = std::move(names);
             d.z_name = std::move(z_name);
             validate(d);
             return d;
           }),
           py::arg("x"), py::arg("z"),
           py::arg("names") = std::vector<std::string>{}, py::arg("z_name") = "z")
      .def_readonly("x", &Dataset::x)
      .def_readonly("z", &Dataset::z)
      .def_readonly("names", &Dataset::names)
      .def_readonly("z_name", &Dataset::z_name)
      .def_property_readonly("n", &Dataset::n)
      .def_property_readonly("p", &Dataset::p);

  py::class_<Standardization>(m, "Standardization")
      .def_readonly("x_mean", &Standardization::x_mean)
      .def_readonly("x_sd", &Standardization::x_sd)
      .def_readonly("z_mean", &Standardization::z_mean)
      .def_readonly("z_sd", &Standardization::z_sd);

  m.def(
      "load_delimited",
      [](const std::string& path, const std::string& gold, bool header,
         std::optional<char> delimiter) {
        LoadOptions opts;
        opts.header = header;
        opts.delimiter = delimiter;
        LoadReport report;
        Dataset d = load_delimited(path, gold, opts, &report);
        return py::make_tuple(d, report.rows_dropped, report.columns_skipped);
      },
      py::arg("path"), py::arg("gold"), py::arg("header") = true,
      py::arg("delimiter") = std::nullopt,
      "returns (dataset, rows_dropped, columns_skipped)");
  m.def("standardize", [](const Dataset& d) { return standardize(d); });
  m.def("center", [](const Dataset& d) { return center(d); });

  py::class_<CutWeight>(m, "CutWeight")
      .def_static("uniform_around_mean", &CutWeight::uniform_around_mean,
                  py::arg("mu"), py::arg("sigma"))
      .def_static("normal_fit", &CutWeight::normal_fit, py::arg("mu"), py::arg("sigma"))
      .def_static("kernel_fit", &CutWeight::kernel_fit, py::arg("sample"),
                  py::arg("bandwidth"))
      .def_static("degenerate", &CutWeight::degenerate, py::arg("c0"))
      .def_static("discrete_mass", &CutWeight::discrete_mass, py::arg("points"),
                  py::arg("masses"))
      .def_static("empirical_cdf", &CutWeight::empirical_cdf, py::arg("sample"))
      .def_property_readonly("kind", &CutWeight::kind)
      .def("cdf", &CutWeight::cdf)
      .def("pdf", &CutWeight::pdf)
      .def_property_readonly("mu", &CutWeight::mu)
      .def_property_readonly("sigma", &CutWeight::sigma)
      .def_property_readonly("bandwidth", &CutWeight::bandwidth);

  m.def("silverman_bandwidth", &silverman_bandwidth);
  m.def("fit_weight", &fit_weight, py::arg("kind"), py::arg("z"),
        py::arg("bandwidth") = std::nullopt);

  py::class_<StepFunction>(m, "StepFunction")
      .def(py::init([](std::vector<double> breaks, std::vector<double> values) {
             StepFunction f{std::move(breaks), std::move(values)};
             validate(f);
             return f;
           }),
           py::arg("breaks"), py::arg("values"))
      .def_readonly("breaks", &StepFunction::breaks)
      .def_readonly("values", &StepFunction::values)
      .def("value_at", &StepFunction::value_at)
      .def("value_left_of", &StepFunction::value_left_of);

  m.def("integrate_step", &integrate_step);

  py::class_<AucEstimate>(m, "AucEstimate")
      .def_readonly("value", &AucEstimate::value)
      .def_readonly("method", &AucEstimate::method)
      .def_readonly("weight", &AucEstimate::weight)
      .def_readonly("smoothing_h", &AucEstimate::smoothing_h)
      .def("__repr__", [](const AucEstimate& e) {
        return "AucEstimate(value=" + std::to_string(e.value) + ")";
      });

  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("cut", &SweepResult::cut)
      .def_readonly("group_sizes", &SweepResult::group_sizes);

  m.def("auc_at_cut", &auc_at_cut, py::arg("y"), py::arg("z"), py::arg("c"));
  m.def("sweep_cuts", &sweep_cuts, py::arg("y"), py::arg("z"));
  m.def("auc_integrated", &auc_integrated, py::arg("y"), py::arg("z"), py::arg("w"));
  m.def("auc_integrated_empirical", &auc_integrated_empirical, py::arg("y"),
        py::arg("z"));
  m.def("auc_smoothed", &auc_smoothed, py::arg("y"), py::arg("z"), py::arg("w"),
        py::arg("h"));
  m.def("auc_combined", &auc_combined, py::arg("d"), py::arg("l"), py::arg("w"),
        py::arg("smooth") = false, py::arg("h") = std::nullopt);
  m.def("theta_obuchowski", &theta_obuchowski, py::arg("y"), py::arg("z"));
  m.def("classical_auc", &classical_auc, py::arg("y"), py::arg("labels"));
  m.def("default_smooth_bandwidth", &default_smooth_bandwidth, py::arg("y"));

  py::class_<TgdmConfig>(m, "TgdmConfig")
      .def(py::init<>())
      .def_readwrite("tau", &TgdmConfig::tau)
      .def_readwrite("h", &TgdmConfig::h)
      .def_readwrite("max_iter", &TgdmConfig::max_iter)
      .def_readwrite("tol", &TgdmConfig::tol)
      .def_readwrite("step_min", &TgdmConfig::step_min)
      .def_readwrite("step_max", &TgdmConfig::step_max)
      .def_readwrite("step_grid", &TgdmConfig::step_grid)
      .def_readwrite("golden_iters", &TgdmConfig::golden_iters);

  py::class_<CombinationResult>(m, "CombinationResult")
      .def_readonly("l", &CombinationResult::l)
      .def_readonly("method", &CombinationResult::method)
      .def_readonly("anchor", &CombinationResult::anchor)
      .def_readonly("trace", &CombinationResult::trace)
      .def_readonly("iterates", &CombinationResult::iterates)
      .def_readonly("iterations", &CombinationResult::iterations)
      .def_readonly("converged", &CombinationResult::converged)
      .def_readonly("tau", &CombinationResult::tau)
      .def_readonly("h", &CombinationResult::h)
      .def_readonly("lars_step", &CombinationResult::lars_step);

  m.def("ols_combination", &ols_combination, py::arg("d"));
  m.def("lars_path", &lars_path, py::arg("d"), py::arg("max_steps") = -1);
  m.def("select_anchor", &select_anchor, py::arg("d"), py::arg("w"), py::arg("h"));
  m.def("tgdm_gradient", &tgdm_gradient, py::arg("d"), py::arg("l"), py::arg("w"),
        py::arg("h"));
  m.def("tgdm_maximize", &tgdm_maximize, py::arg("d"), py::arg("w"),
        py::arg("config") = TgdmConfig{});

  py::class_<Statistic>(m, "Statistic")
      .def(py::init([](std::string name, std::function<double(const Dataset&)> eval,
                       double null_value) {
             return Statistic{std::move(name), std::move(eval), null_value};
           }),
           py::arg("name"), py::arg("eval"), py::arg("null_value") = 0.5)
      .def_readonly("name", &Statistic::name)
      .def_readonly("null_value", &Statistic::null_value);

  py::class_<BootstrapReport>(m, "BootstrapReport")
      .def_readonly("point", &BootstrapReport::point)
      .def_readonly("variance", &BootstrapReport::variance)
      .def_readonly("replicates_requested", &BootstrapReport::replicates_requested)
      .def_readonly("replicates_used", &BootstrapReport::replicates_used)
      .def_readonly("seed", &BootstrapReport::seed)
      .def_readonly("statistic", &BootstrapReport::statistic);

  m.def("bootstrap_variance", &bootstrap_variance, py::arg("d"), py::arg("stat"),
        py::arg("replicates"), py::arg("seed"));
  m.def("wald_test", &wald_test, py::arg("point"), py::arg("variance"),
        py::arg("null_value"));

  py::enum_<NoiseFamily>(m, "NoiseFamily")
      .value("Normal", NoiseFamily::Normal)
      .value("Cauchy", NoiseFamily::Cauchy);
  py::enum_<GoldFamily>(m, "GoldFamily")
      .value("Normal", GoldFamily::Normal)
      .value("StudentT2", GoldFamily::StudentT2)
      .value("Cauchy", GoldFamily::Cauchy);

  py::class_<BivariateNormalDesign>(m, "BivariateNormalDesign")
      .def(py::init<>())
      .def_readwrite("mu_y", &BivariateNormalDesign::mu_y)
      .def_readwrite("mu_z", &BivariateNormalDesign::mu_z)
      .def_readwrite("sigma_y", &BivariateNormalDesign::sigma_y)
      .def_readwrite("sigma_z", &BivariateNormalDesign::sigma_z)
      .def_readwrite("rho", &BivariateNormalDesign::rho);

  py::class_<NullQuadraticDesign>(m, "NullQuadraticDesign")
      .def(py::init<>())
      .def_readwrite("gold", &NullQuadraticDesign::gold);

  py::class_<LinearModelDesign>(m, "LinearModelDesign")
      .def(py::init<>())
      .def_readwrite("p", &LinearModelDesign::p)
      .def_readwrite("coef", &LinearModelDesign::coef)
      .def_readwrite("noise", &LinearModelDesign::noise);

  py::class_<SimSpec>(m, "SimSpec")
      .def(py::init([](SimDesign design, int n, std::uint64_t seed) {
             return SimSpec{std::move(design), n, seed};
           }),
           py::arg("design"), py::arg("n"), py::arg("seed"))
      .def_readonly("n", &SimSpec::n)
      .def_readonly("seed", &SimSpec::seed);

  m.def("generate", &generate, py::arg("spec"), py::arg("replicate"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
