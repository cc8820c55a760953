#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "momest/estimator.hpp"
#include "momest/exact.hpp"
#include "momest/harness.hpp"
#include "momest/instances.hpp"
#include "momest/io.hpp"
#include "momest/oracle.hpp"
#include "momest/types.hpp"

namespace py = pybind11;
using namespace momest;

namespace {

SyntheticFamily family_from_args(const std::string& name, double c, double alpha,
                                 std::uint64_t k, double ratio) {
    if (name == "uniform") return Uniform{c};
    if (name == "powerlaw") return PowerLaw{alpha};
    if (name == "fewheavy") return FewHeavy{k, ratio};
    throw InvalidFamilyParams("family must be uniform|powerlaw|fewheavy, got '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_momest, m) {
    m.doc() = "Sublinear moment estimation under weighted-sampling oracles";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "MomestError");

    py::class_<WeightedInstance>(m, "WeightedInstance")
        .def(py::init([](std::vector<double> weights, std::string label) {
                 WeightedInstance inst{std::move(weights), std::move(label)};
                 validate_instance(inst);
                 return inst;
             }),
             py::arg("weights"), py::arg("label") = "")
        .def_readonly("weights", &WeightedInstance::weights)
        .def_readonly("label", &WeightedInstance::label)
        .def("__len__", &WeightedInstance::size);

    py::class_<ConstantProfile>(m, "ConstantProfile")
        .def_static("paper", &ConstantProfile::paper)
        .def_static("test", &ConstantProfile::test)
        .def_static("custom", &ConstantProfile::custom, py::arg("sum_c"), py::arg("inner_c"),
                    py::arg("outer_c"))
        .def_readonly("sum_c", &ConstantProfile::sum_c)
        .def_readonly("inner_c", &ConstantProfile::inner_c)
        .def_readonly("outer_c", &ConstantProfile::outer_c)
        .def_readonly("name", &ConstantProfile::name);

    py::class_<EstimatorParams>(m, "EstimatorParams")
        .def(py::init<double, double, double, std::optional<double>, ConstantProfile,
                      std::uint64_t>(),
             py::arg("t"), py::arg("eps"), py::arg("delta"), py::arg("eps1") = py::none(),
             py::arg("scale") = ConstantProfile::paper(), py::arg("seed") = 0)
        .def_readonly("t", &EstimatorParams::t)
        .def_readonly("eps", &EstimatorParams::eps)
        .def_readonly("delta", &EstimatorParams::delta)
        .def_readonly("eps1", &EstimatorParams::eps1)
        .def_readonly("scale", &EstimatorParams::scale)
        .def_readonly("seed", &EstimatorParams::seed);

    py::class_<BudgetBreakdown>(m, "BudgetBreakdown")
        .def_readonly("sum_stage", &BudgetBreakdown::sum_stage)
        .def_readonly("inner", &BudgetBreakdown::inner)
        .def_readonly("outer", &BudgetBreakdown::outer)
        .def_readonly("total", &BudgetBreakdown::total);

    py::class_<EstimateReport>(m, "EstimateReport")
        .def_readonly("value", &EstimateReport::value)
        .def_readonly("samples_proportional", &EstimateReport::samples_proportional)
        .def_readonly("samples_uniform", &EstimateReport::samples_uniform)
        .def_readonly("w_hat", &EstimateReport::w_hat)
        .def_readonly("budget", &EstimateReport::budget);

    py::class_<SumEstimate>(m, "SumEstimate")
        .def_readonly("w_hat", &SumEstimate::w_hat)
        .def_readonly("samples", &SumEstimate::samples)
        .def_readonly("batches", &SumEstimate::batches);

    py::enum_<DrawKind>(m, "DrawKind")
        .value("Proportional", DrawKind::Proportional)
        .value("Uniform", DrawKind::Uniform);

    py::class_<OracleHandle>(m, "OracleHandle")
        .def("draw",
             [](OracleHandle& h, DrawKind kind) {
                 const Sample s = h.draw(kind);
                 return py::make_tuple(s.index, s.weight);
             },
             py::arg("kind") = DrawKind::Proportional)
        .def("queries_used", &OracleHandle::queries_used)
        .def("total_weight", &OracleHandle::total_weight)
        .def("class_draws", &OracleHandle::class_draws)
        .def("__len__", &OracleHandle::size);

    m.def("validate_instance", &validate_instance, py::arg("instance"));
    m.def("build_oracle", &build_oracle, py::arg("instance"), py::arg("seed"));
    m.def("build_pair_oracle", &build_pair_oracle, py::arg("instance"), py::arg("seed"),
          py::arg("class_begin"));

    m.def("exact_sum", &exact_sum, py::arg("instance"));
    m.def("exact_moment", &exact_moment, py::arg("instance"), py::arg("t"));

    py::class_<DensityReport>(m, "DensityReport")
        .def_readonly("rho", &DensityReport::rho)
        .def_readonly("argmax_element", &DensityReport::argmax_element)
        .def_readonly("argmax_subset", &DensityReport::argmax_subset);

    m.def("moment_density_closed", &moment_density_closed, py::arg("instance"), py::arg("t"));
    m.def("moment_density_bruteforce", &moment_density_bruteforce, py::arg("instance"),
          py::arg("t"));

    py::enum_<PairVariant>(m, "PairVariant")
        .value("Light", PairVariant::Light)
        .value("Heavy", PairVariant::Heavy);

    py::class_<HitProbability>(m, "HitProbability")
        .def_readonly("proportional", &HitProbability::proportional)
        .def_readonly("uniform", &HitProbability::uniform)
        .def_readonly("closed_form_proportional", &HitProbability::closed_form_proportional)
        .def_readonly("closed_form_uniform", &HitProbability::closed_form_uniform);

    m.def("lb_hit_probability", &lb_hit_probability, py::arg("pair"),
          py::arg("variant") = PairVariant::Heavy);

    py::class_<PairAnalysis>(m, "PairAnalysis")
        .def_readonly("gap_ratio", &PairAnalysis::gap_ratio)
        .def_readonly("n1", &PairAnalysis::n1)
        .def_readonly("n2", &PairAnalysis::n2)
        .def_readonly("d1", &PairAnalysis::d1)
        .def_readonly("d2", &PairAnalysis::d2)
        .def_readonly("rho_closed_heavy", &PairAnalysis::rho_closed_heavy)
        .def_readonly("rho_closed_light", &PairAnalysis::rho_closed_light);

    py::class_<LowerBoundPair>(m, "LowerBoundPair")
        .def_readonly("light", &LowerBoundPair::light)
        .def_readonly("heavy", &LowerBoundPair::heavy)
        .def_readonly("n", &LowerBoundPair::n)
        .def_readonly("t", &LowerBoundPair::t)
        .def_readonly("eps", &LowerBoundPair::eps)
        .def_readonly("analysis", &LowerBoundPair::analysis)
        .def_readonly("class_begin", &LowerBoundPair::class_begin);

    m.def("gen_lb_proportional", &gen_lb_proportional, py::arg("n"), py::arg("t"),
          py::arg("eps"));
    m.def("gen_lb_density", &gen_lb_density, py::arg("n"), py::arg("t"), py::arg("eps"));
    m.def("gen_lb_small_t", &gen_lb_small_t, py::arg("n"), py::arg("t"), py::arg("eps"));
    m.def("gen_synthetic",
          [](std::uint64_t n, const std::string& family, std::uint64_t seed, double c,
             double alpha, std::uint64_t k, double ratio) {
              return gen_synthetic(n, family_from_args(family, c, alpha, k, ratio), seed);
          },
          py::arg("n"), py::arg("family"), py::arg("seed") = 0, py::arg("c") = 1.0,
          py::arg("alpha") = 2.0, py::arg("k") = 1, py::arg("ratio") = 2.0);

    m.def("required_budget", &required_budget, py::arg("params"), py::arg("n"));
    m.def("estimate_sum", &estimate_sum, py::arg("handle"), py::arg("eps1"), py::arg("delta"),
          py::arg("scale"));
    m.def("estimate_moment", &estimate_moment, py::arg("handle"), py::arg("params"),
          py::arg("n"));
    m.def("estimate_moment_given_sum", &estimate_moment_given_sum, py::arg("handle"),
          py::arg("params"), py::arg("n"), py::arg("w_known"));
    m.def("inner_term_expectation", &inner_term_expectation, py::arg("instance"), py::arg("t"),
          py::arg("w_plug"));

    py::class_<TrialStats>(m, "TrialStats")
        .def_readonly("family", &TrialStats::family)
        .def_readonly("n", &TrialStats::n)
        .def_readonly("t", &TrialStats::t)
        .def_readonly("eps", &TrialStats::eps)
        .def_readonly("delta", &TrialStats::delta)
        .def_readonly("profile", &TrialStats::profile)
        .def_readonly("trials", &TrialStats::trials)
        .def_readonly("successes", &TrialStats::successes)
        .def_readonly("success_rate", &TrialStats::success_rate)
        .def_readonly("mean_rel_error", &TrialStats::mean_rel_error)
        .def_readonly("max_rel_error", &TrialStats::max_rel_error)
        .def_readonly("samples_per_trial", &TrialStats::samples_per_trial)
        .def_readonly("wall_time_ns", &TrialStats::wall_time_ns)
        .def_readonly("error_tally", &TrialStats::error_tally);

    m.def("run_trials", &run_trials, py::arg("instance"), py::arg("params"), py::arg("trials"),
          py::arg("master_seed"));

    py::class_<DistinguishabilityRow>(m, "DistinguishabilityRow")
        .def_readonly("variant", &DistinguishabilityRow::variant)
        .def_readonly("exact_hit_p", &DistinguishabilityRow::exact_hit_p)
        .def_readonly("predicted_hit_rate", &DistinguishabilityRow::predicted_hit_rate)
        .def_readonly("empirical_hit_rate", &DistinguishabilityRow::empirical_hit_rate);

    py::class_<DistinguishabilityReport>(m, "DistinguishabilityReport")
        .def_readonly("family", &DistinguishabilityReport::family)
        .def_readonly("n", &DistinguishabilityReport::n)
        .def_readonly("t", &DistinguishabilityReport::t)
        .def_readonly("eps", &DistinguishabilityReport::eps)
        .def_readonly("budget", &DistinguishabilityReport::budget)
        .def_readonly("trials", &DistinguishabilityReport::trials)
        .def_readonly("rows", &DistinguishabilityReport::rows);

    m.def("distinguishability_report", &distinguishability_report, py::arg("pair"),
          py::arg("budget"), py::arg("trials"), py::arg("master_seed"));

    m.def("read_instance", &read_instance, py::arg("path"));
    m.def("write_instance", &write_instance, py::arg("instance"), py::arg("path"),
          py::arg("overwrite") = false);
    m.def("serialize_instance", &serialize_instance, py::arg("instance"));
    m.def("parse_instance", &parse_instance, py::arg("text"));
}
