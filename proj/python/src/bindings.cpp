#include "osctail/acceptance.hpp"
#include "osctail/errors.hpp"
#include "osctail/reference.hpp"
#include "osctail/report.hpp"
#include "osctail/tail.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace osctail;

namespace {

Integrand make_integrand(const std::string& name, RealFunction f,
                         std::vector<RealFunction> derivatives,
                         std::optional<double> decay_exponent,
                         std::optional<double> oscillation_hint)
{
    Integrand g(name, std::move(f));
    if (!derivatives.empty())
        g = g.with_derivatives(std::move(derivatives));
    if (decay_exponent)
        g = g.with_decay_exponent(*decay_exponent);
    if (oscillation_hint)
        g = g.with_oscillation_hint(*oscillation_hint);
    return g;
}

std::string sheet_text(const report::Sheet& sheet, const std::string& format)
{
    std::ostringstream out;
    report::write(out, sheet, format == "text" ? report::Format::Text : report::Format::Csv);
    return out.str();
}

} // namespace

PYBIND11_MODULE(_osctail, m)
{
    m.doc() = "Semi-infinite oscillatory integrals with end-point tail corrections";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<EvaluationError>(m, "EvaluationError", error.ptr());
    py::register_exception<ConfigurationError>(m, "ConfigurationError", error.ptr());
    py::register_exception<NumericError>(m, "NumericError", error.ptr());
    py::register_exception<RangeError>(m, "RangeError", error.ptr());
    static py::exception<ConvergenceError> convergence(m, "ConvergenceError", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const ConvergenceError& e) {
            // Carry the best estimate and its bracket as attributes.
            py::object exc = py::reinterpret_borrow<py::object>(convergence.ptr())(e.what());
            exc.attr("best_estimate") = e.best_estimate();
            exc.attr("bracket") = py::make_tuple(e.bracket_lower(), e.bracket_upper());
            PyErr_SetObject(convergence.ptr(), exc.ptr());
        }
    });

    py::enum_<KernelKind>(m, "KernelKind")
        .value("Sine", KernelKind::Sine)
        .value("Cosine", KernelKind::Cosine);
    py::enum_<TruncationRule>(m, "TruncationRule")
        .value("KernelZeros", TruncationRule::KernelZeros)
        .value("KernelExtrema", TruncationRule::KernelExtrema);
    py::enum_<DerivativeSource>(m, "DerivativeSource")
        .value("AnalyticRequired", DerivativeSource::AnalyticRequired)
        .value("FiniteDifferenceFallback", DerivativeSource::FiniteDifferenceFallback);

    py::class_<Integrand>(m, "Integrand")
        .def(py::init(&make_integrand), py::arg("name"), py::arg("f"),
             py::arg("derivatives") = std::vector<RealFunction>{},
             py::arg("decay_exponent") = py::none(), py::arg("oscillation_hint") = py::none())
        .def("__call__", &Integrand::operator(), py::arg("x"))
        .def("derivative",
             [](const Integrand& f, int m, double x) {
                 const RealFunction* d = f.derivative(m);
                 if (!d)
                     throw ConfigurationError("derivative not registered");
                 return (*d)(x);
             },
             py::arg("m"), py::arg("x"))
        .def_property_readonly("name", &Integrand::name)
        .def_property_readonly("analytic_order", &Integrand::analytic_order)
        .def_property_readonly("decay_exponent", &Integrand::decay_exponent)
        .def_property_readonly("oscillation_hint", &Integrand::oscillation_hint)
        .def("__repr__", [](const Integrand& f) { return "<Integrand " + f.name() + ">"; });

    py::class_<OscillatoryKernel>(m, "OscillatoryKernel")
        .def(py::init<KernelKind, double>(), py::arg("kind"), py::arg("omega") = 1.0)
        .def_static("sine", &OscillatoryKernel::sine, py::arg("omega") = 1.0)
        .def_static("cosine", &OscillatoryKernel::cosine, py::arg("omega") = 1.0)
        .def("__call__", &OscillatoryKernel::operator(), py::arg("x"))
        .def_property_readonly("kind", &OscillatoryKernel::kind)
        .def_property_readonly("omega", &OscillatoryKernel::omega)
        .def_property_readonly("half_period", &OscillatoryKernel::half_period);

    py::class_<TruncationPoint>(m, "TruncationPoint")
        .def(py::init<double, std::int64_t, TruncationRule, const OscillatoryKernel&>(),
             py::arg("b"), py::arg("n"), py::arg("rule"), py::arg("kernel"))
        .def_static("aligned", &TruncationPoint::aligned, py::arg("kernel"), py::arg("n"),
                    py::arg("rule") = TruncationRule::KernelZeros)
        .def_property_readonly("b", &TruncationPoint::b)
        .def_property_readonly("n", &TruncationPoint::n_index)
        .def_property_readonly("rule", &TruncationPoint::rule)
        .def_property_readonly("parity_sign", &TruncationPoint::parity_sign);

    py::class_<QuadratureConfig>(m, "QuadratureConfig")
        .def(py::init<>())
        .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
        .def_readwrite("max_subdivisions_per_cycle", &QuadratureConfig::max_subdivisions_per_cycle)
        .def_readwrite("nodes_per_panel", &QuadratureConfig::nodes_per_panel);

    py::class_<CorrectionSpec>(m, "CorrectionSpec")
        .def(py::init([](int k, DerivativeSource source, bool estimate) {
                 CorrectionSpec s;
                 s.order_k = k;
                 s.derivative_source = source;
                 s.emit_error_estimate = estimate;
                 s.validate();
                 return s;
             }),
             py::arg("order_k") = 0, py::arg("derivative_source") = DerivativeSource::AnalyticRequired,
             py::arg("emit_error_estimate") = false)
        .def_readwrite("order_k", &CorrectionSpec::order_k)
        .def_readwrite("derivative_source", &CorrectionSpec::derivative_source)
        .def_readwrite("emit_error_estimate", &CorrectionSpec::emit_error_estimate);

    py::class_<CorrectionResult>(m, "CorrectionResult")
        .def_readonly("value", &CorrectionResult::value)
        .def_readonly("order_k", &CorrectionResult::order_k)
        .def_readonly("terms", &CorrectionResult::terms)
        .def_readonly("error_estimate", &CorrectionResult::error_estimate)
        .def_readonly("evaluations", &CorrectionResult::evaluations)
        .def_readonly("warnings", &CorrectionResult::warnings);

    py::class_<IntegralResult>(m, "IntegralResult")
        .def_readonly("finite_part", &IntegralResult::finite_part)
        .def_readonly("tail_correction", &IntegralResult::tail_correction)
        .def_readonly("total", &IntegralResult::total)
        .def_readonly("error_estimate", &IntegralResult::error_estimate)
        .def_readonly("evaluations", &IntegralResult::evaluations)
        .def_readonly("b_used", &IntegralResult::b_used)
        .def_readonly("warnings", &IntegralResult::warnings);

    m.def("cycle_breakpoints", &cycle_breakpoints, py::arg("a"), py::arg("b"), py::arg("kernel"));
    m.def("integrate_finite", &integrate_finite, py::arg("f"), py::arg("kernel"), py::arg("a"),
          py::arg("b"), py::arg("cfg") = QuadratureConfig{});
    m.def("select_truncation", &select_truncation, py::arg("kernel"), py::arg("rule"),
          py::arg("min_length"), py::arg("a") = 0.0);
    m.def("correct_zeroth", &correct_zeroth, py::arg("f"), py::arg("kernel"), py::arg("t"));
    m.def("correct_series", &correct_series, py::arg("f"), py::arg("kernel"), py::arg("t"),
          py::arg("spec") = CorrectionSpec{});
    m.def("correct_extrema", &correct_extrema, py::arg("f"), py::arg("kernel"), py::arg("t"),
          py::arg("spec") = CorrectionSpec{});
    m.def("error_estimate", &error_estimate, py::arg("f"), py::arg("kernel"), py::arg("t"),
          py::arg("k"), py::arg("source") = DerivativeSource::AnalyticRequired);
    m.def("integrate_semi_infinite", &integrate_semi_infinite, py::arg("f"), py::arg("kernel"),
          py::arg("a"), py::arg("min_length"), py::arg("qcfg") = QuadratureConfig{},
          py::arg("cspec") = CorrectionSpec{}, py::arg("rule") = TruncationRule::KernelZeros);
    m.def("integrate_left_tail", &integrate_left_tail, py::arg("f"), py::arg("kernel"),
          py::arg("b_left"), py::arg("spec") = CorrectionSpec{});

    auto ref = m.def_submodule("reference", "Closed forms and the brute-force tail oracle");
    ref.def("exp_integrand", &reference::exp_integrand, py::arg("alpha"));
    ref.def("inv_sqrt_integrand", &reference::inv_sqrt_integrand);
    ref.def("cos_over_x_integrand", &reference::cos_over_x_integrand, py::arg("alpha"));
    ref.def("example1_truncated", &reference::example1_truncated, py::arg("alpha"), py::arg("b"));
    ref.def("example1_tail", &reference::example1_tail, py::arg("alpha"), py::arg("b"));
    ref.def("example2_error_series", &reference::example2_error_series, py::arg("x"),
            py::arg("n_terms"));
    ref.def("example3_error_two_terms", &reference::example3_error_two_terms, py::arg("x"),
            py::arg("alpha"));
    ref.def("oracle_tail", &reference::oracle_tail, py::arg("f"), py::arg("kernel"), py::arg("b"),
            py::arg("target_rel_tol") = 1e-12);

    m.def("table", [](int id, const std::string& format) { return sheet_text(report::table(id), format); },
          py::arg("id"), py::arg("format") = "csv");
    m.def("figure",
          [](int id, const std::string& format) { return sheet_text(report::figure(id), format); },
          py::arg("id"), py::arg("format") = "csv");
    m.def("run_criterion",
          [](int id) {
              const acceptance::CriterionResult r = acceptance::run_criterion(id);
              std::ostringstream out;
              acceptance::print(out, r, true);
              return py::make_tuple(r.passed(), out.str());
          },
          py::arg("id"));
}
