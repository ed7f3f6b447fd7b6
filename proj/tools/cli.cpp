#include "osctail/cli.hpp"

#include "osctail/acceptance.hpp"
#include "osctail/errors.hpp"
#include "osctail/reference.hpp"
#include "osctail/report.hpp"
#include "osctail/tail.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

namespace osctail::cli {

namespace {

struct FunctionChoice {
    std::string kind;
    double alpha = 0.0;
};

FunctionChoice parse_choice(const std::string& spec)
{
    const auto colon = spec.find(':');
    FunctionChoice c{spec.substr(0, colon), 0.0};
    const bool needs_alpha = c.kind == "exp" || c.kind == "cosoverx";
    if (c.kind != "exp" && c.kind != "cosoverx" && c.kind != "invsqrt" && c.kind != "zero")
        throw DomainError("unknown function '" + spec + "'; use exp:ALPHA, invsqrt, cosoverx:ALPHA or zero");
    if (needs_alpha != (colon != std::string::npos))
        throw DomainError(needs_alpha ? "'" + c.kind + "' needs a parameter, e.g. " + c.kind + ":0.2"
                                      : "'" + c.kind + "' takes no parameter");
    if (needs_alpha) {
        const std::string text = spec.substr(colon + 1);
        std::size_t used = 0;
        try {
            c.alpha = std::stod(text, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != text.size())
            throw DomainError("cannot read parameter '" + text + "'");
    }
    return c;
}

std::string number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", v);
    return buf;
}

struct IntegrateArgs {
    std::string kernel = "sin";
    double omega = 1.0;
    double a = 0.0;
    double min_length = 20 * std::numbers::pi;
    int order = 0;
    std::string fn;
};

IntegralResult integrate(const IntegrateArgs& args)
{
    const OscillatoryKernel kernel(args.kernel == "sin" ? KernelKind::Sine : KernelKind::Cosine,
                                   args.omega);
    CorrectionSpec cspec;
    cspec.order_k = args.order;
    cspec.emit_error_estimate = true;
    const QuadratureConfig qcfg;

    const FunctionChoice c = parse_choice(args.fn);
    // Built-ins that are singular at the origin go through the reference splitting.
    if (args.a == 0.0 && (c.kind == "invsqrt" || c.kind == "cosoverx")) {
        const auto id =
            c.kind == "invsqrt" ? reference::ExampleId::InvSqrt : reference::ExampleId::CosOverX;
        return reference::integrate_example(reference::make_example(id, c.alpha), kernel,
                                            args.min_length, qcfg, cspec);
    }
    return integrate_semi_infinite(parse_function(args.fn), kernel, args.a, args.min_length, qcfg,
                                   cspec);
}

void write_integral(std::ostream& out, const IntegralResult& r, report::Format format)
{
    const std::string estimate = r.error_estimate ? number(*r.error_estimate) : "";
    if (format == report::Format::Csv) {
        out << "total,finite_part,tail_correction,error_estimate,evaluations,b_used\n"
            << number(r.total) << ',' << number(r.finite_part) << ','
            << number(r.tail_correction) << ',' << estimate << ',' << r.evaluations << ','
            << number(r.b_used) << '\n';
        return;
    }
    out << "total           " << number(r.total) << '\n'
        << "finite_part     " << number(r.finite_part) << '\n'
        << "tail_correction " << number(r.tail_correction) << '\n'
        << "error_estimate  " << (estimate.empty() ? "n/a" : estimate) << '\n'
        << "evaluations     " << r.evaluations << '\n'
        << "b_used          " << number(r.b_used) << '\n';
}

// Sends output to --out when given, else to the caller's stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : fallback_(fallback)
    {
        if (!path.empty())
            file_.emplace(path, std::ios::binary);
    }
    bool ok() const { return !file_ || file_->good(); }
    std::ostream& stream() { return file_ ? *file_ : fallback_; }
    bool flush()
    {
        stream().flush();
        return stream().good();
    }

private:
    std::ostream& fallback_;
    std::optional<std::ofstream> file_;
};

} // namespace

Integrand parse_function(const std::string& spec)
{
    const FunctionChoice c = parse_choice(spec);
    if (c.kind == "exp")
        return reference::exp_integrand(c.alpha);
    if (c.kind == "invsqrt")
        return reference::inv_sqrt_integrand();
    if (c.kind == "cosoverx")
        return reference::cos_over_x_integrand(c.alpha);
    std::vector<RealFunction> zeros(reference::registered_derivative_order,
                                    [](double) { return 0.0; });
    return Integrand("zero", [](double) { return 0.0; }).with_derivatives(std::move(zeros));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Semi-infinite oscillatory integrals with end-point tail corrections", "osctail"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    const auto formats = CLI::IsMember({"csv", "text"});

    IntegrateArgs ia;
    auto* integ = app.add_subcommand("integrate", "Integrate a built-in f(x) w(x) over [a, inf)");
    integ->add_option("--kernel", ia.kernel, "sin or cos")->check(CLI::IsMember({"sin", "cos"}));
    integ->add_option("--omega", ia.omega, "Kernel frequency")->check(CLI::PositiveNumber);
    integ->add_option("--a", ia.a, "Lower limit")->check(CLI::NonNegativeNumber);
    integ->add_option("--min-length", ia.min_length, "Smallest truncation point")
        ->check(CLI::PositiveNumber);
    integ->add_option("--order", ia.order, "Correction order k")->check(CLI::Range(0, 8));
    integ->add_option("--fn", ia.fn, "exp:ALPHA, invsqrt, cosoverx:ALPHA or zero")->required();

    int table_id = 0;
    auto* table = app.add_subcommand("table", "Emit an error table");
    table->add_option("--id", table_id, "Table number")->required()->check(CLI::Range(1, 3));

    int figure_id = 0;
    auto* figure = app.add_subcommand("figure", "Emit the data behind a figure");
    figure->add_option("--id", figure_id, "Figure number")->required()->check(CLI::Range(1, 6));

    int criterion = 0;
    bool verbose = false;
    auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
    selftest->add_option("--criterion", criterion, "Run one criterion only")
        ->check(CLI::Range(1, acceptance::criterion_count));
    selftest->add_flag("--verbose,-v", verbose, "List every check");

    for (auto* sub : {integ, table, figure}) {
        sub->add_option("--format", format, "csv or text")->check(formats);
        sub->add_option("--out", out_path, "Write to this file");
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return Success;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return Success;
        }
        err << "osctail: " << e.what() << '\n';
        return UsageError;
    }
    const report::Format fmt = format == "text" ? report::Format::Text : report::Format::Csv;
    try {
        if (*selftest) {
            if (criterion == 0)
                return acceptance::run_all(out, verbose) ? Success : NumericFailure;
            const acceptance::CriterionResult r = acceptance::run_criterion(criterion);
            acceptance::print(out, r, verbose);
            return r.passed() ? Success : NumericFailure;
        }

        Sink sink(out_path, out);
        if (!sink.ok()) {
            err << "osctail: cannot open '" << out_path << "' for writing\n";
            return IoFailure;
        }
        if (*integ) {
            const IntegralResult r = integrate(ia);
            for (const auto& w : r.warnings)
                err << "osctail: warning: " << w << '\n';
            write_integral(sink.stream(), r, fmt);
        } else if (*table) {
            report::write(sink.stream(), report::table(table_id), fmt);
        } else {
            report::write(sink.stream(), report::figure(figure_id), fmt);
        }
        if (!sink.flush()) {
            err << "osctail: write failed\n";
            return IoFailure;
        }
        return Success;
    } catch (const DomainError& e) {
        err << "osctail: " << e.what() << '\n';
        return UsageError;
    } catch (const ConfigurationError& e) {
        err << "osctail: " << e.what() << '\n';
        return UsageError;
    } catch (const Error& e) {
        err << "osctail: " << e.what() << '\n';
        return NumericFailure;
    }
}

} // namespace osctail::cli
