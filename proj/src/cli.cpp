#include "confh/cli.hpp"

#include "confh/clamped_series.hpp"
#include "confh/perturbation.hpp"
#include "confh/variational.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace confh::cli {

namespace {

constexpr double kSeriesTol = 1e-12;

struct QuadratureOverrides {
    std::optional<int> order;
    std::optional<int> refinements;
    std::optional<double> rel_tol;

    QuadratureSpec apply(QuadratureSpec spec) const
    {
        if (order) {
            spec.base_order = *order;
        }
        if (refinements) {
            spec.max_refinements = *refinements;
        }
        if (rel_tol) {
            spec.rel_tol = *rel_tol;
        }
        spec.validate();
        return spec;
    }
};

const std::map<std::string, PtModel> kPtModels{
    {"moving-sinc", PtModel::MovingSinc},
    {"moving-poly", PtModel::MovingPoly},
    {"clamped-poly", PtModel::ClampedPoly},
    {"clamped-sinc", PtModel::ClampedSinc},
};

const std::vector<std::string> kCriticalModels{"moving-sinc",   "moving-poly",    "clamped-poly",
                                               "clamped-sinc",  "clamped-series", "moving-variational"};

std::vector<double> uniform_grid(double start, double stop, double step)
{
    if (!(step > 0.0) || !(start <= stop)) {
        throw std::domain_error("range requires step > 0 and start <= stop");
    }
    std::vector<double> grid;
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= count; ++i) {
        grid.push_back(start + static_cast<double>(i) * step);
    }
    return grid;
}

void require_converged(const EnergyEstimate& e)
{
    if (!e.converged) {
        std::ostringstream msg;
        msg << to_string(e.method) << " did not converge (residual " << e.residual << ")";
        throw NumericalError(msg.str());
    }
}

std::ostream& full_precision(std::ostream& out)
{
    return out << std::setprecision(17);
}

} // namespace

std::vector<Fig1Row> fig1_rows(double beta, double lambda_max, double step)
{
    if (!(lambda_max > 0.0)) {
        throw std::domain_error("lambda-max must be > 0");
    }
    const auto spec_1d = QuadratureSpec::defaults_1d();
    const auto spec_2d = QuadratureSpec::defaults_2d();
    const auto moving_sinc = moving_sinc_coefficients(spec_2d);
    const auto clamped_sinc = clamped_sinc_coefficients(spec_1d);
    if (!moving_sinc.converged || !clamped_sinc.converged) {
        throw NumericalError("sinc-state Coulomb integrals did not converge");
    }
    std::vector<Fig1Row> rows;
    for (double lambda : uniform_grid(0.0, lambda_max, step)) {
        const ModelParams params(beta, lambda);
        const auto series = clamped_ground_energy(lambda, kSeriesTol);
        require_converged(series);
        Fig1Row row;
        row.lambda = lambda;
        row.moving_sinc = moving_sinc.kinetic * (1.0 + beta) - moving_sinc.coulomb * lambda;
        row.moving_poly = moving_pt_poly(params).epsilon;
        row.clamped_poly = clamped_pt_poly(lambda).epsilon;
        row.clamped_sinc = clamped_sinc.kinetic - clamped_sinc.coulomb * lambda;
        row.clamped_series = series.epsilon;
        rows.push_back(row);
    }
    return rows;
}

std::vector<Fig2Row> fig2_rows(double beta, double lambda_max, double step, const QuadratureSpec& spec)
{
    if (!(lambda_max >= step)) {
        throw std::domain_error("lambda-max must be >= step");
    }
    std::vector<Fig2Row> rows;
    for (double lambda : uniform_grid(step, lambda_max, step)) {
        const double lambda_sq = lambda * lambda;
        const auto var = minimize_energy(beta, lambda, spec);
        rows.push_back({lambda, moving_pt_poly(ModelParams(beta, lambda)).epsilon / lambda_sq,
                        var.epsilon / lambda_sq, free_atom_limit(beta)});
    }
    return rows;
}

void write_fig1_csv(std::ostream& out, const std::vector<Fig1Row>& rows)
{
    out << "lambda,eps_moving_sinc,eps_moving_poly,eps_clamped_poly,eps_clamped_sinc,eps_clamped_series\n";
    full_precision(out);
    for (const auto& r : rows) {
        out << r.lambda << ',' << r.moving_sinc << ',' << r.moving_poly << ',' << r.clamped_poly << ','
            << r.clamped_sinc << ',' << r.clamped_series << '\n';
    }
}

void write_fig2_csv(std::ostream& out, const std::vector<Fig2Row>& rows)
{
    out << "lambda,eps_over_lambda2_poly,eps_over_lambda2_variational,free_atom_limit\n";
    full_precision(out);
    for (const auto& r : rows) {
        out << r.lambda << ',' << r.poly << ',' << r.variational << ',' << r.asymptote << '\n';
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ground-state energy of a hydrogen atom in an impenetrable spherical box", "confh"};
    app.require_subcommand(1);
    app.fallthrough();

    double beta = kHydrogenBeta;
    std::string output;
    QuadratureOverrides quad;
    app.add_option("--beta", beta, "electron/nucleus mass ratio (default: hydrogen)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--output,-o", output, "write data to this file instead of standard output");
    app.add_option("--order", quad.order, "Gauss-Legendre nodes per dimension at the first level")
        ->check(CLI::Range(2, 4096));
    app.add_option("--refinements", quad.refinements, "maximum number of order doublings")
        ->check(CLI::Range(0, 8));
    app.add_option("--rel-tol", quad.rel_tol, "relative quadrature tolerance")->check(CLI::PositiveNumber);

    std::string pt_model;
    double lambda = 0.0;
    auto* perturb = app.add_subcommand("perturb", "first-order energy of one reference state");
    perturb->add_option("--model", pt_model, "reference state")
        ->required()
        ->check(CLI::IsMember({"moving-sinc", "moving-poly", "clamped-poly", "clamped-sinc"}));
    perturb->add_option("--lambda", lambda, "confinement strength")->required()->check(CLI::NonNegativeNumber);

    double series_tol = kSeriesTol;
    auto* clamped = app.add_subcommand("clamped", "clamped-nucleus energy from the power-series solver");
    clamped->add_option("--lambda", lambda, "confinement strength")->required()->check(CLI::NonNegativeNumber);
    clamped->add_option("--tol", series_tol, "bisection tolerance in energy")->check(CLI::PositiveNumber);

    auto* variational = app.add_subcommand("variational", "moving-nucleus energy minimized over alpha");
    variational->add_option("--lambda", lambda, "confinement strength")
        ->required()
        ->check(CLI::NonNegativeNumber);

    std::string critical_model;
    auto* critical = app.add_subcommand("critical", "lambda at which the ground-state energy vanishes");
    critical->add_option("--model", critical_model, "energy model")
        ->required()
        ->check(CLI::IsMember(kCriticalModels));

    double lambda_max = 5.0;
    double step = 0.1;
    auto* fig1 = app.add_subcommand("fig1", "CSV of first-order and exact clamped energies versus lambda");
    fig1->add_option("--lambda-max", lambda_max, "largest lambda")->check(CLI::PositiveNumber);
    fig1->add_option("--step", step, "lambda spacing")->check(CLI::PositiveNumber);

    double fig2_lambda_max = 20.0;
    double fig2_step = 0.25;
    auto* fig2 = app.add_subcommand("fig2", "CSV of eps/lambda^2 for the two moving-nucleus trial states");
    fig2->add_option("--lambda-max", fig2_lambda_max, "largest lambda")->check(CLI::PositiveNumber);
    fig2->add_option("--step", fig2_step, "lambda spacing")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "confh: " << e.what() << '\n';
        return kUsageError;
    }

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            err << "confh: cannot open output file '" << output << "'\n";
            return kUsageError;
        }
    }
    std::ostream& sink = output.empty() ? out : file;
    full_precision(sink);

    try {
        const auto spec_1d = quad.apply(QuadratureSpec::defaults_1d());
        const auto spec_2d = quad.apply(QuadratureSpec::defaults_2d());
        const auto spec_3d = quad.apply(QuadratureSpec::defaults_3d());

        if (*perturb) {
            const auto model = kPtModels.at(pt_model);
            const bool moving = model == PtModel::MovingSinc || model == PtModel::MovingPoly;
            const auto e = pt_energy(model, ModelParams(moving ? beta : 0.0, lambda),
                                     model == PtModel::MovingSinc ? spec_2d : spec_1d);
            require_converged(e);
            sink << e.epsilon << '\n';
        } else if (*clamped) {
            const auto e = clamped_ground_energy(lambda, series_tol);
            require_converged(e);
            sink << e.epsilon << '\n';
        } else if (*variational) {
            const auto p = minimize_energy(beta, lambda, spec_3d);
            sink << "lambda,alpha,epsilon,kinetic,coulomb\n"
                 << p.lambda << ',' << p.alpha << ',' << p.epsilon << ',' << p.kinetic << ',' << p.coulomb << '\n';
        } else if (*critical) {
            double value = 0.0;
            if (critical_model == "clamped-series") {
                value = clamped_critical_lambda(kSeriesTol);
            } else if (critical_model == "moving-variational") {
                value = variational_critical_lambda(beta, spec_3d);
            } else {
                value = pt_critical_lambda(kPtModels.at(critical_model), ModelParams(beta, 0.0),
                                           critical_model == "clamped-sinc" ? spec_1d : spec_2d);
            }
            sink << value << '\n';
        } else if (*fig1) {
            write_fig1_csv(sink, fig1_rows(beta, lambda_max, step));
        } else if (*fig2) {
            write_fig2_csv(sink, fig2_rows(beta, fig2_lambda_max, fig2_step, spec_3d));
        }
    } catch (const NumericalError& e) {
        err << "confh: " << e.what() << '\n';
        return kNonConvergence;
    } catch (const std::exception& e) {
        err << "confh: " << e.what() << '\n';
        return kUsageError;
    }

    sink.flush();
    if (!sink) {
        err << "confh: failed to write output\n";
        return kUsageError;
    }
    return kSuccess;
}

} // namespace confh::cli
