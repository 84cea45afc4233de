#include "confh/variational.hpp"

#include "confh/quadrature.hpp"

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace confh {

namespace {

constexpr double kAlphaTol = 1e-10;
constexpr double kCriticalScanStep = 0.25;
constexpr double kCriticalScanMax = 12.0;

void require_beta(double beta)
{
    static_cast<void>(ModelParams(beta, 0.0));
}

void require_alpha(double alpha)
{
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw std::domain_error("alpha must be a finite non-negative number");
    }
}

// Narrows a sign-changing bracket of f to width kAlphaTol.
template <class F>
double bracketed_root(F&& f, double a, double b, double fa, double fb)
{
    if (fa == 0.0) {
        return a;
    }
    if (fb == 0.0) {
        return b;
    }
    auto done = [](double lo, double hi) { return std::abs(hi - lo) <= kAlphaTol; };
    std::uintmax_t max_iter = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, done, max_iter);
    return 0.5 * (lo + hi);
}

Expectations checked_expectations(double alpha, double beta, const QuadratureSpec& spec)
{
    auto e = expectations(TrialState{alpha}, beta, spec);
    if (!e.converged) {
        std::ostringstream msg;
        msg << "triangle-domain quadrature did not converge at alpha=" << alpha << " (order " << e.order
            << ", relative error " << e.rel_error << ")";
        throw NumericalError(msg.str());
    }
    return e;
}

VariationalPoint point_from(double alpha, double lambda, const Expectations& e)
{
    return {alpha, lambda, e.kinetic - lambda * e.coulomb, e.kinetic, e.coulomb};
}

} // namespace

double TrialState::operator()(const TrianglePoint& p) const
{
    return (1.0 - p.r_e) * (1.0 - p.r_n) * std::exp(-alpha * p.r);
}

double apply_kinetic(const TrialState& state, double beta, const TrianglePoint& p)
{
    require_alpha(state.alpha);
    require_beta(beta);
    if (p.r_e == 0.0 || p.r_n == 0.0 || p.r == 0.0) {
        throw std::domain_error("kinetic action is singular at r_e = 0, r_n = 0 or r = 0");
    }
    if (p.r_e < 0.0 || p.r_n < 0.0 || p.r < std::abs(p.r_e - p.r_n) || p.r > p.r_e + p.r_n) {
        throw std::domain_error("point violates the triangle inequality");
    }
    const auto k = detail::kinetic_factor(state.alpha, beta, p.r_e, p.r_n, p.r);
    return std::exp(-state.alpha * p.r) * k.q;
}

Expectations expectations(const TrialState& state, double beta, const QuadratureSpec& spec)
{
    require_alpha(state.alpha);
    require_beta(beta);
    const double alpha = state.alpha;

    // unnormalized integrals: norm, <T>, <1/r> and their alpha-derivatives
    auto integrand = [alpha, beta](double re, double rn, double r) {
        const double ab = (1.0 - re) * (1.0 - rn);
        const double e = std::exp(-alpha * r);
        const double dens = ab * ab * e * e;
        const auto k = detail::kinetic_factor(alpha, beta, re, rn, r);
        const double kin = ab * e * e * k.q;
        return std::array<double, 6>{
            dens,
            kin,
            dens / r,
            -2.0 * r * dens,
            ab * e * e * (k.dq - 2.0 * r * k.q),
            -2.0 * dens,
        };
    };
    const auto res = integrate_triangle_domain_batch<6>(integrand, spec);

    const double norm = res[0].value;
    Expectations out;
    out.kinetic = res[1].value / norm;
    out.coulomb = res[2].value / norm;
    out.d_kinetic = (res[4].value - out.kinetic * res[3].value) / norm;
    out.d_coulomb = (res[5].value - out.coulomb * res[3].value) / norm;
    out.converged = true;
    out.order = res[0].order;
    for (const auto& r : res) {
        out.converged = out.converged && r.converged;
        if (r.value != 0.0) {
            out.rel_error = std::max(out.rel_error, r.error / std::abs(r.value));
        }
    }
    return out;
}

VariationalPoint energy_at(double alpha, double lambda, double beta, const QuadratureSpec& spec)
{
    static_cast<void>(ModelParams(beta, lambda));
    return point_from(alpha, lambda, checked_expectations(alpha, beta, spec));
}

std::vector<double> default_alpha_grid()
{
    std::vector<double> grid;
    for (int i = 0; i <= 240; ++i) {
        grid.push_back(0.05 * i);
    }
    return grid;
}

ParametricCurve parametric_curve(double beta, std::span<const double> alpha_grid, const QuadratureSpec& spec)
{
    require_beta(beta);
    if (alpha_grid.empty()) {
        throw std::domain_error("alpha grid is empty");
    }
    for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
        require_alpha(alpha_grid[i]);
        if (i > 0 && !(alpha_grid[i] > alpha_grid[i - 1])) {
            throw std::domain_error("alpha grid must be strictly increasing");
        }
    }

    ParametricCurve curve;
    for (double alpha : alpha_grid) {
        const auto e = expectations(TrialState{alpha}, beta, spec);
        if (!e.converged) {
            curve.excluded.push_back({alpha, "quadrature did not converge"});
            continue;
        }
        if (e.d_coulomb == 0.0) {
            curve.excluded.push_back({alpha, "dV/dalpha vanishes"});
            continue;
        }
        const double lambda = e.d_kinetic / e.d_coulomb;
        if (lambda < 0.0) {
            curve.excluded.push_back({alpha, "lambda(alpha) is negative"});
            continue;
        }
        curve.points.push_back(point_from(alpha, lambda, e));
    }
    return curve;
}

CriticalPoint variational_critical_point(double beta, const QuadratureSpec& spec)
{
    require_beta(beta);
    // eps along the curve; nan where lambda(alpha) is not admissible
    auto eps_on_curve = [&](double alpha) {
        const auto e = checked_expectations(alpha, beta, spec);
        const double lambda = e.d_kinetic / e.d_coulomb;
        if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
            return std::numeric_limits<double>::quiet_NaN();
        }
        return e.kinetic - lambda * e.coulomb;
    };

    double a = 0.0;
    double fa = std::numeric_limits<double>::quiet_NaN();
    for (double b = kCriticalScanStep; b <= kCriticalScanMax + 1e-12; b += kCriticalScanStep) {
        const double fb = eps_on_curve(b);
        if (!std::isnan(fa) && !std::isnan(fb) && fa * fb <= 0.0) {
            const double alpha = bracketed_root(eps_on_curve, a, b, fa, fb);
            const auto e = checked_expectations(alpha, beta, spec);
            return {e.d_kinetic / e.d_coulomb, alpha};
        }
        a = b;
        fa = fb;
    }
    std::ostringstream msg;
    msg << "eps(alpha, lambda(alpha)) has no sign change for alpha in (0, " << kCriticalScanMax << "]";
    throw NumericalError(msg.str());
}

double variational_critical_lambda(double beta, const QuadratureSpec& spec)
{
    return variational_critical_point(beta, spec).lambda;
}

VariationalPoint minimize_energy(double beta, double lambda, const QuadratureSpec& spec)
{
    static_cast<void>(ModelParams(beta, lambda));
    auto slope = [&](double alpha) {
        const auto e = checked_expectations(alpha, beta, spec);
        return e.d_kinetic - lambda * e.d_coulomb;
    };

    const double f0 = slope(0.0);
    if (f0 >= 0.0) {
        return energy_at(0.0, lambda, beta, spec);
    }
    // grow the bracket towards max(4 lambda, 2); the optimum sits near
    // lambda / (1 + beta) once the atom is larger than the box
    const double cap = std::max(4.0 * lambda, 2.0);
    double lo = 0.0;
    double f_lo = f0;
    double hi = std::min(cap, 0.5 + 1.25 * lambda / (1.0 + beta));
    double f_hi = slope(hi);
    while (f_hi < 0.0 && hi < cap) {
        lo = hi;
        f_lo = f_hi;
        hi = std::min(cap, 2.0 * hi);
        f_hi = slope(hi);
    }
    if (f_hi < 0.0) {
        std::ostringstream msg;
        msg << "energy still decreasing at alpha=" << cap << " for lambda=" << lambda;
        throw NumericalError(msg.str());
    }
    const double alpha = bracketed_root(slope, lo, hi, f_lo, f_hi);
    return energy_at(alpha, lambda, beta, spec);
}

EnergyEstimate moving_variational(const ModelParams& params, const QuadratureSpec& spec)
{
    const auto p = minimize_energy(params.beta(), params.lambda(), spec);
    const auto e = expectations(TrialState{p.alpha}, params.beta(), spec);
    return {p.epsilon, Method::MovingVariational, e.converged, e.rel_error};
}

std::vector<FreeAtomSample> free_atom_limit_check(double beta, std::span<const double> lambda_values,
                                                  const QuadratureSpec& spec)
{
    require_beta(beta);
    for (std::size_t i = 0; i < lambda_values.size(); ++i) {
        if (!(lambda_values[i] > 0.0) || (i > 0 && !(lambda_values[i] > lambda_values[i - 1]))) {
            throw std::domain_error("lambda values must be positive and strictly increasing");
        }
    }
    std::vector<FreeAtomSample> out;
    for (double lambda : lambda_values) {
        const auto p = minimize_energy(beta, lambda, spec);
        out.push_back({lambda, p.epsilon / (lambda * lambda), p.alpha});
    }
    return out;
}

} // namespace confh
