#include "confh/perturbation.hpp"

#include "confh/quadrature.hpp"

#include <numbers>

namespace confh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSincKinetic = kPi * kPi / 2.0;

void require_lambda(double lambda)
{
    // reuse the ModelParams validation for the clamped entry points
    static_cast<void>(ModelParams(0.0, lambda));
}

EnergyEstimate linear_energy(double kinetic_total, const FirstOrderCoefficients& c, double lambda,
                             Method method)
{
    EnergyEstimate e;
    e.epsilon = kinetic_total - c.coulomb * lambda;
    e.method = method;
    e.converged = c.converged;
    e.residual = c.coulomb > 0.0 ? c.coulomb_error / c.coulomb : 0.0;
    return e;
}

} // namespace

FirstOrderCoefficients moving_sinc_coefficients(const QuadratureSpec& spec)
{
    auto single = [](double r) {
        const double s = std::sin(kPi * r);
        return 2.0 * s * s;
    };
    auto phi_sq = [](double re, double rn) {
        const double phi = 2.0 * std::sin(kPi * re) * std::sin(kPi * rn) / (re * rn);
        return phi * phi;
    };
    // the product state normalizes as the square of a one-particle integral
    const auto norm_1d = integrate_radial(single, 0.0, 1.0, spec);
    const auto inv_r = integrate_legendre_2d(phi_sq, spec);
    const double norm = norm_1d.value * norm_1d.value;

    FirstOrderCoefficients c;
    c.kinetic = kSincKinetic;
    c.coulomb = inv_r.value / norm;
    c.coulomb_error = inv_r.error / norm + 2.0 * c.coulomb * norm_1d.error / norm_1d.value;
    c.converged = inv_r.converged && norm_1d.converged;
    return c;
}

FirstOrderCoefficients clamped_sinc_coefficients(const QuadratureSpec& spec)
{
    // |phi|^2 r^2 = 2 sin^2(pi r)
    auto density = [](double r) {
        const double s = std::sin(kPi * r);
        return 2.0 * s * s;
    };
    auto inv_r = [&density](double r) { return density(r) / r; };
    const auto norm = integrate_radial(density, 0.0, 1.0, spec);
    const auto num = integrate_radial(inv_r, 0.0, 1.0, spec);

    FirstOrderCoefficients c;
    c.kinetic = kSincKinetic;
    c.coulomb = num.value / norm.value;
    c.coulomb_error = num.error / norm.value + c.coulomb * norm.error / norm.value;
    c.converged = num.converged && norm.converged;
    return c;
}

FirstOrderCoefficients coefficients(PtModel model, const QuadratureSpec& spec)
{
    switch (model) {
    case PtModel::MovingSinc: return moving_sinc_coefficients(spec);
    case PtModel::ClampedSinc: return clamped_sinc_coefficients(spec);
    case PtModel::MovingPoly: return {kPolyKinetic.value(), kMovingPolyCoulomb.value(), 0.0, true};
    case PtModel::ClampedPoly: return {kPolyKinetic.value(), kClampedPolyCoulomb.value(), 0.0, true};
    }
    throw std::invalid_argument("unknown perturbation model");
}

EnergyEstimate moving_pt_sinc(const ModelParams& params, const QuadratureSpec& spec)
{
    const auto c = moving_sinc_coefficients(spec);
    return linear_energy(c.kinetic * (1.0 + params.beta()), c, params.lambda(), Method::MovingPT_Sinc);
}

EnergyEstimate moving_pt_poly(const ModelParams& params)
{
    const auto c = coefficients(PtModel::MovingPoly, {});
    return linear_energy(5.0 * (1.0 + params.beta()), c, params.lambda(), Method::MovingPT_Poly);
}

EnergyEstimate clamped_pt_poly(double lambda)
{
    require_lambda(lambda);
    const auto c = coefficients(PtModel::ClampedPoly, {});
    return linear_energy(5.0, c, lambda, Method::ClampedPT_Poly);
}

EnergyEstimate clamped_pt_sinc(double lambda, const QuadratureSpec& spec)
{
    require_lambda(lambda);
    const auto c = clamped_sinc_coefficients(spec);
    return linear_energy(c.kinetic, c, lambda, Method::ClampedPT_Sinc);
}

EnergyEstimate pt_energy(PtModel model, const ModelParams& params, const QuadratureSpec& spec)
{
    switch (model) {
    case PtModel::MovingSinc: return moving_pt_sinc(params, spec);
    case PtModel::MovingPoly: return moving_pt_poly(params);
    case PtModel::ClampedPoly: return clamped_pt_poly(params.lambda());
    case PtModel::ClampedSinc: return clamped_pt_sinc(params.lambda(), spec);
    }
    throw std::invalid_argument("unknown perturbation model");
}

double pt_critical_lambda(PtModel model, const ModelParams& params, const QuadratureSpec& spec)
{
    const double mass_factor = 1.0 + params.beta();
    switch (model) {
    case PtModel::MovingPoly:
        // 5 (1 + beta) * 14 / 25; exactly 14/5 at beta = 0
        return static_cast<double>(kPolyKinetic.num * kMovingPolyCoulomb.den) * mass_factor /
               static_cast<double>(kPolyKinetic.den * kMovingPolyCoulomb.num);
    case PtModel::ClampedPoly:
        return static_cast<double>(kPolyKinetic.num * kClampedPolyCoulomb.den) /
               static_cast<double>(kPolyKinetic.den * kClampedPolyCoulomb.num);
    case PtModel::MovingSinc:
    case PtModel::ClampedSinc: {
        const auto c = coefficients(model, spec);
        if (!c.converged) {
            throw NumericalError("Coulomb coefficient quadrature did not converge");
        }
        return c.kinetic * (model == PtModel::MovingSinc ? mass_factor : 1.0) / c.coulomb;
    }
    }
    throw std::invalid_argument("unknown perturbation model");
}

Method to_method(PtModel model)
{
    switch (model) {
    case PtModel::MovingSinc: return Method::MovingPT_Sinc;
    case PtModel::MovingPoly: return Method::MovingPT_Poly;
    case PtModel::ClampedPoly: return Method::ClampedPT_Poly;
    case PtModel::ClampedSinc: return Method::ClampedPT_Sinc;
    }
    throw std::invalid_argument("unknown perturbation model");
}

} // namespace confh
