#pragma once

// First-order (reference-state expectation) energies for the moving- and
// clamped-nucleus models. Each is linear in lambda:
//
//   moving:  eps = kinetic (1 + beta) - coulomb lambda
//   clamped: eps = kinetic           - coulomb lambda
//
// and, being an expectation value of the full Hamiltonian, an upper bound to
// the exact ground-state energy.

#include "confh/domain.hpp"

#include <cstdint>

namespace confh {

/// Exact num / den with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

enum class PtModel { MovingSinc, MovingPoly, ClampedPoly, ClampedSinc };

struct FirstOrderCoefficients {
    /// Coefficient of (1 + beta) for moving models, absolute for clamped ones.
    double kinetic = 0.0;
    /// Positive coefficient of lambda, i.e. <1/r> in the reference state.
    double coulomb = 0.0;
    /// Quadrature error estimate on coulomb; zero for closed forms.
    double coulomb_error = 0.0;
    bool converged = true;
};

/// Closed-form coefficients for the polynomial trial states.
inline constexpr Rational kPolyKinetic{5, 1};
inline constexpr Rational kMovingPolyCoulomb{25, 14};
inline constexpr Rational kClampedPolyCoulomb{5, 2};

/// <1/r> for phi = 2 sin(pi r_e) sin(pi r_n) / (r_e r_n), from the
/// Legendre-expansion integral normalized by the same recipe.
FirstOrderCoefficients moving_sinc_coefficients(const QuadratureSpec& spec = QuadratureSpec::defaults_2d());

/// <1/r> for phi = sqrt(2) sin(pi r) / r.
FirstOrderCoefficients clamped_sinc_coefficients(const QuadratureSpec& spec = QuadratureSpec::defaults_1d());

FirstOrderCoefficients coefficients(PtModel model, const QuadratureSpec& spec);

EnergyEstimate moving_pt_sinc(const ModelParams& params,
                              const QuadratureSpec& spec = QuadratureSpec::defaults_2d());

/// 5 (1 + beta) - (25/14) lambda for phi = 30 (1 - r_e)(1 - r_n).
EnergyEstimate moving_pt_poly(const ModelParams& params);

/// 5 - (5/2) lambda for phi = sqrt(30) (1 - r).
EnergyEstimate clamped_pt_poly(double lambda);

EnergyEstimate clamped_pt_sinc(double lambda, const QuadratureSpec& spec = QuadratureSpec::defaults_1d());

/// Dispatches on model; clamped models ignore params.beta().
EnergyEstimate pt_energy(PtModel model, const ModelParams& params, const QuadratureSpec& spec);

/// Root of the linear first-order energy, kinetic_total / coulomb.
/// params.lambda() is ignored. Polynomial models use exact rational
/// arithmetic when beta = 0.
double pt_critical_lambda(PtModel model, const ModelParams& params,
                          const QuadratureSpec& spec = QuadratureSpec::defaults_2d());

Method to_method(PtModel model);

} // namespace confh
