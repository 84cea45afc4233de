#pragma once

// One-parameter variational treatment of the moving-nucleus model with
//
//   phi(r_e, r_n, r) = (1 - r_e)(1 - r_n) exp(-alpha r),
//
// written in the triangle coordinates (r_e, r_n, r). Since
// eps(alpha, lambda) = T(alpha) - lambda V(alpha) is linear in lambda, the
// stationarity condition d eps / d alpha = 0 gives lambda(alpha) =
// T'(alpha) / V'(alpha) and a parametric energy curve without having to
// solve for alpha(lambda).

#include "confh/domain.hpp"

#include <span>
#include <string>
#include <vector>

namespace confh {

struct TrianglePoint {
    double r_e = 0.0;
    double r_n = 0.0;
    double r = 0.0;
};

/// (1 - r_e)(1 - r_n) exp(-alpha r); unnormalized, expectation values are
/// always formed as ratios.
struct TrialState {
    double alpha = 0.0;

    double operator()(const TrianglePoint& p) const;
};

namespace detail {

/// T phi = exp(-alpha r) Q and d(T phi)/d alpha = exp(-alpha r)(dQ - r Q),
/// where Q, dQ depend polynomially on alpha.
struct KineticFactor {
    double q = 0.0;
    double dq = 0.0;
};

inline KineticFactor kinetic_factor(double alpha, double beta, double re, double rn, double r)
{
    const double a = 1.0 - re;
    const double b = 1.0 - rn;
    const double cross_e = (re * re - rn * rn + r * r) / (re * r);
    const double cross_n = (rn * rn - re * re + r * r) / (rn * r);
    const double ab = a * b;
    const double pair = 0.5 * (1.0 + beta);

    KineticFactor k;
    k.q = -0.5 * (-2.0 * b / re + alpha * b * cross_e) - 0.5 * beta * (-2.0 * a / rn + alpha * a * cross_n) -
          pair * (alpha * alpha * ab - 2.0 * alpha * ab / r);
    k.dq = -0.5 * b * cross_e - 0.5 * beta * a * cross_n - pair * (2.0 * alpha * ab - 2.0 * ab / r);
    return k;
}

} // namespace detail

/// Kinetic part of the Hamiltonian acting on the trial state,
///
///   T phi = -1/2 (d2/dr_e2 + 2/r_e d/dr_e + (r_e^2 - r_n^2 + r^2)/(r_e r) d2/dr_e dr) phi
///           - beta/2 (same with r_e <-> r_n) phi
///           - (1 + beta)/2 (d2/dr2 + 2/r d/dr) phi.
///
/// The Coulomb term -lambda/r phi is not included. Throws std::domain_error
/// if any coordinate is zero or the point violates the triangle inequality.
double apply_kinetic(const TrialState& state, double beta, const TrianglePoint& p);

/// Ratio-normalized expectation values and their alpha-derivatives,
/// obtained by differentiating under the integral sign.
struct Expectations {
    double kinetic = 0.0;
    double coulomb = 0.0;
    double d_kinetic = 0.0;
    double d_coulomb = 0.0;
    /// Largest relative error estimate over the six underlying integrals.
    double rel_error = 0.0;
    bool converged = false;
    int order = 0;
};

Expectations expectations(const TrialState& state, double beta,
                          const QuadratureSpec& spec = QuadratureSpec::defaults_3d());

struct VariationalPoint {
    double alpha = 0.0;
    double lambda = 0.0;
    double epsilon = 0.0;
    double kinetic = 0.0;
    double coulomb = 0.0;
};

/// eps(alpha, lambda) = <T> - lambda <1/r> at fixed alpha.
VariationalPoint energy_at(double alpha, double lambda, double beta,
                           const QuadratureSpec& spec = QuadratureSpec::defaults_3d());

struct ExcludedPoint {
    double alpha = 0.0;
    std::string reason;
};

struct ParametricCurve {
    std::vector<VariationalPoint> points;
    std::vector<ExcludedPoint> excluded;
};

/// alpha = 0, 0.05, ..., 12.
std::vector<double> default_alpha_grid();

/// One point per alpha with lambda(alpha) = T'(alpha) / V'(alpha).
/// Alphas with V' = 0, lambda(alpha) < 0 or unconverged quadrature are
/// reported in excluded. Throws std::domain_error if the grid is empty, not
/// strictly increasing or contains a negative alpha.
ParametricCurve parametric_curve(double beta, std::span<const double> alpha_grid,
                                 const QuadratureSpec& spec = QuadratureSpec::defaults_3d());

struct CriticalPoint {
    double lambda = 0.0;
    double alpha = 0.0;
};

/// Point on the parametric curve where eps(alpha, lambda(alpha)) = 0.
/// Throws NumericalError if no sign change is found for alpha in (0, 12].
CriticalPoint variational_critical_point(double beta,
                                         const QuadratureSpec& spec = QuadratureSpec::defaults_3d());

double variational_critical_lambda(double beta,
                                   const QuadratureSpec& spec = QuadratureSpec::defaults_3d());

/// min over alpha >= 0 of eps(alpha, lambda), located as the root of
/// T'(alpha) - lambda V'(alpha) in [0, max(4 lambda, 2)].
VariationalPoint minimize_energy(double beta, double lambda,
                                 const QuadratureSpec& spec = QuadratureSpec::defaults_3d());

EnergyEstimate moving_variational(const ModelParams& params,
                                  const QuadratureSpec& spec = QuadratureSpec::defaults_3d());

struct FreeAtomSample {
    double lambda = 0.0;
    double epsilon_over_lambda_sq = 0.0;
    double alpha = 0.0;
};

/// Minimized eps / lambda^2 for each lambda, to be compared with the free
/// atom value -1 / (2 (1 + beta)). lambda_values must be positive and
/// strictly increasing.
std::vector<FreeAtomSample> free_atom_limit_check(double beta, std::span<const double> lambda_values,
                                                  const QuadratureSpec& spec = QuadratureSpec::defaults_3d());

inline double free_atom_limit(double beta) { return -0.5 / (1.0 + beta); }

} // namespace confh
