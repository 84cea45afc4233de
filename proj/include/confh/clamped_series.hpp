#pragma once

// Power-series (Frobenius) solver for the clamped-nucleus model
//
//   H = -1/2 lap - lambda / r,   psi(1) = 0.
//
// For S states the reduced radial function u = r psi obeys
//
//   u'' + (2 lambda / r) u + 2 eps u = 0,   u(0) = u(1) = 0,
//
// and u(r) = sum_k c_k r^(k+1) with
//
//   c_0 = 1,  c_{-1} = 0,
//   c_{k+1} = -(2 lambda c_k + 2 eps c_{k-1}) / ((k + 2)(k + 1)).
//
// Eigenvalues are the roots of u(1; eps) = sum_k c_k.

#include "confh/domain.hpp"

#include <vector>

namespace confh {

struct SeriesSolution {
    double epsilon = 0.0;
    double lambda = 0.0;
    std::vector<double> coefficients;
    int truncation = 0;
    /// |u(1; epsilon)|.
    double boundary_residual = 0.0;
    /// Width of the final epsilon bracket.
    double bracket_width = 0.0;
    bool converged = false;
};

/// c_0 .. c_K. Throws std::domain_error for K < 10.
std::vector<double> series_coefficients(double epsilon, double lambda, int truncation);

/// u(1; epsilon, lambda) truncated after c_K. Throws std::domain_error for K < 10.
double series_boundary_value(double epsilon, double lambda, int truncation);

/// Smallest K >= 60 (found by doubling) for which the series tail is
/// negligible at the given point. Throws NumericalError past 8192 terms.
int adaptive_truncation(double epsilon, double lambda);

/// Lowest root of u(1; eps) for the given lambda, bisected to tol.
/// Throws NumericalError if no sign change is found.
SeriesSolution clamped_ground_state(double lambda, double tol = 1e-12);

/// Same root packaged as an energy estimate (residual = bracket width).
EnergyEstimate clamped_ground_energy(double lambda, double tol = 1e-12);

/// lambda at which the ground-state energy crosses zero, i.e. the first
/// root of u(1; 0, lambda) = sum_k (-2 lambda)^k / ((k+1)! k!).
double clamped_critical_lambda(double tol = 1e-12);

} // namespace confh
