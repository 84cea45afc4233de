#pragma once

// Dimensionless model parameters and shared result types.
//
// Unit convention used throughout the library: lengths are measured in units
// of the box radius R, masses in units of the electron mass m_e and energies
// in units of hbar^2 / (m_e R^2). In these units the two-particle Hamiltonian
// reads
//
//   H = -1/2 lap_e - beta/2 lap_n - lambda / r,
//
// with beta = m_e / m_n and lambda = m_e Z e^2 R / (4 pi eps0 hbar^2), and
// every state vanishes when either particle touches the wall |r| = 1.

#include <stdexcept>
#include <string>
#include <string_view>

namespace confh {

/// CODATA 2018 proton-to-electron mass ratio.
inline constexpr double kProtonElectronMassRatio = 1836.15267343;

/// Electron-to-proton mass ratio used as the default beta.
inline constexpr double kHydrogenBeta = 1.0 / kProtonElectronMassRatio;

/// Thrown when an iterative numerical procedure (quadrature, root search,
/// series truncation) fails to meet its tolerance or cannot bracket a root.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mass ratio beta and coupling lambda. Both must be non-negative; beta = 0
/// is the infinitely heavy (clamped-limit) nucleus.
class ModelParams {
public:
    /// Throws std::domain_error if either value is negative or not finite.
    ModelParams(double beta, double lambda);

    double beta() const noexcept { return beta_; }
    double lambda() const noexcept { return lambda_; }

    ModelParams with_lambda(double lambda) const { return {beta_, lambda}; }

    /// "beta=<v>;lambda=<v>" using shortest round-trip formatting.
    std::string serialize() const;
    static ModelParams parse(std::string_view text);

    friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
    double beta_;
    double lambda_;
};

/// Hydrogen mass ratio with the given coupling.
ModelParams default_hydrogen_params(double lambda);

enum class Method {
    MovingPT_Sinc,
    MovingPT_Poly,
    ClampedPT_Poly,
    ClampedPT_Sinc,
    MovingVariational,
    ClampedSeries,
};

std::string_view to_string(Method method);

/// A dimensionless energy with the method that produced it. When converged
/// is true, residual is below the tolerance of the producing operation.
struct EnergyEstimate {
    double epsilon = 0.0;
    Method method = Method::MovingPT_Sinc;
    bool converged = false;
    double residual = 0.0;
};

/// Tensor-product Gauss-Legendre settings. The order starts at base_order
/// nodes per dimension and doubles at most max_refinements times.
struct QuadratureSpec {
    int base_order = 32;
    int max_refinements = 4;
    double rel_tol = 1e-10;

    /// Throws std::domain_error when base_order < 2, max_refinements < 0 or
    /// rel_tol <= 0.
    void validate() const;

    static QuadratureSpec defaults_1d() { return {32, 4, 1e-10}; }
    static QuadratureSpec defaults_2d() { return {32, 4, 1e-10}; }
    static QuadratureSpec defaults_3d() { return {32, 4, 1e-9}; }
};

} // namespace confh
