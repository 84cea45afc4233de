#pragma once

// Gauss-Legendre integration kernels for the radial (1-D), two-particle
// radial (2-D) and Hylleraas triangle (3-D) integrals.
//
// All rules are open: no node ever sits on an interval endpoint, so
// integrands with 1/r_e, 1/r_n or 1/r factors are finite wherever they are
// evaluated. Convergence is judged by doubling the per-dimension order and
// comparing successive estimates.
//
// Angular prefactors (the 16 pi^2 of the Legendre-expansion recipe and the
// 8 pi^2 implied by the triangle measure) are taken as 1. Every physical
// quantity is formed as a ratio <A> = int(phi A phi) / int(phi^2) over the
// same recipe, where such constants cancel.

#include "confh/domain.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace confh {

/// Nodes and weights on (-1, 1).
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule computed by Newton iteration on P_n. Throws for n < 1.
GaussLegendreRule gauss_legendre(int n);

struct IntegralResult {
    double value = 0.0;
    /// |I(order) - I(order / 2)|; infinite when no refinement was possible.
    double error = std::numeric_limits<double>::infinity();
    bool converged = false;
    /// Per-dimension node count of the returned estimate.
    int order = 0;
};

/// Integrand over the triangle domain 0 < r_e, r_n < 1,
/// |r_e - r_n| < r < r_e + r_n. The measure r_e r_n r is applied by the
/// integrator and must not be included in f.
using TriangleDomainIntegrand = std::function<double(double r_e, double r_n, double r)>;

/// Contributions of the two ordered sub-regions at a fixed order:
/// lower has r_n <= r_e, upper has r_e <= r_n.
template <std::size_t N>
struct TriangleSums {
    std::array<double, N> lower{};
    std::array<double, N> upper{};
};

/// Applies one tensor-product rule to a vector-valued integrand. f is
/// called as f(r_e, r_n, r) and must return std::array<double, N>.
///
/// Sub-region r_n <= r_e: r_e = (1 + x) / 2, r_n = r_e (1 + y) / 2,
/// r = r_e + r_n z. The other sub-region swaps the roles of r_e and r_n.
template <std::size_t N, class F>
TriangleSums<N> triangle_rule(F&& f, const GaussLegendreRule& rule)
{
    TriangleSums<N> sums;
    const std::size_t n = rule.nodes.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double outer = 0.5 * (1.0 + rule.nodes[i]);
        const double w_outer = 0.5 * rule.weights[i];
        for (std::size_t j = 0; j < n; ++j) {
            const double inner = outer * 0.5 * (1.0 + rule.nodes[j]);
            const double w_inner = w_outer * outer * 0.5 * rule.weights[j];
            std::array<double, N> acc_lower{};
            std::array<double, N> acc_upper{};
            for (std::size_t k = 0; k < n; ++k) {
                const double r = outer + inner * rule.nodes[k];
                const double w = rule.weights[k] * r;
                const auto a = f(outer, inner, r);
                const auto b = f(inner, outer, r);
                for (std::size_t c = 0; c < N; ++c) {
                    acc_lower[c] += w * a[c];
                    acc_upper[c] += w * b[c];
                }
            }
            // measure r_e r_n times the Jacobian r_n of the inner r-map
            const double w_mid = w_inner * outer * inner * inner;
            for (std::size_t c = 0; c < N; ++c) {
                sums.lower[c] += w_mid * acc_lower[c];
                sums.upper[c] += w_mid * acc_upper[c];
            }
        }
    }
    return sums;
}

/// Order-doubling driver for a batch of triangle-domain integrals sharing
/// one set of evaluation points. A component is converged when
/// |I_2n - I_n| <= rel_tol * (|I_lower| + |I_upper|); the batch stops as
/// soon as every component has converged.
template <std::size_t N, class F>
std::array<IntegralResult, N> integrate_triangle_domain_batch(F&& f, const QuadratureSpec& spec)
{
    spec.validate();
    std::array<IntegralResult, N> out{};
    std::array<double, N> previous{};
    int order = spec.base_order;
    for (int level = 0; level <= spec.max_refinements; ++level, order *= 2) {
        const auto sums = triangle_rule<N>(f, gauss_legendre(order));
        bool all_converged = level > 0;
        for (std::size_t c = 0; c < N; ++c) {
            const double value = sums.lower[c] + sums.upper[c];
            const double scale = std::abs(sums.lower[c]) + std::abs(sums.upper[c]);
            auto& res = out[c];
            res.value = value;
            res.order = order;
            if (level > 0) {
                res.error = std::abs(value - previous[c]);
                res.converged = res.error <= spec.rel_tol * scale;
            }
            all_converged = all_converged && res.converged;
            previous[c] = value;
        }
        if (all_converged) {
            break;
        }
    }
    return out;
}

/// Integral of f * r_e r_n r over the triangle domain.
IntegralResult integrate_triangle_domain(const TriangleDomainIntegrand& f, const QuadratureSpec& spec);

/// Both sub-region contributions of the triangle integral at a fixed order.
std::pair<double, double> triangle_subregions(const TriangleDomainIntegrand& f, int order);

/// Two-particle radial integral from the Legendre expansion of 1/r:
///   int_0^1 int_0^{r_e} g r_e r_n^2 dr_n dr_e
/// + int_0^1 int_{r_e}^1 g r_e^2 r_n dr_n dr_e.
/// The 16 pi^2 prefactor is omitted, so for g = phi^2 with phi normalized
/// against r_e^2 r_n^2 dr_e dr_n the result is <1/r>.
IntegralResult integrate_legendre_2d(const std::function<double(double r_e, double r_n)>& g,
                                     const QuadratureSpec& spec);

/// int_lo^hi h(r) dr.
IntegralResult integrate_radial(const std::function<double(double)>& h, double lo, double hi,
                                const QuadratureSpec& spec);

} // namespace confh
