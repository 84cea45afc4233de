#include "confh/quadrature.hpp"

#include <numbers>
#include <stdexcept>

namespace confh {

GaussLegendreRule gauss_legendre(int n)
{
    if (n < 1) {
        throw std::domain_error("Gauss-Legendre order must be >= 1");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // P_n(x) and P_n'(x) by the three-term recurrence
    auto legendre = [n](double x) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        return std::pair{p1, n * (x * p1 - p0) / (x * x - 1.0)};
    };
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Tricomi initial guess for the i-th largest root
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            const auto [p, dp] = legendre(x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double dp = legendre(x).second;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[n / 2] = 0.0;
    }
    return rule;
}

IntegralResult integrate_triangle_domain(const TriangleDomainIntegrand& f, const QuadratureSpec& spec)
{
    auto wrapped = [&f](double re, double rn, double r) { return std::array<double, 1>{f(re, rn, r)}; };
    return integrate_triangle_domain_batch<1>(wrapped, spec)[0];
}

std::pair<double, double> triangle_subregions(const TriangleDomainIntegrand& f, int order)
{
    auto wrapped = [&f](double re, double rn, double r) { return std::array<double, 1>{f(re, rn, r)}; };
    const auto sums = triangle_rule<1>(wrapped, gauss_legendre(order));
    return {sums.lower[0], sums.upper[0]};
}

namespace {

// Generic order-doubling driver; rule(order) returns {value, scale}.
template <class Rule>
IntegralResult refine(Rule&& rule, const QuadratureSpec& spec)
{
    spec.validate();
    IntegralResult res;
    double previous = 0.0;
    int order = spec.base_order;
    for (int level = 0; level <= spec.max_refinements; ++level, order *= 2) {
        const auto [value, scale] = rule(order);
        res.value = value;
        res.order = order;
        if (level > 0) {
            res.error = std::abs(value - previous);
            res.converged = res.error <= spec.rel_tol * scale;
            if (res.converged) {
                break;
            }
        }
        previous = value;
    }
    return res;
}

} // namespace

IntegralResult integrate_legendre_2d(const std::function<double(double, double)>& g,
                                     const QuadratureSpec& spec)
{
    auto rule = [&g](int order) {
        const auto gl = gauss_legendre(order);
        double lower = 0.0;
        double upper = 0.0;
        for (int i = 0; i < order; ++i) {
            const double outer = 0.5 * (1.0 + gl.nodes[i]);
            const double w_outer = 0.5 * gl.weights[i];
            for (int j = 0; j < order; ++j) {
                const double inner = outer * 0.5 * (1.0 + gl.nodes[j]);
                const double w = w_outer * outer * 0.5 * gl.weights[j];
                // r_n = inner < r_e = outer: weight r_e r_n^2
                lower += w * g(outer, inner) * outer * inner * inner;
                // mirror region r_e = inner < r_n = outer: weight r_e^2 r_n
                upper += w * g(inner, outer) * inner * inner * outer;
            }
        }
        return std::pair{lower + upper, std::abs(lower) + std::abs(upper)};
    };
    return refine(rule, spec);
}

IntegralResult integrate_radial(const std::function<double(double)>& h, double lo, double hi,
                                const QuadratureSpec& spec)
{
    if (!(lo < hi)) {
        throw std::domain_error("integrate_radial requires lo < hi");
    }
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    auto rule = [&](int order) {
        const auto gl = gauss_legendre(order);
        double sum = 0.0;
        double abs_sum = 0.0;
        for (int i = 0; i < order; ++i) {
            const double term = gl.weights[i] * h(mid + half * gl.nodes[i]);
            sum += term;
            abs_sum += std::abs(term);
        }
        return std::pair{half * sum, half * abs_sum};
    };
    return refine(rule, spec);
}

} // namespace confh
