#include "confh/clamped_series.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace confh {

namespace {

constexpr int kMinTruncation = 60;
constexpr int kMaxTruncation = 8192;
constexpr double kScanStep = 0.5;

void require_truncation(int truncation)
{
    if (truncation < 10) {
        throw std::domain_error("series truncation K must be >= 10");
    }
}

// bracket [a, b] with f(a) f(b) <= 0 narrowed to width <= tol
template <class F>
std::pair<double, double> bisect_to(F&& f, double a, double b, double tol)
{
    auto done = [tol](double lo, double hi) { return std::abs(hi - lo) <= tol; };
    std::uintmax_t max_iter = 400;
    return boost::math::tools::bisect(f, a, b, done, max_iter);
}

} // namespace

std::vector<double> series_coefficients(double epsilon, double lambda, int truncation)
{
    require_truncation(truncation);
    std::vector<double> c(static_cast<std::size_t>(truncation) + 1);
    double prev = 0.0;
    c[0] = 1.0;
    for (int k = 0; k < truncation; ++k) {
        const double next = -(2.0 * lambda * c[k] + 2.0 * epsilon * prev) / ((k + 2.0) * (k + 1.0));
        prev = c[k];
        c[k + 1] = next;
    }
    return c;
}

double series_boundary_value(double epsilon, double lambda, int truncation)
{
    require_truncation(truncation);
    // summed smallest-last to limit rounding in the cancelling region
    const auto c = series_coefficients(epsilon, lambda, truncation);
    double sum = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        sum += *it;
    }
    return sum;
}

int adaptive_truncation(double epsilon, double lambda)
{
    // terms stop growing once (k+1)(k+2) exceeds roughly 2 |eps| + 2 lambda
    const double turning = std::sqrt(2.0 * std::abs(epsilon) + 2.0 * lambda);
    for (int k = kMinTruncation; k <= kMaxTruncation; k *= 2) {
        if (k < 2.0 * turning + 10.0) {
            continue;
        }
        const auto c = series_coefficients(epsilon, lambda, k);
        double peak = 0.0;
        for (double v : c) {
            peak = std::max(peak, std::abs(v));
        }
        const double tail = std::max(std::abs(c[k]), std::abs(c[k - 1]));
        if (tail <= 1e-18 * peak) {
            return k;
        }
    }
    throw NumericalError("power series did not converge within 8192 terms");
}

SeriesSolution clamped_ground_state(double lambda, double tol)
{
    static_cast<void>(ModelParams(0.0, lambda));
    if (!(tol > 0.0)) {
        throw std::domain_error("tolerance must be > 0");
    }
    // eps >= -lambda^2 / 2 (free atom) and eps <= pi^2 / 2 (free particle)
    const double eps_lo = -lambda * lambda - 1.0;
    const double eps_hi = std::numbers::pi * std::numbers::pi / 2.0 + 1.0;
    const int K = std::max(adaptive_truncation(eps_lo, lambda), adaptive_truncation(eps_hi, lambda));
    auto u = [&](double eps) { return series_boundary_value(eps, lambda, K); };

    double a = eps_lo;
    double fa = u(a);
    bool found = false;
    double b = a;
    while (a < eps_hi) {
        b = std::min(a + kScanStep, eps_hi);
        const double fb = u(b);
        if (fa == 0.0 || fa * fb <= 0.0) {
            found = true;
            break;
        }
        a = b;
        fa = fb;
    }
    if (!found) {
        std::ostringstream msg;
        msg << "no sign change of u(1; eps) for lambda=" << lambda << " on eps in [" << eps_lo << ", "
            << eps_hi << "]";
        throw NumericalError(msg.str());
    }
    const auto [lo, hi] = fa == 0.0 ? std::pair{a, a} : bisect_to(u, a, b, tol);

    SeriesSolution s;
    s.epsilon = 0.5 * (lo + hi);
    s.lambda = lambda;
    s.truncation = K;
    s.coefficients = series_coefficients(s.epsilon, lambda, K);
    s.boundary_residual = std::abs(u(s.epsilon));
    s.bracket_width = hi - lo;
    // the truncation tail must be negligible against the largest term
    double peak = 0.0;
    for (double v : s.coefficients) {
        peak = std::max(peak, std::abs(v));
    }
    const double tail = std::abs(series_boundary_value(s.epsilon, lambda, 2 * K) - u(s.epsilon));
    s.converged = s.bracket_width <= tol && tail <= 1e-14 * peak;
    return s;
}

EnergyEstimate clamped_ground_energy(double lambda, double tol)
{
    const auto s = clamped_ground_state(lambda, tol);
    return {s.epsilon, Method::ClampedSeries, s.converged, s.bracket_width};
}

double clamped_critical_lambda(double tol)
{
    if (!(tol > 0.0)) {
        throw std::domain_error("tolerance must be > 0");
    }
    auto u = [](double lambda) {
        return series_boundary_value(0.0, lambda, adaptive_truncation(0.0, lambda));
    };
    constexpr double step = 0.25;
    constexpr double limit = 20.0;
    double a = 0.0;
    double fa = u(a);
    for (double b = step; b <= limit; b += step) {
        const double fb = u(b);
        if (fa * fb <= 0.0) {
            const auto [lo, hi] = bisect_to(u, a, b, tol);
            return 0.5 * (lo + hi);
        }
        a = b;
        fa = fb;
    }
    throw NumericalError("no sign change of u(1; 0, lambda) for lambda in [0, 20]");
}

} // namespace confh
