#include "confh/domain.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace confh {

namespace {

void require_non_negative(double value, const char* name)
{
    if (!std::isfinite(value) || value < 0.0) {
        throw std::domain_error(std::string(name) + " must be a finite non-negative number");
    }
}

std::string format_shortest(double value)
{
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("failed to format value");
    }
    return std::string(buf, end);
}

double parse_field(std::string_view text, std::string_view key)
{
    if (text.substr(0, key.size()) != key || text.size() <= key.size() || text[key.size()] != '=') {
        throw std::invalid_argument("expected field '" + std::string(key) + "'");
    }
    text.remove_prefix(key.size() + 1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument("malformed number for '" + std::string(key) + "'");
    }
    return value;
}

} // namespace

ModelParams::ModelParams(double beta, double lambda)
    : beta_(beta), lambda_(lambda)
{
    require_non_negative(beta, "beta");
    require_non_negative(lambda, "lambda");
}

std::string ModelParams::serialize() const
{
    return "beta=" + format_shortest(beta_) + ";lambda=" + format_shortest(lambda_);
}

ModelParams ModelParams::parse(std::string_view text)
{
    const auto sep = text.find(';');
    if (sep == std::string_view::npos) {
        throw std::invalid_argument("expected 'beta=<v>;lambda=<v>'");
    }
    return {parse_field(text.substr(0, sep), "beta"), parse_field(text.substr(sep + 1), "lambda")};
}

ModelParams default_hydrogen_params(double lambda)
{
    return {kHydrogenBeta, lambda};
}

std::string_view to_string(Method method)
{
    switch (method) {
    case Method::MovingPT_Sinc: return "moving-sinc";
    case Method::MovingPT_Poly: return "moving-poly";
    case Method::ClampedPT_Poly: return "clamped-poly";
    case Method::ClampedPT_Sinc: return "clamped-sinc";
    case Method::MovingVariational: return "moving-variational";
    case Method::ClampedSeries: return "clamped-series";
    }
    return "unknown";
}

void QuadratureSpec::validate() const
{
    if (base_order < 2) {
        throw std::domain_error("quadrature base_order must be >= 2");
    }
    if (max_refinements < 0) {
        throw std::domain_error("quadrature max_refinements must be >= 0");
    }
    if (!(rel_tol > 0.0)) {
        throw std::domain_error("quadrature rel_tol must be > 0");
    }
}

} // namespace confh
