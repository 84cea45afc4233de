#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confh/domain.hpp"

#include <limits>
#include <random>

using namespace confh;

TEST_CASE("default hydrogen parameters")
{
    const auto p = default_hydrogen_params(1.0);
    CHECK(p.beta() == doctest::Approx(5.44617e-4).epsilon(1e-5));
    CHECK(p.beta() == 1.0 / 1836.15267343);
    CHECK(p.lambda() == 1.0);

    const auto zero = default_hydrogen_params(0.0);
    CHECK(zero.beta() == p.beta());
    CHECK(zero.lambda() == 0.0);

    CHECK_THROWS_AS(default_hydrogen_params(-1.0), std::domain_error);
}

TEST_CASE("model parameters reject negative or non-finite values")
{
    CHECK_THROWS_AS(ModelParams(-1e-300, 1.0), std::domain_error);
    CHECK_THROWS_AS(ModelParams(0.0, -0.5), std::domain_error);
    CHECK_THROWS_AS(ModelParams(std::numeric_limits<double>::quiet_NaN(), 1.0), std::domain_error);
    CHECK_THROWS_AS(ModelParams(0.0, std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_NOTHROW(ModelParams(0.0, 0.0));

    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> neg(-10.0, -1e-12);
    for (int i = 0; i < 100; ++i) {
        CHECK_THROWS_AS(ModelParams(neg(rng), 1.0), std::domain_error);
        CHECK_THROWS_AS(ModelParams(1.0, neg(rng)), std::domain_error);
    }
}

TEST_CASE("serialization round-trips bit-exactly")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mantissa(0.0, 1.0);
    std::uniform_int_distribution<int> exponent(-300, 300);
    for (int i = 0; i < 2000; ++i) {
        const double beta = std::ldexp(mantissa(rng), exponent(rng) / 10);
        const double lambda = mantissa(rng) * std::pow(10.0, exponent(rng) / 30);
        const ModelParams p(beta, lambda);
        const auto q = ModelParams::parse(p.serialize());
        REQUIRE(q == p);
    }
    const ModelParams h = default_hydrogen_params(2.262);
    CHECK(ModelParams::parse(h.serialize()) == h);
}

TEST_CASE("parse rejects malformed input")
{
    CHECK_THROWS(ModelParams::parse(""));
    CHECK_THROWS(ModelParams::parse("beta=1"));
    CHECK_THROWS(ModelParams::parse("lambda=1;beta=1"));
    CHECK_THROWS(ModelParams::parse("beta=1x;lambda=1"));
    CHECK_THROWS_AS(ModelParams::parse("beta=-1;lambda=1"), std::domain_error);
}

TEST_CASE("quadrature spec validation")
{
    CHECK_NOTHROW(QuadratureSpec{}.validate());
    CHECK_NOTHROW(QuadratureSpec::defaults_3d().validate());
    CHECK(QuadratureSpec::defaults_3d().rel_tol == 1e-9);
    CHECK(QuadratureSpec::defaults_1d().rel_tol == 1e-10);
    CHECK_THROWS_AS((QuadratureSpec{1, 4, 1e-10}.validate()), std::domain_error);
    CHECK_THROWS_AS((QuadratureSpec{32, -1, 1e-10}.validate()), std::domain_error);
    CHECK_THROWS_AS((QuadratureSpec{32, 4, 0.0}.validate()), std::domain_error);
}

TEST_CASE("method names")
{
    CHECK(to_string(Method::ClampedSeries) == "clamped-series");
    CHECK(to_string(Method::MovingVariational) == "moving-variational");
}
