#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confh/clamped_series.hpp"
#include "confh/perturbation.hpp"
#include "oracles.hpp"

#include <numbers>
#include <random>

using namespace confh;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPiSq = kPi * kPi / 2.0;
const QuadratureSpec kSpec2 = QuadratureSpec::defaults_2d();
const QuadratureSpec kSpec1 = QuadratureSpec::defaults_1d();

} // namespace

TEST_CASE("moving nucleus, sinc product state")
{
    const auto c = moving_sinc_coefficients();
    CHECK(c.converged);
    CHECK(std::abs(c.coulomb - 1.786073167) < 1e-8);

    const auto e0 = moving_pt_sinc(ModelParams(0.0, 0.0));
    CHECK(std::abs(e0.epsilon - 4.934802200) < 1e-9);
    CHECK(e0.method == Method::MovingPT_Sinc);
    CHECK(e0.converged);
    CHECK(e0.residual <= kSpec2.rel_tol);

    const auto h = default_hydrogen_params(1.0);
    const auto e1 = moving_pt_sinc(h);
    CHECK(std::abs(e1.epsilon - (4.934802200 * (1.0 + h.beta()) - 1.786073167)) < 1e-8);

    const auto equal_mass = moving_pt_sinc(ModelParams(1.0, 0.0));
    CHECK(equal_mass.epsilon == doctest::Approx(kPi * kPi).epsilon(1e-15));
}

TEST_CASE("moving nucleus, polynomial state is closed form")
{
    CHECK(moving_pt_poly(ModelParams(0.0, 0.0)).epsilon == 5.0);
    CHECK(std::abs(moving_pt_poly(ModelParams(0.0, 14.0 / 5.0)).epsilon) < 1e-15);
    for (double beta : {0.0, kHydrogenBeta, 0.5, 1.0, 3.0}) {
        CHECK(moving_pt_poly(ModelParams(beta, 0.0)).epsilon == 5.0 * (1.0 + beta));
        for (double lambda : {0.25, 1.0, 2.0, 7.5}) {
            CHECK(moving_pt_poly(ModelParams(beta, lambda)).epsilon == 5.0 * (1.0 + beta) - (25.0 / 14.0) * lambda);
        }
    }
}

TEST_CASE("clamped nucleus, closed form and sinc state")
{
    CHECK(clamped_pt_poly(0.0).epsilon == 5.0);
    CHECK(clamped_pt_poly(2.0).epsilon == 0.0);
    CHECK(clamped_pt_poly(1.0).epsilon == 2.5);
    CHECK_THROWS_AS(clamped_pt_poly(-1.0), std::domain_error);

    CHECK(std::abs(clamped_pt_sinc(0.0).epsilon - 4.934802200) < 1e-9);
    const auto c = clamped_sinc_coefficients();
    CHECK(std::abs(c.coulomb - 2.437653392) < 1e-8);
    // pi^2/2 - Cin(2 pi) with Cin from its power series
    CHECK(std::abs(clamped_pt_sinc(1.0).epsilon - (kHalfPiSq - oracle::cin(2.0 * kPi))) < 1e-12);
    CHECK(clamped_pt_sinc(1.0).epsilon == doctest::Approx(2.497148808).epsilon(1e-9));
}

TEST_CASE("first-order critical lambda")
{
    const auto h = default_hydrogen_params(0.0);
    CHECK(pt_critical_lambda(PtModel::MovingPoly, ModelParams(0.0, 0.0)) == 2.8);
    CHECK(pt_critical_lambda(PtModel::ClampedPoly, h) == 2.0);
    // (pi^2 / 2) / 2.437653392
    CHECK(pt_critical_lambda(PtModel::ClampedSinc, h, kSpec1) == doctest::Approx(2.0244068).epsilon(1e-7));
    CHECK(pt_critical_lambda(PtModel::MovingSinc, h) ==
          doctest::Approx(4.934802200 * (1.0 + h.beta()) / 1.786073167).epsilon(1e-9));
    CHECK(pt_critical_lambda(PtModel::MovingSinc, h) == doctest::Approx(2.764).epsilon(1e-3));

    for (auto model : {PtModel::MovingSinc, PtModel::MovingPoly, PtModel::ClampedPoly, PtModel::ClampedSinc}) {
        const double lc = pt_critical_lambda(model, h, kSpec2);
        CHECK(std::abs(pt_energy(model, h.with_lambda(lc), kSpec2).epsilon) < 1e-12);
    }
}

TEST_CASE("property: first-order energies are linear in lambda")
{
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> lam(0.0, 5.0);
    std::uniform_real_distribution<double> mass(0.0, 2.0);
    for (int i = 0; i < 50; ++i) {
        const double beta = mass(rng), l1 = lam(rng), l2 = lam(rng);
        for (auto model : {PtModel::MovingSinc, PtModel::MovingPoly, PtModel::ClampedPoly, PtModel::ClampedSinc}) {
            auto e = [&](double l) { return pt_energy(model, ModelParams(beta, l), kSpec2).epsilon; };
            CHECK(e(l1) + e(l2) - e(0.0) == doctest::Approx(e(l1 + l2)).epsilon(1e-14).scale(10.0));
        }
    }
}

TEST_CASE("moving-nucleus first-order energies lie above the clamped ones")
{
    const auto c_moving = moving_sinc_coefficients();
    const auto c_clamped = clamped_sinc_coefficients();
    CHECK(c_clamped.coulomb > c_moving.coulomb);
    for (int i = 0; i <= 40; ++i) {
        const double lambda = 0.05 * i;
        const auto h = default_hydrogen_params(lambda);
        CHECK(moving_pt_sinc(h).epsilon > clamped_pt_sinc(lambda).epsilon);
        CHECK(moving_pt_poly(h).epsilon > clamped_pt_poly(lambda).epsilon);
    }
}

TEST_CASE("kinetic part scales with the total mass factor")
{
    const double beta = kHydrogenBeta;
    const double moving_kinetic = moving_pt_sinc(ModelParams(beta, 0.0)).epsilon;
    const double clamped_kinetic = clamped_pt_sinc(0.0).epsilon;
    CHECK(moving_kinetic == doctest::Approx((1.0 + beta) * clamped_kinetic).epsilon(1e-15));

    // at lambda = 1 the nuclear kinetic energy is a small part of the gap
    const double gap = moving_pt_sinc(ModelParams(beta, 1.0)).epsilon - clamped_pt_sinc(1.0).epsilon;
    CHECK(beta * clamped_kinetic < 0.01 * gap);
}

TEST_CASE("clamped first-order energies bound the exact energy from above")
{
    for (double lambda : {0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 5.0}) {
        const double exact = clamped_ground_energy(lambda).epsilon;
        CHECK(clamped_pt_sinc(lambda).epsilon >= exact - 1e-10);
        CHECK(clamped_pt_poly(lambda).epsilon >= exact - 1e-10);
    }
}
