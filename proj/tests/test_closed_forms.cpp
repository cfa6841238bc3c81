#include "sqrtpot/closed_forms.hpp"

#include "sqrtpot/ansatz.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace sqrtpot;
using sqrtpot::testing::rel_err;
using sqrtpot::testing::Rng;

TEST_SUITE_BEGIN("closed_forms");

TEST_CASE("classification by exact zeros")
{
    PotentialParams p;
    p.a2 = -1.0;
    CHECK_EQ(classify_potential(p).kind, SpecialCaseKind::Coulomb);

    p.a4 = 1.0;
    CHECK_EQ(classify_potential(p).kind, SpecialCaseKind::MieType);

    PotentialParams frac;
    frac.a1 = -1.0;
    frac.a3 = 0.5;
    CHECK_EQ(classify_potential(frac).kind, SpecialCaseKind::FractionalPair);

    PotentialParams full{0.1, -1.0, -1.0, 0.2, 0.3, 1.0};
    CHECK_EQ(classify_potential(full).kind, SpecialCaseKind::None);

    // 1e-300 is not zero: detection must not use tolerances
    PotentialParams nearly;
    nearly.a2 = -1.0;
    nearly.a1 = 1e-300;
    CHECK_EQ(classify_potential(nearly).kind, SpecialCaseKind::None);
}

TEST_CASE("fractional-pair spectrum")
{
    CHECK(energy_fractional_pair(1.0, -1.0, 3, 0, 0)
          == doctest::Approx(-0.5 * std::cbrt(0.25)).epsilon(1e-14));

    // monotone approach to zero from below as n grows
    double prev = energy_fractional_pair(1.0, -1.0, 3, 0, 0);
    for (int n = 1; n <= 40; ++n) {
        double const e = energy_fractional_pair(1.0, -1.0, 3, 0, n);
        CHECK(e < 0.0);
        CHECK(e > prev);
        prev = e;
    }
    // E ~ -n^(-2/3): at n = 4000 the level has climbed to about -2e-3
    CHECK(energy_fractional_pair(1.0, -1.0, 3, 0, 4000) > -2e-3);

    // |E| scales as |a1|^(4/3)
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        double const a1 = rng.uniform(0.1, 2.0);
        double const s = rng.uniform(0.1, 10.0);
        double const ratio = energy_fractional_pair(1.0, s * a1, 4, 1, 2)
                             / energy_fractional_pair(1.0, a1, 4, 1, 2);
        CHECK(rel_err(ratio, std::pow(s, 4.0 / 3.0)) < 1e-12);
    }

    CHECK_THROWS_AS(energy_fractional_pair(1.0, 0.0, 3, 0, 0), domain_error);
}

TEST_CASE("Mie-type spectrum")
{
    CHECK_EQ(energy_mie(1.0, 0.0, -1.0, 0.0, 3, 0, 0), -0.5);
    CHECK_EQ(energy_mie(1.0, 0.0, -1.0, 1.0, 3, 0, 0), -0.125);
    CHECK(energy_mie(1.0, 7.0, -1e-9, 0.0, 3, 0, 0) == doctest::Approx(7.0).epsilon(1e-12));

    CHECK_THROWS_AS(energy_mie(1.0, 0.0, 0.5, 0.0, 3, 0, 0), domain_error);
    CHECK_THROWS_AS(energy_mie(1.0, 0.0, -1.0, -1.0, 3, 0, 0), supercritical_error);
}

TEST_CASE("Coulomb spectrum")
{
    CHECK_EQ(energy_coulomb(1.0, -1.0, 3, 0, 0), -0.5);
    CHECK_EQ(energy_coulomb(1.0, -1.0, 5, 0, 0), -0.125);

    // accidental degeneracy: depends on l + n_r only
    CHECK_EQ(energy_coulomb(1.0, -1.0, 3, 0, 2), energy_coulomb(1.0, -1.0, 3, 1, 1));
    CHECK_EQ(energy_coulomb(1.0, -1.0, 3, 1, 1), energy_coulomb(1.0, -1.0, 3, 2, 0));

    CHECK_THROWS_AS(energy_coulomb(1.0, 0.0, 3, 0, 0), domain_error);
}

TEST_CASE("Coulomb is the a4 = a0 = 0 slice of Mie: exact")
{
    Rng rng(22);
    for (int trial = 0; trial < 300; ++trial) {
        double const mass = rng.uniform(0.2, 4.0);
        double const a2 = rng.uniform(-3.0, -0.05);
        int const dim = rng.uniform_int(2, 7);
        int const ell = rng.uniform_int(0, 4);
        int const n_r = rng.uniform_int(0, 4);
        CHECK_EQ(energy_coulomb(mass, a2, dim, ell, n_r),
                 energy_mie(mass, 0.0, a2, 0.0, dim, ell, n_r));
    }
}

TEST_CASE("interdimensional degeneracy (D, l) ~ (D+2, l-1)")
{
    Rng rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        double const mass = rng.uniform(0.2, 4.0);
        double const a2 = rng.uniform(-3.0, -0.05);
        int const dim = rng.uniform_int(2, 7);
        int const ell = rng.uniform_int(1, 4);
        int const n_r = rng.uniform_int(0, 4);
        CHECK_EQ(energy_coulomb(mass, a2, dim, ell, n_r),
                 energy_coulomb(mass, a2, dim + 2, ell - 1, n_r));
    }
}

TEST_CASE("closed forms agree with the series solver")
{
    Rng rng(44);
    for (int trial = 0; trial < 200; ++trial) {
        double const mass = rng.uniform(0.3, 3.0);
        int const dim = rng.uniform_int(2, 6);
        int const ell = rng.uniform_int(0, 3);
        int const n_r = rng.uniform_int(0, 2);

        {
            PotentialParams mie;
            mie.mass = mass;
            mie.a0 = rng.uniform(-1.0, 1.0);
            mie.a2 = rng.uniform(-2.0, -0.1);
            mie.a4 = rng.uniform(0.0, 2.0);
            auto const state = solve_bound_state(mie, Channel{dim, ell, 2 * n_r});
            REQUIRE(state.has_value());
            CHECK(rel_err(state->energy,
                          energy_mie(mass, mie.a0, mie.a2, mie.a4, dim, ell, n_r))
                  < 1e-10);
        }
        {
            PotentialParams frac;
            frac.mass = mass;
            frac.a1 = rng.uniform(0.1, 2.0) * (rng.uniform_int(0, 1) ? 1.0 : -1.0);
            int const n = rng.uniform_int(0, 4);
            auto const state = solve_bound_state(frac, Channel{dim, ell, n});
            REQUIRE(state.has_value());
            CHECK(rel_err(state->energy, energy_fractional_pair(mass, frac.a1, dim, ell, n))
                  < 1e-10);
        }
    }
}

TEST_SUITE_END();
