#pragma once

#include "sqrtpot/radial_model.hpp"

namespace sqrtpot {

/// Analytically solvable sub-families of the potential, used as independent
/// reference spectra. Detection is by exact-zero tests on the user-supplied
/// coefficients; Coulomb is reported in preference to the families containing it.
enum class SpecialCaseKind {
    None,
    FractionalPair, // a1/sqrt(r) + a3/r^(3/2)        (a0 = a2 = a4 = 0)
    MieType,        // a0 + a2/r + a4/r^2             (a1 = a3 = 0)
    Coulomb,        // a2/r                           (a0 = a1 = a3 = a4 = 0)
};

struct SpecialCase {
    SpecialCaseKind kind = SpecialCaseKind::None;
    bool a0_zero = false;
    bool a1_zero = false;
    bool a2_zero = false;
    bool a3_zero = false;
    bool a4_zero = false;
};

SpecialCase classify_potential(PotentialParams const& params);

/// E = -(1/2M) * (M^2 a1^2 / (2k' + n + 1))^(2/3) with k' = D/2 + l - 1.
/// Requires a1 != 0 (no binding otherwise).
double energy_fractional_pair(double mass, double a1, int dim, int ell, int n);

/// E = a0 - (M/2) * [a2 / (n_r + (1 + sqrt((D+2l-2)^2 + 8 M a4)) / 2)]^2.
/// Requires a2 < 0 for binding and a non-negative discriminant.
double energy_mie(double mass, double a0, double a2, double a4, int dim, int ell, int n_r);

/// E = -(M/2) * (a2 / (D/2 + l + n_r - 1/2))^2. Requires a2 < 0.
double energy_coulomb(double mass, double a2, int dim, int ell, int n_r);

} // namespace sqrtpot
