#include "sqrtpot/closed_forms.hpp"

#include <cmath>
#include <string>

namespace sqrtpot {

SpecialCase classify_potential(PotentialParams const& params)
{
    params.validate();
    SpecialCase out;
    out.a0_zero = params.a0 == 0.0;
    out.a1_zero = params.a1 == 0.0;
    out.a2_zero = params.a2 == 0.0;
    out.a3_zero = params.a3 == 0.0;
    out.a4_zero = params.a4 == 0.0;

    if (out.a0_zero && out.a1_zero && out.a3_zero && out.a4_zero)
        out.kind = SpecialCaseKind::Coulomb;
    else if (out.a1_zero && out.a3_zero)
        out.kind = SpecialCaseKind::MieType;
    else if (out.a0_zero && out.a2_zero && out.a4_zero)
        out.kind = SpecialCaseKind::FractionalPair;
    return out;
}

namespace {

void require_positive_mass(double mass)
{
    if (!(mass > 0.0))
        throw domain_error("mass must be positive, got " + std::to_string(mass));
}

} // namespace

double energy_fractional_pair(double mass, double a1, int dim, int ell, int n)
{
    Channel{dim, ell, n}.validate();
    require_positive_mass(mass);
    if (a1 == 0.0)
        throw domain_error("fractional-pair spectrum requires a1 != 0");
    double const k_prime = 0.5 * dim + ell - 1.0;
    double const denom = 2.0 * k_prime + n + 1.0;
    double const cube = mass * mass * a1 * a1 / denom;
    return -std::cbrt(cube * cube) / (2.0 * mass);
}

double energy_mie(double mass, double a0, double a2, double a4, int dim, int ell, int n_r)
{
    Channel{dim, ell, n_r}.validate();
    require_positive_mass(mass);
    if (a2 >= 0.0)
        throw domain_error("Mie-type spectrum requires a2 < 0, got " + std::to_string(a2));
    double const half_span = dim + 2.0 * ell - 2.0;
    double const disc = half_span * half_span + 8.0 * mass * a4;
    if (disc < 0.0)
        throw supercritical_error(disc, "supercritical a4 in Mie-type spectrum");
    double const denom = n_r + 0.5 * (1.0 + std::sqrt(disc));
    double const ratio = a2 / denom;
    return a0 - 0.5 * mass * ratio * ratio;
}

double energy_coulomb(double mass, double a2, int dim, int ell, int n_r)
{
    Channel{dim, ell, n_r}.validate();
    require_positive_mass(mass);
    if (a2 >= 0.0)
        throw domain_error("Coulomb spectrum requires a2 < 0, got " + std::to_string(a2));
    double const ratio = a2 / (0.5 * dim + ell + n_r - 0.5);
    return -0.5 * mass * ratio * ratio;
}

} // namespace sqrtpot
