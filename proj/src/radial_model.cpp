#include "sqrtpot/radial_model.hpp"

#include <cmath>
#include <string>

namespace sqrtpot {

void PotentialParams::validate() const
{
    if (!(mass > 0.0) || !std::isfinite(mass))
        throw domain_error("mass must be positive and finite, got " + std::to_string(mass));
    for (double c : {a0, a1, a2, a3, a4}) {
        if (!std::isfinite(c))
            throw domain_error("potential coefficients must be finite");
    }
}

void Channel::validate() const
{
    if (dim < 2)
        throw domain_error("spatial dimension must be >= 2, got " + std::to_string(dim));
    if (ell < 0)
        throw domain_error("orbital quantum number must be >= 0, got " + std::to_string(ell));
    if (n < 0)
        throw domain_error("termination index must be >= 0, got " + std::to_string(n));
}

double potential_value(PotentialParams const& params, double r)
{
    params.validate();
    if (!(r > 0.0))
        throw domain_error("potential_value requires r > 0, got " + std::to_string(r));
    // term-by-term so that pure inverse-power cases stay exact
    double const x = std::sqrt(r);
    return params.a0 + params.a1 / x + params.a2 / r + params.a3 / (r * x)
           + params.a4 / (r * r);
}

double centrifugal_strength(int dim, double ell, double mass, double a4)
{
    return 4.0 * ell * (ell + dim - 2) + 8.0 * mass * a4;
}

DerivedConstants derived_constants(PotentialParams const& params, Channel const& ch)
{
    params.validate();
    ch.validate();

    double const half_span = ch.dim + 2.0 * ch.ell - 2.0;
    double const disc = half_span * half_span + 8.0 * params.mass * params.a4;
    if (disc < 0.0)
        throw supercritical_error(disc,
                                  "supercritical a4: (D+2l-2)^2 + 8*M*a4 = " + std::to_string(disc)
                                      + " < 0, no bound-state problem");

    double const root = std::sqrt(disc);
    DerivedConstants out;
    out.centrifugal_strength = centrifugal_strength(ch.dim, ch.ell, params.mass, params.a4);
    out.k_plus = -(ch.dim - 2.0) + root;
    out.k_minus = -(ch.dim - 2.0) - root;
    return out;
}

double RadialCoefficients::first_derivative(double r) const
{
    return (dim - 1.0) / r;
}

double RadialCoefficients::centrifugal(double r) const
{
    return ell * (ell + dim - 2.0) / (r * r);
}

double RadialCoefficients::source(double r) const
{
    return 2.0 * params.mass * (energy - potential_value(params, r));
}

RadialCoefficients effective_radial_coefficients(PotentialParams const& params, Channel const& ch,
                                                 double energy)
{
    params.validate();
    ch.validate();
    return RadialCoefficients{ch.dim, ch.ell, energy, params};
}

} // namespace sqrtpot
