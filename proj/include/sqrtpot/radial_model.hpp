#pragma once

#include "sqrtpot/errors.hpp"

namespace sqrtpot {

/// Coefficients of the potential V(r) = a0 + a1/r^(1/2) + a2/r + a3/r^(3/2) + a4/r^2,
/// plus the particle mass. Units: hbar = 1 throughout.
struct PotentialParams {
    double a0 = 0.0;
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a4 = 0.0;
    double mass = 1.0;

    /// Throws domain_error unless mass > 0 and all coefficients are finite.
    void validate() const;
};

/// Quantum-number selector: spatial dimension D >= 2, orbital momentum l >= 0,
/// and the series termination index n >= 0 (labels the state).
struct Channel {
    int dim = 3;
    int ell = 0;
    int n = 0;

    void validate() const;
};

/// Constants fixed by (params, channel) alone.
struct DerivedConstants {
    /// Combined centrifugal strength 4*l*(l+D-2) + 8*M*a4.
    double centrifugal_strength = 0.0;
    /// Larger indicial root, -(D-2) + sqrt((D+2l-2)^2 + 8*M*a4).
    double k_plus = 0.0;
    /// Smaller indicial root (minus branch).
    double k_minus = 0.0;
};

/// V(r) for r > 0; throws domain_error otherwise.
double potential_value(PotentialParams const& params, double r);

/// 4*l*(l+D-2) + 8*M*a4. Takes l as a real so the l -> -l-D+2 symmetry
/// can be checked directly.
double centrifugal_strength(int dim, double ell, double mass, double a4);

/// Indicial roots and centrifugal strength. Throws supercritical_error when
/// (D+2l-2)^2 + 8*M*a4 < 0 (fall to the center; the series method does not apply).
DerivedConstants derived_constants(PotentialParams const& params, Channel const& ch);

/// Coefficients of the radial equation
///   R'' + (D-1)/r R' - l(l+D-2)/r^2 R + 2M(E - V(r)) R = 0
/// evaluated pointwise. Immutable value type; safe to copy across threads.
struct RadialCoefficients {
    int dim = 3;
    int ell = 0;
    double energy = 0.0;
    PotentialParams params;

    /// (D-1)/r
    double first_derivative(double r) const;
    /// l(l+D-2)/r^2
    double centrifugal(double r) const;
    /// 2M(E - V(r))
    double source(double r) const;
};

RadialCoefficients effective_radial_coefficients(PotentialParams const& params,
                                                 Channel const& ch, double energy);

} // namespace sqrtpot
