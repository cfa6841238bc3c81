#pragma once

#include "sqrtpot/ansatz.hpp"

#include <vector>

namespace sqrtpot {

struct NormalizationConfig {
    /// Relative tolerance for the norm integral.
    double rel_tol = 1e-11;
    /// Subdivision budget for the adaptive quadrature.
    int max_subdivisions = 4000;
    /// Number of points of the exported geometric grid.
    int grid_points = 2000;
    /// Inner grid edge as a fraction of the decay length 1/gauss_rate.
    double inner_factor = 1e-6;
    /// The integrand tail beyond the outer edge is kept below this fraction
    /// of its peak (the tail contribution to the norm is smaller still).
    double tail_epsilon = 1e-18;
};

/// A normalized radial eigenfunction sampled on a geometric grid.
/// Immutable after construction.
struct RadialWavefunction {
    BoundState state;
    double norm_constant = 1.0; // N such that integral (N R_un)^2 r^(D-1) dr = 1
    std::vector<double> grid;   // strictly increasing r values
    std::vector<double> values; // N * R_un at the grid points
};

/// exp(-(A r + B sqrt(r))) * r^(k/2) * sum_j c_j r^(j/2), evaluated with the
/// combined exponent so an attractive a1 (B < 0) cannot overflow the split
/// factors. Throws domain_error for r <= 0.
double evaluate_unnormalized(BoundState const& state, double r);

/// Normalization constant and sampled wavefunction. The norm integral is
/// computed by adaptive Gauss-Kronrod quadrature in the variable t = sqrt(r),
/// which turns the integrable r^(k+D-1) endpoint behavior into a smooth
/// t^(2k+2D-1) one starting exactly at 0.
RadialWavefunction normalize(BoundState const& state, NormalizationConfig const& config = {});

/// Strict sign changes of the sampled values on (0, r_max).
int count_radial_nodes(RadialWavefunction const& wf);

} // namespace sqrtpot
