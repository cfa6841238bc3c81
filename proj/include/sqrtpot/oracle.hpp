#pragma once

#include "sqrtpot/radial_model.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace sqrtpot {

/// Shooting-solver controls. The energy bracket must isolate exactly one
/// eigenvalue with the requested node count; find_energy_bracket can supply it.
struct OracleConfig {
    double r_min = 0.0;
    double r_max = 0.0;
    int num_points = 6000;
    double energy_lo = 0.0;
    double energy_hi = 0.0;
    int target_nodes = 0;
    /// Absolute energy convergence tolerance for the bisection.
    double tolerance = 1e-10;
    int max_iterations = 220;
};

struct OracleResult {
    double energy = 0.0;
    int nodes = 0;
    /// Log-derivative mismatch of the two-sided integration at the matching
    /// point, evaluated at the converged energy.
    double match_defect = 0.0;
    std::vector<double> grid;
    std::vector<double> u; // reduced radial function, L2-normalized on the grid
};

/// l(l+D-2) + (D-1)(D-3)/4: the centrifugal strength of the canonical
/// one-dimensional form. Negative only for D = 2, l = 0 (value -1/4).
double lambda_eff(Channel const& ch);

/// The substitution u(r) = r^((D-1)/2) R(r) removes the first-derivative term:
///   u'' = q(r, E) u  with  q = lambda_eff/r^2 + 2M(V(r) - E).
struct CanonicalRadialEquation {
    Channel channel;
    PotentialParams params;
    double lambda = 0.0; // lambda_eff(channel)

    double q(double r, double energy) const;

    /// Leading power of u at the origin, 1/2 + sqrt(1/4 + lambda + 2*M*a4)
    /// (equal to k_plus/2 + (D-1)/2).
    double origin_exponent() const;
};

CanonicalRadialEquation reduce_to_canonical(PotentialParams const& params, Channel const& ch);

/// Grid defaults r_min = 1e-8/A, r_max = 40/A from the decay-rate estimate
/// (taken from the series solver when not supplied). The energy bracket is
/// left at zero width; fill it explicitly or via find_energy_bracket.
OracleConfig default_oracle_config(PotentialParams const& params, Channel const& ch,
                                   std::optional<double> gauss_rate_estimate = {});

/// Scan + bisect on the node count of the outward solution until the count
/// transitions target -> target+1; returns (E_lo, E_hi) containing exactly
/// the target eigenvalue. Throws bracket_error when the spectrum has no such
/// state below the potential's asymptotic value.
std::pair<double, double> find_energy_bracket(PotentialParams const& params, Channel const& ch,
                                              int target_nodes, OracleConfig const& config);

/// Two-sided shooting: outward integration with power-series start-up at
/// r_min (regular branch only), inward integration with a decaying-exponential
/// start-up at r_max, bisection on the sign of the log-derivative mismatch at
/// the outermost classical turning point, guarded by node counting.
OracleResult shoot_eigenvalue(PotentialParams const& params, Channel const& ch,
                              OracleConfig const& config);

/// Convenience wrapper: default config, ansatz-based bracket when available,
/// automatic bracket search otherwise.
OracleResult solve_oracle(PotentialParams const& params, Channel const& ch, int target_nodes);

} // namespace sqrtpot
