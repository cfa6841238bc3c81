#pragma once

#include "sqrtpot/radial_model.hpp"

#include <optional>
#include <vector>

namespace sqrtpot {

/// Structure of the eigenfunction in the half-power variable x = sqrt(r):
///   R(x) = exp(-(gauss_rate * x^2 + linear_rate * x)) * x^indicial_exponent * (series in x).
struct AnsatzFactors {
    /// Decay rate of the Gaussian factor in x (equivalently exp(-gauss_rate * r)).
    /// Positive for a bound state; fixes the energy via E = a0 - gauss_rate^2 / (2M).
    double gauss_rate = 0.0;
    /// Rate of the linear factor in x, 2*M*a1 / gauss_rate. Any sign.
    double linear_rate = 0.0;
    /// Leading power at the origin, the plus-branch indicial root k_plus.
    double indicial_exponent = 0.0;
};

/// The three coefficient sequences of the recurrence
///   alpha(p) c_p - beta(p+1) c_{p+1} + gamma(p+2) c_{p+2} = 0.
/// Pure value type; alpha/beta/gamma are exact closed forms in p.
struct RecurrenceCoefficients {
    double gauss_rate = 0.0;
    double linear_rate = 0.0;
    double indicial_exponent = 0.0;
    int dim = 3;
    double mass = 1.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double centrifugal = 0.0; // 4*l*(l+D-2) + 8*M*a4

    /// linear_rate^2 - 8*M*a2 - 4*gauss_rate*(D + k + p - 1)
    double alpha(int p) const;
    /// 8*M*a3 + linear_rate*(2D + 2k + 2p - 3)
    double beta(int p) const;
    /// (k+p)(k+p+2D-4) - centrifugal; gamma(0) = 0 at k = k_plus
    double gamma(int p) const;
};

RecurrenceCoefficients recurrence_coefficients(PotentialParams const& params, Channel const& ch,
                                               AnsatzFactors const& factors);

/// Polynomial factor of the eigenfunction: coefficients c_0..c_n in x = sqrt(r),
/// with c_0 = 1, plus the values the first two untruncated coefficients would
/// take. Both residuals are exactly zero iff the truncated series is an exact
/// solution of the radial equation.
struct SeriesSolution {
    std::vector<double> coeffs; // c_0 .. c_n
    int degree = 0;             // n
    double termination_residual_1 = 0.0; // would-be c_{n+1}
    double termination_residual_2 = 0.0; // would-be c_{n+2}
};

/// Everything that defines one solved state.
struct BoundState {
    double energy = 0.0;
    AnsatzFactors factors;
    SeriesSolution series;
    Channel channel;
    PotentialParams params;
};

/// Positive real roots A of the quantization cubic
///   4 A^3 (D + k + n - 1) + 8 A^2 M a2 - 4 M^2 a1^2 = 0,
/// sorted descending (largest A = most deeply bound energy first). An empty
/// list means no bound state exists at this (n, l). Each root carries energy
/// a0 - A^2/(2M).
std::vector<double> solve_quantization_cubic(PotentialParams const& params, Channel const& ch);

/// Assemble the exponential factors for a given decay rate A > 0.
AnsatzFactors ansatz_factors(PotentialParams const& params, Channel const& ch, double gauss_rate);

/// Run the recurrence up to c_n and compute both termination residuals.
/// Throws resonant_recurrence_error if some gamma(p) vanishes for 1 <= p <= n+2.
SeriesSolution build_series(PotentialParams const& params, Channel const& ch,
                            AnsatzFactors const& factors);

/// Value of a3 for which the series built at this (params, ch, A) terminates
/// exactly (termination_residual_1 = 0). Closed form for n = 0; bracketed
/// root search on the residual polynomial otherwise. When several real roots
/// exist the one of smallest magnitude is returned. Throws
/// no_termination_error when no real root exists.
double termination_constrained_a3(PotentialParams const& params, Channel const& ch,
                                  double gauss_rate);

/// Full solve: largest cubic root, factors, series, energy. std::nullopt when
/// the cubic has no positive root (no bound state at this channel).
/// Termination residuals are reported in the series, never enforced.
std::optional<BoundState> solve_bound_state(PotentialParams const& params, Channel const& ch);

} // namespace sqrtpot
