#pragma once

#include <vector>

namespace sqrtpot {

/// All real roots of c3*x^3 + c2*x^2 + c1*x + c0 with c3 != 0, in ascending
/// order, repeated according to multiplicity. Roots are found in closed form
/// (trigonometric / Cardano) and polished by Newton iterations on the original
/// polynomial, so each root x satisfies
///   |p(x)| <= 1e-12 * max(|c3 x^3|, |c2 x^2|, |c1 x|, |c0|).
/// Exact zero coefficients c0 (and c1) are factored out so that roots at the
/// origin come back as exact 0.0.
std::vector<double> real_cubic_roots(double c3, double c2, double c1, double c0);

} // namespace sqrtpot
