#pragma once

#include <utility>

#include "maxmin/types.hpp"

namespace maxmin {

// Below this distance from the seam r1 + r2 = 1 the logarithmic closed forms
// are replaced by their limit expansions (they coincide with the random
// double auction in the limit).
inline constexpr double kSeamEpsilon = 1e-6;

struct AsymmetricThresholds {
    double r1 = 0.0;
    double r2 = 0.0;
    double residual_b = 0.0;  // |H1(r1,r2) - m_b|
    double residual_s = 0.0;  // |H2(r1,r2) - m_s|
    // bracket of the outer fixed-point search that produced r2
    double outer_bracket_lo = 0.0;
    double outer_bracket_hi = 0.0;
};

// Commission fee for the symmetric case: r = 1 - sqrt(1 - (m_b - m_s)).
// Throws regime_error unless classify(exp) == Symmetric.
double solve_r_symmetric(const Expectations& exp);

// Moment maps of the asymmetric triangular family.  Total on [0,1]^2,
// with the seam and boundary limits filled in.
std::pair<double, double> eval_h1_h2(double r1, double r2);

// Solves H1(r1,r2) = m_b, H2(r1,r2) = m_s by the nested construction:
// inner bracketed root-finds for I(r2) and J(r1), outer bracketed
// root-find on r2 -> J(I(r2)) - r2.  Accepts Symmetric inputs as the
// limiting case (returns (r, 1-r)); near-symmetric inputs are seeded at
// the symmetric solution.
AsymmetricThresholds solve_asymmetric_thresholds(const Expectations& exp);

// Unique solution of iota*ln(iota) + 1 - iota = m_s on (0,1).
double solve_iota(double m_s);

}  // namespace maxmin
