#pragma once

// Test-only oracles, deliberately independent of the library's numerics:
// adaptive Simpson quadrature (the library uses Gauss-Kronrod) and the
// defining moment integrals of the asymmetric triangular family.

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

namespace detail {

template <class F>
double simpson(F&& f, double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive(F&& f, double a, double b, double fa, double fm, double fb, double whole,
                double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(f, a, m, fa, flm, fm);
    const double right = simpson(f, m, b, fm, frm, fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-12) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    return detail::adaptive(f, a, b, fa, fm, fb, detail::simpson(f, a, b, fa, fm, fb), tol,
                            40);
}

// KE-B-2: M_B = r1 + int_{r1}^{1} pi_B(v) v dv with the generalized-Pareto
// buyer marginal.
inline double h1_integral(double r1, double r2, double tol = 1e-13) {
    const double kappa = 1.0 - r1 - r2;
    auto density = [&](double v) {
        const double den = kappa / (1.0 - r1) * v + r1 * r2 / (1.0 - r1);
        return r1 * (1.0 - r2) / (den * den);
    };
    return r1 + integrate([&](double v) { return density(v) * v; }, r1, 1.0, tol);
}

// KE-S-2: M_S = int_0^{r2} pi_S(v) v dv.
inline double h2_integral(double r1, double r2, double tol = 1e-13) {
    const double kappa = 1.0 - r1 - r2;
    auto density = [&](double v) {
        const double den = kappa / r2 * v + r1;
        return r1 * (1.0 - r2) / (den * den);
    };
    return integrate([&](double v) { return density(v) * v; }, 0.0, r2, tol);
}

// Kolmogorov-Smirnov distance of a sample against a continuous CDF.
inline double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double fx = cdf(xs[i]);
        d = std::max(d, std::fabs(fx - static_cast<double>(i) / n));
        d = std::max(d, std::fabs(fx - static_cast<double>(i + 1) / n));
    }
    return d;
}

}  // namespace oracle
