#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "maxmin/types.hpp"

namespace maxmin {

// Adaptive 1-D quadrature (Gauss-Kronrod 15).  `err` receives the error
// estimate when non-null.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-12, double* err = nullptr) {
    if (!(b > a)) {
        if (err) *err = 0.0;
        return 0.0;
    }
    double e = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, 15, tol, &e);
    if (err) *err = e;
    return v;
}

// Same, but throws numeric_error (with the partial result) when the error
// estimate exceeds `err_bound`.
template <class F>
double integrate_checked(F&& f, double a, double b, double tol, double err_bound) {
    double e = 0.0;
    double v = integrate(f, a, b, tol, &e);
    if (!(e <= err_bound))
        throw numeric_error("quadrature error estimate above bound", v);
    return v;
}

}  // namespace maxmin
