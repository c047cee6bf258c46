#pragma once

#include <cmath>
#include <utility>

namespace maxmin {

struct RootOptions {
    double f_tol = 1e-12;   // stop when |f(x)| <= f_tol
    double x_tol = 1e-15;   // stop when the bracket is this narrow
    int max_iter = 200;
};

struct RootResult {
    double x = 0.0;
    double fx = 0.0;
    int iterations = 0;
    bool converged = false;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

// Bracketed root finder: bisection refined by secant steps.  Requires
// f(lo) and f(hi) of opposite sign (or zero); keeps the bracket valid at
// every step, so convergence is guaranteed for continuous f.
template <class F>
RootResult find_root_bracketed(F&& f, double lo, double hi, RootOptions opt = {}) {
    RootResult res;
    res.bracket_lo = lo;
    res.bracket_hi = hi;
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) {
        res.x = lo;
        res.fx = 0.0;
        res.converged = true;
        return res;
    }
    if (fhi == 0.0) {
        res.x = hi;
        res.fx = 0.0;
        res.converged = true;
        return res;
    }
    if ((flo > 0.0) == (fhi > 0.0)) {
        // no sign change: report the better endpoint, not converged
        res.converged = false;
        res.x = std::fabs(flo) < std::fabs(fhi) ? lo : hi;
        res.fx = std::fabs(flo) < std::fabs(fhi) ? flo : fhi;
        return res;
    }

    double x = lo;
    double fx = flo;
    for (int it = 0; it < opt.max_iter; ++it) {
        res.iterations = it + 1;
        // secant estimate, fall back to bisection when it leaves the bracket
        double denom = fhi - flo;
        double xs = (denom != 0.0) ? lo - flo * (hi - lo) / denom : 0.5 * (lo + hi);
        double margin = 0.01 * (hi - lo);
        if (!(xs > lo + margin && xs < hi - margin)) xs = 0.5 * (lo + hi);
        x = xs;
        fx = f(x);
        if (std::fabs(fx) <= opt.f_tol) {
            res.x = x;
            res.fx = fx;
            res.converged = true;
            return res;
        }
        if ((fx > 0.0) == (flo > 0.0)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
        if (hi - lo <= opt.x_tol) {
            res.x = std::fabs(flo) < std::fabs(fhi) ? lo : hi;
            res.fx = std::fabs(flo) < std::fabs(fhi) ? flo : fhi;
            res.converged = true;
            return res;
        }
    }
    res.x = x;
    res.fx = fx;
    res.converged = std::fabs(fx) <= opt.f_tol;
    return res;
}

}  // namespace maxmin
