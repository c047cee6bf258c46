#include "maxmin/calibration.hpp"

#include <algorithm>
#include <cmath>

#include "maxmin/rootfind.hpp"

namespace maxmin {

namespace {

constexpr double kResidualTol = 1e-10;

// Both moment maps factor through a single scalar:
//   H1 = r1*(2-r1) + (1-r1)^2 * C,   H2 = r2^2 * C,
// with C = r1*((1-r2)*ln((1-r2)/r1) - d)/d^2 and d = 1 - r1 - r2.
// Near the seam d -> 0 the direct form cancels catastrophically, so C is
// evaluated by its series 1/2 + sum_k (-d/r1)^k / ((k+1)(k+2)), which at
// d = 0 reproduces the limit formulas exactly.
double c_factor(double r1, double r2) {
    const double d = (1.0 - r1) - r2;
    if (std::fabs(d) < 0.05 * r1) {
        const double z = -d / r1;
        double c = 0.5;
        double zk = 1.0;
        for (int k = 1; k <= 48; ++k) {
            zk *= z;
            const double term = zk / static_cast<double>((k + 1) * (k + 2));
            c += term;
            if (std::fabs(term) < 1e-19) break;
        }
        return c;
    }
    const double log_ratio = std::log1p(d / r1);  // ln((1-r2)/r1)
    return r1 * ((1.0 - r2) * log_ratio - d) / (d * d);
}

}  // namespace

double solve_r_symmetric(const Expectations& exp) {
    if (classify(exp) != Regime::Symmetric)
        throw regime_error("solve_r_symmetric requires the symmetric regime");
    return 1.0 - std::sqrt(1.0 - (exp.m_b - exp.m_s));
}

std::pair<double, double> eval_h1_h2(double r1, double r2) {
    if (!(r1 >= 0.0 && r1 <= 1.0 && r2 >= 0.0 && r2 <= 1.0))
        throw std::invalid_argument("eval_h1_h2 requires (r1,r2) in [0,1]^2");
    if (r1 == 0.0) return {0.0, 0.0};
    if (r2 == 1.0) return {1.0, 1.0};
    const double c = c_factor(r1, r2);
    const double h1 = r1 * (2.0 - r1) + (1.0 - r1) * (1.0 - r1) * c;
    const double h2 = r2 * r2 * c;
    return {h1, h2};
}

namespace {

// r1 = I(r2): unique root of H1(., r2) = m_b (H1 strictly increasing in r1).
double inner_i(double r2, double m_b) {
    auto f = [&](double r1) { return eval_h1_h2(r1, r2).first - m_b; };
    RootOptions opt;
    opt.f_tol = 1e-13;
    auto res = find_root_bracketed(f, 0.0, 1.0, opt);
    return res.x;
}

// r2 = J(r1): unique root of H2(r1, .) = m_s (H2 strictly increasing in r2).
double inner_j(double r1, double m_s) {
    auto f = [&](double r2) { return eval_h1_h2(r1, r2).second - m_s; };
    RootOptions opt;
    opt.f_tol = 1e-13;
    auto res = find_root_bracketed(f, 0.0, 1.0, opt);
    return res.x;
}

}  // namespace

AsymmetricThresholds solve_asymmetric_thresholds(const Expectations& exp) {
    const Regime regime = classify(exp);
    if (regime == Regime::Symmetric) {
        // limiting case: (r, 1-r) solves the system exactly
        const double r = solve_r_symmetric(exp);
        AsymmetricThresholds out;
        out.r1 = r;
        out.r2 = 1.0 - r;
        auto [h1, h2] = eval_h1_h2(out.r1, out.r2);
        out.residual_b = std::fabs(h1 - exp.m_b);
        out.residual_s = std::fabs(h2 - exp.m_s);
        out.outer_bracket_lo = out.outer_bracket_hi = out.r2;
        return out;
    }
    if (regime != Regime::Asymmetric)
        throw regime_error("solve_asymmetric_thresholds requires the asymmetric regime");
    if (!(exp.m_s > 0.0 && exp.m_b < 1.0))
        throw regime_error("solve_asymmetric_thresholds requires 0 < m_s < m_b < 1");

    const double m_b = exp.m_b;
    const double m_s = exp.m_s;
    auto fixed_point_gap = [&](double r2) { return inner_j(inner_i(r2, m_b), m_s) - r2; };

    // bracket the outer fixed point; near-symmetric inputs start from the
    // symmetric solution
    double lo = 0.0, hi = 1.0 - 1e-9;
    const double sum_gap = m_b + m_s - 1.0;
    if (std::fabs(sum_gap) < 1e-6) {
        const double r_sym = 1.0 - std::sqrt(1.0 - (m_b - m_s));
        double w = 1e-4;
        while (w < 0.5) {
            const double a = std::max(0.0, 1.0 - r_sym - w);
            const double b = std::min(1.0 - 1e-9, 1.0 - r_sym + w);
            if (fixed_point_gap(a) > 0.0 && fixed_point_gap(b) < 0.0) {
                lo = a;
                hi = b;
                break;
            }
            w *= 4.0;
        }
    } else {
        // scan for a sign change; F(0) > 0 and a crossing exists (Lemma 2)
        constexpr int kScan = 24;
        double prev_x = 0.0;
        double prev_f = fixed_point_gap(0.0);
        for (int i = 1; i <= kScan; ++i) {
            const double x = static_cast<double>(i) / (kScan + 1);
            const double fx = fixed_point_gap(x);
            if ((prev_f > 0.0) != (fx > 0.0)) {
                lo = prev_x;
                hi = x;
                break;
            }
            prev_x = x;
            prev_f = fx;
        }
    }

    RootOptions opt;
    opt.f_tol = 1e-14;
    opt.max_iter = 200;
    auto outer = find_root_bracketed(fixed_point_gap, lo, hi, opt);

    AsymmetricThresholds out;
    out.r2 = outer.x;
    out.r1 = inner_i(out.r2, m_b);
    out.outer_bracket_lo = lo;
    out.outer_bracket_hi = hi;
    auto [h1, h2] = eval_h1_h2(out.r1, out.r2);
    out.residual_b = std::fabs(h1 - m_b);
    out.residual_s = std::fabs(h2 - m_s);
    const double worst = std::max(out.residual_b, out.residual_s);
    if (worst > kResidualTol)
        throw convergence_error("asymmetric threshold solve did not reach tolerance",
                                out.r2, worst);
    return out;
}

double solve_iota(double m_s) {
    if (!(m_s > 0.0 && m_s < 1.0))
        throw std::domain_error("solve_iota requires m_s in (0,1)");
    // iota*ln(iota) + 1 - iota is strictly decreasing from 1 to 0 on (0,1)
    auto f = [&](double iota) {
        const double xlogx = iota > 0.0 ? iota * std::log(iota) : 0.0;
        return xlogx + 1.0 - iota - m_s;
    };
    RootOptions opt;
    opt.f_tol = 1e-13;
    auto res = find_root_bracketed(f, 0.0, 1.0, opt);
    if (!res.converged)
        throw convergence_error("solve_iota did not converge", res.x, std::fabs(res.fx));
    return res.x;
}

}  // namespace maxmin
