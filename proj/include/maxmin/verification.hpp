#pragma once

#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxmin/distributions.hpp"
#include "maxmin/types.hpp"

namespace maxmin {

// Feasible point of the dual program: lambda_b*v_B + lambda_s*v_S + mu <= t(v)
// everywhere, with equality on the worst-case support.
struct DualCertificate {
    double lambda_b = 0.0;
    double lambda_s = 0.0;
    double mu = 0.0;
};

inline double dual_objective(const DualCertificate& c, const Expectations& e) {
    return c.lambda_b * e.m_b + c.lambda_s * e.m_s + c.mu;
}

struct VerificationReport {
    std::string check_name;
    bool passed = false;
    double worst_violation = 0.0;
    ValueProfile witness;
    double witness_deviation = std::numeric_limits<double>::quiet_NaN();
    double tolerance = 0.0;
    std::string detail;
};

// Checks run against an outcome function so that tests can feed deliberately
// corrupted mechanisms; the Mechanism overloads wrap evaluate().
using OutcomeFn = std::function<MechanismOutcome(double, double)>;

VerificationReport check_dsic(const OutcomeFn& fn, int grid_n, double tol,
                              bool buyer_fixed_at_one = false);
VerificationReport check_dsic(const Mechanism& m, int grid_n, double tol);

VerificationReport check_epir(const OutcomeFn& fn, int grid_n, double tol,
                              bool buyer_fixed_at_one = false);
VerificationReport check_epir(const Mechanism& m, int grid_n, double tol);

// Rebuilds t_B and t_S from the envelope integrals of the trading rule alone
// and reports the worst gap against the closed-form payments.
VerificationReport reconstruct_payments(const OutcomeFn& fn, int grid_n,
                                        bool buyer_fixed_at_one = false);
VerificationReport reconstruct_payments(const Mechanism& m, int grid_n);

// Weighted virtual value at an interior profile (v_B != 1, v_S != 0); the
// partial distribution integrals are done by line quadrature.
double weighted_virtual_value(const MixedDistribution& dist, ValueProfile v);

// (Phi_B, Phi_S); Phi = Phi_B - Phi_S.
std::pair<double, double> per_side_virtual_values(const MixedDistribution& dist,
                                                  ValueProfile v);

// Sweeps ~n_points interior support points (|Phi| <= tol, |Phi_B - Phi_S| <= tol)
// and an exterior lattice (Phi_B <= tol, Phi_S >= -tol, Phi <= tol).
VerificationReport check_zwvv(const MixedDistribution& dist, int n_points, double tol);

// Closed-form certificates for RDA, Logarithmic, LinearDet, DoublePostedPrice.
DualCertificate dual_certificate(const Mechanism& m);

// Feasibility of the certificate on the full lattice plus equality on support
// points (lattice and boundary augmentation).
VerificationReport check_duality(const OutcomeFn& fn, const DualCertificate& cert,
                                 const std::function<bool(double, double)>& support_test,
                                 std::span<const ValueProfile> support_augmentation,
                                 int grid_n, double tol);
VerificationReport check_duality(const Mechanism& m, const DualCertificate& cert,
                                 const MixedDistribution& dist, int grid_n, double tol);
VerificationReport check_duality(const Mechanism& m, const DualCertificate& cert,
                                 const DiscreteDistribution& dist, int grid_n, double tol);

// Nature's finite LP: minimize sum t(v_i) p_i over p >= 0 with unit mass and
// the two mean constraints.  Exhaustive basic-solution enumeration over all
// supports of size <= 3 (an optimal basic solution has at most 3 points).
// Returns the minimizing distribution and value.
std::pair<DiscreteDistribution, double> lp_adversary(const Mechanism& m,
                                                     const Expectations& exp,
                                                     std::span<const ValueProfile> grid);

// r^2, r1*(1-r2), (1-sqrt(m_s)-sqrt(1-m_b))^2, or 0 for never-trade.
double analytic_guarantee(const Mechanism& m);

// n x n lattice over [0,1]^2 including the boundary.
std::vector<ValueProfile> uniform_lattice(int n);

// Points where the dual constraint binds: the trade-boundary segment, the
// edge segments' endpoints and the atoms.
std::vector<ValueProfile> support_boundary_points(const MixedDistribution& dist, int n);

}  // namespace maxmin
