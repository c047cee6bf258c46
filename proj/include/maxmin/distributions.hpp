#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "maxmin/quadrature.hpp"
#include "maxmin/rng.hpp"
#include "maxmin/types.hpp"

namespace maxmin {

enum class MixedKind { SymmetricTriangular, AsymmetricTriangular, EdgeBuyerOne };

struct Atom {
    ValueProfile point;
    double mass = 0.0;
};

// A joint value measure made of a 2-D interior density, 1-D densities on the
// edges {v_B = 1} and {v_S = 0}, and point atoms.  The triangular families
// are parametrized by (r1, r2); the symmetric family is the seam case
// r2 = 1 - r1.  The edge family (buyer value pinned at 1) is 1-D over v_S.
class MixedDistribution {
public:
    static MixedDistribution symmetric_triangular(double r);
    static MixedDistribution asymmetric_triangular(double r1, double r2);
    static MixedDistribution edge_buyer_one(double iota);

    MixedKind kind() const { return kind_; }
    double r1() const { return r1_; }
    double r2() const { return r2_; }
    double iota() const { return iota_; }

    double interior_density(double v_b, double v_s) const;
    double edge_b1_density(double v_s) const;  // density in v_S on {v_B = 1}
    double edge_s0_density(double v_b) const;  // density in v_B on {v_S = 0}
    std::span<const Atom> atoms() const { return atoms_; }
    bool in_support(double v_b, double v_s) const;  // closure of the support

    // closed-form marginals and conditionals
    double seller_atom_mass() const;                 // Pr_S(0)
    double seller_marginal_density(double v_s) const;
    double buyer_atom_mass() const;                  // Pr_B(1)
    double buyer_marginal_density(double v_b) const;
    double seller_cdf_given_buyer(double v_s, double v_b) const;  // Pi_S(v_S|v_B)
    double buyer_cdf_given_seller(double v_b, double v_s) const;  // Pi_B(v_B|v_S)

    // W and B are the generalized-Pareto scale factors: the conditional tail
    // masses are W(v_S)^2/(v_B-v_S)^2 and B(v_B)^2/(v_B-v_S)^2.
    double w_scale(double v_s) const { return r1_ + kappa_ * v_s / r2_; }
    double b_scale(double v_b) const { return (kappa_ * v_b + r1_ * r2_) / (1.0 - r1_); }

    // E[f(v_B, v_S)] via adaptive quadrature over interior strips of constant
    // v_B - v_S, the two edges, and the atoms.  err_out (optional) receives
    // the accumulated quadrature error estimate.
    template <class F>
    double expect(F&& f, double tol = 1e-12, double* err_out = nullptr) const;

private:
    MixedKind kind_ = MixedKind::SymmetricTriangular;
    double r1_ = 0.0;
    double r2_ = 0.0;
    double kappa_ = 0.0;  // (1 - r1) - r2; exactly 0 for the symmetric family
    double alpha_ = 0.0;  // atom mass at (1,0) = r1*(1-r2)
    double iota_ = 0.0;
    std::vector<Atom> atoms_;

    // v_S-range of the interior at fixed u = v_B - v_S
    std::pair<double, double> interior_strip(double u) const;
    double interior_u_min() const;
    double interior_u_mid() const;
};

struct DiscreteDistribution {
    std::vector<ValueProfile> points;
    std::vector<double> masses;
};

MixedDistribution build_symmetric_triangular(double r);
MixedDistribution build_asymmetric_triangular(double r1, double r2);
DiscreteDistribution build_det_worst_case(double m_b, double m_s);
MixedDistribution build_edge_worst_case(double iota);

double total_mass(const MixedDistribution& dist);
double total_mass(const DiscreteDistribution& dist);

// (E[v_B], E[v_S]); quadrature error estimate bounded by 1e-8 or
// numeric_error is thrown with the partial result.
std::pair<double, double> moments(const MixedDistribution& dist);
std::pair<double, double> moments(const DiscreteDistribution& dist);

// E[(v_B - v_S)^+]
double first_best_gain(const MixedDistribution& dist);
double first_best_gain(const DiscreteDistribution& dist);

// i.i.d. draws by inverse transform: seller marginal first (atom vs
// continuous), then the buyer conditional.  Bit-reproducible for a fixed
// seed; each triangular draw consumes exactly two uniforms.
std::vector<ValueProfile> sample(const MixedDistribution& dist, std::size_t n,
                                 std::uint64_t rng_seed);
std::vector<ValueProfile> sample(const DiscreteDistribution& dist, std::size_t n,
                                 std::uint64_t rng_seed);

// Draws from the buyer conditional at a fixed interior seller value.
std::vector<double> sample_buyer_conditional(const MixedDistribution& dist, double v_s,
                                             std::size_t n, std::uint64_t rng_seed);

template <class F>
double MixedDistribution::expect(F&& f, double tol, double* err_out) const {
    double total = 0.0;
    double err_total = 0.0;
    double e = 0.0;
    for (const Atom& a : atoms_) total += a.mass * f(a.point.v_b, a.point.v_s);

    if (kind_ == MixedKind::EdgeBuyerOne) {
        total += integrate([&](double vs) { return f(1.0, vs) * edge_b1_density(vs); },
                           0.0, 1.0 - iota_, tol, &e);
        err_total += e;
        if (err_out) *err_out = err_total;
        return total;
    }

    total += integrate([&](double vs) { return f(1.0, vs) * edge_b1_density(vs); },
                       0.0, r2_, tol, &e);
    err_total += e;
    total += integrate([&](double vb) { return f(vb, 0.0) * edge_s0_density(vb); },
                       r1_, 1.0, tol, &e);
    err_total += e;

    auto line = [&](double u) {
        auto [lo, hi] = interior_strip(u);
        if (!(hi > lo)) return 0.0;
        const double inner =
            integrate([&](double vs) { return f(vs + u, vs); }, lo, hi, tol);
        return 2.0 * alpha_ / (u * u * u) * inner;
    };
    const double u0 = interior_u_min();
    const double u1 = interior_u_mid();
    if (u1 > u0) {
        total += integrate(line, u0, u1, tol, &e);
        err_total += e;
    }
    total += integrate(line, u1, 1.0, tol, &e);
    err_total += e;
    if (err_out) *err_out = err_total;
    return total;
}

// expectation of f under a discrete distribution
template <class F>
double expect(const DiscreteDistribution& dist, F&& f) {
    double total = 0.0;
    for (std::size_t i = 0; i < dist.points.size(); ++i)
        total += dist.masses[i] * f(dist.points[i].v_b, dist.points[i].v_s);
    return total;
}

}  // namespace maxmin
