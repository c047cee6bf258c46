#include "maxmin/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "maxmin/mechanisms.hpp"
#include "maxmin/quadrature.hpp"

namespace maxmin {

namespace {

std::vector<double> linspace01(int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = static_cast<double>(i) / (n - 1);
    return g;
}

bool is_edge_buyer_one(const Mechanism& m) {
    return std::holds_alternative<EdgeBuyerOne>(m);
}

struct OutcomeTable {
    std::vector<double> gb, gs;
    std::vector<MechanismOutcome> cells;  // gb.size() x gs.size(), row-major in gb
    const MechanismOutcome& at(std::size_t i, std::size_t j) const {
        return cells[i * gs.size() + j];
    }
};

OutcomeTable tabulate(const OutcomeFn& fn, int grid_n, bool buyer_fixed_at_one) {
    OutcomeTable t;
    t.gb = buyer_fixed_at_one ? std::vector<double>{1.0} : linspace01(grid_n);
    t.gs = linspace01(grid_n);
    t.cells.reserve(t.gb.size() * t.gs.size());
    for (double b : t.gb)
        for (double a : t.gs) t.cells.push_back(fn(b, a));
    return t;
}

}  // namespace

VerificationReport check_dsic(const OutcomeFn& fn, int grid_n, double tol,
                              bool buyer_fixed_at_one) {
    if (grid_n < 2) throw std::invalid_argument("check_dsic requires grid_n >= 2");
    const OutcomeTable t = tabulate(fn, grid_n, buyer_fixed_at_one);
    VerificationReport rep;
    rep.check_name = "dsic";
    rep.tolerance = tol;
    rep.worst_violation = -std::numeric_limits<double>::infinity();

    const std::size_t nb = t.gb.size(), ns = t.gs.size();
    for (std::size_t j = 0; j < ns; ++j) {
        for (std::size_t i = 0; i < nb; ++i) {
            const double vb = t.gb[i];
            const double truth = vb * t.at(i, j).q - t.at(i, j).t_b;
            for (std::size_t i2 = 0; i2 < nb; ++i2) {
                const double dev = vb * t.at(i2, j).q - t.at(i2, j).t_b;
                if (dev - truth > rep.worst_violation) {
                    rep.worst_violation = dev - truth;
                    rep.witness = {vb, t.gs[j]};
                    rep.witness_deviation = t.gb[i2];
                    rep.detail = "buyer deviation";
                }
            }
        }
    }
    for (std::size_t i = 0; i < nb; ++i) {
        for (std::size_t j = 0; j < ns; ++j) {
            const double vs = t.gs[j];
            const double truth = vs * (1.0 - t.at(i, j).q) + t.at(i, j).t_s;
            for (std::size_t j2 = 0; j2 < ns; ++j2) {
                const double dev = vs * (1.0 - t.at(i, j2).q) + t.at(i, j2).t_s;
                if (dev - truth > rep.worst_violation) {
                    rep.worst_violation = dev - truth;
                    rep.witness = {t.gb[i], vs};
                    rep.witness_deviation = t.gs[j2];
                    rep.detail = "seller deviation";
                }
            }
        }
    }
    rep.passed = rep.worst_violation <= tol;
    return rep;
}

VerificationReport check_dsic(const Mechanism& m, int grid_n, double tol) {
    return check_dsic([&](double b, double a) { return evaluate(m, b, a); }, grid_n, tol,
                      is_edge_buyer_one(m));
}

VerificationReport check_epir(const OutcomeFn& fn, int grid_n, double tol,
                              bool buyer_fixed_at_one) {
    if (grid_n < 2) throw std::invalid_argument("check_epir requires grid_n >= 2");
    const OutcomeTable t = tabulate(fn, grid_n, buyer_fixed_at_one);
    VerificationReport rep;
    rep.check_name = "epir";
    rep.tolerance = tol;
    rep.worst_violation = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < t.gb.size(); ++i) {
        for (std::size_t j = 0; j < t.gs.size(); ++j) {
            const MechanismOutcome& o = t.at(i, j);
            const double vb = t.gb[i], vs = t.gs[j];
            const double buyer_gap = -(vb * o.q - o.t_b);
            const double seller_gap = vs - (vs * (1.0 - o.q) + o.t_s);
            const double worst = std::max(buyer_gap, seller_gap);
            if (worst > rep.worst_violation) {
                rep.worst_violation = worst;
                rep.witness = {vb, vs};
                rep.detail = buyer_gap >= seller_gap ? "buyer participation"
                                                     : "seller participation";
            }
        }
    }
    rep.passed = rep.worst_violation <= tol;
    return rep;
}

VerificationReport check_epir(const Mechanism& m, int grid_n, double tol) {
    return check_epir([&](double b, double a) { return evaluate(m, b, a); }, grid_n, tol,
                      is_edge_buyer_one(m));
}

namespace {

// Supremum of the no-trade segment along a monotone line scan; used to split
// the envelope integral at the trading-region boundary.
template <class Positive>
double locate_boundary(Positive&& positive, double lo, double hi) {
    if (positive(lo)) return lo;
    if (!positive(hi)) return hi;
    for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (positive(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

VerificationReport reconstruct_payments(const OutcomeFn& fn, int grid_n,
                                        bool buyer_fixed_at_one) {
    if (grid_n < 2) throw std::invalid_argument("reconstruct_payments requires grid_n >= 2");
    VerificationReport rep;
    rep.check_name = "envelope";
    rep.tolerance = 1e-8;
    rep.worst_violation = 0.0;
    const std::vector<double> gb =
        buyer_fixed_at_one ? std::vector<double>{1.0} : linspace01(grid_n);
    const std::vector<double> gs = linspace01(grid_n);
    for (double vb : gb) {
        for (double vs : gs) {
            const MechanismOutcome o = fn(vb, vs);
            double tb_rec;
            if (buyer_fixed_at_one) {
                tb_rec = o.q;  // no buyer information rent when v_B is common knowledge
            } else {
                double integral = 0.0;
                if (o.q > 0.0) {
                    const double x0 = locate_boundary(
                        [&](double x) { return fn(x, vs).q > 0.0; }, 0.0, vb);
                    integral = integrate([&](double x) { return fn(x, vs).q; }, x0, vb, 1e-12);
                }
                tb_rec = vb * o.q - integral;
            }
            double upper = 1.0;
            if (!(fn(vb, 1.0).q > 0.0))
                upper = locate_boundary([&](double x) { return !(fn(vb, x).q > 0.0); }, vs, 1.0);
            const double ts_rec =
                vs * o.q + (upper > vs
                                ? integrate([&](double x) { return fn(vb, x).q; }, vs, upper, 1e-12)
                                : 0.0);
            const double gap = std::max(std::fabs(tb_rec - o.t_b), std::fabs(ts_rec - o.t_s));
            if (gap > rep.worst_violation) {
                rep.worst_violation = gap;
                rep.witness = {vb, vs};
            }
        }
    }
    rep.passed = rep.worst_violation <= rep.tolerance;
    return rep;
}

VerificationReport reconstruct_payments(const Mechanism& m, int grid_n) {
    return reconstruct_payments([&](double b, double a) { return evaluate(m, b, a); },
                                grid_n, is_edge_buyer_one(m));
}

namespace {

struct VirtualParts {
    double density;       // pi(v)
    double marginal_s;    // pi_S(v_S)
    double partial_b;     // Pi_B(v_B, v_S) = int_0^{v_B} pi(x, v_S) dx
    double partial_s;     // Pi_S(v_S, v_B) = edge at v_S=0 + int_0^{v_S} pi(v_B, x) dx
};

VirtualParts virtual_parts(const MixedDistribution& d, ValueProfile v) {
    if (d.kind() == MixedKind::EdgeBuyerOne)
        throw std::domain_error("virtual values are defined for the triangular families");
    if (v.v_b >= 1.0 || v.v_s <= 0.0)
        throw std::domain_error("virtual value needs an interior profile (v_B != 1, v_S != 0)");
    VirtualParts p{};
    p.density = d.interior_density(v.v_b, v.v_s);
    p.marginal_s = d.seller_marginal_density(v.v_s);

    // buyer partial along the line v_S = const; interior support starts at
    // v_S + W(v_S)
    p.partial_b = 0.0;
    if (v.v_s < d.r2()) {
        const double x_lo = v.v_s + d.w_scale(v.v_s);
        if (v.v_b > x_lo)
            p.partial_b = integrate(
                [&](double x) { return d.interior_density(x, v.v_s); }, x_lo, v.v_b, 1e-12);
    }

    // seller partial along the line v_B = const, including the 1-D edge term
    // at v_S = 0 (the paper's partial integral runs over the closed origin)
    p.partial_s = d.edge_s0_density(v.v_b);
    if (v.v_b > d.r1()) {
        const double x_hi = std::min(v.v_s, d.r2() * (v.v_b - d.r1()) / (1.0 - d.r1()));
        if (x_hi > 0.0)
            p.partial_s += integrate(
                [&](double x) { return d.interior_density(v.v_b, x); }, 0.0, x_hi, 1e-12);
    }
    return p;
}

}  // namespace

double weighted_virtual_value(const MixedDistribution& dist, ValueProfile v) {
    const VirtualParts p = virtual_parts(dist, v);
    return p.density * (v.v_b - v.v_s) - (p.marginal_s - p.partial_b) - p.partial_s;
}

std::pair<double, double> per_side_virtual_values(const MixedDistribution& dist,
                                                  ValueProfile v) {
    const VirtualParts p = virtual_parts(dist, v);
    const double phi_b = p.density * v.v_b - (p.marginal_s - p.partial_b);
    const double phi_s = p.density * v.v_s + p.partial_s;
    return {phi_b, phi_s};
}

VerificationReport check_zwvv(const MixedDistribution& dist, int n_points, double tol) {
    if (dist.kind() == MixedKind::EdgeBuyerOne)
        throw std::domain_error("zwvv check applies to the triangular families");
    VerificationReport rep;
    rep.check_name = "zwvv";
    rep.tolerance = tol;
    rep.worst_violation = 0.0;

    auto note = [&](double violation, ValueProfile v, const char* what) {
        if (violation > rep.worst_violation) {
            rep.worst_violation = violation;
            rep.witness = v;
            rep.detail = what;
        }
    };

    // interior support sweep along strips of constant v_B - v_S
    const int m = std::max(2, static_cast<int>(std::ceil(std::sqrt(n_points))));
    const double u_min = std::min(dist.r1(), 1.0 - dist.r2());
    for (int i = 0; i < m; ++i) {
        const double u = u_min + (1.0 - u_min) * (i + 0.5) / m;
        // strip bounds: interior requires support and v_B < 1, v_S > 0
        for (int j = 0; j < m; ++j) {
            const double vs_hi = 1.0 - u;
            const double vs = vs_hi * (j + 0.5) / m;
            const double vb = vs + u;
            if (!(vs > 0.0 && vb < 1.0)) continue;
            if (!dist.in_support(vb, vs)) continue;
            if (dist.interior_density(vb, vs) <= 0.0) continue;
            const ValueProfile v{vb, vs};
            note(std::fabs(weighted_virtual_value(dist, v)), v, "interior |Phi|");
            auto [phi_b, phi_s] = per_side_virtual_values(dist, v);
            note(std::fabs(phi_b - phi_s), v, "interior |Phi_B - Phi_S|");
        }
    }

    // exterior lattice: Phi_B <= 0 <= Phi_S and Phi <= 0
    const int ext_n = 41;
    for (int i = 1; i < ext_n; ++i) {
        for (int j = 1; j < ext_n; ++j) {
            const double vb = static_cast<double>(i) / ext_n;
            const double vs = static_cast<double>(j) / ext_n;
            if (dist.in_support(vb, vs)) continue;
            const ValueProfile v{vb, vs};
            auto [phi_b, phi_s] = per_side_virtual_values(dist, v);
            note(phi_b, v, "exterior Phi_B > 0");
            note(-phi_s, v, "exterior Phi_S < 0");
            note(phi_b - phi_s, v, "exterior Phi > 0");
        }
    }
    rep.passed = rep.worst_violation <= tol;
    return rep;
}

DualCertificate dual_certificate(const Mechanism& m) {
    if (const auto* rda = std::get_if<Rda>(&m)) {
        const double r = rda->r;
        return {r / (1.0 - r), -r / (1.0 - r), -r * r / (1.0 - r)};
    }
    if (const auto* lg = std::get_if<Logarithmic>(&m)) {
        const double d = 1.0 - lg->r1 - lg->r2;
        const double big_l = std::log((1.0 - lg->r2) / lg->r1);
        return {d / ((1.0 - lg->r1) * big_l), -d / (lg->r2 * big_l),
                -lg->r1 * d / ((1.0 - lg->r1) * big_l)};
    }
    const LinearDet* lin = std::get_if<LinearDet>(&m);
    const DoublePostedPrice* dpp = std::get_if<DoublePostedPrice>(&m);
    if (lin || dpp) {
        const double m_b = lin ? lin->m_b : dpp->m_b;
        const double m_s = lin ? lin->m_s : dpp->m_s;
        const double sb = std::sqrt(1.0 - m_b);
        const double ss = std::sqrt(m_s);
        const double g = 1.0 - sb - ss;
        if (!(g > 0.0))
            throw regime_error("deterministic certificate requires sqrt(m_s)+sqrt(1-m_b) < 1");
        return {g / sb, -g / ss, -g * (1.0 - sb) / sb};
    }
    throw std::invalid_argument("no dual certificate for this mechanism family");
}

VerificationReport check_duality(const OutcomeFn& fn, const DualCertificate& cert,
                                 const std::function<bool(double, double)>& support_test,
                                 std::span<const ValueProfile> support_augmentation,
                                 int grid_n, double tol) {
    VerificationReport rep;
    rep.check_name = "duality";
    rep.tolerance = tol;
    rep.worst_violation = -std::numeric_limits<double>::infinity();

    auto linear_form = [&](double vb, double vs) {
        return cert.lambda_b * vb + cert.lambda_s * vs + cert.mu;
    };
    auto visit_point = [&](double vb, double vs) {
        const double t = fn(vb, vs).t;
        const double form = linear_form(vb, vs);
        const double feasibility = form - t;  // must be <= 0
        double violation = feasibility;
        const char* what = "dual feasibility";
        if (support_test(vb, vs)) {
            const double eq = std::fabs(form - t);  // complementary slackness
            if (eq > violation) {
                violation = eq;
                what = "support equality";
            }
        }
        if (violation > rep.worst_violation) {
            rep.worst_violation = violation;
            rep.witness = {vb, vs};
            rep.detail = what;
        }
    };

    for (const ValueProfile& v : uniform_lattice(grid_n)) visit_point(v.v_b, v.v_s);
    for (const ValueProfile& v : support_augmentation) visit_point(v.v_b, v.v_s);
    rep.passed = rep.worst_violation <= tol;
    return rep;
}

VerificationReport check_duality(const Mechanism& m, const DualCertificate& cert,
                                 const MixedDistribution& dist, int grid_n, double tol) {
    const auto aug = support_boundary_points(dist, grid_n);
    return check_duality([&](double b, double a) { return evaluate(m, b, a); }, cert,
                         [&](double b, double a) { return dist.in_support(b, a); },
                         aug, grid_n, tol);
}

VerificationReport check_duality(const Mechanism& m, const DualCertificate& cert,
                                 const DiscreteDistribution& dist, int grid_n, double tol) {
    return check_duality(
        [&](double b, double a) { return evaluate(m, b, a); }, cert,
        [&](double b, double a) {
            for (const ValueProfile& p : dist.points)
                if (p.v_b == b && p.v_s == a) return true;
            return false;
        },
        dist.points, grid_n, tol);
}

std::pair<DiscreteDistribution, double> lp_adversary(const Mechanism& m,
                                                     const Expectations& exp,
                                                     std::span<const ValueProfile> grid) {
    validate(exp);
    if (grid.size() < 3)
        throw std::invalid_argument("lp_adversary needs at least 3 grid points");
    const std::size_t n = grid.size();
    const double mb = exp.m_b, ms = exp.m_s;

    // profit values, then sort ascending so the outer loop can stop once its
    // point alone already matches the incumbent (the objective of a feasible
    // triple is at least the smallest t in it)
    struct Node {
        double b, s, t;
    };
    std::vector<Node> nodes(n);
    for (std::size_t i = 0; i < n; ++i)
        nodes[i] = {grid[i].v_b, grid[i].v_s, evaluate(m, grid[i].v_b, grid[i].v_s).t};
    std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
        if (a.t != b.t) return a.t < b.t;
        if (a.b != b.b) return a.b < b.b;
        return a.s < b.s;
    });
    nodes.erase(std::unique(nodes.begin(), nodes.end(),
                            [](const Node& a, const Node& b) {
                                return a.b == b.b && a.s == b.s;
                            }),
                nodes.end());
    const std::size_t nn = nodes.size();
    std::vector<double> bx(nn), sy(nn), tv(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        bx[i] = nodes[i].b;
        sy[i] = nodes[i].s;
        tv[i] = nodes[i].t;
    }

    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::size_t, double>> best_support;

    auto offer = [&](double value, std::vector<std::pair<std::size_t, double>> support) {
        if (value < best) {
            best = value;
            best_support = std::move(support);
        }
    };

    // singletons
    for (std::size_t i = 0; i < nn; ++i)
        if (std::fabs(bx[i] - mb) <= 1e-12 && std::fabs(sy[i] - ms) <= 1e-12)
            offer(tv[i], {{i, 1.0}});

    // pairs: mean point on the segment
    for (std::size_t i = 0; i + 1 < nn; ++i) {
        const double mx = mb - bx[i], my = ms - sy[i];
        for (std::size_t j = i + 1; j < nn; ++j) {
            const double ux = bx[j] - bx[i], uy = sy[j] - sy[i];
            const double uu = ux * ux + uy * uy;
            if (uu < 1e-24) continue;
            const double w = (mx * ux + my * uy) / uu;
            if (!(w >= -1e-12 && w <= 1.0 + 1e-12)) continue;
            if (std::fabs(mx - w * ux) > 1e-12 || std::fabs(my - w * uy) > 1e-12) continue;
            const double wc = std::clamp(w, 0.0, 1.0);
            offer((1.0 - wc) * tv[i] + wc * tv[j], {{i, 1.0 - wc}, {j, wc}});
        }
    }

    // triples: barycentric weights of (mb, ms) in each triangle, sign-tested
    // without divisions; value computed only for admissible triangles
    std::vector<double> vx(nn), vy(nn), cmv(nn);
    for (std::size_t i = 0; i + 2 < nn; ++i) {
        if (tv[i] >= best) break;
        const double bi = bx[i], si = sy[i];
        const double mx = mb - bi, my = ms - si;
        for (std::size_t k = i + 1; k < nn; ++k) {
            vx[k] = bx[k] - bi;
            vy[k] = sy[k] - si;
            cmv[k] = mx * vy[k] - my * vx[k];
        }
        for (std::size_t j = i + 1; j + 1 < nn; ++j) {
            const double ux = vx[j], uy = vy[j];
            const double cum = ux * my - uy * mx;
            for (std::size_t k = j + 1; k < nn; ++k) {
                const double det = ux * vy[k] - uy * vx[k];
                const double ad = std::fabs(det);
                if (ad <= 1e-14) continue;
                const double told = 1e-12 * ad;
                const double sgn = det > 0.0 ? 1.0 : -1.0;
                const double wj_n = sgn * cmv[k];
                const double wk_n = sgn * cum;
                if (wj_n < -told || wk_n < -told) continue;
                const double wi_n = ad - wj_n - wk_n;
                if (wi_n < -told) continue;
                double wi = std::max(wi_n, 0.0) / ad;
                double wj = std::max(wj_n, 0.0) / ad;
                double wk = std::max(wk_n, 0.0) / ad;
                const double norm = wi + wj + wk;
                wi /= norm;
                wj /= norm;
                wk /= norm;
                const double value = wi * tv[i] + wj * tv[j] + wk * tv[k];
                if (value < best) {
                    // confirm the moment residuals before accepting
                    const double rb = wi * bx[i] + wj * bx[j] + wk * bx[k] - mb;
                    const double rs = wi * sy[i] + wj * sy[j] + wk * sy[k] - ms;
                    if (std::fabs(rb) <= 1e-9 && std::fabs(rs) <= 1e-9)
                        offer(value, {{i, wi}, {j, wj}, {k, wk}});
                }
            }
        }
    }

    if (!std::isfinite(best))
        throw infeasible_error("moment constraints infeasible on the supplied grid");

    DiscreteDistribution out;
    double kept = 0.0;
    for (auto [idx, w] : best_support) {
        if (w <= 1e-12) continue;  // drop numerically-degenerate support
        out.points.push_back({bx[idx], sy[idx]});
        out.masses.push_back(w);
        kept += w;
    }
    for (double& w : out.masses) w /= kept;
    return {out, best};
}

double analytic_guarantee(const Mechanism& m) {
    if (const auto* rda = std::get_if<Rda>(&m)) return rda->r * rda->r;
    if (const auto* lg = std::get_if<Logarithmic>(&m)) return lg->r1 * (1.0 - lg->r2);
    const LinearDet* lin = std::get_if<LinearDet>(&m);
    const DoublePostedPrice* dpp = std::get_if<DoublePostedPrice>(&m);
    if (lin || dpp) {
        const double m_b = lin ? lin->m_b : dpp->m_b;
        const double m_s = lin ? lin->m_s : dpp->m_s;
        const double g = 1.0 - std::sqrt(m_s) - std::sqrt(1.0 - m_b);
        return g * g;
    }
    if (std::holds_alternative<NeverTrade>(m)) return 0.0;
    throw std::invalid_argument("no analytic guarantee for this mechanism family");
}

std::vector<ValueProfile> uniform_lattice(int n) {
    if (n < 2) throw std::invalid_argument("lattice needs n >= 2");
    std::vector<ValueProfile> pts;
    pts.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            pts.push_back({static_cast<double>(i) / (n - 1), static_cast<double>(j) / (n - 1)});
    return pts;
}

std::vector<ValueProfile> support_boundary_points(const MixedDistribution& dist, int n) {
    std::vector<ValueProfile> pts;
    for (const Atom& a : dist.atoms()) pts.push_back(a.point);
    if (dist.kind() == MixedKind::EdgeBuyerOne) {
        for (int i = 0; i <= n; ++i)
            pts.push_back({1.0, (1.0 - dist.iota()) * i / n});
        return pts;
    }
    // trade boundary from (r1, 0) to (1, r2), plus the edge endpoints
    const double r1 = dist.r1(), r2 = dist.r2();
    for (int i = 0; i <= n; ++i) {
        const double s = static_cast<double>(i) / n;
        pts.push_back({r1 + s * (1.0 - r1), s * r2});
    }
    pts.push_back({1.0, r2});
    pts.push_back({r1, 0.0});
    return pts;
}

}  // namespace maxmin
