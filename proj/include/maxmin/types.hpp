#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

namespace maxmin {

// Tolerance for the symmetric-regime test |m_b + m_s - 1| <= kSymmetricEps.
inline constexpr double kSymmetricEps = 1e-12;

// Thrown when an operation is called outside its regime (e.g. asking for the
// symmetric commission fee with asymmetric expectations).
struct regime_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown by iterative solvers that fail to reach tolerance; carries the best
// iterate found so the caller can inspect it.
struct convergence_error : std::runtime_error {
    convergence_error(const std::string& what, double best_x, double best_residual)
        : std::runtime_error(what), best(best_x), residual(best_residual) {}
    double best;
    double residual;
};

// Thrown when a quadrature error estimate exceeds its bound; carries the
// partial result.
struct numeric_error : std::runtime_error {
    numeric_error(const std::string& what, double partial_value)
        : std::runtime_error(what), partial(partial_value) {}
    double partial;
};

// Thrown by the LP adversary when the moment constraints cannot be met on the
// supplied grid.
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValueProfile {
    double v_b = 0.0;
    double v_s = 0.0;
};

inline bool operator==(const ValueProfile& a, const ValueProfile& b) {
    return a.v_b == b.v_b && a.v_s == b.v_s;
}

// The intermediary's knowledge: expected buyer and seller values, both in [0,1].
struct Expectations {
    double m_b = 0.0;
    double m_s = 0.0;
};

enum class Regime {
    Trivial,       // m_b <= m_s: never trading is maxmin
    Symmetric,     // m_b + m_s = 1 (within kSymmetricEps), m_s < m_b
    Asymmetric,    // 0 < m_s < m_b < 1, m_b + m_s != 1
    EdgeBuyerOne,  // m_b = 1, 0 < m_s < 1
};

inline void validate(const Expectations& e) {
    if (!(e.m_b >= 0.0 && e.m_b <= 1.0 && e.m_s >= 0.0 && e.m_s <= 1.0))
        throw std::invalid_argument("expectations must lie in [0,1]^2");
}

// Total and exclusive over [0,1]^2; precedence Trivial, Symmetric,
// EdgeBuyerOne, Asymmetric.
inline Regime classify(const Expectations& e) {
    validate(e);
    if (e.m_b <= e.m_s) return Regime::Trivial;
    if (std::fabs(e.m_b + e.m_s - 1.0) <= kSymmetricEps) return Regime::Symmetric;
    if (e.m_b == 1.0) return Regime::EdgeBuyerOne;
    return Regime::Asymmetric;
}

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Trivial: return "trivial";
        case Regime::Symmetric: return "symmetric";
        case Regime::Asymmetric: return "asymmetric";
        case Regime::EdgeBuyerOne: return "edge-buyer-one";
    }
    return "?";
}

// Ex-post outcome of a trading mechanism at one bid/ask pair.  t is the
// intermediary profit and always equals t_b - t_s.
struct MechanismOutcome {
    double q = 0.0;
    double t_b = 0.0;
    double t_s = 0.0;
    double t = 0.0;
};

inline MechanismOutcome make_outcome(double q, double t_b, double t_s) {
    return MechanismOutcome{q, t_b, t_s, t_b - t_s};
}

// Mechanism tags.  Parameter ranges are checked on evaluation.
struct Rda {
    double r;  // fixed commission fee, 0 < r < 1
};
struct Logarithmic {
    double r1;
    double r2;  // thresholds, each in (0,1), r1 + r2 != 1
};
struct LinearDet {
    double m_b;
    double m_s;
};
struct DoublePostedPrice {
    double m_b;
    double m_s;
};
struct EfficientOnSupport {
    double r;  // trades iff bid - ask > r
};
struct EdgeBuyerOne {
    double iota;  // in (0,1); buyer value fixed at 1
};
struct NeverTrade {};

using Mechanism = std::variant<Rda, Logarithmic, LinearDet, DoublePostedPrice,
                               EfficientOnSupport, EdgeBuyerOne, NeverTrade>;

std::string mechanism_name(const Mechanism& m);

// Validates the tag's parameter invariants; throws std::invalid_argument.
void validate(const Mechanism& m);

// Evaluates any mechanism at a bid/ask pair in [0,1]^2.  Pure: identical
// inputs give bit-identical outputs.
MechanismOutcome evaluate(const Mechanism& m, double bid, double ask);

}  // namespace maxmin
