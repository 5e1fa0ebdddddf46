#include "majorate/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "majorate/errors.hpp"

namespace majorate {

namespace {

constexpr double kEndpointSnap = 1e-12;  // V within this of an endpoint is the endpoint
constexpr double kSolveTolV = 1e-12;     // residual |F'(alpha) - V|

void require_solvable(const ProbDist& p) {
    if (is_trivial(p)) {
        throw Error(ErrorCode::TrivialDistribution,
                    "exponents undefined for a single-atom distribution");
    }
    if (is_uniform(p)) {
        throw Error(ErrorCode::UniformDistribution,
                    "exponents require a non-uniform distribution (F is strictly convex)");
    }
}

// Exponents at a solved alpha, with the regime branches decided on V (the
// closed regime boundaries must hit their plateau values exactly).
ExponentPoint make_point(const ProbDist& p, const ExtendedAlpha& alpha, double V) {
    const double log_d = std::log2(static_cast<double>(p.d()));

    ExponentPoint pt;
    pt.alpha_V = alpha;
    pt.V = V;

    if (alpha.is_plus_infinity()) {
        const double log_ties = std::log2(static_cast<double>(argmax_count(p)));
        pt.M = V + log_ties;
        pt.M_star = 0.0;
        pt.S = log_ties;
        pt.S_star = log_d;
        return pt;
    }
    if (alpha.is_minus_infinity()) {
        const double log_ties = std::log2(static_cast<double>(argmin_count(p)));
        pt.M = 0.0;
        pt.M_star = V + log_ties;
        pt.S = log_d;
        pt.S_star = log_ties;
        return pt;
    }

    const double a = alpha.value;
    const double f = F(p, a);
    const double fp = F_prime(p, a);

    // Legendre pieces: mass_piece = -D(P_a || P), size_piece = H(P_a).
    const double mass_piece = std::min(f + (1.0 - a) * fp, 0.0);
    const double size_piece = std::clamp(f - a * fp, 0.0, log_d);

    const double v_shannon = -shannon_entropy(p);  // F'(1)
    const double v_mean = mean_log_weight(p);      // F'(0)

    pt.M = (V <= v_shannon) ? 0.0 : mass_piece;
    pt.M_star = (V >= v_shannon) ? 0.0 : mass_piece;
    pt.S = (V <= v_mean) ? log_d : size_piece;
    pt.S_star = (V >= v_mean) ? log_d : size_piece;
    return pt;
}

}  // namespace

ExtendedAlpha solve_alpha(const ProbDist& p, double V) {
    require_solvable(p);
    const double v_lo = p.log_weights().back();
    const double v_hi = p.log_weights().front();
    if (V < v_lo - kEndpointSnap || V > v_hi + kEndpointSnap) {
        throw Error(ErrorCode::ValueOutOfRange,
                    "V must lie in [log2 p(d), log2 p(1)]");
    }
    if (V <= v_lo + kEndpointSnap) return ExtendedAlpha::minus_infinity();
    if (V >= v_hi - kEndpointSnap) return ExtendedAlpha::plus_infinity();

    // Expanding bracket: F' is strictly increasing onto (v_lo, v_hi).
    double lo = -1.0;
    double hi = 1.0;
    while (F_prime(p, lo) > V) {
        lo *= 2.0;
        if (lo < -0x1p40) break;
    }
    while (F_prime(p, hi) < V) {
        hi *= 2.0;
        if (hi > 0x1p40) break;
    }

    double mid = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        mid = 0.5 * (lo + hi);
        const double fp = F_prime(p, mid);
        if (std::abs(fp - V) <= kSolveTolV) break;
        if (fp < V) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-14 * std::max(1.0, std::abs(mid))) break;
    }

    // Newton polish on the residual in V.
    double alpha = mid;
    for (int iter = 0; iter < 4; ++iter) {
        const double resid = F_prime(p, alpha) - V;
        if (std::abs(resid) <= kSolveTolV) break;
        const double curv = F_second(p, alpha);
        if (curv <= 0.0) break;
        const double next = alpha - resid / curv;
        if (!(next > lo && next < hi)) break;
        alpha = next;
    }
    return ExtendedAlpha::finite(alpha);
}

ExponentPoint exponents_at(const ProbDist& p, double V) {
    const ExtendedAlpha alpha = solve_alpha(p, V);
    double v = V;
    if (alpha.is_minus_infinity()) v = p.log_weights().back();
    if (alpha.is_plus_infinity()) v = p.log_weights().front();
    return make_point(p, alpha, v);
}

ExponentPoint exponents_at_alpha(const ProbDist& p, const ExtendedAlpha& alpha) {
    require_solvable(p);
    double v;
    if (alpha.is_plus_infinity()) {
        v = p.log_weights().front();
    } else if (alpha.is_minus_infinity()) {
        v = p.log_weights().back();
    } else {
        v = F_prime(p, alpha.value);
    }
    return make_point(p, alpha, v);
}

std::vector<ExponentPoint> exponent_curve(const ProbDist& p, int resolution) {
    require_solvable(p);
    if (resolution < 1) {
        throw Error(ErrorCode::ValueOutOfRange, "resolution must be positive");
    }

    std::vector<ExtendedAlpha> grid;
    grid.push_back(ExtendedAlpha::minus_infinity());
    const int interior = 4 * resolution;
    for (int j = 1; j <= interior; ++j) {
        const double theta =
            (static_cast<double>(j) / (interior + 1) - 0.5) * std::numbers::pi;
        grid.push_back(ExtendedAlpha::finite(std::tan(theta)));
    }
    grid.push_back(ExtendedAlpha::finite(0.0));  // regime boundary of S/S*
    grid.push_back(ExtendedAlpha::finite(1.0));  // regime boundary of M/M*
    grid.push_back(ExtendedAlpha::plus_infinity());

    std::vector<ExponentPoint> curve;
    curve.reserve(grid.size());
    for (const ExtendedAlpha& alpha : grid) {
        curve.push_back(exponents_at_alpha(p, alpha));
    }
    std::sort(curve.begin(), curve.end(),
              [](const ExponentPoint& a, const ExponentPoint& b) { return a.V < b.V; });
    // Drop exact duplicates from the forced grid points.
    curve.erase(std::unique(curve.begin(), curve.end(),
                            [](const ExponentPoint& a, const ExponentPoint& b) {
                                return a.V == b.V;
                            }),
                curve.end());
    return curve;
}

}  // namespace majorate
