#include "majorate/rate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "majorate/errors.hpp"

namespace majorate {

namespace {

double infinity() { return std::numeric_limits<double>::infinity(); }

// alpha = tan(pi t / 2) maps t in [0, 1] onto [0, +inf].
ExtendedAlpha alpha_of(double t) {
    if (t <= 0.0) return ExtendedAlpha::finite(0.0);
    if (t >= 1.0) return ExtendedAlpha::plus_infinity();
    return ExtendedAlpha::finite(std::tan(0.5 * std::numbers::pi * t));
}

// [0, inf] grid with both endpoints; the point nearest t = 1/2 is pinned to
// alpha = 1 exactly (tan round-off would otherwise miss the removable
// singularity's spot).
std::vector<ExtendedAlpha> alpha_grid(int points) {
    std::vector<ExtendedAlpha> grid;
    grid.reserve(static_cast<std::size_t>(points));
    const int last = points - 1;
    for (int j = 0; j <= last; ++j) {
        grid.push_back(alpha_of(static_cast<double>(j) / last));
    }
    grid[static_cast<std::size_t>((last + 1) / 2)] = ExtendedAlpha::finite(1.0);
    return grid;
}

struct GssResult {
    double t = 0.0;
    double value = 0.0;
};

template <typename Fn>
GssResult golden_section(Fn&& f, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > tol) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    GssResult r;
    r.t = 0.5 * (lo + hi);
    r.value = f(r.t);
    return r;
}

bool alpha_close(const ExtendedAlpha& a, const ExtendedAlpha& b) {
    if (a.tag != b.tag) return false;
    if (!a.is_finite()) return true;
    return std::abs(a.value - b.value) <= 1e-9 * (1.0 + std::abs(a.value));
}

bool alpha_less(const ExtendedAlpha& a, const ExtendedAlpha& b) {
    auto key = [](const ExtendedAlpha& x) {
        if (x.is_minus_infinity()) return -infinity();
        if (x.is_plus_infinity()) return infinity();
        return x.value;
    };
    return key(a) < key(b);
}

}  // namespace

double entropy_ratio(const ProbDist& p, const ProbDist& q, const ExtendedAlpha& alpha) {
    if (is_trivial(q)) {
        throw Error(ErrorCode::TrivialTarget, "ratio undefined for a trivial target");
    }
    if (is_trivial(p)) return 0.0;
    return renyi(p, alpha) / renyi(q, alpha);
}

bool RateResult::is_infinite() const { return std::isinf(rate); }

RateResult rate(const ProbDist& p, const ProbDist& q, const RateOptions& options) {
    RateResult result;

    if (is_trivial(q)) {
        result.rate = infinity();
        result.status = RateStatus::ExactSpecialCase;
        return result;
    }
    if (is_trivial(p)) {
        result.rate = 0.0;
        result.status = RateStatus::ExactSpecialCase;
        for (const ExtendedAlpha& a :
             {ExtendedAlpha::finite(0.0), ExtendedAlpha::finite(1.0),
              ExtendedAlpha::plus_infinity()}) {
            result.argmin_alphas.push_back(a);
            result.samples.push_back({a, 0.0});
        }
        return result;
    }

    const int points = std::max(options.grid_points, 5);
    const int last = points - 1;
    const std::vector<ExtendedAlpha> grid = alpha_grid(points);
    std::vector<double> values(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) {
        values[j] = entropy_ratio(p, q, grid[j]);
    }

    auto ratio_at_t = [&](double t) {
        return entropy_ratio(p, q, alpha_of(t));
    };

    // Every grid-local minimum basin gets a golden-section pass; plateaus make
    // neighbouring basins refine to the same spot, which dedup handles below.
    struct Candidate {
        ExtendedAlpha alpha;
        double value;
    };
    std::vector<Candidate> candidates;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        const bool left_ok = (j == 0) || values[j] <= values[j - 1];
        const bool right_ok = (j + 1 == grid.size()) || values[j] <= values[j + 1];
        if (!(left_ok && right_ok)) continue;
        const double t_lo = (j == 0) ? 0.0 : static_cast<double>(j - 1) / last;
        const double t_hi = (j + 1 == grid.size()) ? 1.0 : static_cast<double>(j + 1) / last;
        const GssResult refined = golden_section(ratio_at_t, t_lo, t_hi, options.refine_tol);
        ExtendedAlpha alpha = alpha_of(refined.t);
        if (refined.t < 1e-9) alpha = ExtendedAlpha::finite(0.0);
        if (refined.t > 1.0 - 1e-9) alpha = ExtendedAlpha::plus_infinity();
        candidates.push_back({alpha, refined.value});
        candidates.push_back({grid[j], values[j]});
    }

    double best = infinity();
    for (const Candidate& c : candidates) best = std::min(best, c.value);
    for (double v : values) best = std::min(best, v);
    result.rate = best;
    result.status = RateStatus::GridRefined;

    // Argmin set: refined candidates and grid points within tolerance.
    std::vector<Candidate> winners;
    for (const Candidate& c : candidates) {
        if (c.value <= best + options.argmin_tol) winners.push_back(c);
    }
    for (std::size_t j = 0; j < grid.size(); ++j) {
        if (values[j] <= best + options.argmin_tol) winners.push_back({grid[j], values[j]});
    }
    std::sort(winners.begin(), winners.end(),
              [](const Candidate& a, const Candidate& b) { return alpha_less(a.alpha, b.alpha); });
    for (const Candidate& w : winners) {
        if (result.argmin_alphas.empty() || !alpha_close(result.argmin_alphas.back(), w.alpha)) {
            result.argmin_alphas.push_back(w.alpha);
        }
    }

    // Diagnostics: a decimated grid plus every refined candidate, so the
    // minimum over samples equals the reported rate.
    const std::size_t stride = std::max<std::size_t>(1, grid.size() / 64);
    std::vector<Candidate> sample_set;
    for (std::size_t j = 0; j < grid.size(); j += stride) sample_set.push_back({grid[j], values[j]});
    sample_set.push_back({grid.back(), values.back()});
    const std::size_t one_idx = static_cast<std::size_t>((last + 1) / 2);
    sample_set.push_back({grid[one_idx], values[one_idx]});
    for (const Candidate& c : candidates) sample_set.push_back(c);
    std::sort(sample_set.begin(), sample_set.end(),
              [](const Candidate& a, const Candidate& b) { return alpha_less(a.alpha, b.alpha); });
    for (const Candidate& c : sample_set) {
        if (result.samples.empty() || !alpha_close(result.samples.back().alpha, c.alpha)) {
            result.samples.push_back({c.alpha, c.value});
        }
    }
    return result;
}

ChainReport chain_check(const ProbDist& p, const ProbDist& q, int n_max, double budget) {
    if (sorted_distance(p, q) <= 1e-12) {
        throw Error(ErrorCode::DegenerateChain,
                    "chain experiment needs distinct sorted distributions");
    }
    if (is_trivial(q)) {
        throw Error(ErrorCode::TrivialTarget, "chain experiment needs a non-trivial target");
    }

    ChainReport report;

    const std::vector<ExtendedAlpha> grid = alpha_grid(257);
    report.entropy_margin_min = infinity();
    for (const ExtendedAlpha& alpha : grid) {
        const double margin = renyi(p, alpha) - renyi(q, alpha);
        report.entropy_margin_min = std::min(report.entropy_margin_min, margin);
    }
    report.strict_everywhere = report.entropy_margin_min > 0.0;

    const MinPowerResult mp = min_power(p, q, Rational{1, 1}, n_max, budget);
    report.first_n = mp.first_n;
    report.holds_by_n = mp.holds_by_n;

    report.necessary_ok = true;
    for (std::size_t i = 0; i < report.holds_by_n.size(); ++i) {
        if (!report.holds_by_n[i]) continue;
        for (const ExtendedAlpha& alpha : grid) {
            // Strictness is an interior statement: alpha in (0, inf) only.
            if (!alpha.is_finite() || alpha.value <= 0.0) continue;
            if (renyi(p, alpha) - renyi(q, alpha) <= -1e-12) {
                report.necessary_ok = false;
                throw Error(ErrorCode::Internal,
                            "majorization held at n=" + std::to_string(i + 1) +
                                " without strict Renyi dominance on (0, inf)");
            }
        }
    }

    if (report.strict_everywhere) {
        report.status = report.first_n ? ChainStatus::ForwardConfirmed
                                       : ChainStatus::Inconclusive;
    } else {
        report.status = ChainStatus::ForwardNotTriggered;
    }
    return report;
}

}  // namespace majorate
