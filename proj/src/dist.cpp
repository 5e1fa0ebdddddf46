#include "majorate/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace majorate {

namespace {

// Neumaier-compensated sum.
double stable_sum(std::span<const double> values) {
    double sum = 0.0;
    double comp = 0.0;
    for (double v : values) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    return sum + comp;
}

constexpr double kInputSumTolerance = 1e-9;
// Already-canonical inputs must pass through bit-identically.
constexpr double kSkipRescaleTolerance = 16.0 * std::numeric_limits<double>::epsilon();

}  // namespace

ProbDist canonicalize(std::span<const double> raw, bool auto_normalize) {
    std::vector<double> weights;
    weights.reserve(raw.size());
    for (double w : raw) {
        if (std::isnan(w) || w < 0.0) {
            throw Error(ErrorCode::NegativeWeight,
                        "weights must be nonnegative finite reals");
        }
        if (w > 0.0) weights.push_back(w);
    }
    if (weights.empty()) {
        throw Error(ErrorCode::EmptySupport, "no strictly positive weight");
    }

    double sum = stable_sum(weights);
    if (!std::isfinite(sum) || sum <= 0.0) {
        throw Error(ErrorCode::NotNormalized, "weight sum is not a positive finite real");
    }
    if (!auto_normalize && std::abs(sum - 1.0) > kInputSumTolerance) {
        throw Error(ErrorCode::NotNormalized,
                    "weights sum to " + std::to_string(sum) +
                        ", beyond 1e-9 of 1 (pass auto-normalize to rescale)");
    }
    if (std::abs(sum - 1.0) > kSkipRescaleTolerance) {
        for (double& w : weights) w /= sum;
    }

    std::stable_sort(weights.begin(), weights.end(), std::greater<double>());

    ProbDist dist;
    dist.weights_ = std::move(weights);
    dist.log_weights_.reserve(dist.weights_.size());
    for (double w : dist.weights_) dist.log_weights_.push_back(std::log2(w));
    return dist;
}

bool is_uniform(const ProbDist& p) {
    const double hi = p.max_weight();
    const double lo = p.min_weight();
    return (hi - lo) <= 1e-12 * hi;
}

bool is_trivial(const ProbDist& p) { return p.d() == 1; }

ProbDist perturb(const ProbDist& p, double delta, PerturbDirection direction) {
    if (is_trivial(p)) {
        throw Error(ErrorCode::TrivialDistribution, "cannot perturb a single-atom distribution");
    }
    if (!std::isfinite(delta) || delta <= 0.0) {
        throw Error(ErrorCode::InvalidDelta, "delta must be a positive real");
    }
    std::vector<double> w = p.weights();
    switch (direction) {
        case PerturbDirection::Sharpen:
            if (delta >= p.min_weight()) {
                throw Error(ErrorCode::InvalidDelta, "sharpen requires delta < p(d)");
            }
            w.front() += delta;
            w.back() -= delta;
            break;
        case PerturbDirection::Flatten:
            if (delta >= p.max_weight()) {
                throw Error(ErrorCode::InvalidDelta, "flatten requires delta < p(1)");
            }
            w.front() -= delta;
            w.back() += delta;
            break;
    }
    return canonicalize(w, /*auto_normalize=*/true);
}

double sorted_distance(const ProbDist& p, const ProbDist& q) {
    if (p.d() != q.d()) return std::numeric_limits<double>::infinity();
    double dist = 0.0;
    for (std::size_t i = 0; i < p.d(); ++i) {
        dist = std::max(dist, std::abs(p.weight(i) - q.weight(i)));
    }
    return dist;
}

}  // namespace majorate
