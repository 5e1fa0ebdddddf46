#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "majorate/errors.hpp"

namespace majorate {

/// Canonical finitely supported probability distribution: strictly positive
/// weights sorted non-increasingly, renormalized to unit sum in working
/// precision, with cached base-2 logarithms.
class ProbDist {
public:
    const std::vector<double>& weights() const noexcept { return weights_; }
    const std::vector<double>& log_weights() const noexcept { return log_weights_; }
    std::size_t d() const noexcept { return weights_.size(); }

    double weight(std::size_t i) const { return weights_[i]; }
    double log_weight(std::size_t i) const { return log_weights_[i]; }

    double max_weight() const { return weights_.front(); }
    double min_weight() const { return weights_.back(); }

    friend bool operator==(const ProbDist&, const ProbDist&) = default;

private:
    ProbDist() = default;
    friend ProbDist canonicalize(std::span<const double>, bool);

    std::vector<double> weights_;
    std::vector<double> log_weights_;
};

/// Builds the canonical form of a raw weight vector: strips zeros, sorts
/// non-increasingly, renormalizes. Without `auto_normalize` the input sum
/// must already be within 1e-9 of 1. Idempotent on its own output.
ProbDist canonicalize(std::span<const double> raw, bool auto_normalize = false);

inline ProbDist canonicalize(std::initializer_list<double> raw, bool auto_normalize = false) {
    return canonicalize(std::span<const double>(raw.begin(), raw.size()), auto_normalize);
}

/// All weights equal within 1e-12 relative tolerance.
bool is_uniform(const ProbDist& p);

/// Single-atom distribution.
bool is_trivial(const ProbDist& p);

enum class PerturbDirection { Sharpen, Flatten };

/// Moves mass delta between the extreme atoms: Sharpen adds it to the largest
/// and takes it from the smallest (result majorizes p); Flatten does the
/// reverse (result is majorized by p whenever delta <= p(1) - p(d)). The
/// result is re-canonicalized.
ProbDist perturb(const ProbDist& p, double delta, PerturbDirection direction);

/// Max |p_i - q_i| over aligned sorted weights; infinity when supports differ
/// in size.
double sorted_distance(const ProbDist& p, const ProbDist& q);

}  // namespace majorate
