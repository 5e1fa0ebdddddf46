#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "majorate/dist.hpp"

namespace majorate {

/// Order parameter on the extended line [-inf, +inf] with exact symbolic
/// endpoints.
struct ExtendedAlpha {
    enum class Tag { Finite, PlusInfinity, MinusInfinity };

    Tag tag = Tag::Finite;
    double value = 0.0;  // meaningful only when tag == Finite

    static ExtendedAlpha finite(double v) { return {Tag::Finite, v}; }
    static ExtendedAlpha plus_infinity() { return {Tag::PlusInfinity, 0.0}; }
    static ExtendedAlpha minus_infinity() { return {Tag::MinusInfinity, 0.0}; }

    bool is_finite() const noexcept { return tag == Tag::Finite; }
    bool is_plus_infinity() const noexcept { return tag == Tag::PlusInfinity; }
    bool is_minus_infinity() const noexcept { return tag == Tag::MinusInfinity; }

    friend bool operator==(const ExtendedAlpha&, const ExtendedAlpha&) = default;
};

/// "1.5", "+inf" or "-inf" (reals with 17 significant digits).
std::string to_string(const ExtendedAlpha& alpha);

/// Renyi alpha-entropy in bits, alpha restricted to [0, +inf].
/// alpha = 0 -> log2 d, alpha = 1 -> Shannon, alpha = +inf -> -log2 p(1);
/// |alpha - 1| < 1e-6 is evaluated by the Shannon formula.
double renyi(const ProbDist& p, const ExtendedAlpha& alpha);
double renyi(const ProbDist& p, double alpha);

double shannon_entropy(const ProbDist& p);

/// Relative entropy D(q||p) in bits. `embedding[j]` gives the index in p of
/// q's j-th atom; the canonical sort destroys shared indexing, so the caller
/// supplies the alignment. Must be injective and within range.
double relative_entropy(const ProbDist& q, const ProbDist& p,
                        std::span<const std::size_t> embedding);

/// Identity alignment (requires q.d() <= p.d()).
double relative_entropy(const ProbDist& q, const ProbDist& p);

/// Cumulant function F(alpha) = log2 sum_i p_i^alpha and derivatives.
/// Evaluated in the log domain with a max shift, so any real alpha is safe.
/// F' is strictly increasing with range (log2 p(d), log2 p(1)) for non-uniform
/// p; F'' is ln2 times the variance of log2 p under the tilted distribution.
/// All require a non-trivial p.
double F(const ProbDist& p, double alpha);
double F_prime(const ProbDist& p, double alpha);
double F_second(const ProbDist& p, double alpha);

/// Tilted (escort) distribution with weights proportional to p_i^alpha,
/// re-canonicalized. Identity at alpha = 1, uniform at alpha = 0.
ProbDist tilt(const ProbDist& p, double alpha);

/// Index map aligning tilt(p, alpha) back to p, suitable as the `embedding`
/// argument of relative_entropy(tilt(p, alpha), p, ...).
std::vector<std::size_t> tilt_alignment(const ProbDist& p, double alpha);

/// Mean of log2 weights, sum_i log2 p_i / d (the alpha = 0 value of F').
double mean_log_weight(const ProbDist& p);

/// Number of atoms tied with the largest / smallest weight (1e-12 relative).
std::size_t argmax_count(const ProbDist& p);
std::size_t argmin_count(const ProbDist& p);

}  // namespace majorate
