#include "majorate/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>

#include "majorate/errors.hpp"

namespace majorate {

namespace {

constexpr double kAlphaOneWindow = 1e-6;  // removable singularity at alpha=1

void require_non_trivial(const ProbDist& p) {
    if (is_trivial(p)) {
        throw Error(ErrorCode::TrivialDistribution,
                    "operation undefined for a single-atom distribution");
    }
}

// Tilted weights 2^(alpha*l_i - T) with T = max_i alpha*l_i; the max term is
// exactly 1, so the sum never overflows for any real alpha.
struct TiltTerms {
    std::vector<double> scaled;  // 2^(alpha*l_i - T)
    double shift = 0.0;          // T
    double total = 0.0;          // sum of scaled
};

TiltTerms tilt_terms(const ProbDist& p, double alpha) {
    const auto& logs = p.log_weights();
    TiltTerms t;
    t.scaled.resize(logs.size());
    double shift = -std::numeric_limits<double>::infinity();
    for (double l : logs) shift = std::max(shift, alpha * l);
    t.shift = shift;
    double sum = 0.0;
    for (std::size_t i = 0; i < logs.size(); ++i) {
        t.scaled[i] = std::exp2(alpha * logs[i] - shift);
        sum += t.scaled[i];
    }
    t.total = sum;
    return t;
}

}  // namespace

std::string to_string(const ExtendedAlpha& alpha) {
    switch (alpha.tag) {
        case ExtendedAlpha::Tag::PlusInfinity: return "+inf";
        case ExtendedAlpha::Tag::MinusInfinity: return "-inf";
        case ExtendedAlpha::Tag::Finite: break;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", alpha.value);
    return buf;
}

double shannon_entropy(const ProbDist& p) {
    double h = 0.0;
    for (std::size_t i = 0; i < p.d(); ++i) {
        h -= p.weight(i) * p.log_weight(i);
    }
    return std::max(h, 0.0);
}

double renyi(const ProbDist& p, const ExtendedAlpha& alpha) {
    if (alpha.is_minus_infinity() || (alpha.is_finite() && alpha.value < 0.0)) {
        throw Error(ErrorCode::AlphaOutOfRange, "renyi entropy requires alpha in [0, +inf]");
    }
    if (is_trivial(p)) return 0.0;
    if (alpha.is_plus_infinity()) return -p.log_weight(0);
    const double a = alpha.value;
    if (a == 0.0) return std::log2(static_cast<double>(p.d()));
    if (std::abs(a - 1.0) < kAlphaOneWindow) return shannon_entropy(p);
    return F(p, a) / (1.0 - a);
}

double renyi(const ProbDist& p, double alpha) {
    return renyi(p, ExtendedAlpha::finite(alpha));
}

double relative_entropy(const ProbDist& q, const ProbDist& p,
                        std::span<const std::size_t> embedding) {
    if (embedding.size() != q.d()) {
        throw Error(ErrorCode::SupportMismatch,
                    "embedding must map every atom of q into p");
    }
    std::vector<bool> used(p.d(), false);
    double div = 0.0;
    for (std::size_t j = 0; j < q.d(); ++j) {
        const std::size_t i = embedding[j];
        if (i >= p.d() || used[i]) {
            throw Error(ErrorCode::SupportMismatch,
                        "embedding must be injective into the support of p");
        }
        used[i] = true;
        div += q.weight(j) * (q.log_weight(j) - p.log_weight(i));
    }
    return std::max(div, 0.0);
}

double relative_entropy(const ProbDist& q, const ProbDist& p) {
    if (q.d() > p.d()) {
        throw Error(ErrorCode::SupportMismatch,
                    "identity alignment needs supp(q) no larger than supp(p)");
    }
    std::vector<std::size_t> embedding(q.d());
    std::iota(embedding.begin(), embedding.end(), std::size_t{0});
    return relative_entropy(q, p, embedding);
}

double F(const ProbDist& p, double alpha) {
    require_non_trivial(p);
    const TiltTerms t = tilt_terms(p, alpha);
    return t.shift + std::log2(t.total);
}

double F_prime(const ProbDist& p, double alpha) {
    require_non_trivial(p);
    const TiltTerms t = tilt_terms(p, alpha);
    double mean = 0.0;
    for (std::size_t i = 0; i < p.d(); ++i) {
        mean += t.scaled[i] * p.log_weight(i);
    }
    return mean / t.total;
}

double F_second(const ProbDist& p, double alpha) {
    require_non_trivial(p);
    const TiltTerms t = tilt_terms(p, alpha);
    double mean = 0.0;
    for (std::size_t i = 0; i < p.d(); ++i) {
        mean += t.scaled[i] * p.log_weight(i);
    }
    mean /= t.total;
    double var = 0.0;
    for (std::size_t i = 0; i < p.d(); ++i) {
        const double centered = p.log_weight(i) - mean;
        var += t.scaled[i] * centered * centered;
    }
    // d^2/da^2 of log2 sum p^a is ln2 times the tilted variance of log2 p.
    return std::max(M_LN2 * var / t.total, 0.0);
}

ProbDist tilt(const ProbDist& p, double alpha) {
    require_non_trivial(p);
    if (!std::isfinite(alpha)) {
        throw Error(ErrorCode::AlphaOutOfRange, "tilt requires finite alpha");
    }
    const TiltTerms t = tilt_terms(p, alpha);
    std::vector<double> weights(t.scaled.size());
    for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = t.scaled[i] / t.total;
    return canonicalize(weights, /*auto_normalize=*/true);
}

std::vector<std::size_t> tilt_alignment(const ProbDist& p, double alpha) {
    require_non_trivial(p);
    // Canonicalization stable-sorts descending; mirror that on the tilted values.
    const TiltTerms t = tilt_terms(p, alpha);
    std::vector<std::size_t> order(t.scaled.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return t.scaled[a] > t.scaled[b];
    });
    return order;
}

double mean_log_weight(const ProbDist& p) {
    double sum = 0.0;
    for (double l : p.log_weights()) sum += l;
    return sum / static_cast<double>(p.d());
}

std::size_t argmax_count(const ProbDist& p) {
    const double top = p.max_weight();
    std::size_t count = 0;
    while (count < p.d() && top - p.weight(count) <= 1e-12 * top) ++count;
    return count;
}

std::size_t argmin_count(const ProbDist& p) {
    const double bottom = p.min_weight();
    std::size_t count = 0;
    while (count < p.d() && p.weight(p.d() - 1 - count) - bottom <= 1e-12 * p.weight(p.d() - 1 - count)) {
        ++count;
    }
    return count;
}

}  // namespace majorate
