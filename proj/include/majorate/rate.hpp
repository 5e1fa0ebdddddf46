#pragma once

#include <optional>
#include <vector>

#include "majorate/entropy.hpp"
#include "majorate/oracle.hpp"

namespace majorate {

/// H_alpha(p) / H_alpha(q) for alpha in [0, +inf]; 0 when p is trivial.
/// q must be non-trivial.
double entropy_ratio(const ProbDist& p, const ProbDist& q, const ExtendedAlpha& alpha);

enum class RateStatus { ExactSpecialCase, GridRefined };

struct RateSample {
    ExtendedAlpha alpha;
    double ratio = 0.0;
};

struct RateResult {
    double rate = 0.0;  // +infinity when q is trivial
    RateStatus status = RateStatus::GridRefined;
    std::vector<ExtendedAlpha> argmin_alphas;  // minima within 1e-9 of rate
    std::vector<RateSample> samples;           // diagnostics; includes the minimizers

    bool is_infinite() const;
};

struct RateOptions {
    int grid_points = 2049;       // on [0, inf], both endpoints and alpha=1 included
    double refine_tol = 1e-10;    // golden-section width in the transformed coordinate
    double argmin_tol = 1e-9;     // values within this of the min join argmin_alphas
};

/// Exchange rate: min over alpha in [0, inf] of H_alpha(p)/H_alpha(q),
/// via a tan-transformed grid with golden-section refinement inside every
/// local minimum basin. Trivial q -> +infinity; trivial p -> 0 (both flagged
/// ExactSpecialCase).
RateResult rate(const ProbDist& p, const ProbDist& q, const RateOptions& options = {});

enum class ChainStatus {
    ForwardConfirmed,     // strict dominance everywhere and a majorizing n found
    Inconclusive,         // strict dominance everywhere but no n <= n_max worked
    ForwardNotTriggered,  // strict dominance fails somewhere; nothing to confirm
};

struct ChainReport {
    bool strict_everywhere = false;   // H_a(p) > H_a(q) on a dense [0,inf] grid
    double entropy_margin_min = 0.0;  // min over the grid of H_a(p) - H_a(q)
    std::optional<int> first_n;
    std::vector<bool> holds_by_n;
    bool necessary_ok = true;  // every majorizing n implies strict dominance on (0,inf)
    ChainStatus status = ChainStatus::ForwardNotTriggered;
};

/// Runs the implication-chain experiment between strict Renyi dominance and
/// finite-n majorization at r = 1. Requires p and q to differ as sorted
/// sequences. A majorizing n without strict dominance on (0, inf) violates
/// Schur concavity and raises Internal.
ChainReport chain_check(const ProbDist& p, const ProbDist& q, int n_max,
                        double budget = kDefaultBudget);

}  // namespace majorate
