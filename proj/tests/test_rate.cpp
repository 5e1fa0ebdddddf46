#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "majorate/rate.hpp"
#include "test_support.hpp"

using namespace majorate;
using testsupport::random_dist;
using testsupport::random_non_uniform;

namespace {

// Test-side tensor power: expands every product weight explicitly.
ProbDist tensor_power(const ProbDist& p, int k) {
    std::vector<double> acc{1.0};
    for (int step = 0; step < k; ++step) {
        std::vector<double> next;
        next.reserve(acc.size() * p.d());
        for (double a : acc) {
            for (double w : p.weights()) next.push_back(a * w);
        }
        acc = std::move(next);
    }
    return canonicalize(acc, /*auto_normalize=*/true);
}

bool argmin_contains(const RateResult& r, const ExtendedAlpha& alpha) {
    return std::any_of(r.argmin_alphas.begin(), r.argmin_alphas.end(),
                       [&](const ExtendedAlpha& a) {
                           if (a.tag != alpha.tag) return false;
                           if (!a.is_finite()) return true;
                           return std::abs(a.value - alpha.value) <= 1e-6;
                       });
}

}  // namespace

TEST_CASE("entropy ratio basics") {
    const ProbDist p = canonicalize({0.5, 0.3, 0.2});
    for (double a : {0.0, 0.5, 1.0, 3.0}) {
        CHECK(entropy_ratio(p, p, ExtendedAlpha::finite(a)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }

    const ProbDist u2 = canonicalize({0.5, 0.5});
    const ProbDist u4 = canonicalize({0.25, 0.25, 0.25, 0.25});
    for (double a : {0.0, 0.7, 1.0, 5.0}) {
        CHECK(entropy_ratio(u2, u4, ExtendedAlpha::finite(a)) ==
              doctest::Approx(0.5).epsilon(1e-12));
    }

    CHECK(entropy_ratio(canonicalize({0.9, 0.1}), u2, ExtendedAlpha::plus_infinity()) ==
          doctest::Approx(-std::log2(0.9)).epsilon(1e-12));

    CHECK(entropy_ratio(canonicalize({1.0}), u2, ExtendedAlpha::finite(2.0)) == 0.0);
    CHECK_THROWS_AS(entropy_ratio(p, canonicalize({1.0}), ExtendedAlpha::finite(1.0)), Error);
}

TEST_CASE("rate: uniform pair is exactly the support-size ratio") {
    const ProbDist u4 = canonicalize({0.25, 0.25, 0.25, 0.25});
    const ProbDist u2 = canonicalize({0.5, 0.5});
    const RateResult r = rate(u4, u2);
    CHECK(r.rate == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.status == RateStatus::GridRefined);
    // The ratio is constant, so the whole sampled grid is in the argmin set.
    CHECK(r.argmin_alphas.size() > 100);
    CHECK(argmin_contains(r, ExtendedAlpha::finite(0.0)));
    CHECK(argmin_contains(r, ExtendedAlpha::finite(1.0)));
    CHECK(argmin_contains(r, ExtendedAlpha::plus_infinity()));
    for (const RateSample& s : r.samples) {
        CHECK(s.ratio == doctest::Approx(2.0).epsilon(1e-12));
    }
}

TEST_CASE("rate: minimum at alpha = +inf for (0.9,0.1) vs uniform") {
    const RateResult r = rate(canonicalize({0.9, 0.1}), canonicalize({0.5, 0.5}));
    CHECK(r.rate == doctest::Approx(-std::log2(0.9)).epsilon(1e-9));
    REQUIRE_FALSE(r.argmin_alphas.empty());
    CHECK(argmin_contains(r, ExtendedAlpha::plus_infinity()));
    CHECK_FALSE(argmin_contains(r, ExtendedAlpha::finite(1.0)));
}

TEST_CASE("rate: minimum at alpha = 0 for (0.6,0.4) vs (0.75,0.25)") {
    const RateResult r = rate(canonicalize({0.6, 0.4}), canonicalize({0.75, 0.25}));
    CHECK(r.rate == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(argmin_contains(r, ExtendedAlpha::finite(0.0)));
    CHECK_FALSE(argmin_contains(r, ExtendedAlpha::plus_infinity()));
}

TEST_CASE("rate special cases") {
    const ProbDist p = canonicalize({0.5, 0.3, 0.2});
    const RateResult inf = rate(p, canonicalize({1.0}));
    CHECK(inf.is_infinite());
    CHECK(inf.status == RateStatus::ExactSpecialCase);
    CHECK(inf.argmin_alphas.empty());

    const RateResult zero = rate(canonicalize({1.0}), p);
    CHECK(zero.rate == 0.0);
    CHECK(zero.status == RateStatus::ExactSpecialCase);
    CHECK_FALSE(zero.argmin_alphas.empty());
}

TEST_CASE("rate equals the sample minimum and ignores input order") {
    std::mt19937_64 rng(171717);
    for (int trial = 0; trial < 8; ++trial) {
        const ProbDist p = random_dist(rng, 2 + rng() % 4);
        const ProbDist q = random_non_uniform(rng, 2 + rng() % 3);
        const RateResult r = rate(p, q);
        double best = 1e300;
        for (const RateSample& s : r.samples) best = std::min(best, s.ratio);
        CHECK(r.rate == doctest::Approx(best).epsilon(1e-12));
        REQUIRE_FALSE(r.argmin_alphas.empty());

        // Permuting raw weights changes nothing (canonicalization).
        std::vector<double> shuffled = p.weights();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        const RateResult r2 = rate(canonicalize(shuffled), q);
        CHECK(r2.rate == doctest::Approx(r.rate).epsilon(1e-12));
    }
}

TEST_CASE("rate scales linearly under tensor powers of the source") {
    std::mt19937_64 rng(292929);
    for (int trial = 0; trial < 5; ++trial) {
        const ProbDist p = random_non_uniform(rng, 2 + rng() % 2);
        const ProbDist q = random_non_uniform(rng, 2 + rng() % 2);
        const double base = rate(p, q).rate;
        for (int k : {2, 3}) {
            const double powered = rate(tensor_power(p, k), q).rate;
            CHECK(powered == doctest::Approx(k * base).epsilon(1e-8));
        }
    }
}

TEST_CASE("rate(P,P) = 1 with the whole grid as argmin") {
    const ProbDist p = canonicalize({0.45, 0.35, 0.2});
    const RateResult r = rate(p, p);
    CHECK(r.rate == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(argmin_contains(r, ExtendedAlpha::finite(1.0)));
    for (const RateSample& s : r.samples) {
        CHECK(s.ratio == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("chain_check: strict dominance with immediate majorization") {
    const ProbDist p = canonicalize({0.4, 0.3, 0.2, 0.1});
    const ProbDist q = canonicalize({0.5, 0.3, 0.2});
    const ChainReport report = chain_check(p, q, 6);
    CHECK(report.strict_everywhere);
    CHECK(report.entropy_margin_min > 0.0);
    REQUIRE(report.first_n.has_value());
    CHECK(*report.first_n == 1);
    CHECK(report.necessary_ok);
    CHECK(report.status == ChainStatus::ForwardConfirmed);
    CHECK(report.holds_by_n.size() == 6);
    CHECK(report.holds_by_n[0]);
}

TEST_CASE("chain_check: reversed min-entropy blocks the forward direction") {
    const ChainReport report =
        chain_check(canonicalize({0.9, 0.1}), canonicalize({0.8, 0.2}), 6);
    CHECK_FALSE(report.strict_everywhere);
    CHECK(report.entropy_margin_min < 0.0);
    CHECK_FALSE(report.first_n.has_value());
    CHECK(report.status == ChainStatus::ForwardNotTriggered);
}

TEST_CASE("chain_check: delayed majorization flips inconclusive to confirmed") {
    // Fails at n = 1 (second prefix: 0.68 > 0.675) yet majorizes from n = 2 on.
    const ProbDist p = canonicalize({0.34, 0.34, 0.16, 0.16});
    const ProbDist q = canonicalize({0.35, 0.325, 0.325});

    const ChainReport tight = chain_check(p, q, 1);
    CHECK(tight.strict_everywhere);
    CHECK_FALSE(tight.first_n.has_value());
    CHECK(tight.status == ChainStatus::Inconclusive);

    const ChainReport wide = chain_check(p, q, 8);
    REQUIRE(wide.first_n.has_value());
    CHECK(*wide.first_n == 2);
    CHECK_FALSE(wide.holds_by_n[0]);
    CHECK(wide.holds_by_n[1]);
    CHECK(wide.status == ChainStatus::ForwardConfirmed);
    CHECK(wide.necessary_ok);
}

TEST_CASE("chain_check rejects identical sorted distributions") {
    const ProbDist p = canonicalize({0.5, 0.3, 0.2});
    CHECK_THROWS_AS(chain_check(p, canonicalize({0.2, 0.5, 0.3}), 4), Error);
    try {
        chain_check(p, p, 4);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateChain);
    }
}

TEST_CASE("chain_check never sees majorization without strict dominance") {
    std::mt19937_64 rng(535353);
    int ran = 0;
    while (ran < 25) {
        const ProbDist p = random_dist(rng, 2 + rng() % 3);
        const ProbDist q = random_dist(rng, 2 + rng() % 3);
        if (sorted_distance(p, q) <= 1e-9 || is_trivial(q)) continue;
        CHECK_NOTHROW(chain_check(p, q, 4));
        ++ran;
    }
}

TEST_CASE("perturbation experiment: sharpened source and flattened target") {
    // Strict dominance survives a small transfer: sharpening P raises it in
    // the order and flattening Q lowers it, so the perturbed pair sandwiches
    // the original one.
    const ProbDist p = canonicalize({0.34, 0.34, 0.16, 0.16});
    const ProbDist q = canonicalize({0.35, 0.325, 0.325});
    const double delta = 1e-3;
    const ProbDist p_up = perturb(p, delta, PerturbDirection::Sharpen);
    const ProbDist q_down = perturb(q, delta, PerturbDirection::Flatten);

    CHECK(majorizes(p, 1, p_up, 1).holds);
    CHECK(majorizes(q_down, 1, q, 1).holds);

    double margin_min = 1e300;
    for (double alpha : {0.0, 0.25, 0.5, 1.0, 2.0, 8.0}) {
        margin_min = std::min(margin_min, renyi(p_up, alpha) - renyi(q_down, alpha));
    }
    margin_min = std::min(margin_min,
                          renyi(p_up, ExtendedAlpha::plus_infinity()) -
                              renyi(q_down, ExtendedAlpha::plus_infinity()));
    CHECK(margin_min > 0.0);

    bool found = false;
    for (int n = 1; n <= 8; ++n) {
        if (majorizes(p_up, n, q_down, n).holds) {
            found = true;
            // The original pair inherits the verdict by transitivity.
            CHECK(majorizes(p, n, q, n).holds);
        }
    }
    CHECK(found);
}

TEST_CASE("desk-scale sandwich around the computed rate") {
    const ProbDist p = canonicalize({0.6, 0.4});
    const ProbDist q = canonicalize({0.75, 0.25});
    const double r = rate(p, q).rate;
    CHECK(r == doctest::Approx(1.0).epsilon(1e-9));

    // Below the rate the conversion eventually works...
    const MinPowerResult below = min_power(p, q, Rational::from_double(r - 0.05), 12);
    CHECK(below.first_n.has_value());

    // ...and above it, any n whose entropy inequality flips must fail.
    const Rational above = Rational::from_double(r + 0.05);
    for (int n = 1; n <= 12; ++n) {
        const auto m = above.floor_times(n);
        if (m == 0) continue;
        bool entropy_flips = false;
        for (double alpha : {0.0, 0.25, 1.0, 2.0, 16.0}) {
            if (n * renyi(p, alpha) < static_cast<double>(m) * renyi(q, alpha)) {
                entropy_flips = true;
            }
        }
        if (entropy_flips) {
            CHECK_FALSE(majorizes(p, n, q, static_cast<int>(m)).holds);
        }
    }
}
