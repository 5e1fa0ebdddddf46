// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "majorate/entropy.hpp"
#include "majorate/exponents.hpp"
#include "majorate/oracle.hpp"
#include "majorate/rate.hpp"
#include "test_support.hpp"

using namespace majorate;
using testsupport::random_dist;
using testsupport::random_non_uniform;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> body;
    double time_limit_s = 0.0;  // 0 = no limit
};

bool nearly(double a, double b, double tol, std::string& why, const char* what) {
    if (std::abs(a - b) <= tol) return true;
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s: |%.17g - %.17g| = %.3g > %.3g", what, a, b,
                  std::abs(a - b), tol);
    why = buf;
    return false;
}

// 1. F(P,0) = log2 d and F(P,1) = 0 to 1e-12 for 100 random P (d <= 8).
bool criterion_special_values(std::string& why) {
    std::mt19937_64 rng(1000001);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t d = 2 + rng() % 7;
        const ProbDist p = random_dist(rng, d);
        if (!nearly(F(p, 0.0), std::log2(static_cast<double>(d)), 1e-12, why, "F(P,0)")) {
            return false;
        }
        if (!nearly(F(p, 1.0), 0.0, 1e-12, why, "F(P,1)")) return false;
    }
    return true;
}

// 2. The six named exponent values for 50 random non-uniform P, to 1e-9.
bool criterion_named_exponents(std::string& why) {
    std::mt19937_64 rng(2000002);
    for (int trial = 0; trial < 50; ++trial) {
        const ProbDist p = random_non_uniform(rng, 2 + rng() % 7);
        const double H = shannon_entropy(p);
        const double log_d = std::log2(static_cast<double>(p.d()));
        const double top = p.log_weights().front();
        const double log_argmax = std::log2(static_cast<double>(argmax_count(p)));

        const ExponentPoint at_H = exponents_at(p, -H);
        if (!nearly(at_H.M, 0.0, 1e-9, why, "M(-H)")) return false;
        if (!nearly(at_H.M_star, 0.0, 1e-9, why, "M*(-H)")) return false;
        if (!nearly(at_H.S, H, 1e-9, why, "S(-H)")) return false;

        const ExponentPoint at_mean = exponents_at(p, mean_log_weight(p));
        if (!nearly(at_mean.S, log_d, 1e-9, why, "S(mean log)")) return false;

        const ExponentPoint at_top = exponents_at(p, top);
        if (!nearly(at_top.S, log_argmax, 1e-9, why, "S(log2 p(1))")) return false;
        if (!nearly(at_top.M, top + log_argmax, 1e-9, why, "M(log2 p(1))")) return false;
    }
    return true;
}

// 3. S(V) = H(tilt), M(V) = -D(tilt||P) at 25 interior V per P, 1e-9.
bool criterion_variational_identity(std::string& why) {
    std::mt19937_64 rng(3000003);
    for (int trial = 0; trial < 50; ++trial) {
        const ProbDist p = random_non_uniform(rng, 2 + rng() % 7);
        const double lo = -shannon_entropy(p);
        const double hi = p.log_weights().front();
        for (int k = 0; k < 25; ++k) {
            const double V = lo + (hi - lo) * (k + 1) / 26.0;
            const ExponentPoint pt = exponents_at(p, V);
            if (!pt.alpha_V.is_finite()) continue;
            const ProbDist tilted = tilt(p, pt.alpha_V.value);
            const auto alignment = tilt_alignment(p, pt.alpha_V.value);
            if (!nearly(pt.S, shannon_entropy(tilted), 1e-9, why, "S vs H(tilt)")) {
                return false;
            }
            if (!nearly(pt.M, -relative_entropy(tilted, p, alignment), 1e-9, why,
                        "M vs -D(tilt||P)")) {
                return false;
            }
        }
    }
    return true;
}

// 4. dS/dV = -alpha_V and dM/dV = 1 - alpha_V by central differences,
//    relative error < 1e-3 away from regime boundaries.
bool criterion_derivatives(std::string& why) {
    std::mt19937_64 rng(4000004);
    for (int trial = 0; trial < 25; ++trial) {
        const ProbDist p = random_non_uniform(rng, 2 + rng() % 6);
        const double range = p.log_weights().front() - p.log_weights().back();
        const double v_mean = mean_log_weight(p);
        const double v_shannon = -shannon_entropy(p);
        const double h = 1e-6 * range;

        for (double alpha : {0.25, 0.5, 1.5, 2.0, 4.0}) {
            const double V = F_prime(p, alpha);
            if (V - v_mean < 16 * h || p.log_weights().front() - V < 16 * h) continue;

            const double ds =
                (exponents_at(p, V + h).S - exponents_at(p, V - h).S) / (2 * h);
            if (std::abs(ds - (-alpha)) > 1e-3 * std::abs(alpha)) {
                char buf[128];
                std::snprintf(buf, sizeof(buf), "dS/dV = %.8g vs -alpha = %.8g", ds, -alpha);
                why = buf;
                return false;
            }
            if (alpha > 1.0 && V - v_shannon > 16 * h) {
                const double dm =
                    (exponents_at(p, V + h).M - exponents_at(p, V - h).M) / (2 * h);
                if (std::abs(dm - (1.0 - alpha)) > 1e-3 * std::abs(1.0 - alpha)) {
                    char buf[128];
                    std::snprintf(buf, sizeof(buf), "dM/dV = %.8g vs 1-alpha = %.8g", dm,
                                  1.0 - alpha);
                    why = buf;
                    return false;
                }
            }
        }
    }
    return true;
}

// 5. majorizes == brute_majorizes on 200 random pairs, d in {2,3}, n,m <= 8.
bool criterion_oracle_equivalence(std::string& why) {
    std::mt19937_64 rng(5000005);
    for (int pair = 0; pair < 200; ++pair) {
        const ProbDist p = random_dist(rng, 2 + rng() % 2);
        const ProbDist q = random_dist(rng, 2 + rng() % 2);
        const int n = 1 + static_cast<int>(rng() % 8);
        const int m = 1 + static_cast<int>(rng() % 8);
        const MajorizationVerdict fast = majorizes(p, n, q, m);
        const MajorizationVerdict brute = brute_majorizes(p, n, q, m);
        if (fast.holds != brute.holds) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "disagreement at pair %d (n=%d, m=%d)", pair, n,
                          m);
            why = buf;
            return false;
        }
    }
    return true;
}

// 6. Convergence of the empirical size exponent for P = (1/2,1/4,1/4), plus
//    the exact n=4 threshold row (s = 33, m = 0.6875).
bool criterion_convergence(std::string& why) {
    const ProbDist p = canonicalize({0.5, 0.25, 0.25});

    const FiniteCounts fc = finite_counts(p, 4, -1.5, /*strict=*/false);
    if (fc.s != 33) {
        why = "s_4(-1.5) = " + fc.s.get_str() + ", want 33";
        return false;
    }
    if (fc.m != 0.6875) {
        why = "m_4(-1.5) != 0.6875 exactly";
        return false;
    }

    double previous_dev = 1e300;
    for (int n : {8, 16, 32}) {
        const Staircase s = staircase(p, n);
        double max_dev = 0.0;
        for (int k = 0; k <= 40; ++k) {
            const double V = -2.0 + k / 40.0;
            const double s_hat = empirical_exponents(s, V).S_hat;
            const double s_exact = exponents_at(p, V).S;
            max_dev = std::max(max_dev, std::abs(s_hat - s_exact));
        }
        const double bound = 2.0 * std::log2(static_cast<double>(n) + 1.0) / n + 0.05;
        if (max_dev > bound) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "n=%d: max dev %.6f > bound %.6f", n, max_dev,
                          bound);
            why = buf;
            return false;
        }
        if (max_dev > previous_dev) {
            char buf[128];
            std::snprintf(buf, sizeof(buf), "n=%d: deviation %.6f grew from %.6f", n,
                          max_dev, previous_dev);
            why = buf;
            return false;
        }
        previous_dev = max_dev;
    }
    return true;
}

// 7. Desk-scale sandwich around the three fixed rates.
bool criterion_sandwich(std::string& why) {
    struct Pair {
        ProbDist p;
        ProbDist q;
        double expected_rate;
    };
    const std::vector<Pair> suite = {
        {canonicalize({0.25, 0.25, 0.25, 0.25}), canonicalize({0.5, 0.5}), 2.0},
        {canonicalize({0.9, 0.1}), canonicalize({0.5, 0.5}), -std::log2(0.9)},
        {canonicalize({0.6, 0.4}), canonicalize({0.75, 0.25}), 1.0},
    };
    const int n_max = 24;

    for (std::size_t idx = 0; idx < suite.size(); ++idx) {
        const Pair& pair = suite[idx];
        const double computed = rate(pair.p, pair.q).rate;
        if (!nearly(computed, pair.expected_rate, 1e-6, why, "rate")) return false;

        const MinPowerResult below =
            min_power(pair.p, pair.q, Rational::from_double(computed - 0.05), n_max);
        if (!below.first_n) {
            why = "min_power found no n <= 24 at r = R - 0.05 (pair " +
                  std::to_string(idx) + ")";
            return false;
        }

        const Rational above = Rational::from_double(computed + 0.05);
        for (int n = 1; n <= n_max; ++n) {
            const std::int64_t m = above.floor_times(n);
            if (m == 0) continue;
            bool entropy_flips = false;
            for (double alpha : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 16.0}) {
                if (n * renyi(pair.p, alpha) <
                    static_cast<double>(m) * renyi(pair.q, alpha)) {
                    entropy_flips = true;
                    break;
                }
            }
            if (!entropy_flips &&
                n * renyi(pair.p, ExtendedAlpha::plus_infinity()) <
                    static_cast<double>(m) * renyi(pair.q, ExtendedAlpha::plus_infinity())) {
                entropy_flips = true;
            }
            if (entropy_flips &&
                majorizes(pair.p, n, pair.q, static_cast<int>(m)).holds) {
                char buf[160];
                std::snprintf(buf, sizeof(buf),
                              "pair %zu: majorization held at n=%d, m=%lld above the rate",
                              idx, n, static_cast<long long>(m));
                why = buf;
                return false;
            }
        }
    }
    return true;
}

// 8. Implication chain: the fixed pair confirms forward, and majorization
//    never appears without strict Renyi dominance anywhere in the suite.
bool criterion_chain(std::string& why) {
    const ChainReport fixed = chain_check(canonicalize({0.4, 0.3, 0.2, 0.1}),
                                          canonicalize({0.5, 0.3, 0.2}), 6);
    if (!fixed.strict_everywhere) {
        why = "strict_everywhere false on the fixed pair";
        return false;
    }
    if (!fixed.first_n || *fixed.first_n != 1) {
        why = "first_n != 1 on the fixed pair";
        return false;
    }
    if (!fixed.necessary_ok) {
        why = "necessary_ok false on the fixed pair";
        return false;
    }

    // The whole desk-scale suite (degenerate/trivial pairs excluded by the
    // chain preconditions).
    const std::vector<std::pair<ProbDist, ProbDist>> suite = {
        {canonicalize({0.25, 0.25, 0.25, 0.25}), canonicalize({0.5, 0.5})},
        {canonicalize({0.9, 0.1}), canonicalize({0.5, 0.5})},
        {canonicalize({0.6, 0.4}), canonicalize({0.75, 0.25})},
    };
    for (const auto& [p, q] : suite) {
        try {
            const ChainReport report = chain_check(p, q, 8);
            if (!report.necessary_ok) {
                why = "necessary_ok false on a suite pair";
                return false;
            }
        } catch (const Error& e) {
            why = std::string("chain_check raised: ") + e.what();
            return false;
        }
    }

    // Randomized runs: the hard assertion must never fire.
    std::mt19937_64 rng(8000008);
    int ran = 0;
    while (ran < 60) {
        const ProbDist p = random_dist(rng, 2 + rng() % 3);
        const ProbDist q = random_dist(rng, 2 + rng() % 3);
        if (sorted_distance(p, q) <= 1e-9 || is_trivial(q)) continue;
        try {
            chain_check(p, q, 5);
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Internal) {
                why = std::string("hard assertion fired: ") + e.what();
                return false;
            }
            why = std::string("unexpected error: ") + e.what();
            return false;
        }
        ++ran;
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. cumulant special values F(0)=log2 d, F(1)=0 (1e-12, 100 random P)",
         criterion_special_values, 1.0},
        {"2. named exponent values at -H, mean log, log2 p(1) (1e-9, 50 P)",
         criterion_named_exponents, 0.0},
        {"3. variational identities S=H(tilt), M=-D(tilt||P) (1e-9, 25 V per P)",
         criterion_variational_identity, 0.0},
        {"4. Legendre derivatives dS/dV=-alpha, dM/dV=1-alpha (rel 1e-3)",
         criterion_derivatives, 0.0},
        {"5. oracle equivalence majorizes == brute_majorizes (200 pairs)",
         criterion_oracle_equivalence, 30.0},
        {"6. empirical size-exponent convergence at n=8,16,32 (+ exact n=4 row)",
         criterion_convergence, 0.0},
        {"7. rate sandwich on the fixed suite (1e-6; n_max=24)", criterion_sandwich,
         120.0},
        {"8. implication chain: forward confirmed, necessity never violated",
         criterion_chain, 0.0},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string why;
        bool ok = false;
        try {
            ok = criterion.body(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && criterion.time_limit_s > 0.0 && elapsed > criterion.time_limit_s) {
            ok = false;
            char buf[96];
            std::snprintf(buf, sizeof(buf), "time %.2f s over the %.0f s limit", elapsed,
                          criterion.time_limit_s);
            why = buf;
        }
        std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL",
                    criterion.label.c_str(), elapsed, why.empty() ? "" : " -- ",
                    why.c_str());
        if (!ok) ++failures;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
