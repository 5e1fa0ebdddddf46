#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "majorate/dist.hpp"

namespace majorate {

/// Default cap on the number of compositions C(n+d-1, d-1) a staircase may
/// enumerate.
inline constexpr double kDefaultBudget = 2e6;

/// Number of compositions of n into d nonnegative parts, saturating to +inf
/// on 64-bit overflow.
double composition_count(int n, std::size_t d);

/// One probability level of a tensor power: all atoms sharing the same
/// per-atom probability 2^log_value.
struct StaircaseLevel {
    double log_value = 0.0;   // log2 of the per-atom probability
    mpz_class count;          // number of atoms at this level
    double level_mass = 0.0;  // count * 2^log_value
};

/// Exact description of p^(x)n as distinct probability levels, sorted by
/// log_value descending, with cumulative structures for prefix queries.
struct Staircase {
    std::vector<StaircaseLevel> levels;
    int n = 0;
    std::size_t source_d = 0;

    mpz_class total_count;              // d^n
    std::vector<mpz_class> cum_counts;  // cum_counts[j] = sum of counts[0..j]
    std::vector<double> prefix_mass;    // compensated forward prefix sums
    std::vector<double> tail_mass;      // tail_mass[j] = mass strictly below level j

    /// Top-N cumulative mass for 0 <= N <= total_count, evaluated on the
    /// piecewise-linear Lorenz curve. `prefer_tail` selects the
    /// cancellation-free side: result = 1 - (directly accumulated tail).
    double prefix_mass_at(const mpz_class& N) const;
    double tail_mass_at(const mpz_class& N) const;
};

/// Enumerates the type classes of p^(x)n via compositions of n into d parts.
/// Counts are exact multinomials (incremental binomial-ratio updates),
/// cross-checked against log2-factorial sums; equal log-values merge within
/// 1e-12*n.
Staircase staircase(const ProbDist& p, int n, double budget = kDefaultBudget);

struct FiniteCounts {
    double m = 0.0;       // mass of atoms with probability >= 2^(nV)  (weak)
    double m_star = 0.0;  // mass of atoms with probability <= 2^(nV)
    mpz_class s;          // count of atoms with probability >= 2^(nV)
    mpz_class s_star;     // count of atoms with probability <= 2^(nV)
};

/// Threshold counts/masses of p^(x)n at 2^(nV); strict=true uses >,< instead
/// of >=,<=.
FiniteCounts finite_counts(const ProbDist& p, int n, double V, bool strict,
                           double budget = kDefaultBudget);
FiniteCounts finite_counts(const Staircase& s, double V, bool strict);

struct MajorizationVerdict {
    bool holds = false;
    std::optional<mpz_class> witness_N;  // smallest violating prefix length
    double margin = 0.0;  // min over checked breakpoints of Q-prefix - P-prefix
};

/// Exact tensor-power majorization check: p^(x)n <= q^(x)m in the
/// majorization order. Decided by comparing the two concave piecewise-linear
/// Lorenz staircases at the breakpoints of the P-curve only: on each linear
/// piece the P-curve is its own chord while the Q-curve is concave and hence
/// above its chord, so dominance at the piece endpoints implies dominance on
/// the whole piece. Prefix sums above 1/2 are evaluated from the tail side.
/// Differences within `tolerance` count as <=.
MajorizationVerdict majorizes(const ProbDist& p, int n, const ProbDist& q, int m,
                              double budget = kDefaultBudget, double tolerance = 1e-12);

/// Validation oracle: enumerates every atom of both powers (caps at 2^20
/// atoms each), sorts, and compares prefix sums at every integer N.
MajorizationVerdict brute_majorizes(const ProbDist& p, int n, const ProbDist& q, int m,
                                    double tolerance = 1e-12);

/// Exact-rational adjudicator: treats the double weights as exact dyadic
/// rationals and decides every prefix comparison in integer arithmetic
/// (no tolerance). Slow; meant for verdicts with tiny margins.
MajorizationVerdict majorizes_exact(const ProbDist& p, int n, const ProbDist& q, int m,
                                    double budget = kDefaultBudget);

/// Positive rational r = num/den.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;

    static Rational from_string(const std::string& text);  // "3/2", "1.5"
    static Rational from_double(double value);              // nearest /1e12

    std::int64_t floor_times(std::int64_t n) const;  // floor(n * num / den)
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct MinPowerResult {
    std::optional<int> first_n;     // smallest n with p^(x)n <= q^(x)floor(nr)
    std::vector<bool> holds_by_n;   // holds_by_n[i] = verdict at n = i+1
};

/// Scans n = 1..n_max for p^(x)n majorized by q^(x)floor(nr). floor(nr) = 0
/// means the trivial single-atom target, which majorizes everything.
MinPowerResult min_power(const ProbDist& p, const ProbDist& q, const Rational& r,
                         int n_max, double budget = kDefaultBudget,
                         double tolerance = 1e-12);

struct EmpiricalExponents {
    double M_hat = 0.0;
    double M_star_hat = 0.0;
    double S_hat = 0.0;
    double S_star_hat = 0.0;
};

/// (1/n) log2 of the weak finite counts; -inf when no atom qualifies.
EmpiricalExponents empirical_exponents(const ProbDist& p, int n, double V,
                                       double budget = kDefaultBudget);
EmpiricalExponents empirical_exponents(const Staircase& s, double V);

/// log2 of a positive arbitrary-precision integer.
double log2_mpz(const mpz_class& value);

}  // namespace majorate
