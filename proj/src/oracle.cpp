#include "majorate/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

namespace majorate {

namespace {

constexpr double kBruteAtomCap = 1048576.0;  // 2^20

double infinity() { return std::numeric_limits<double>::infinity(); }

// log2 merge tolerance: distinct compositions with equal products
// (e.g. p2^2 = p1*p3) must collapse; float noise scales with n.
double merge_tolerance(int n) { return 1e-12 * n; }

// count * 2^log_value without overflow: exact product while the count fits a
// double and the scale cannot underflow, log-domain otherwise.
double mass_from_count(const mpz_class& count, double log_value) {
    if (sgn(count) == 0) return 0.0;
    if (mpz_sizeinbase(count.get_mpz_t(), 2) <= 53 && log_value > -1000.0) {
        return mpz_get_d(count.get_mpz_t()) * std::exp2(log_value);
    }
    return std::exp2(log2_mpz(count) + log_value);
}

// Neumaier running sum.
struct StableAccumulator {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Visits every composition k of n into d parts with the exact multinomial
// count n! / prod k_i! and the atom log-probability sum k_i * log2 p_i.
// The multinomial is built as a product of binomials C(remaining, k_i), each
// maintained by the ratio update C(r, c+1) = C(r, c) * (r-c) / (c+1).
template <typename Fn>
void enumerate_type_classes(const ProbDist& p, int n, double budget, Fn&& fn) {
    const std::size_t d = p.d();
    const double states = composition_count(n, d);
    if (!(states <= budget)) throw BudgetError(states, budget);

    std::vector<int> ks(d, 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining, double log_value,
                   const mpz_class& coeff) -> void {
        if (pos + 1 == d) {
            ks[pos] = remaining;
            fn(std::span<const int>(ks.data(), d), coeff,
               log_value + remaining * p.log_weight(pos));
            ks[pos] = 0;
            return;
        }
        mpz_class binom = 1;  // C(remaining, c)
        for (int c = 0; c <= remaining; ++c) {
            if (c > 0) {
                binom *= static_cast<unsigned long>(remaining - c + 1);
                mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                                static_cast<unsigned long>(c));
            }
            ks[pos] = c;
            const mpz_class child = coeff * binom;
            self(self, pos + 1, remaining - c, log_value + c * p.log_weight(pos), child);
        }
        ks[pos] = 0;
    };
    rec(rec, 0, n, 0.0, mpz_class(1));
}

// Locates N on a sorted cumulative-count ladder: largest j with cum[j] <= N,
// or -1 when N < cum[0].
std::ptrdiff_t locate_level(const std::vector<mpz_class>& cum, const mpz_class& N) {
    auto it = std::upper_bound(cum.begin(), cum.end(), N);
    return static_cast<std::ptrdiff_t>(it - cum.begin()) - 1;
}

}  // namespace

double composition_count(int n, std::size_t d) {
    double count = 1.0;
    for (std::size_t i = 1; i < d; ++i) {
        count *= static_cast<double>(n) + static_cast<double>(i);
        count /= static_cast<double>(i);
    }
    return count;
}

double log2_mpz(const mpz_class& value) {
    long exp2;
    const double frac = mpz_get_d_2exp(&exp2, value.get_mpz_t());
    return std::log2(std::abs(frac)) + static_cast<double>(exp2);
}

double Staircase::prefix_mass_at(const mpz_class& N) const {
    if (N >= total_count) return prefix_mass.back();
    if (sgn(N) <= 0) return 0.0;
    const std::ptrdiff_t j = locate_level(cum_counts, N);
    const double base = (j >= 0) ? prefix_mass[static_cast<std::size_t>(j)] : 0.0;
    const mpz_class consumed = (j >= 0) ? cum_counts[static_cast<std::size_t>(j)] : mpz_class(0);
    const mpz_class partial = N - consumed;
    return base + mass_from_count(partial, levels[static_cast<std::size_t>(j + 1)].log_value);
}

double Staircase::tail_mass_at(const mpz_class& N) const {
    if (N >= total_count) return 0.0;
    if (sgn(N) <= 0) return prefix_mass.back();
    const std::ptrdiff_t j = locate_level(cum_counts, N);
    const std::size_t next = static_cast<std::size_t>(j + 1);
    const mpz_class remaining = cum_counts[next] - N;
    return tail_mass[next] + mass_from_count(remaining, levels[next].log_value);
}

Staircase staircase(const ProbDist& p, int n, double budget) {
    if (n < 1) throw Error(ErrorCode::ValueOutOfRange, "tensor power n must be positive");

    std::vector<std::pair<double, mpz_class>> raw;
    raw.reserve(static_cast<std::size_t>(std::min(composition_count(n, p.d()), 8e6)));
    const double log_n_factorial = std::lgamma(static_cast<double>(n) + 1.0);
    enumerate_type_classes(p, n, budget,
                           [&](std::span<const int> ks, const mpz_class& count, double lv) {
        // Cross-check the incremental multinomial against log2-factorials.
        double check = log_n_factorial;
        for (int k : ks) check -= std::lgamma(static_cast<double>(k) + 1.0);
        check /= M_LN2;
        const double have = log2_mpz(count);
        if (std::abs(have - check) > 1e-6 * std::max(1.0, std::abs(check))) {
            throw Error(ErrorCode::Internal, "multinomial count failed the log2-factorial check");
        }
        raw.emplace_back(lv, count);
    });

    std::sort(raw.begin(), raw.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    Staircase s;
    s.n = n;
    s.source_d = p.d();
    const double tol = merge_tolerance(n);
    for (auto& [lv, count] : raw) {
        if (!s.levels.empty() && s.levels.back().log_value - lv <= tol) {
            s.levels.back().count += count;
        } else {
            StaircaseLevel level;
            level.log_value = lv;
            level.count = std::move(count);
            s.levels.push_back(std::move(level));
        }
    }

    mpz_class running = 0;
    StableAccumulator forward;
    s.cum_counts.reserve(s.levels.size());
    s.prefix_mass.reserve(s.levels.size());
    for (StaircaseLevel& level : s.levels) {
        level.level_mass = mass_from_count(level.count, level.log_value);
        running += level.count;
        s.cum_counts.push_back(running);
        forward.add(level.level_mass);
        s.prefix_mass.push_back(forward.value());
    }
    s.total_count = running;

    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(p.d()),
                  static_cast<unsigned long>(n));
    if (s.total_count != expected) {
        throw Error(ErrorCode::Internal, "staircase counts do not sum to d^n");
    }

    s.tail_mass.assign(s.levels.size(), 0.0);
    StableAccumulator backward;
    for (std::size_t i = s.levels.size(); i-- > 0;) {
        s.tail_mass[i] = backward.value();
        backward.add(s.levels[i].level_mass);
    }
    return s;
}

FiniteCounts finite_counts(const ProbDist& p, int n, double V, bool strict, double budget) {
    return finite_counts(staircase(p, n, budget), V, strict);
}

FiniteCounts finite_counts(const Staircase& s, double V, bool strict) {
    const double threshold = static_cast<double>(s.n) * V;
    const double tol = merge_tolerance(s.n);

    // Levels are sorted by log_value descending; split indices for both sides.
    const auto& levels = s.levels;
    const std::size_t L = levels.size();

    // Exclusive end of the "above" set (>= for weak, > for strict); levels
    // within tol of the threshold count as equal to it.
    std::size_t upper_end = 0;
    while (upper_end < L &&
           (strict ? levels[upper_end].log_value > threshold + tol
                   : levels[upper_end].log_value >= threshold - tol)) {
        ++upper_end;
    }
    // First index of the "below" set (<= for weak, < for strict).
    std::size_t lower_begin = 0;
    while (lower_begin < L &&
           (strict ? levels[lower_begin].log_value >= threshold - tol
                   : levels[lower_begin].log_value > threshold + tol)) {
        ++lower_begin;
    }

    FiniteCounts fc;
    if (upper_end > 0) {
        fc.m = s.prefix_mass[upper_end - 1];
        fc.s = s.cum_counts[upper_end - 1];
    } else {
        fc.m = 0.0;
        fc.s = 0;
    }
    if (lower_begin < L) {
        fc.m_star = (lower_begin == 0) ? s.prefix_mass.back() : s.tail_mass[lower_begin - 1];
        fc.s_star = s.total_count - ((lower_begin == 0) ? mpz_class(0) : s.cum_counts[lower_begin - 1]);
    } else {
        fc.m_star = 0.0;
        fc.s_star = 0;
    }
    return fc;
}

namespace {

// Q-prefix minus P-prefix at atom count N, evaluated from the tail side once
// the P-prefix passes 1/2 (margins near the top of the curve are differences
// of values close to 1).
double margin_at(const Staircase& sp, const Staircase& sq, const mpz_class& N) {
    const double pp = sp.prefix_mass_at(N);
    if (pp <= 0.5) return sq.prefix_mass_at(N) - pp;
    return sp.tail_mass_at(N) - sq.tail_mass_at(N);
}

// Smallest violating N in (lo, hi], given that hi violates. The difference
// Q - P is concave on a P-linear piece, so the violating set is a suffix.
mpz_class first_violation(const Staircase& sp, const Staircase& sq, mpz_class lo,
                          mpz_class hi, double tolerance) {
    while (lo + 1 < hi) {
        mpz_class mid = (lo + hi) / 2;
        if (margin_at(sp, sq, mid) < -tolerance) {
            hi = std::move(mid);
        } else {
            lo = std::move(mid);
        }
    }
    return hi;
}

}  // namespace

MajorizationVerdict majorizes(const ProbDist& p, int n, const ProbDist& q, int m,
                              double budget, double tolerance) {
    const Staircase sp = staircase(p, n, budget);
    const Staircase sq = staircase(q, m, budget);

    MajorizationVerdict verdict;
    verdict.holds = true;
    verdict.margin = infinity();

    mpz_class prev = 0;
    for (std::size_t j = 0; j < sp.levels.size(); ++j) {
        const mpz_class& N = sp.cum_counts[j];
        const double pp = sp.prefix_mass[j];
        const double margin = (pp <= 0.5)
                                  ? sq.prefix_mass_at(N) - pp
                                  : sp.tail_mass[j] - sq.tail_mass_at(N);
        verdict.margin = std::min(verdict.margin, margin);
        if (margin < -tolerance && verdict.holds) {
            verdict.holds = false;
            verdict.witness_N = first_violation(sp, sq, prev, N, tolerance);
        }
        prev = N;
    }
    return verdict;
}

MajorizationVerdict brute_majorizes(const ProbDist& p, int n, const ProbDist& q, int m,
                                    double tolerance) {
    const double atoms_p = std::pow(static_cast<double>(p.d()), n);
    const double atoms_q = std::pow(static_cast<double>(q.d()), m);
    if (!(atoms_p <= kBruteAtomCap) || !(atoms_q <= kBruteAtomCap)) {
        throw BudgetError(std::max(atoms_p, atoms_q), kBruteAtomCap);
    }

    auto expand = [](const ProbDist& dist, int power) {
        std::vector<double> acc{1.0};
        for (int step = 0; step < power; ++step) {
            std::vector<double> next;
            next.reserve(acc.size() * dist.d());
            for (double a : acc) {
                for (double w : dist.weights()) next.push_back(a * w);
            }
            acc = std::move(next);
        }
        std::sort(acc.begin(), acc.end(), std::greater<double>());
        return acc;
    };

    const std::vector<double> ap = expand(p, n);
    const std::vector<double> aq = expand(q, m);

    MajorizationVerdict verdict;
    verdict.holds = true;
    verdict.margin = infinity();
    double pp = 0.0;
    double qq = 0.0;
    const std::size_t limit = std::max(ap.size(), aq.size());
    for (std::size_t i = 0; i < limit; ++i) {
        if (i < ap.size()) pp += ap[i];
        if (i < aq.size()) qq += aq[i];
        const double margin = qq - pp;
        verdict.margin = std::min(verdict.margin, margin);
        if (margin < -tolerance && verdict.holds) {
            verdict.holds = false;
            verdict.witness_N = mpz_class(static_cast<unsigned long>(i + 1));
        }
    }
    return verdict;
}

Rational Rational::from_string(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");

    auto parse_int = [](const std::string& part) -> std::int64_t {
        if (part.empty() || part.size() > 18 ||
            !std::all_of(part.begin(), part.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw Error(ErrorCode::ParseError, "bad rational component: " + part);
        }
        return std::stoll(part);
    };

    Rational r;
    if (auto slash = s.find('/'); slash != std::string::npos) {
        r.num = parse_int(s.substr(0, slash));
        r.den = parse_int(s.substr(slash + 1));
    } else if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string frac = s.substr(dot + 1);
        if (frac.size() > 15) throw Error(ErrorCode::ParseError, "too many decimal digits");
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        const std::int64_t whole = dot == 0 ? 0 : parse_int(s.substr(0, dot));
        r.num = whole * scale + (frac.empty() ? 0 : parse_int(frac));
        r.den = scale;
    } else {
        r.num = parse_int(s);
        r.den = 1;
    }
    if (r.num <= 0 || r.den <= 0) {
        throw Error(ErrorCode::ParseError, "rational must be positive");
    }
    const std::int64_t g = std::gcd(r.num, r.den);
    r.num /= g;
    r.den /= g;
    return r;
}

Rational Rational::from_double(double value) {
    if (!(value > 0.0) || !std::isfinite(value) || value > 1e6) {
        throw Error(ErrorCode::ParseError, "rational must be a positive real below 1e6");
    }
    Rational r;
    r.num = std::llround(value * 1e12);
    r.den = 1000000000000LL;
    if (r.num <= 0) r.num = 1;
    const std::int64_t g = std::gcd(r.num, r.den);
    r.num /= g;
    r.den /= g;
    return r;
}

std::int64_t Rational::floor_times(std::int64_t n) const {
    const __int128 product = static_cast<__int128>(n) * num;
    return static_cast<std::int64_t>(product / den);
}

MinPowerResult min_power(const ProbDist& p, const ProbDist& q, const Rational& r,
                         int n_max, double budget, double tolerance) {
    if (n_max < 1) throw Error(ErrorCode::ValueOutOfRange, "n_max must be positive");
    MinPowerResult result;
    result.holds_by_n.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        const std::int64_t m = r.floor_times(n);
        bool holds;
        if (m == 0 || is_trivial(q)) {
            holds = true;  // a trivial target majorizes everything
        } else {
            // C(m+d-1, d-1) >= m+1 for d >= 2, so an over-int m cannot fit
            // any budget this side of 2^31 states.
            if (m > 2000000000LL) throw BudgetError(static_cast<double>(m), budget);
            holds = majorizes(p, n, q, static_cast<int>(m), budget, tolerance).holds;
        }
        result.holds_by_n.push_back(holds);
        if (holds && !result.first_n) result.first_n = n;
    }
    return result;
}

EmpiricalExponents empirical_exponents(const ProbDist& p, int n, double V, double budget) {
    return empirical_exponents(staircase(p, n, budget), V);
}

EmpiricalExponents empirical_exponents(const Staircase& s, double V) {
    const FiniteCounts fc = finite_counts(s, V, /*strict=*/false);
    const double inv_n = 1.0 / static_cast<double>(s.n);
    EmpiricalExponents e;
    e.M_hat = fc.m > 0.0 ? inv_n * std::log2(fc.m) : -infinity();
    e.M_star_hat = fc.m_star > 0.0 ? inv_n * std::log2(fc.m_star) : -infinity();
    e.S_hat = sgn(fc.s) > 0 ? inv_n * log2_mpz(fc.s) : -infinity();
    e.S_star_hat = sgn(fc.s_star) > 0 ? inv_n * log2_mpz(fc.s_star) : -infinity();
    return e;
}

// ---------------------------------------------------------------------------
// Exact dyadic mode: every double weight is m * 2^e exactly, so products of
// weights, level masses and prefix sums are exact integers over a power-of-two
// denominator; every comparison below is integer arithmetic.

namespace {

struct DyadicWeight {
    mpz_class odd;      // odd mantissa
    std::int64_t exp2;  // weight = odd * 2^exp2
};

DyadicWeight decompose(double w) {
    int e = 0;
    const double frac = std::frexp(w, &e);
    auto mant = static_cast<unsigned long long>(std::ldexp(frac, 53));  // exact
    std::int64_t shift = static_cast<std::int64_t>(e) - 53;
    while ((mant & 1ULL) == 0ULL) {
        mant >>= 1;
        ++shift;
    }
    DyadicWeight dw;
    mpz_import(dw.odd.get_mpz_t(), 1, 1, sizeof(mant), 0, 0, &mant);
    dw.exp2 = shift;
    return dw;
}

struct ExactLevel {
    mpz_class num;      // odd
    std::int64_t exp2;  // per-atom probability = num * 2^exp2
    mpz_class count;
};

int compare_dyadic(const mpz_class& a_num, std::int64_t a_exp, const mpz_class& b_num,
                   std::int64_t b_exp) {
    if (a_exp >= b_exp) {
        mpz_class shifted = a_num << static_cast<unsigned long>(a_exp - b_exp);
        return cmp(shifted, b_num);
    }
    mpz_class shifted = b_num << static_cast<unsigned long>(b_exp - a_exp);
    return cmp(a_num, shifted);
}

struct ExactStaircase {
    std::vector<ExactLevel> levels;
    std::vector<mpz_class> cum_counts;
    std::vector<mpz_class> prefix_num;  // prefix mass = prefix_num * 2^base_exp
    std::int64_t base_exp = 0;
    mpz_class total_count;
    // Exact normalizer: the stored weights sum to norm_num * 2^norm_exp, so
    // the n-fold power's true total mass is that value to the n-th power.
    // Prefixes are compared after dividing by it (the doubles almost never
    // sum to exactly 1).
    mpz_class norm_num;
    std::int64_t norm_exp = 0;

    // Exact top-N mass as a dyadic numerator over 2^-base_exp.
    mpz_class prefix_num_at(const mpz_class& N) const {
        if (N >= total_count) return prefix_num.back();
        if (sgn(N) <= 0) return mpz_class(0);
        const std::ptrdiff_t j = locate_level(cum_counts, N);
        mpz_class base = (j >= 0) ? prefix_num[static_cast<std::size_t>(j)] : mpz_class(0);
        const mpz_class consumed =
            (j >= 0) ? cum_counts[static_cast<std::size_t>(j)] : mpz_class(0);
        const ExactLevel& level = levels[static_cast<std::size_t>(j + 1)];
        mpz_class partial = (N - consumed) * level.num;
        partial <<= static_cast<unsigned long>(level.exp2 - base_exp);
        return base + partial;
    }
};

ExactStaircase exact_staircase(const ProbDist& p, int n, double budget) {
    std::vector<DyadicWeight> dyadic;
    dyadic.reserve(p.d());
    for (double w : p.weights()) dyadic.push_back(decompose(w));

    std::vector<ExactLevel> raw;
    enumerate_type_classes(p, n, budget,
                           [&](std::span<const int> ks, const mpz_class& count, double) {
        ExactLevel level;
        level.num = 1;
        level.exp2 = 0;
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (ks[i] == 0) continue;
            mpz_class powed;
            mpz_pow_ui(powed.get_mpz_t(), dyadic[i].odd.get_mpz_t(),
                       static_cast<unsigned long>(ks[i]));
            level.num *= powed;
            level.exp2 += dyadic[i].exp2 * ks[i];
        }
        level.count = count;
        raw.push_back(std::move(level));
    });

    std::sort(raw.begin(), raw.end(), [](const ExactLevel& a, const ExactLevel& b) {
        return compare_dyadic(a.num, a.exp2, b.num, b.exp2) > 0;
    });

    ExactStaircase s;
    for (ExactLevel& level : raw) {
        if (!s.levels.empty() && s.levels.back().exp2 == level.exp2 &&
            s.levels.back().num == level.num) {
            s.levels.back().count += level.count;
        } else {
            s.levels.push_back(std::move(level));
        }
    }

    s.base_exp = std::numeric_limits<std::int64_t>::max();
    for (const ExactLevel& level : s.levels) s.base_exp = std::min(s.base_exp, level.exp2);

    mpz_class running_count = 0;
    mpz_class running_num = 0;
    for (const ExactLevel& level : s.levels) {
        running_count += level.count;
        s.cum_counts.push_back(running_count);
        mpz_class mass = level.count * level.num;
        mass <<= static_cast<unsigned long>(level.exp2 - s.base_exp);
        running_num += mass;
        s.prefix_num.push_back(running_num);
    }
    s.total_count = running_count;

    std::int64_t weight_min_exp = dyadic.front().exp2;
    for (const DyadicWeight& dw : dyadic) weight_min_exp = std::min(weight_min_exp, dw.exp2);
    mpz_class weight_sum = 0;
    for (const DyadicWeight& dw : dyadic) {
        mpz_class term = dw.odd;
        term <<= static_cast<unsigned long>(dw.exp2 - weight_min_exp);
        weight_sum += term;
    }
    mpz_pow_ui(s.norm_num.get_mpz_t(), weight_sum.get_mpz_t(),
               static_cast<unsigned long>(n));
    s.norm_exp = weight_min_exp * n;
    return s;
}

}  // namespace

MajorizationVerdict majorizes_exact(const ProbDist& p, int n, const ProbDist& q, int m,
                                    double budget) {
    const ExactStaircase sp = exact_staircase(p, n, budget);
    const ExactStaircase sq = exact_staircase(q, m, budget);

    // Normalized comparison by cross-multiplication:
    //   pnum*2^bp / (normP*2^ep)  vs  qnum*2^bq / (normQ*2^eq)
    // becomes (pnum*normQ)*2^(bp+eq) vs (qnum*normP)*2^(bq+ep).
    const std::int64_t exp_p_side = sp.base_exp + sq.norm_exp;
    const std::int64_t exp_q_side = sq.base_exp + sp.norm_exp;
    const std::int64_t common = std::min(exp_p_side, exp_q_side);
    const unsigned long shift_p = static_cast<unsigned long>(exp_p_side - common);
    const unsigned long shift_q = static_cast<unsigned long>(exp_q_side - common);
    const double log2_norm_p = log2_mpz(sp.norm_num) + static_cast<double>(sp.norm_exp);
    const double log2_norm_q = log2_mpz(sq.norm_num) + static_cast<double>(sq.norm_exp);

    auto diff_at = [&](const mpz_class& N) {
        mpz_class left = sp.prefix_num_at(N) * sq.norm_num;
        left <<= shift_p;
        mpz_class right = sq.prefix_num_at(N) * sp.norm_num;
        right <<= shift_q;
        return mpz_class(right - left);  // exact (Q-prefix - P-prefix) numerator
    };

    MajorizationVerdict verdict;
    verdict.holds = true;
    verdict.margin = infinity();

    mpz_class prev = 0;
    for (std::size_t j = 0; j < sp.levels.size(); ++j) {
        const mpz_class& N = sp.cum_counts[j];
        const mpz_class diff = diff_at(N);
        double margin = 0.0;
        if (sgn(diff) != 0) {
            // diff * 2^common / (normP * normQ), as a double diagnostic.
            margin = (sgn(diff) > 0 ? 1.0 : -1.0) *
                     std::exp2(log2_mpz(diff) + static_cast<double>(common) -
                               log2_norm_p - log2_norm_q);
        }
        verdict.margin = std::min(verdict.margin, margin);
        if (sgn(diff) < 0 && verdict.holds) {
            verdict.holds = false;
            mpz_class lo = prev;
            mpz_class hi = N;
            while (lo + 1 < hi) {
                mpz_class mid = (lo + hi) / 2;
                if (sgn(diff_at(mid)) < 0) {
                    hi = std::move(mid);
                } else {
                    lo = std::move(mid);
                }
            }
            verdict.witness_N = hi;
        }
        prev = N;
    }
    return verdict;
}

}  // namespace majorate
