// majorate — majorization rates, Renyi exponents and exact tensor-power
// oracles for finite probability distributions.
//
// Exit codes: 0 success (majorize: order holds), 2 input/parse failure,
// 3 majorize verdict false, 4 composition budget exceeded, 5 domain error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "majorate/entropy.hpp"
#include "majorate/exponents.hpp"
#include "majorate/io.hpp"
#include "majorate/oracle.hpp"
#include "majorate/rate.hpp"

namespace {

using namespace majorate;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNotMajorized = 3;
constexpr int kExitBudget = 4;
constexpr int kExitDomain = 5;

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string json_string(const std::string& s) { return "\"" + json_escape(s) + "\""; }

// Reals that may be -inf travel as JSON strings; everything finite is a
// number with 17 significant digits.
std::string json_real(double v) {
    if (std::isinf(v)) return v > 0 ? "\"+inf\"" : "\"-inf\"";
    return format_real(v);
}

std::string csv_real(double v) {
    if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
    return format_real(v);
}

struct OutputSink {
    std::string path = "-";

    void write(const std::string& content) const {
        if (path == "-") {
            std::cout << content;
            std::cout.flush();
            return;
        }
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
        out << content;
    }
};

// Errors raised while reading/validating an input file exit with the parse
// status; identical codes raised later from computations exit as domain
// errors.
class InputError : public Error {
public:
    explicit InputError(const Error& inner)
        : Error(inner.code(), std::string(error_code_name(inner.code())) + ": " +
                                  inner.what()) {}
};

ProbDist load_input(const std::string& path) {
    try {
        return load_dist(path);
    } catch (const Error& e) {
        throw InputError(e);
    }
}

ExtendedAlpha parse_alpha(const std::string& text) {
    if (text == "inf" || text == "+inf" || text == "infinity") {
        return ExtendedAlpha::plus_infinity();
    }
    if (text == "-inf") return ExtendedAlpha::minus_infinity();
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || text.empty()) {
        throw Error(ErrorCode::ParseError, "bad alpha: " + text);
    }
    return ExtendedAlpha::finite(v);
}

double resolve_budget(double flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("MAJORATE_BUDGET")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return kDefaultBudget;
}

// --- subcommand reports ----------------------------------------------------

std::string entropy_values_json(const std::string& source, const ProbDist& p,
                                const std::vector<std::string>& alpha_args) {
    std::ostringstream out;
    out << "{\"source\":" << json_string(source) << ",\"d\":" << p.d() << ",\"values\":[";
    for (std::size_t i = 0; i < alpha_args.size(); ++i) {
        const ExtendedAlpha alpha = parse_alpha(alpha_args[i]);
        if (i) out << ",";
        out << "{\"alpha\":" << json_string(to_string(alpha))
            << ",\"entropy_bits\":" << json_real(renyi(p, alpha)) << "}";
    }
    out << "]}\n";
    return out.str();
}

std::string entropy_sweep_csv(const ProbDist& p, int resolution) {
    std::ostringstream out;
    out << "alpha,entropy_bits\n";
    const int points = 4 * resolution + 1;
    const int last = points - 1;
    for (int j = 0; j <= last; ++j) {
        ExtendedAlpha alpha;
        if (j == 0) {
            alpha = ExtendedAlpha::finite(0.0);
        } else if (j == last) {
            alpha = ExtendedAlpha::plus_infinity();
        } else if (2 * j == last) {
            alpha = ExtendedAlpha::finite(1.0);
        } else {
            alpha = ExtendedAlpha::finite(
                std::tan(0.5 * M_PI * static_cast<double>(j) / last));
        }
        out << to_string(alpha) << "," << csv_real(renyi(p, alpha)) << "\n";
    }
    return out.str();
}

std::string rate_json(const RateResult& r) {
    std::ostringstream out;
    out << "{\"rate\":" << json_real(r.rate) << ",\"status\":"
        << json_string(r.status == RateStatus::ExactSpecialCase ? "exact_special_case"
                                                                : "grid_refined");
    out << ",\"argmin_alphas\":[";
    for (std::size_t i = 0; i < r.argmin_alphas.size(); ++i) {
        if (i) out << ",";
        out << json_string(to_string(r.argmin_alphas[i]));
    }
    out << "],\"samples\":[";
    for (std::size_t i = 0; i < r.samples.size(); ++i) {
        if (i) out << ",";
        out << "{\"alpha\":" << json_string(to_string(r.samples[i].alpha))
            << ",\"ratio\":" << json_real(r.samples[i].ratio) << "}";
    }
    out << "]}\n";
    return out.str();
}

std::string exponents_csv(const std::vector<ExponentPoint>& curve) {
    std::ostringstream out;
    out << "V,alpha,M,M_star,S,S_star\n";
    for (const ExponentPoint& pt : curve) {
        out << csv_real(pt.V) << "," << to_string(pt.alpha_V) << "," << csv_real(pt.M)
            << "," << csv_real(pt.M_star) << "," << csv_real(pt.S) << ","
            << csv_real(pt.S_star) << "\n";
    }
    return out.str();
}

std::string uniform_exponents_csv(const ProbDist& p) {
    // Degenerate single-value case: every atom sits at V = -log2 d.
    const double log_d = std::log2(static_cast<double>(p.d()));
    std::ostringstream out;
    out << "V,alpha,M,M_star,S,S_star\n";
    out << csv_real(-log_d) << ",any,0,0," << csv_real(log_d) << "," << csv_real(log_d)
        << "\n";
    return out.str();
}

std::string majorize_json(const MajorizationVerdict& v, int n, int m, bool exact) {
    std::ostringstream out;
    out << "{\"holds\":" << (v.holds ? "true" : "false") << ",\"n\":" << n
        << ",\"m\":" << m << ",\"margin\":" << json_real(v.margin)
        << ",\"exact\":" << (exact ? "true" : "false");
    if (v.witness_N) {
        out << ",\"witness_N\":" << json_string(v.witness_N->get_str());
    }
    out << "}\n";
    return out.str();
}

struct VerifyRow {
    double V = 0.0;
    std::string alpha;
    EmpiricalExponents hat;
    double M = 0.0, M_star = 0.0, S = 0.0, S_star = 0.0;
};

struct VerifyTable {
    int n = 0;
    std::vector<VerifyRow> rows;
    double dev_M = 0.0, dev_M_star = 0.0, dev_S = 0.0, dev_S_star = 0.0;
};

VerifyTable build_verify_table(const ProbDist& p, int n, int resolution,
                               const std::vector<double>& v_overrides, double budget) {
    VerifyTable table;
    table.n = n;
    const Staircase s = staircase(p, n, budget);

    auto add_row = [&](double V, const std::string& alpha_text, double M, double M_star,
                       double S, double S_star) {
        VerifyRow row;
        row.V = V;
        row.alpha = alpha_text;
        row.hat = empirical_exponents(s, V);
        row.M = M;
        row.M_star = M_star;
        row.S = S;
        row.S_star = S_star;
        table.rows.push_back(row);
        auto bump = [](double& acc, double hat, double exact) {
            if (std::isinf(hat) || std::isinf(exact)) return;
            acc = std::max(acc, std::abs(hat - exact));
        };
        bump(table.dev_M, row.hat.M_hat, M);
        bump(table.dev_M_star, row.hat.M_star_hat, M_star);
        bump(table.dev_S, row.hat.S_hat, S);
        bump(table.dev_S_star, row.hat.S_star_hat, S_star);
    };

    if (is_uniform(p)) {
        const double log_d = std::log2(static_cast<double>(p.d()));
        add_row(-log_d, "any", 0.0, 0.0, log_d, log_d);
        return table;
    }
    if (!v_overrides.empty()) {
        for (double v : v_overrides) {
            const ExponentPoint pt = exponents_at(p, v);
            add_row(pt.V, to_string(pt.alpha_V), pt.M, pt.M_star, pt.S, pt.S_star);
        }
        return table;
    }
    for (const ExponentPoint& pt : exponent_curve(p, resolution)) {
        add_row(pt.V, to_string(pt.alpha_V), pt.M, pt.M_star, pt.S, pt.S_star);
    }
    return table;
}

std::string verify_csv(const VerifyTable& t) {
    std::ostringstream out;
    out << "V,alpha,M_hat,M,M_star_hat,M_star,S_hat,S,S_star_hat,S_star\n";
    for (const VerifyRow& r : t.rows) {
        out << csv_real(r.V) << "," << r.alpha << "," << csv_real(r.hat.M_hat) << ","
            << csv_real(r.M) << "," << csv_real(r.hat.M_star_hat) << ","
            << csv_real(r.M_star) << "," << csv_real(r.hat.S_hat) << "," << csv_real(r.S)
            << "," << csv_real(r.hat.S_star_hat) << "," << csv_real(r.S_star) << "\n";
    }
    return out.str();
}

std::string verify_json(const VerifyTable& t) {
    std::ostringstream out;
    out << "{\"n\":" << t.n << ",\"rows\":[";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const VerifyRow& r = t.rows[i];
        if (i) out << ",";
        out << "{\"V\":" << json_real(r.V) << ",\"alpha\":" << json_string(r.alpha)
            << ",\"M_hat\":" << json_real(r.hat.M_hat) << ",\"M\":" << json_real(r.M)
            << ",\"M_star_hat\":" << json_real(r.hat.M_star_hat)
            << ",\"M_star\":" << json_real(r.M_star)
            << ",\"S_hat\":" << json_real(r.hat.S_hat) << ",\"S\":" << json_real(r.S)
            << ",\"S_star_hat\":" << json_real(r.hat.S_star_hat)
            << ",\"S_star\":" << json_real(r.S_star) << "}";
    }
    out << "],\"max_abs_deviation\":{\"M\":" << json_real(t.dev_M)
        << ",\"M_star\":" << json_real(t.dev_M_star) << ",\"S\":" << json_real(t.dev_S)
        << ",\"S_star\":" << json_real(t.dev_S_star) << "}}\n";
    return out.str();
}

std::string chain_json(const ChainReport& r, int n_max) {
    std::ostringstream out;
    const char* status = "forward_not_triggered";
    if (r.status == ChainStatus::ForwardConfirmed) status = "forward_confirmed";
    if (r.status == ChainStatus::Inconclusive) status = "inconclusive";
    out << "{\"strict_everywhere\":" << (r.strict_everywhere ? "true" : "false")
        << ",\"entropy_margin_min\":" << json_real(r.entropy_margin_min)
        << ",\"n_max\":" << n_max << ",\"first_n\":";
    if (r.first_n) {
        out << *r.first_n;
    } else {
        out << "null";
    }
    out << ",\"holds_by_n\":[";
    for (std::size_t i = 0; i < r.holds_by_n.size(); ++i) {
        if (i) out << ",";
        out << (r.holds_by_n[i] ? "true" : "false");
    }
    out << "],\"necessary_ok\":" << (r.necessary_ok ? "true" : "false")
        << ",\"status\":" << json_string(status) << "}\n";
    return out.str();
}

std::string staircase_csv(const Staircase& s) {
    std::ostringstream out;
    out << "log_value,count,level_mass\n";
    for (const StaircaseLevel& level : s.levels) {
        out << csv_real(level.log_value) << "," << level.count.get_str() << ","
            << csv_real(level.level_mass) << "\n";
    }
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"majorization rates, Renyi exponents and exact tensor-power oracles"};
    app.require_subcommand(1);

    double budget_flag = kDefaultBudget;
    bool budget_given = false;
    app.add_option("--budget", budget_flag,
                   "composition budget (default 2e6; env MAJORATE_BUDGET)")
        ->each([&](const std::string&) { budget_given = true; });

    std::string out_path = "-";
    app.add_option("-o,--output", out_path, "output file (default stdout)");

    std::function<std::string(double)> action;  // budget -> report
    int exit_override = kExitOk;

    // entropy -------------------------------------------------------------
    auto* cmd_entropy = app.add_subcommand("entropy", "Renyi entropies of a distribution");
    static std::string entropy_path;
    static std::vector<std::string> entropy_alphas;
    static int entropy_resolution = 16;
    cmd_entropy->add_option("dist", entropy_path, "distribution file")->required();
    cmd_entropy->add_option("--alpha", entropy_alphas, "alpha values (number or +inf)");
    cmd_entropy->add_option("--resolution", entropy_resolution, "sweep resolution")
        ->check(CLI::PositiveNumber);
    cmd_entropy->callback([&] {
        action = [&](double) {
            const ProbDist p = load_input(entropy_path);
            if (!entropy_alphas.empty()) {
                return entropy_values_json(entropy_path, p, entropy_alphas);
            }
            return entropy_sweep_csv(p, entropy_resolution);
        };
    });

    // rate ----------------------------------------------------------------
    auto* cmd_rate = app.add_subcommand("rate", "exchange rate R(P,Q)");
    static std::string rate_p, rate_q;
    static int rate_resolution = 2049;
    cmd_rate->add_option("P", rate_p, "source distribution file")->required();
    cmd_rate->add_option("Q", rate_q, "target distribution file")->required();
    cmd_rate->add_option("--resolution", rate_resolution, "alpha grid points")
        ->check(CLI::PositiveNumber);
    cmd_rate->callback([&] {
        action = [&](double) {
            const ProbDist p = load_input(rate_p);
            const ProbDist q = load_input(rate_q);
            RateOptions options;
            options.grid_points = rate_resolution;
            return rate_json(rate(p, q, options));
        };
    });

    // exponents -----------------------------------------------------------
    auto* cmd_exp = app.add_subcommand("exponents", "asymptotic exponent curve (CSV)");
    static std::string exp_path;
    static int exp_resolution = 16;
    cmd_exp->add_option("dist", exp_path, "distribution file")->required();
    cmd_exp->add_option("--resolution", exp_resolution, "4*resolution interior points")
        ->check(CLI::PositiveNumber);
    cmd_exp->callback([&] {
        action = [&](double) {
            const ProbDist p = load_input(exp_path);
            if (is_uniform(p)) return uniform_exponents_csv(p);
            return exponents_csv(exponent_curve(p, exp_resolution));
        };
    });

    // majorize ------------------------------------------------------------
    auto* cmd_maj = app.add_subcommand("majorize", "does Q^(x)m majorize P^(x)n?");
    static std::string maj_p, maj_q;
    static int maj_n = 1, maj_m = 1;
    static double maj_tolerance = 1e-12;
    static bool maj_exact = false;
    cmd_maj->add_option("P", maj_p, "source distribution file")->required();
    cmd_maj->add_option("Q", maj_q, "target distribution file")->required();
    cmd_maj->add_option("-n", maj_n, "tensor power of P")->required()->check(CLI::PositiveNumber);
    cmd_maj->add_option("-m", maj_m, "tensor power of Q")->required()->check(CLI::PositiveNumber);
    cmd_maj->add_option("--tolerance", maj_tolerance, "comparison tolerance (default 1e-12)")
        ->check(CLI::PositiveNumber);
    cmd_maj->add_flag("--exact", maj_exact, "exact dyadic-rational comparisons");
    cmd_maj->callback([&] {
        action = [&](double budget) {
            const ProbDist p = load_input(maj_p);
            const ProbDist q = load_input(maj_q);
            const MajorizationVerdict v =
                maj_exact ? majorizes_exact(p, maj_n, q, maj_m, budget)
                          : majorizes(p, maj_n, q, maj_m, budget, maj_tolerance);
            if (!v.holds) exit_override = kExitNotMajorized;
            return majorize_json(v, maj_n, maj_m, maj_exact);
        };
    });

    // verify ----------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "empirical vs asymptotic exponents");
    static std::string verify_path;
    static int verify_n = 4;
    static int verify_resolution = 4;
    static std::string verify_format = "json";
    static std::vector<double> verify_vs;
    cmd_verify->add_option("dist", verify_path, "distribution file")->required();
    cmd_verify->add_option("-n", verify_n, "tensor power")->required()->check(CLI::PositiveNumber);
    cmd_verify->add_option("--resolution", verify_resolution, "curve resolution")
        ->check(CLI::PositiveNumber);
    cmd_verify->add_option("--V", verify_vs, "evaluate at these V only (else the curve grid)");
    cmd_verify->add_option("--format", verify_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd_verify->callback([&] {
        action = [&](double budget) {
            const ProbDist p = load_input(verify_path);
            const VerifyTable table =
                build_verify_table(p, verify_n, verify_resolution, verify_vs, budget);
            return verify_format == "csv" ? verify_csv(table) : verify_json(table);
        };
    });

    // chain -----------------------------------------------------------------
    auto* cmd_chain = app.add_subcommand("chain", "strict dominance vs finite-n majorization");
    static std::string chain_p, chain_q;
    static int chain_n_max = 8;
    cmd_chain->add_option("P", chain_p, "source distribution file")->required();
    cmd_chain->add_option("Q", chain_q, "target distribution file")->required();
    cmd_chain->add_option("--n-max", chain_n_max, "largest tensor power to test")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_chain->callback([&] {
        action = [&](double budget) {
            const ProbDist p = load_input(chain_p);
            const ProbDist q = load_input(chain_q);
            return chain_json(chain_check(p, q, chain_n_max, budget), chain_n_max);
        };
    });

    // staircase ---------------------------------------------------------------
    auto* cmd_stairs = app.add_subcommand("staircase", "type-class levels of P^(x)n (CSV)");
    static std::string stairs_path;
    static int stairs_n = 1;
    cmd_stairs->add_option("dist", stairs_path, "distribution file")->required();
    cmd_stairs->add_option("-n", stairs_n, "tensor power")->required()->check(CLI::PositiveNumber);
    cmd_stairs->callback([&] {
        action = [&](double budget) {
            const ProbDist p = load_input(stairs_path);
            return staircase_csv(staircase(p, stairs_n, budget));
        };
    });

    // Global flags may trail the subcommand arguments.
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    const double budget = resolve_budget(budget_flag, budget_given);
    try {
        const std::string report = action(budget);
        OutputSink sink;
        sink.path = out_path;
        sink.write(report);
        return exit_override;
    } catch (const InputError& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return e.code() == ErrorCode::ParseError ? kExitParse : kExitDomain;
    }
}
