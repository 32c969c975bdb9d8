#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "core.hpp"
#include "csv.hpp"
#include "normal.hpp"
#include "parallel.hpp"
#include "randgen.hpp"
#include "statistics.hpp"

// Null-distribution machinery: Monte Carlo critical values, the printed
// large-sample rules, p-values and decisions.

namespace nbue {

enum class Method { monte_carlo, asymptotic };

inline const char* to_string(Method m) { return m == Method::monte_carlo ? "monte_carlo" : "asymptotic"; }

inline Method parse_method(const std::string& text) {
    if (text == "mc" || text == "monte_carlo") return Method::monte_carlo;
    if (text == "asymptotic" || text == "asy") return Method::asymptotic;
    throw Error(ErrorCode::parse_error, "unknown method '" + text + "' (expected mc or asymptotic)");
}

inline constexpr std::size_t min_calibration_reps = 10'000;

inline std::size_t default_calibration_reps(std::size_t n) { return n <= 30 ? 1'000'000 : 200'000; }

struct CriticalValueTable {
    TestSpec spec;
    std::size_t n = 0;
    double level = 0.05;
    double crit = 0.0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::size_t quantile_index = 0; // 1-based rank in the sorted null sample
};

namespace detail {

inline void check_level(double level) {
    if (!(level > 0.0 && level < 1.0)) throw Error(ErrorCode::out_of_range, "level must lie in (0,1)");
}

inline void check_calibration(const TestSpec& spec, std::size_t n, std::size_t reps) {
    if (n < spec.min_n()) {
        throw Error(ErrorCode::unsupported_n, spec.label() + " is undefined for n = " + std::to_string(n));
    }
    if (reps < min_calibration_reps) {
        throw Error(ErrorCode::invalid_parameter,
                    "calibration needs at least " + std::to_string(min_calibration_reps) + " replicates");
    }
}

// ceil(x) that treats values within rounding noise of an integer as that integer.
inline std::size_t robust_ceil(double x) {
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, std::abs(x))) return static_cast<std::size_t>(nearest);
    return static_cast<std::size_t>(std::ceil(x));
}

} // namespace detail

inline std::size_t quantile_index(Tail tail, double level, std::size_t reps) {
    detail::check_level(level);
    const double r = static_cast<double>(reps);
    const std::size_t k = detail::robust_ceil(tail == Tail::upper ? (1.0 - level) * r : level * r);
    return std::clamp<std::size_t>(k, 1, reps);
}

// Statistic values for Exp(1) samples; replicate r draws from RngStream(seed, r).
// out[s][r] is spec s on replicate r.
inline std::vector<std::vector<double>> simulate_null(std::span<const TestSpec> specs, std::size_t n, std::size_t reps,
                                                      std::uint64_t seed) {
    std::vector<std::vector<double>> out(specs.size(), std::vector<double>(reps));
    parallel_for(reps, [&](std::size_t begin, std::size_t end) {
        for (std::size_t r = begin; r < end; ++r) {
            RngStream rng(seed, r);
            const Sample s = sample_exponential(rng, n);
            for (std::size_t k = 0; k < specs.size(); ++k) out[k][r] = evaluate(specs[k], s).value;
        }
    });
    return out;
}

inline std::vector<double> simulate_null(const TestSpec& spec, std::size_t n, std::size_t reps, std::uint64_t seed) {
    return std::move(simulate_null(std::span<const TestSpec>(&spec, 1), n, reps, seed).front());
}

// Empirical quantile of an already sorted null sample; no interpolation.
inline CriticalValueTable critical_value_from_sorted(const TestSpec& spec, std::size_t n, double level,
                                                     std::span<const double> sorted_null, std::uint64_t seed) {
    const std::size_t k = quantile_index(spec.tail(), level, sorted_null.size());
    return {spec, n, level, sorted_null[k - 1], sorted_null.size(), seed, k};
}

// Calibrates every spec at every level from one shared set of null replicates.
// Result order: spec-major, then level. Identical to calling calibrate() per pair.
inline std::vector<CriticalValueTable> calibrate_many(std::span<const TestSpec> specs, std::size_t n,
                                                      std::span<const double> levels, std::size_t reps,
                                                      std::uint64_t seed) {
    for (const auto& spec : specs) detail::check_calibration(spec, n, reps);
    for (double level : levels) detail::check_level(level);
    auto null = simulate_null(specs, n, reps, seed);
    std::vector<CriticalValueTable> out;
    out.reserve(specs.size() * levels.size());
    for (std::size_t k = 0; k < specs.size(); ++k) {
        std::sort(null[k].begin(), null[k].end());
        for (double level : levels) out.push_back(critical_value_from_sorted(specs[k], n, level, null[k], seed));
    }
    return out;
}

inline CriticalValueTable calibrate(const TestSpec& spec, std::size_t n, double level, std::size_t reps,
                                    std::uint64_t seed) {
    return calibrate_many(std::span<const TestSpec>(&spec, 1), n, std::span<const double>(&level, 1), reps, seed)
        .front();
}

// Strictly beyond the critical value in the given direction.
inline bool beyond(Tail side, double statistic, double crit) {
    return side == Tail::upper ? statistic > crit : statistic < crit;
}

// (1 + #{null at least as extreme}) / (reps + 1) against a sorted null sample.
inline double p_value_from_sorted(std::span<const double> sorted_null, double statistic, Tail tail) {
    std::size_t extreme = 0;
    if (tail == Tail::upper) {
        extreme = static_cast<std::size_t>(sorted_null.end() -
                                           std::lower_bound(sorted_null.begin(), sorted_null.end(), statistic));
    } else {
        extreme = static_cast<std::size_t>(std::upper_bound(sorted_null.begin(), sorted_null.end(), statistic) -
                                           sorted_null.begin());
    }
    return static_cast<double>(1 + extreme) / static_cast<double>(sorted_null.size() + 1);
}

inline double mc_p_value(const TestSpec& spec, double statistic, std::size_t n, std::size_t reps,
                         std::uint64_t seed) {
    detail::check_calibration(spec, n, reps);
    auto null = simulate_null(spec, n, reps, seed);
    std::sort(null.begin(), null.end());
    return p_value_from_sorted(null, statistic, spec.tail());
}

// Large-sample rule reduced to standardized = (statistic - center) / scale,
// compared against a normal quantile (or, for T2, the one-sided
// Kolmogorov-Smirnov limit P(sqrt(n) T2 > x) -> exp(-2 x^2)).
struct AsymptoticRule {
    enum class Kind { normal, smirnov };

    TestSpec spec;
    std::size_t n = 0;
    Kind kind = Kind::normal;
    double center = 0.0;
    double scale = 1.0; // may be negative (T7)
    Tail tail = Tail::upper;
    bool inclusive = false; // ">=" / "<=" rather than strict

    double standardize(double statistic) const { return (statistic - center) / scale; }
};

inline bool has_asymptotic_rule(const TestSpec& spec) {
    switch (spec.id()) {
    case TestId::T2:
    case TestId::T3:
    case TestId::T4:
    case TestId::T6:
    case TestId::T7:
    case TestId::T8: return true;
    default: return false;
    }
}

inline AsymptoticRule asymptotic_rule(const TestSpec& spec, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::unsupported_n, "n must be positive");
    const double nd = static_cast<double>(n);
    AsymptoticRule rule;
    rule.spec = spec;
    rule.n = n;
    switch (spec.id()) {
    case TestId::T2:
        rule.kind = AsymptoticRule::Kind::smirnov;
        rule.scale = 1.0 / std::sqrt(nd);
        break;
    case TestId::T3: // the statistic already carries sqrt(n): reject iff T3 <= -z
        rule.tail = Tail::lower;
        rule.inclusive = true;
        break;
    case TestId::T4: {
        const auto aly = aly_normalization(n);
        rule.center = aly.lambda_n;
        rule.scale = aly.sigma_n / std::sqrt(nd);
        rule.inclusive = true;
        break;
    }
    case TestId::T6: rule.scale = 1.0 / std::sqrt(45.0 * nd); break;
    case TestId::T7: {
        const double a = spec.alpha_param();
        rule.scale = (a - 1.0) * std::sqrt((1.0 + 2.0 * a - 2.0 * a * a) / (45.0 * nd));
        break;
    }
    case TestId::T8: rule.scale = 1.0 / std::sqrt(12.0 * nd); break;
    default: throw Error(ErrorCode::no_asymptotic_rule, "no large-sample rule for " + spec.label());
    }
    return rule;
}

struct TestReport {
    TestSpec spec;
    std::size_t n = 0;
    double statistic = 0.0;
    Method method = Method::monte_carlo;
    double crit = 0.0;            // in statistic units
    Tail reject_side = Tail::upper; // reject when the statistic lies beyond crit on this side
    double p_value = 1.0;
    bool reject = false;
    double level = 0.05;
    double standardized = std::numeric_limits<double>::quiet_NaN(); // asymptotic only
    std::size_t reps = 0;                                          // Monte Carlo only
};

// Threshold of a rule in statistic units plus the side on which it rejects.
struct AsymptoticThreshold {
    double standardized_crit = 0.0;
    double crit = 0.0;
    Tail side = Tail::upper;
};

inline AsymptoticThreshold asymptotic_threshold(const AsymptoticRule& rule, double level) {
    detail::check_level(level);
    AsymptoticThreshold t;
    if (rule.kind == AsymptoticRule::Kind::smirnov) {
        t.standardized_crit = std::sqrt(-std::log(level) / 2.0);
    } else {
        const double z = normal_quantile(1.0 - level);
        t.standardized_crit = rule.tail == Tail::upper ? z : -z;
    }
    t.crit = rule.center + rule.scale * t.standardized_crit;
    // A negative scale flips the direction in statistic units.
    t.side = (rule.scale < 0.0) == (rule.tail == Tail::upper) ? Tail::lower : Tail::upper;
    return t;
}

inline bool asymptotic_rejects(const AsymptoticRule& rule, double standardized, double standardized_crit) {
    if (rule.tail == Tail::upper) {
        return rule.inclusive ? standardized >= standardized_crit : standardized > standardized_crit;
    }
    return rule.inclusive ? standardized <= standardized_crit : standardized < standardized_crit;
}

inline TestReport asymptotic_decision(const TestSpec& spec, double statistic, std::size_t n, double level) {
    const AsymptoticRule rule = asymptotic_rule(spec, n);
    const AsymptoticThreshold threshold = asymptotic_threshold(rule, level);
    TestReport report;
    report.spec = spec;
    report.n = n;
    report.statistic = statistic;
    report.method = Method::asymptotic;
    report.level = level;
    report.crit = threshold.crit;
    report.reject_side = threshold.side;
    report.standardized = rule.standardize(statistic);
    report.reject = asymptotic_rejects(rule, report.standardized, threshold.standardized_crit);
    double p = 1.0;
    if (rule.kind == AsymptoticRule::Kind::smirnov) {
        p = report.standardized <= 0.0 ? 1.0 : std::exp(-2.0 * report.standardized * report.standardized);
    } else {
        p = rule.tail == Tail::upper ? normal_sf(report.standardized) : normal_cdf(report.standardized);
    }
    report.p_value = std::clamp(p, std::numeric_limits<double>::min(), 1.0);
    return report;
}

// Monte Carlo decision from a sorted null sample.
inline TestReport mc_decision_from_sorted(const TestSpec& spec, double statistic, std::size_t n, double level,
                                          std::span<const double> sorted_null, std::uint64_t seed) {
    const CriticalValueTable table = critical_value_from_sorted(spec, n, level, sorted_null, seed);
    TestReport report;
    report.spec = spec;
    report.n = n;
    report.statistic = statistic;
    report.method = Method::monte_carlo;
    report.level = level;
    report.crit = table.crit;
    report.reject_side = spec.tail();
    report.reject = beyond(spec.tail(), statistic, table.crit);
    report.p_value = p_value_from_sorted(sorted_null, statistic, spec.tail());
    report.reps = sorted_null.size();
    return report;
}

inline TestReport mc_decision(const TestSpec& spec, double statistic, std::size_t n, double level, std::size_t reps,
                              std::uint64_t seed) {
    detail::check_calibration(spec, n, reps);
    detail::check_level(level);
    auto null = simulate_null(spec, n, reps, seed);
    std::sort(null.begin(), null.end());
    return mc_decision_from_sorted(spec, statistic, n, level, null, seed);
}

inline constexpr const char* critical_value_csv_header = "test,j,alpha_param,n,level,crit,reps,seed";

inline void write_critical_values_csv(std::ostream& os, std::span<const CriticalValueTable> tables) {
    os << critical_value_csv_header << '\n';
    for (const auto& t : tables) {
        os << csv::spec_columns(t.spec) << ',' << t.n << ',' << csv::number(t.level, "%.10g") << ','
           << csv::number(t.crit) << ',' << t.reps << ',' << t.seed << '\n';
    }
}

} // namespace nbue
