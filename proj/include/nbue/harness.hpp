#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "calibration.hpp"
#include "csv.hpp"
#include "randgen.hpp"
#include "reference_tables.hpp"

// Monte Carlo study engine: empirical size and power of the tests, table
// assembly and comparison with the published tables.

namespace nbue {

struct StudyConfig {
    std::size_t reps = 100'000;
    double level = 0.05;
    std::vector<std::size_t> sizes;
    std::vector<TestSpec> specs;
    std::vector<AlternativeModel> alternatives;
    std::uint64_t seed = 42;
    std::optional<Method> method;                // forces one method for every spec
    std::optional<std::size_t> calibration_reps; // default_calibration_reps(n) / calibration_divisor when unset
    std::size_t calibration_divisor = 1;
    bool include_null = true;

    double se_bound() const { return std::sqrt(0.25 / static_cast<double>(reps)); }

    std::size_t calibration_reps_for(std::size_t n) const {
        if (calibration_reps) return *calibration_reps;
        return std::max(min_calibration_reps, default_calibration_reps(n) / std::max<std::size_t>(1, calibration_divisor));
    }
};

// Small samples use simulated critical values; beyond n = 30 the printed
// large-sample rules are used where one exists. T7's printed rule rejects
// in the direction opposite to its alternatives, so T7 stays on simulation.
inline Method default_method(const TestSpec& spec, std::size_t n) {
    if (n > 30 && has_asymptotic_rule(spec) && spec.id() != TestId::T7) return Method::asymptotic;
    return Method::monte_carlo;
}

// Per-replicate rejection rule.
struct Decision {
    Method method = Method::monte_carlo;
    double crit = 0.0; // statistic units
    Tail side = Tail::upper;
    std::optional<AsymptoticRule> rule;
    double standardized_crit = 0.0;
    std::size_t calibration_reps = 0;

    bool rejects(double statistic) const {
        if (rule) return asymptotic_rejects(*rule, rule->standardize(statistic), standardized_crit);
        return beyond(side, statistic, crit);
    }

    static Decision monte_carlo(const CriticalValueTable& table) {
        Decision d;
        d.crit = table.crit;
        d.side = table.spec.tail();
        d.calibration_reps = table.reps;
        return d;
    }

    static Decision asymptotic(const TestSpec& spec, std::size_t n, double level) {
        Decision d;
        d.method = Method::asymptotic;
        d.rule = asymptotic_rule(spec, n);
        const auto threshold = asymptotic_threshold(*d.rule, level);
        d.crit = threshold.crit;
        d.side = threshold.side;
        d.standardized_crit = threshold.standardized_crit;
        return d;
    }
};

// Master seed for the replicates of one table cell.
inline std::uint64_t row_seed(std::uint64_t master, const TestSpec& spec, std::size_t n,
                              const AlternativeModel& model) {
    return combine_seed(master, spec.key(), static_cast<std::uint64_t>(n), model.key());
}

// Number of the reps samples from model (replicate r drawn from
// RngStream(seed, r)) that the decision rejects.
inline std::size_t count_rejections(const TestSpec& spec, const AlternativeModel& model, std::size_t n,
                                    std::size_t reps, std::uint64_t seed, const Decision& decision) {
    std::atomic<std::size_t> total{0};
    parallel_for(reps, [&](std::size_t begin, std::size_t end) {
        std::size_t local = 0;
        for (std::size_t r = begin; r < end; ++r) {
            RngStream rng(seed, r);
            const Sample s = model.sample(rng, n);
            if (decision.rejects(evaluate(spec, s).value)) ++local;
        }
        total += local;
    });
    return total.load();
}

struct StudyRow {
    TestSpec spec;
    std::size_t n = 0;
    AlternativeModel model; // exponential: size row
    double level = 0.05;
    Method method = Method::monte_carlo;
    double estimate = 0.0; // rejection proportion
    std::size_t rejections = 0;
    std::size_t reps = 0;
    double se_bound = 0.0;
    std::uint64_t seed = 0; // master seed of the study
    double crit = 0.0;
    Tail reject_side = Tail::upper;
    std::size_t calibration_reps = 0;

    bool is_size_row() const { return model.family() == Family::exponential; }
};

struct RowError {
    TestSpec spec;
    std::size_t n = 0;
    AlternativeModel model;
    std::string message;
};

struct StudyResult {
    std::vector<StudyRow> rows;
    std::vector<RowError> errors;
};

class StudyEngine {
public:
    explicit StudyEngine(StudyConfig cfg) : cfg_(std::move(cfg)) {
        if (cfg_.reps < 1'000) throw Error(ErrorCode::invalid_parameter, "study needs at least 1000 replicates");
        detail::check_level(cfg_.level);
    }

    const StudyConfig& config() const noexcept { return cfg_; }

    Method method_for(const TestSpec& spec, std::size_t n) const {
        return cfg_.method ? *cfg_.method : default_method(spec, n);
    }

    // Simulated critical value, calibrated once per (spec, n, level). A miss
    // calibrates every configured spec at that n together; the values are
    // the same as calibrating each spec alone.
    const CriticalValueTable& critical_value(const TestSpec& spec, std::size_t n, double level) {
        const auto key = std::make_tuple(spec.key(), n, std::bit_cast<std::uint64_t>(level));
        if (auto it = crit_.find(key); it != crit_.end()) return it->second;

        std::vector<TestSpec> batch;
        for (const auto& s : cfg_.specs) {
            if (s.min_n() <= n && !crit_.contains(std::make_tuple(s.key(), n, std::bit_cast<std::uint64_t>(level))) &&
                std::find(batch.begin(), batch.end(), s) == batch.end()) {
                batch.push_back(s);
            }
        }
        if (std::find(batch.begin(), batch.end(), spec) == batch.end()) batch.push_back(spec);
        const auto tables = calibrate_many(batch, n, std::span<const double>(&level, 1), cfg_.calibration_reps_for(n),
                                           cfg_.seed);
        for (const auto& t : tables) crit_.emplace(std::make_tuple(t.spec.key(), n, std::bit_cast<std::uint64_t>(level)), t);
        return crit_.at(key);
    }

    Decision decision(const TestSpec& spec, std::size_t n, double level, Method method) {
        if (method == Method::asymptotic) return Decision::asymptotic(spec, n, level);
        return Decision::monte_carlo(critical_value(spec, n, level));
    }

    StudyRow estimate(const TestSpec& spec, const AlternativeModel& model, std::size_t n, double level,
                      std::optional<Method> method = std::nullopt) {
        if (n < spec.min_n()) {
            throw Error(ErrorCode::unsupported_n, spec.label() + " is undefined for n = " + std::to_string(n));
        }
        StudyRow row;
        row.spec = spec;
        row.n = n;
        row.model = model;
        row.level = level;
        row.method = method ? *method : method_for(spec, n);
        const Decision d = decision(spec, n, level, row.method);
        row.rejections = count_rejections(spec, model, n, cfg_.reps, row_seed(cfg_.seed, spec, n, model), d);
        row.reps = cfg_.reps;
        row.estimate = static_cast<double>(row.rejections) / static_cast<double>(cfg_.reps);
        row.se_bound = cfg_.se_bound();
        row.seed = cfg_.seed;
        row.crit = d.crit;
        row.reject_side = d.side;
        row.calibration_reps = d.calibration_reps;
        return row;
    }

    StudyRow estimate_size(const TestSpec& spec, std::size_t n, double level,
                           std::optional<Method> method = std::nullopt) {
        return estimate(spec, AlternativeModel::exponential(), n, level, method);
    }

    StudyRow estimate_power(const TestSpec& spec, const AlternativeModel& alt, std::size_t n, double level,
                            std::optional<Method> method = std::nullopt) {
        return estimate(spec, alt, n, level, method);
    }

    // Cross product ({H0} u alternatives) x sizes x specs. A failing cell is
    // recorded in errors and the remaining cells still run.
    StudyResult run() {
        std::vector<AlternativeModel> models;
        if (cfg_.include_null) models.push_back(AlternativeModel::exponential());
        models.insert(models.end(), cfg_.alternatives.begin(), cfg_.alternatives.end());

        StudyResult result;
        for (const auto& model : models) {
            for (std::size_t n : cfg_.sizes) {
                for (const auto& spec : cfg_.specs) {
                    try {
                        result.rows.push_back(estimate(spec, model, n, cfg_.level));
                    } catch (const Error& e) {
                        result.errors.push_back({spec, n, model, e.what()});
                    }
                }
            }
        }
        return result;
    }

private:
    StudyConfig cfg_;
    std::map<std::tuple<std::uint64_t, std::size_t, std::uint64_t>, CriticalValueTable> crit_;
};

inline StudyRow estimate_size(const TestSpec& spec, std::size_t n, double level, const StudyConfig& cfg) {
    return StudyEngine(cfg).estimate_size(spec, n, level);
}

inline StudyRow estimate_power(const TestSpec& spec, const AlternativeModel& alt, std::size_t n, double level,
                               const StudyConfig& cfg) {
    return StudyEngine(cfg).estimate_power(spec, alt, n, level);
}

inline StudyResult run_study(const StudyConfig& cfg) { return StudyEngine(cfg).run(); }

inline constexpr const char* study_csv_header =
    "test,j,alpha_param,n,family,theta,level,method,estimate_pct,se_pct,reps,seed";

namespace detail {

inline std::string study_row_columns(const StudyRow& row) {
    std::string out = csv::spec_columns(row.spec) + "," + std::to_string(row.n) + "," + to_string(row.model.family()) + ",";
    if (!row.is_size_row()) out += TestSpec::format_param(row.model.theta());
    out += "," + csv::number(row.level, "%.10g") + "," + to_string(row.method) + "," +
           csv::number(100.0 * row.estimate, "%.3f") + "," + csv::number(100.0 * row.se_bound, "%.3f") + "," +
           std::to_string(row.reps) + "," + std::to_string(row.seed);
    return out;
}

} // namespace detail

inline void write_study_csv(std::ostream& os, const StudyResult& result) {
    os << study_csv_header << '\n';
    for (const auto& row : result.rows) os << detail::study_row_columns(row) << '\n';
}

// Rows that have a published counterpart in the given table, side by side.
inline void write_comparison_csv(std::ostream& os, const StudyResult& result, int table_id) {
    os << study_csv_header << ",paper_pct,abs_diff\n";
    for (const auto& row : result.rows) {
        const auto paper = reference_value(table_id, row.spec, row.n, row.model);
        if (!paper) continue;
        os << detail::study_row_columns(row) << ',' << csv::number(*paper, "%.2f") << ','
           << csv::number(std::abs(100.0 * row.estimate - *paper), "%.3f") << '\n';
    }
}

// Grid of a published table: its columns, sample sizes and shape parameters.
inline StudyConfig table_config(int table_id, std::size_t reps, std::uint64_t seed) {
    const ReferenceTable& table = reference_table(table_id);
    StudyConfig cfg;
    cfg.reps = reps;
    cfg.seed = seed;
    cfg.specs = table.columns;
    for (const auto& row : table.rows) {
        if (std::find(cfg.sizes.begin(), cfg.sizes.end(), row.n) == cfg.sizes.end()) cfg.sizes.push_back(row.n);
        if (!table.is_size_table()) {
            const AlternativeModel model(table.family, row.theta);
            if (std::find(cfg.alternatives.begin(), cfg.alternatives.end(), model) == cfg.alternatives.end()) {
                cfg.alternatives.push_back(model);
            }
        }
    }
    return cfg;
}

} // namespace nbue
