// Acceptance suite: one PASS/FAIL line per criterion, with per-cell detail
// above each verdict. Exit status is nonzero when any criterion fails.

#include <boost/math/special_functions/gamma.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "nbue/nbue.hpp"
#include "oracles.hpp"

using namespace nbue;
namespace fs = std::filesystem;

namespace {

const TestSpec T1{TestId::T1}, T2{TestId::T2}, T3{TestId::T3}, T4{TestId::T4}, T5{TestId::T5}, T6{TestId::T6},
    T8{TestId::T8};

struct Cell {
    TestSpec spec;
    AlternativeModel model;
    std::size_t n;
    double paper_pct;
    double tol_pp;
};

// Estimates each cell with the engine's default decision method and checks
// |estimate - paper| <= tol.
bool check_cells(StudyEngine& engine, const std::vector<Cell>& cells, std::optional<Method> method = std::nullopt) {
    bool ok = true;
    for (const auto& c : cells) {
        const StudyRow row = engine.estimate(c.spec, c.model, c.n, 0.05, method);
        const double pct = 100.0 * row.estimate;
        const bool pass = std::abs(pct - c.paper_pct) <= c.tol_pp;
        ok &= pass;
        std::printf("  %-14s %-14s n=%-3zu %-11s ours %6.2f  paper %6.2f  diff %+6.2f  tol %.1f  %s\n",
                    c.spec.label().c_str(), c.model.label().c_str(), c.n, to_string(row.method), pct, c.paper_pct,
                    pct - c.paper_pct, c.tol_pp, pass ? "ok" : "MISS");
    }
    return ok;
}

double table_value(int id, const TestSpec& spec, std::size_t n, const AlternativeModel& m) {
    const auto v = reference_value(id, spec, n, m);
    if (!v) throw Error(ErrorCode::invalid_parameter, "no reference value");
    return *v;
}

bool criterion1() {
    StudyConfig cfg;
    cfg.calibration_reps = 1'000'000;
    StudyEngine engine(cfg);
    std::vector<Cell> cells;
    for (std::size_t n : {5, 10, 15}) {
        for (const auto& spec : {TestSpec::t0(0.25), TestSpec::t0(0.5), TestSpec::t0(1), T1, T6, T5}) {
            cells.push_back({spec, AlternativeModel(), n, table_value(1, spec, n, AlternativeModel()), spec == T5 ? 1.2 : 0.8});
        }
    }
    return check_cells(engine, cells, Method::monte_carlo);
}

bool criterion2() {
    StudyConfig cfg;
    StudyEngine engine(cfg);
    std::vector<Cell> cells;
    for (std::size_t n : {50, 100}) {
        for (const auto& spec : {T3, T4, T8}) cells.push_back({spec, AlternativeModel(), n, table_value(3, spec, n, AlternativeModel()), 0.7});
    }
    bool ok = check_cells(engine, cells, Method::asymptotic);
    for (std::size_t n : {50, 100}) {
        const double pct = 100.0 * engine.estimate_size(T2, n, 0.05, Method::asymptotic).estimate;
        const bool pass = pct < 4.0;
        ok &= pass;
        std::printf("  %-14s %-14s n=%-3zu %-11s ours %6.2f  paper %6.2f  required < 4.00  %s\n", "T2", "exponential", n,
                    "asymptotic", pct, table_value(3, T2, n, AlternativeModel()), pass ? "ok" : "MISS");
    }
    return ok;
}

bool criterion3() {
    StudyConfig cfg;
    StudyEngine engine(cfg);
    const AlternativeModel w(Family::weibull, 1.5), g(Family::gamma, 2.0), l(Family::lfr, 1.25);
    return check_cells(engine, {{TestSpec::t0(1), w, 25, 74.13, 1.2},
                                {T1, w, 25, 73.17, 1.2},
                                {T5, w, 25, 81.84, 1.2},
                                {T6, w, 25, 66.87, 1.2},
                                {TestSpec::t0(1), g, 25, 71.67, 1.2},
                                {TestSpec::t0(0.25), l, 25, 41.19, 1.2}});
}

bool criterion4() {
    StudyConfig cfg;
    StudyEngine engine(cfg);
    const AlternativeModel w(Family::weibull, 1.3), g(Family::gamma, 2.0), l(Family::lfr, 1.0);
    const bool ok = check_cells(engine, {{T1, w, 100, 93.17, 1.2},
                                         {TestSpec::t0(1), w, 100, 95.44, 1.2},
                                         {TestSpec::t0(0.25), w, 100, 92.84, 1.2},
                                         {T8, w, 100, 77.28, 1.2},
                                         {T4, g, 30, 1.07, 1.2},
                                         {T8, g, 30, 24.39, 1.2},
                                         {TestSpec::t0(1), g, 30, 79.04, 1.2},
                                         {T4, l, 50, 90.12, 1.2}});

    // The tables do not state alpha for T7; pick the grid value closest to
    // the published column on a spread of cells. Reported, not asserted.
    const std::vector<std::pair<AlternativeModel, std::size_t>> probes = {
        {AlternativeModel(Family::weibull, 1.3), 100}, {AlternativeModel(Family::weibull, 1.5), 30},
        {AlternativeModel(Family::gamma, 2.0), 50},    {AlternativeModel(Family::lfr, 1.0), 50},
        {AlternativeModel(Family::lfr, 0.5), 100}};
    auto table_for = [](Family f) { return f == Family::weibull ? 7 : f == Family::gamma ? 8 : 9; };
    double best_alpha = 0.0, best_err = 1e300;
    std::printf("  T7 alpha search (monte_carlo critical values), mean |diff| over %zu cells:\n", probes.size());
    for (int k = 1; k <= 9; ++k) {
        const double a = k / 10.0;
        double err = 0.0;
        std::string detail;
        for (const auto& [model, n] : probes) {
            const double paper = table_value(table_for(model.family()), TestSpec::t7(0.5), n, model);
            const double pct = 100.0 * engine.estimate(TestSpec::t7(a), model, n, 0.05, Method::monte_carlo).estimate;
            err += std::abs(pct - paper);
            char buf[64];
            std::snprintf(buf, sizeof buf, " %.2f/%.2f", pct, paper);
            detail += buf;
        }
        err /= probes.size();
        std::printf("    alpha=%.1f  mean|diff| %6.2f  (ours/paper:%s)\n", a, err, detail.c_str());
        if (err < best_err) {
            best_err = err;
            best_alpha = a;
        }
    }
    std::printf("  T7 best-matching alpha = %.1f (mean |diff| %.2f pp)\n", best_alpha, best_err);
    return ok;
}

bool criterion5() {
    double worst_t0 = 0, worst_t2 = 0, worst_t8 = 0;
    for (std::uint64_t r = 0; r < 1000; ++r) {
        const std::size_t n = 2 + r % 99;
        const Sample s = oracle::random_sample(r + 100, n);
        worst_t0 = std::max(worst_t0, std::abs(t0_anis_mitra(s, 1).value - t1_hollander_proschan(s).value - 0.5 / n));
        worst_t8 = std::max(worst_t8, std::abs(oracle::t8_double_sum(s) - oracle::t8_pairwise_min(s)));
        worst_t8 = std::max(worst_t8, std::abs(t8_mugdadi_ahmad(s).value - oracle::t8_pairwise_min(s)));
        RngStream rng(555, r); // continuous data: the sup form meets the max at jump points
        const Sample e = sample_exponential(rng, n);
        worst_t2 = std::max(worst_t2, std::abs(t2_koul(e).value - oracle_koul_sup(e)));
    }
    std::printf("  max |T0(1) - T1 - 1/(2n)| = %.3g\n  max |T2 - sup oracle|     = %.3g\n  max |T8 - pairwise min|   = %.3g\n",
                worst_t0, worst_t2, worst_t8);
    return worst_t0 <= 1e-12 && worst_t2 <= 1e-12 && worst_t8 <= 1e-12;
}

bool criterion6() {
    const std::vector<TestSpec> specs = {TestSpec::t0(0.25), TestSpec::t0(1), TestSpec::t0(3), T1, T2, T3, T4, T5, T6,
                                         TestSpec::t7(0.5), TestSpec::t7(0.2), T8};
    double worst = 0;
    for (std::uint64_t c = 0; c < 500; ++c) {
        RngStream rng(909, c);
        const std::size_t n = 2 + c % 80;
        const Sample s = oracle::random_sample(c + 7000, n);
        std::vector<double> perm(s.values().begin(), s.values().end());
        for (std::size_t i = perm.size() - 1; i > 0; --i) std::swap(perm[i], perm[rng.next_u64() % (i + 1)]);
        const Sample p(perm);
        const double k = std::exp(20.0 * (rng.uniform() - 0.5));
        const Sample sk = s.scaled(k);
        for (const auto& spec : specs) {
            const double v = evaluate(spec, s).value;
            const double denom = std::max(1.0, std::abs(v));
            worst = std::max(worst, std::abs(evaluate(spec, p).value - v) / denom);
            worst = std::max(worst, std::abs(evaluate(spec, sk).value - v) / denom);
        }
    }
    std::printf("  max relative change under scaling/permutation = %.3g over 500 cases x %zu statistics\n", worst,
                specs.size());
    return worst <= 1e-10;
}

bool criterion7() {
    bool ok = true;
    const std::size_t count = 100'000;
    const double crit = oracle::ks_critical_1pct(count);
    struct Case {
        const char* name;
        AlternativeModel model;
        std::function<double(double)> cdf;
    };
    const std::vector<Case> cases = {
        {"Exp", AlternativeModel(), [](double x) { return -std::expm1(-x); }},
        {"Weibull(2)", AlternativeModel(Family::weibull, 2.0), [](double x) { return -std::expm1(-x * x); }},
        {"Gamma(1.5)", AlternativeModel(Family::gamma, 1.5), [](double x) { return boost::math::gamma_p(1.5, x); }},
        {"LFR(1)", AlternativeModel(Family::lfr, 1.0), [](double x) { return -std::expm1(-x - x * x / 2); }},
    };
    std::uint64_t seed = 1;
    for (const auto& c : cases) {
        const double d = oracle::ks_distance(oracle::draws(c.model, count, seed++), c.cdf);
        ok &= d < crit;
        std::printf("  KS %-11s D = %.5f  (1%% critical %.5f)  %s\n", c.name, d, crit, d < crit ? "ok" : "MISS");
    }
    auto mean_var = [](const std::vector<double>& xs) {
        double m = 0;
        for (double x : xs) m += x;
        m /= xs.size();
        double v = 0;
        for (double x : xs) v += (x - m) * (x - m);
        return std::pair{m, v / (xs.size() - 1)};
    };
    auto moment = [&](const char* what, double got, double want, double tol) {
        const bool pass = std::abs(got - want) <= tol;
        ok &= pass;
        std::printf("  %-22s %.5f  target %.5f +- %.3f  %s\n", what, got, want, tol, pass ? "ok" : "MISS");
    };
    const auto e = mean_var(oracle::draws(AlternativeModel(), 1'000'000, 11));
    moment("Exp mean", e.first, 1.0, 0.004);
    const auto w = mean_var(oracle::draws(AlternativeModel(Family::weibull, 2.0), 1'000'000, 12));
    moment("Weibull(2) mean", w.first, std::tgamma(1.5), 0.004);
    const auto g = mean_var(oracle::draws(AlternativeModel(Family::gamma, 2.0), 1'000'000, 13));
    moment("Gamma(2) mean", g.first, 2.0, 0.006);
    moment("Gamma(2) variance", g.second, 2.0, 0.03);
    // same stream under the null shapes
    RngStream a(4, 4), b(4, 4), c(4, 4);
    const Sample se = sample_exponential(a, 1000), sw = sample_weibull(b, 1000, 1.0), sl = sample_lfr(c, 1000, 0.0);
    const bool collapse = std::equal(se.values().begin(), se.values().end(), sw.values().begin()) &&
                          std::equal(se.values().begin(), se.values().end(), sl.values().begin());
    ok &= collapse;
    std::printf("  Weibull(1) and LFR(0) reproduce the exponential stream draw for draw: %s\n", collapse ? "ok" : "MISS");
    return ok;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

bool criterion8() {
    const fs::path root = fs::temp_directory_path() / ("nbue_accept_" + std::to_string(::getpid()));
    std::vector<fs::path> dirs;
    const char* threads[] = {"1", "4", "0"};
    for (int k = 0; k < 3; ++k) {
        const fs::path dir = root / ("run" + std::to_string(k));
        dirs.push_back(dir);
        const std::string cmd = std::string("NBUE_LAB_THREADS=") + threads[k] + " " + NBUE_LAB_PATH +
                                " tables --which 1 --seed 42 --out " + dir.string() + " 2>/dev/null";
        const auto t0 = std::chrono::steady_clock::now();
        const int status = std::system(cmd.c_str());
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("  run %d: NBUE_LAB_THREADS=%s  exit %d  %.1f s\n", k + 1, threads[k], status, secs);
        if (status != 0) return false;
    }
    bool ok = true;
    for (const char* name : {"table1.csv", "table1_compare.csv", "meta.json"}) {
        const std::string first = slurp(dirs[0] / name);
        bool same = !first.empty();
        for (std::size_t k = 1; k < dirs.size(); ++k) same &= slurp(dirs[k] / name) == first;
        ok &= same;
        std::printf("  %-20s %zu bytes, byte-identical across runs: %s\n", name, first.size(), same ? "yes" : "NO");
    }
    fs::remove_all(root);
    return ok;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<bool()>>> criteria = {
        {"size reproduction, small n (table 1)", criterion1},
        {"size reproduction, large n (table 3, asymptotic rules)", criterion2},
        {"power reproduction, small n (tables 4-6)", criterion3},
        {"power reproduction, large n (tables 7-9)", criterion4},
        {"identity suite", criterion5},
        {"invariance suite", criterion6},
        {"sampler suite", criterion7},
        {"determinism of tables output", criterion8},
    };
    std::vector<bool> verdicts;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        std::printf("criterion %zu: %s\n", k + 1, criteria[k].first);
        std::fflush(stdout);
        const auto t0 = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = criteria[k].second();
        } catch (const std::exception& e) {
            std::printf("  error: %s\n", e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %zu (%.0f s)\n\n", pass ? "PASS" : "FAIL", k + 1, secs);
        std::fflush(stdout);
        verdicts.push_back(pass);
    }
    std::printf("summary:\n");
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        std::printf("  %s criterion %zu: %s\n", verdicts[k] ? "PASS" : "FAIL", k + 1, criteria[k].first);
        failures += verdicts[k] ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
