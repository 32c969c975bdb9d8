#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "core.hpp"

// Scale-invariant statistics for testing exponentiality against NBUE
// alternatives. Every statistic is a pure function of the sample.

namespace nbue {

struct StatValue {
    TestSpec spec;
    double value = 0.0;
};

namespace detail {

inline void require_min_n(const Sample& s, std::size_t min_n, const char* what) {
    if (s.size() < min_n) {
        throw Error(ErrorCode::unsupported_n,
                    std::string(what) + " requires n >= " + std::to_string(min_n) + ", got " + std::to_string(s.size()));
    }
}

} // namespace detail

// Hollander-Proschan: T1 = K / mean with
// K = n^-2 sum_i X_(i) (3n/2 - 2i + 1/2).
inline StatValue t1_hollander_proschan(const Sample& s) {
    const double n = static_cast<double>(s.size());
    CompensatedSum acc;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        acc.add(s.order_stat(i) * (1.5 * n - 2.0 * static_cast<double>(i) + 0.5));
    }
    return {TestSpec(TestId::T1), acc.value() / (n * n * s.mean())};
}

// Anis-Mitra family, T0 = gamma_j(F_n) / mean.
inline StatValue t0_anis_mitra(const Sample& s, double j) {
    const TestSpec spec = TestSpec::t0(j);
    const std::size_t n = s.size();
    const double nd = static_cast<double>(n);
    const double tail_mass = 1.0 / (nd * (j + 1.0));
    CompensatedSum acc;
    double upper = 1.0; // ((n-k+1)/n)^(j+1) at k = 1
    for (std::size_t k = 1; k <= n; ++k) {
        const double lower = std::pow(static_cast<double>(n - k) / nd, j + 1.0);
        acc.add(s.order_stat(k) * (upper - lower - tail_mass));
        upper = lower;
    }
    return {spec, acc.value() / (j * s.mean())};
}

// Koul: T2 = max_i (W_ni - i/n).
inline StatValue t2_koul(const Sample& s) {
    const SpacingsView v = spacings(s);
    const double n = static_cast<double>(s.size());
    double best = -1.0;
    for (std::size_t i = 1; i <= s.size(); ++i) {
        best = std::max(best, v.w[i - 1] - static_cast<double>(i) / n);
    }
    return {TestSpec(TestId::T2), best};
}

// Coefficient of variation: T3 = sqrt(n) (S / mean - 1), S^2 with divisor n.
// Rejects for small values.
inline StatValue t3_coefficient_of_variation(const Sample& s) {
    const double n = static_cast<double>(s.size());
    const double mean = s.mean();
    CompensatedSum ss; // on x / mean, so huge lifetimes cannot overflow the squares
    for (double x : s.ordered()) ss.add((x / mean - 1.0) * (x / mean - 1.0));
    const double cv = std::sqrt(ss.value() / n);
    return {TestSpec(TestId::T3), std::sqrt(n) * (cv - 1.0)};
}

// Aly: T4 = sum_i {1 + log((n-i+1)/n)} ((n-i+1)/n) (X_(i) - X_(i-1)) / mean.
inline StatValue t4_aly(const Sample& s) {
    const std::size_t n = s.size();
    const double nd = static_cast<double>(n);
    CompensatedSum acc;
    for (std::size_t i = 1; i <= n; ++i) {
        const double frac = static_cast<double>(n - i + 1) / nd;
        acc.add((1.0 + std::log(frac)) * frac * (s.order_stat(i) - s.order_stat(i - 1)));
    }
    return {TestSpec(TestId::T4), acc.value() / s.mean()};
}

struct AlyNormalization {
    double lambda_n = 0.0;
    double sigma_n = 0.0;
};

// Centering and scale of the large-sample Aly rule:
//   lambda_n  = 1 + n^-1 sum_j log(1 - (j-1)/n)
//   sigma_n^2 = n^-1 sum_j {1 + log(1 - (j-1)/n)}^2
inline AlyNormalization aly_normalization(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::unsupported_n, "aly_normalization requires n >= 1");
    const double nd = static_cast<double>(n);
    CompensatedSum logs;
    CompensatedSum squares;
    for (std::size_t j = 1; j <= n; ++j) {
        const double lg = std::log(1.0 - static_cast<double>(j - 1) / nd);
        logs.add(lg);
        squares.add((1.0 + lg) * (1.0 + lg));
    }
    return {1.0 + logs.value() / nd, std::sqrt(squares.value() / nd)};
}

// Fernandez-Ponce: T5 = 1 - n^-1 sum_{i<n} (i/n) S_n / S_i.
inline StatValue t5_fernandez_ponce(const Sample& s) {
    detail::require_min_n(s, 2, "T5");
    const SpacingsView v = spacings(s);
    const std::size_t n = s.size();
    const double nd = static_cast<double>(n);
    CompensatedSum acc;
    for (std::size_t i = 1; i < n; ++i) {
        acc.add(static_cast<double>(i) / nd * (v.total / v.partial[i - 1]));
    }
    return {TestSpec(TestId::T5), 1.0 - acc.value() / nd};
}

// nabla[i] = sum_{a=i+1}^n delta(i,a) X_(a) with delta(i,a) = n - 2a + i + 1,
// lambda[i] = nabla[i] / (n-i)^2, for i = 0..n-2.
struct DilationWorkspace {
    std::vector<double> nabla;
    std::vector<double> lambda;
};

inline DilationWorkspace dilation_workspace(const Sample& s) {
    detail::require_min_n(s, 2, "dilation workspace");
    const std::size_t n = s.size();
    DilationWorkspace ws;
    ws.nabla.resize(n - 1);
    ws.lambda.resize(n - 1);
    // nabla[i] = (n+i+1) * sum_{a>i} X_(a) - 2 * sum_{a>i} a X_(a)
    std::vector<double> suffix(n + 2, 0.0);
    std::vector<double> weighted_suffix(n + 2, 0.0);
    for (std::size_t a = n; a >= 1; --a) {
        suffix[a] = suffix[a + 1] + s.order_stat(a);
        weighted_suffix[a] = weighted_suffix[a + 1] + static_cast<double>(a) * s.order_stat(a);
    }
    for (std::size_t i = 0; i + 2 <= n; ++i) {
        const double coef = static_cast<double>(n + i + 1);
        ws.nabla[i] = coef * suffix[i + 1] - 2.0 * weighted_suffix[i + 1];
        const double m = static_cast<double>(n - i);
        ws.lambda[i] = ws.nabla[i] / (m * m);
    }
    return ws;
}

// Belzunce et al. dispersion of residual lives: T6 = Delta_NBUE(n) / mean,
//   Delta_NBUE(n) = n^-4 sum_{i=0}^{n-2} n (n-i)^2 (lambda_n(i) + sum_k X_(k) / (2n)).
inline StatValue t6_belzunce_dispersion(const Sample& s) {
    const DilationWorkspace ws = dilation_workspace(s);
    const std::size_t n = s.size();
    const double nd = static_cast<double>(n);
    const double half_mean = s.sum() / (2.0 * nd);
    CompensatedSum acc;
    for (std::size_t i = 0; i + 2 <= n; ++i) {
        const double m = static_cast<double>(n - i);
        acc.add(nd * m * m * (ws.lambda[i] + half_mean));
    }
    const double delta = acc.value() / (nd * nd * nd * nd);
    return {TestSpec(TestId::T6), delta / s.mean()};
}

// Grid weights J_alpha(i/n), L_alpha(i/n) of the right-spread statistic.
// Index k holds the value at i = k + 1.
struct RightSpreadWeights {
    double alpha_param = TestSpec::default_alpha;
    std::size_t l = 0;
    std::vector<double> J;
    std::vector<double> L;
};

// The integer l with l/n <= alpha < (l+1)/n.
inline std::size_t right_spread_l(std::size_t n, double alpha) {
    const double na = static_cast<double>(n) * alpha;
    const double nearest = std::round(na);
    if (std::abs(na - nearest) <= 1e-9 * std::max(1.0, na)) return static_cast<std::size_t>(nearest);
    return static_cast<std::size_t>(std::floor(na));
}

inline double right_spread_J(double p, double alpha) {
    return p <= alpha ? p * (1.0 / alpha - 1.0) : 1.0 - p;
}

inline RightSpreadWeights right_spread_weights(std::size_t n, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::invalid_alpha, "alpha must lie in (0,1)");
    RightSpreadWeights w;
    w.alpha_param = alpha;
    w.l = right_spread_l(n, alpha);
    w.J.resize(n);
    w.L.resize(n);
    const double nd = static_cast<double>(n);
    const double ld = static_cast<double>(w.l);
    for (std::size_t i = 1; i <= n; ++i) {
        const double id = static_cast<double>(i);
        const bool left = i <= w.l; // i/n <= alpha
        w.J[i - 1] = left ? id / nd * (1.0 / alpha - 1.0) : 1.0 - id / nd;
        if (left) {
            w.L[i - 1] = 0.5 * (1.0 / alpha - 1.0) * (id * id + id) / (nd * nd);
        } else {
            w.L[i - 1] = -id * id / (2.0 * nd * nd) + id / nd * (1.0 - 1.0 / (2.0 * nd)) +
                         ld * ld / (nd * nd) / (2.0 * alpha) + ld / nd * (1.0 / (2.0 * alpha * nd) - 1.0);
        }
    }
    return w;
}

// Belzunce et al. right-spread statistic, T7 = hat Delta^alpha_NBUE / mean.
inline StatValue t7_belzunce_right_spread(const Sample& s, double alpha) {
    const TestSpec spec = TestSpec::t7(alpha);
    const std::size_t n = s.size();
    const double nd = static_cast<double>(n);
    const RightSpreadWeights w = right_spread_weights(n, alpha);
    CompensatedSum acc;
    for (std::size_t i = 1; i <= n; ++i) {
        const double weight = w.L[i - 1] - w.J[i - 1] * (1.0 - static_cast<double>(i - 1) / nd);
        acc.add(weight * s.order_stat(i));
    }
    const double delta = s.mean() * (1.0 - alpha) * (2.0 - alpha) / 6.0 - acc.value() / nd;
    return {spec, delta / s.mean()};
}

// Mugdadi-Ahmad U-statistic,
//   T8 = mean^-1 (n(n-1))^-1 sum_i sum_{j!=i} {X_i/2 - min(X_i, X_j)}
//      = 1/2 - 2 sum_{i<j} min(X_i, X_j) / (n(n-1) mean).
// On sorted data X_(k) is the minimum of exactly n-k pairs.
inline StatValue t8_mugdadi_ahmad(const Sample& s) {
    detail::require_min_n(s, 2, "T8");
    const std::size_t n = s.size();
    const double nd = static_cast<double>(n);
    CompensatedSum acc;
    for (std::size_t k = 1; k < n; ++k) acc.add(static_cast<double>(n - k) * s.order_stat(k));
    return {TestSpec(TestId::T8), 0.5 - 2.0 * acc.value() / (nd * (nd - 1.0) * s.mean())};
}

// sup_y { mean^-1 int_0^y (1 - F_n) - F_n(y) } evaluated directly from the
// empirical CDF at y -> 0+ and at every observation. Independent of the
// spacing representation used by t2_koul.
inline double oracle_koul_sup(const Sample& s) {
    const auto xs = s.values();
    const double n = static_cast<double>(xs.size());
    double best = 0.0; // y -> 0+
    for (double y : xs) {
        CompensatedSum area; // int_0^y (1 - F_n) = n^-1 sum_k min(X_k, y)
        double at_or_below = 0.0;
        for (double x : xs) {
            area.add(std::min(x, y));
            if (x <= y) at_or_below += 1.0;
        }
        const double g = area.value() / (n * s.mean()) - at_or_below / n;
        best = std::max(best, g);
    }
    return best;
}

// Dispatch by spec.
inline StatValue evaluate(const TestSpec& spec, const Sample& s) {
    switch (spec.id()) {
    case TestId::T0: return t0_anis_mitra(s, spec.j());
    case TestId::T1: return t1_hollander_proschan(s);
    case TestId::T2: return t2_koul(s);
    case TestId::T3: return t3_coefficient_of_variation(s);
    case TestId::T4: return t4_aly(s);
    case TestId::T5: return t5_fernandez_ponce(s);
    case TestId::T6: return t6_belzunce_dispersion(s);
    case TestId::T7: return t7_belzunce_right_spread(s, spec.alpha_param());
    case TestId::T8: return t8_mugdadi_ahmad(s);
    }
    throw Error(ErrorCode::invalid_parameter, "unknown test id");
}

} // namespace nbue
