#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace nbue {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <typename Range>
double compensated_sum(const Range& xs) {
    CompensatedSum acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

// A validated set of lifetimes. Immutable after construction.
//
// ordered() holds X_(1) <= ... <= X_(n); order_stat(0) is the conventional
// X_(0) = 0 shared by all spacing-based statistics.
class Sample {
public:
    explicit Sample(std::vector<double> raw) : values_(std::move(raw)) {
        if (values_.empty()) throw Error(ErrorCode::empty, "sample has no observations");
        for (std::size_t i = 0; i < values_.size(); ++i) {
            const double x = values_[i];
            if (!std::isfinite(x) || !(x > 0.0)) {
                throw Error(ErrorCode::non_positive_value,
                            "observation " + std::to_string(i + 1) + " is not a finite positive value");
            }
        }
        ordered_ = values_;
        std::sort(ordered_.begin(), ordered_.end());
        sum_ = compensated_sum(ordered_);
        mean_ = sum_ / static_cast<double>(values_.size());
    }

    std::size_t size() const noexcept { return values_.size(); }
    std::span<const double> values() const noexcept { return values_; }
    std::span<const double> ordered() const noexcept { return ordered_; }
    double sum() const noexcept { return sum_; }
    double mean() const noexcept { return mean_; }

    // 1-based order statistic with X_(0) = 0.
    double order_stat(std::size_t i) const noexcept { return i == 0 ? 0.0 : ordered_[i - 1]; }

    Sample scaled(double k) const {
        std::vector<double> v(values_);
        for (double& x : v) x *= k;
        return Sample(std::move(v));
    }

private:
    std::vector<double> values_;
    std::vector<double> ordered_;
    double sum_ = 0.0;
    double mean_ = 0.0;
};

inline Sample make_sample(std::span<const double> raw) {
    return Sample(std::vector<double>(raw.begin(), raw.end()));
}

inline Sample make_sample(std::initializer_list<double> raw) {
    return Sample(std::vector<double>(raw));
}

// Normalized spacings and total-time-on-test quantities of a sample.
//   d[j-1]       = (n-j+1)(X_(j) - X_(j-1))
//   partial[i-1] = S_i = sum_{j<=i} d_j
//   w[i-1]       = W_ni = S_i / S_n
struct SpacingsView {
    std::vector<double> d;
    std::vector<double> partial;
    double total = 0.0;
    std::vector<double> w;
};

inline SpacingsView spacings(const Sample& s) {
    const std::size_t n = s.size();
    SpacingsView view;
    view.d.resize(n);
    view.partial.resize(n);
    view.w.resize(n);

    CompensatedSum acc;
    for (std::size_t j = 1; j <= n; ++j) {
        const double dj = static_cast<double>(n - j + 1) * (s.order_stat(j) - s.order_stat(j - 1));
        view.d[j - 1] = dj;
        acc.add(dj);
        view.partial[j - 1] = acc.value();
    }
    view.total = view.partial[n - 1];
    if (!(view.total > 0.0)) throw Error(ErrorCode::degenerate_ttt, "total time on test is zero");
    for (std::size_t i = 0; i < n; ++i) view.w[i] = view.partial[i] / view.total;
    view.w[n - 1] = 1.0;
    return view;
}

enum class TestId : int { T0 = 0, T1, T2, T3, T4, T5, T6, T7, T8 };

enum class Tail { upper, lower };

inline constexpr TestId all_test_ids[] = {TestId::T0, TestId::T1, TestId::T2, TestId::T3, TestId::T4,
                                          TestId::T5, TestId::T6, TestId::T7, TestId::T8};

inline std::string to_string(TestId id) { return "T" + std::to_string(static_cast<int>(id)); }

inline const char* to_string(Tail t) { return t == Tail::upper ? "upper" : "lower"; }

// Identity of a test statistic plus its parameters. j is meaningful only
// for T0, alpha_param only for T7; both are normalized to their defaults
// for the other ids so that equality and hashing ignore them.
class TestSpec {
public:
    static constexpr double default_j = 1.0;
    static constexpr double default_alpha = 0.5;

    TestSpec() = default;

    explicit TestSpec(TestId id, double j = default_j, double alpha_param = default_alpha) : id_(id) {
        if (id == TestId::T0) {
            if (!std::isfinite(j) || !(j > 0.0)) throw Error(ErrorCode::invalid_parameter, "T0 requires j > 0");
            j_ = j;
        }
        if (id == TestId::T7) {
            if (!std::isfinite(alpha_param) || !(alpha_param > 0.0 && alpha_param < 1.0)) {
                throw Error(ErrorCode::invalid_alpha, "T7 requires 0 < alpha < 1");
            }
            alpha_ = alpha_param;
        }
    }

    static TestSpec t0(double j) { return TestSpec(TestId::T0, j); }
    static TestSpec t7(double alpha_param) { return TestSpec(TestId::T7, default_j, alpha_param); }

    TestId id() const noexcept { return id_; }
    double j() const noexcept { return j_; }
    double alpha_param() const noexcept { return alpha_; }
    Tail tail() const noexcept { return id_ == TestId::T3 ? Tail::lower : Tail::upper; }

    // Smallest sample size for which the statistic is defined.
    std::size_t min_n() const noexcept {
        switch (id_) {
        case TestId::T5:
        case TestId::T6:
        case TestId::T8: return 2;
        default: return 1;
        }
    }

    // "T0(j=0.25)", "T7(alpha=0.5)", "T3".
    std::string label() const {
        if (id_ == TestId::T0) return "T0(j=" + format_param(j_) + ")";
        if (id_ == TestId::T7) return "T7(alpha=" + format_param(alpha_) + ")";
        return to_string(id_);
    }

    // Stable 64-bit key, independent of where the spec sits in a list.
    std::uint64_t key() const noexcept {
        std::uint64_t k = static_cast<std::uint64_t>(id_) + 1;
        k = k * 0x100000001b3ULL ^ std::bit_cast<std::uint64_t>(j_);
        k = k * 0x100000001b3ULL ^ std::bit_cast<std::uint64_t>(alpha_);
        return k;
    }

    friend bool operator==(const TestSpec&, const TestSpec&) = default;

    static std::string format_param(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", v);
        return buf;
    }

private:
    TestId id_ = TestId::T1;
    double j_ = default_j;
    double alpha_ = default_alpha;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline double parse_double(std::string_view text, const std::string& context) {
    const std::string owned(trim(text));
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(owned, &used);
    } catch (const std::exception&) {
        throw Error(ErrorCode::parse_error, "cannot parse number '" + owned + "' in " + context);
    }
    if (used != owned.size()) throw Error(ErrorCode::parse_error, "trailing characters in '" + owned + "' in " + context);
    return v;
}

} // namespace detail

// Parses one selector such as "t1", "T0:j=0.25" or "t7:alpha=0.3".
inline TestSpec parse_test_spec(std::string_view text) {
    const std::string context = "test selector '" + std::string(text) + "'";
    text = detail::trim(text);
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    if (head.size() != 2 || (head[0] != 't' && head[0] != 'T') || head[1] < '0' || head[1] > '8') {
        throw Error(ErrorCode::parse_error, "unknown " + context);
    }
    const auto id = static_cast<TestId>(head[1] - '0');
    double j = TestSpec::default_j;
    double alpha = TestSpec::default_alpha;
    if (colon != std::string_view::npos) {
        std::string_view params = text.substr(colon + 1);
        while (!params.empty()) {
            const auto semi = params.find(';');
            const std::string_view kv = params.substr(0, semi);
            const auto eq = kv.find('=');
            if (eq == std::string_view::npos) throw Error(ErrorCode::parse_error, "expected key=value in " + context);
            const std::string_view key = detail::trim(kv.substr(0, eq));
            const double value = detail::parse_double(kv.substr(eq + 1), context);
            if (key == "j" && id == TestId::T0) {
                j = value;
            } else if ((key == "alpha" || key == "alpha_param" || key == "a") && id == TestId::T7) {
                alpha = value;
            } else {
                throw Error(ErrorCode::parse_error, "parameter '" + std::string(key) + "' not valid for " + context);
            }
            params = semi == std::string_view::npos ? std::string_view{} : params.substr(semi + 1);
        }
    }
    return TestSpec(id, j, alpha);
}

// Comma-separated list of selectors.
inline std::vector<TestSpec> parse_test_specs(std::string_view text) {
    std::vector<TestSpec> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = detail::trim(text.substr(0, comma));
        if (!item.empty()) out.push_back(parse_test_spec(item));
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    }
    if (out.empty()) throw Error(ErrorCode::parse_error, "no test selectors given");
    return out;
}

} // namespace nbue
