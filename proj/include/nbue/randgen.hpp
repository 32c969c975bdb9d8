#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "core.hpp"
#include "rng.hpp"

namespace nbue {

enum class Family { exponential, weibull, gamma, lfr };

inline const char* to_string(Family f) {
    switch (f) {
    case Family::exponential: return "exponential";
    case Family::weibull: return "weibull";
    case Family::gamma: return "gamma";
    case Family::lfr: return "lfr";
    }
    return "unknown";
}

inline Family parse_family(const std::string& name) {
    if (name == "exponential" || name == "exp") return Family::exponential;
    if (name == "weibull") return Family::weibull;
    if (name == "gamma") return Family::gamma;
    if (name == "lfr") return Family::lfr;
    throw Error(ErrorCode::parse_error, "unknown family '" + name + "'");
}

// Inversion of 1 - exp(-x).
inline double exponential_from_uniform(double u) { return -std::log1p(-u); }

// Inversion of 1 - exp(-x^theta) applied to a standard exponential draw.
inline double weibull_from_exponential(double e, double theta) { return theta == 1.0 ? e : std::pow(e, 1.0 / theta); }

// Solves x + theta x^2 / 2 = e, i.e. inversion of 1 - exp(-x - theta x^2/2).
// Written as 2e / (sqrt(1 + 2 theta e) + 1) to avoid cancellation for small theta.
inline double lfr_from_exponential(double e, double theta) { return 2.0 * e / (std::sqrt(1.0 + 2.0 * theta * e) + 1.0); }

inline double draw_exponential(RngStream& rng) { return exponential_from_uniform(rng.uniform()); }

inline double draw_standard_normal(RngStream& rng) {
    const double radius = std::sqrt(-2.0 * std::log(rng.uniform()));
    return radius * std::cos(2.0 * std::numbers::pi * rng.uniform());
}

// Marsaglia-Tsang squeeze/rejection sampler, valid for shape >= 1.
inline double draw_gamma(RngStream& rng, double theta) {
    const double d = theta - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        const double z = draw_standard_normal(rng);
        const double t = 1.0 + c * z;
        if (t <= 0.0) continue;
        const double v = t * t * t;
        const double u = rng.uniform();
        const double z2 = z * z;
        if (u < 1.0 - 0.0331 * z2 * z2) return d * v;
        if (std::log(u) < 0.5 * z2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

namespace detail {

inline void require_n(std::size_t n) {
    if (n == 0) throw Error(ErrorCode::empty, "sample size must be positive");
}

} // namespace detail

inline Sample sample_exponential(RngStream& rng, std::size_t n) {
    detail::require_n(n);
    std::vector<double> xs(n);
    for (double& x : xs) x = draw_exponential(rng);
    return Sample(std::move(xs));
}

inline Sample sample_weibull(RngStream& rng, std::size_t n, double theta) {
    if (!(theta >= 1.0) || !std::isfinite(theta)) throw Error(ErrorCode::bad_shape, "Weibull shape must be >= 1");
    detail::require_n(n);
    std::vector<double> xs(n);
    for (double& x : xs) x = weibull_from_exponential(draw_exponential(rng), theta);
    return Sample(std::move(xs));
}

inline Sample sample_gamma(RngStream& rng, std::size_t n, double theta) {
    if (!(theta >= 1.0) || !std::isfinite(theta)) throw Error(ErrorCode::bad_shape, "Gamma shape must be >= 1");
    detail::require_n(n);
    std::vector<double> xs(n);
    for (double& x : xs) x = draw_gamma(rng, theta);
    return Sample(std::move(xs));
}

inline Sample sample_lfr(RngStream& rng, std::size_t n, double theta) {
    if (!(theta >= 0.0) || !std::isfinite(theta)) throw Error(ErrorCode::bad_shape, "LFR parameter must be >= 0");
    detail::require_n(n);
    std::vector<double> xs(n);
    for (double& x : xs) x = lfr_from_exponential(draw_exponential(rng), theta);
    return Sample(std::move(xs));
}

// A lifetime model: the exponential null or one of the NBUE alternatives.
class AlternativeModel {
public:
    AlternativeModel() = default;

    AlternativeModel(Family family, double theta) : family_(family), theta_(theta) {
        switch (family) {
        case Family::exponential: theta_ = 0.0; break;
        case Family::weibull:
        case Family::gamma:
            if (!(theta >= 1.0) || !std::isfinite(theta)) throw Error(ErrorCode::bad_shape, "shape must be >= 1");
            break;
        case Family::lfr:
            if (!(theta >= 0.0) || !std::isfinite(theta)) throw Error(ErrorCode::bad_shape, "LFR parameter must be >= 0");
            break;
        }
    }

    static AlternativeModel exponential() { return {}; }

    Family family() const noexcept { return family_; }
    double theta() const noexcept { return theta_; }

    bool is_null() const noexcept {
        return family_ == Family::exponential || (family_ == Family::lfr && theta_ == 0.0) ||
               ((family_ == Family::weibull || family_ == Family::gamma) && theta_ == 1.0);
    }

    Sample sample(RngStream& rng, std::size_t n) const {
        switch (family_) {
        case Family::exponential: return sample_exponential(rng, n);
        case Family::weibull: return sample_weibull(rng, n, theta_);
        case Family::gamma: return sample_gamma(rng, n, theta_);
        case Family::lfr: return sample_lfr(rng, n, theta_);
        }
        throw Error(ErrorCode::invalid_parameter, "unknown family");
    }

    std::uint64_t key() const noexcept {
        return combine_seed(static_cast<std::uint64_t>(family_) + 1, std::bit_cast<std::uint64_t>(theta_));
    }

    std::string label() const {
        if (family_ == Family::exponential) return "exponential";
        return std::string(to_string(family_)) + "(" + TestSpec::format_param(theta_) + ")";
    }

    friend bool operator==(const AlternativeModel&, const AlternativeModel&) = default;

private:
    Family family_ = Family::exponential;
    double theta_ = 0.0;
};

} // namespace nbue
