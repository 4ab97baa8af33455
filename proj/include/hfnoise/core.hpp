#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfnoise/errors.hpp"

namespace hfnoise {

// Trading clock: 6.5-hour session, 252 trading days. One year of trading
// time is therefore 5,896,800 seconds; every internal interval is expressed
// in years on this clock and every variance is annualized.
struct TimeConvention {
    double seconds_per_day = 23400.0;
    double days_per_year = 252.0;

    double seconds_per_year() const { return seconds_per_day * days_per_year; }
    double years_from_seconds(double s) const { return s / seconds_per_year(); }
};

// One stock-day of observed (time, log-price) ticks. Times are seconds since
// session open, strictly increasing, within [0, session_length].
struct TickSeries {
    std::string symbol;
    std::string date;                   // YYYY-MM-DD
    std::vector<double> times;          // seconds since open
    std::vector<double> log_prices;     // natural-log prices
    double session_length = 23400.0;    // seconds

    std::size_t size() const { return times.size(); }

    // Throws MalformedInput / InsufficientData when the invariants fail.
    void validate() const;
};

// Log-returns with per-interval elapsed times, both derived from a TickSeries.
// gaps are in years; T_years is their sum.
struct ReturnSeries {
    std::vector<double> returns;
    std::vector<double> gaps;
    double T_years = 0.0;

    std::size_t n() const { return returns.size(); }
    double mean_gap() const { return T_years / static_cast<double>(n()); }
};

enum class EstimatorTag { MLE, TSRV };

// Symmetric 2x2 matrix, ordered (sigma2, a2).
struct Sym2 {
    double v00 = 0.0;
    double v01 = 0.0;
    double v11 = 0.0;

    bool positive_semidefinite(double tol = 0.0) const {
        return v00 >= -tol && v11 >= -tol && v00 * v11 - v01 * v01 >= -tol;
    }
};

// One estimator's output for one stock-day: annualized efficient-price
// variance, noise variance, noise-to-signal ratio, and (for the MLE) the
// asymptotic covariance of (sigma2_hat, a2_hat).
struct NoiseVolEstimate {
    double sigma2 = 0.0;             // annualized variance of X
    double a2 = 0.0;                 // noise variance, squared log-price units
    double nsr = 0.0;                // 2a^2 / (sigma2*delta + 2a^2)
    std::optional<Sym2> avar;        // absent for TSRV
    EstimatorTag estimator_tag = EstimatorTag::MLE;
    std::size_t n_obs = 0;
    bool converged = true;
};

// Log-returns R_i = Y_i+1 - Y_i with gaps converted to years.
// Throws InsufficientData for fewer than 2 ticks, MalformedInput for
// non-increasing times or non-finite prices.
ReturnSeries log_returns(const TickSeries& ticks, const TimeConvention& conv = {});

// Noise-to-signal ratio 2a^2 / (sigma2*delta + 2a^2) at observation
// interval delta (years). Throws DegenerateInput when the denominator is 0.
double nsr(double sigma2, double a2, double delta);

}  // namespace hfnoise
