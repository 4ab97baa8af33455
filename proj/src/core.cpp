#include "hfnoise/core.hpp"

#include <cmath>

namespace hfnoise {

void TickSeries::validate() const {
    if (times.size() != log_prices.size()) {
        throw MalformedInput(symbol + " " + date + ": times/log_prices length mismatch");
    }
    if (times.size() < 2) {
        throw InsufficientData(symbol + " " + date + ": need at least 2 ticks, have " +
                               std::to_string(times.size()));
    }
    if (!(session_length > 0.0)) {
        throw MalformedInput(symbol + " " + date + ": nonpositive session_length");
    }
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || !std::isfinite(log_prices[i])) {
            throw MalformedInput(symbol + " " + date + ": non-finite tick at index " +
                                 std::to_string(i));
        }
        if (times[i] < 0.0 || times[i] > session_length) {
            throw MalformedInput(symbol + " " + date + ": time outside session at index " +
                                 std::to_string(i));
        }
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw MalformedInput(symbol + " " + date + ": times not strictly increasing at index " +
                                 std::to_string(i));
        }
    }
}

ReturnSeries log_returns(const TickSeries& ticks, const TimeConvention& conv) {
    ticks.validate();
    const std::size_t n = ticks.size() - 1;
    ReturnSeries out;
    out.returns.resize(n);
    out.gaps.resize(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out.returns[i] = ticks.log_prices[i + 1] - ticks.log_prices[i];
        out.gaps[i] = conv.years_from_seconds(ticks.times[i + 1] - ticks.times[i]);
        total += out.gaps[i];
    }
    out.T_years = total;
    return out;
}

double nsr(double sigma2, double a2, double delta) {
    if (!(sigma2 >= 0.0) || !(a2 >= 0.0) || !(delta > 0.0)) {
        throw MalformedInput("nsr: require sigma2 >= 0, a2 >= 0, delta > 0");
    }
    const double denom = sigma2 * delta + 2.0 * a2;
    if (denom == 0.0) {
        throw DegenerateInput("nsr: sigma2*delta + 2a^2 = 0");
    }
    return 2.0 * a2 / denom;
}

}  // namespace hfnoise
