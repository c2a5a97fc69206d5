// SPDX-License-Identifier: Apache-2.0

#include "fairhp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fairhp {

namespace {

void require_rates(std::span<const double> rates, const char* who) {
    if (rates.empty())
        throw std::invalid_argument(std::string(who) + ": at least one UE rate required");
}

} // namespace

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

double noise_power_watts(double psd_dbm_hz, double bandwidth_hz) {
    return dbm_to_watts(psd_dbm_hz + 10.0 * std::log10(bandwidth_hz));
}

double sum_rate(std::span<const double> rates) {
    require_rates(rates, "sum_rate");
    double s = 0.0;
    for (const double r : rates)
        s += r;
    return s;
}

std::optional<double> jain_index(std::span<const double> rates) {
    require_rates(rates, "jain_index");
    double s = 0.0;
    double s2 = 0.0;
    for (const double r : rates) {
        s += r;
        s2 += r * r;
    }
    if (s2 == 0.0)
        return std::nullopt;
    return (s * s) / (static_cast<double>(rates.size()) * s2);
}

double rate_gap(std::span<const double> rates) {
    require_rates(rates, "rate_gap");
    const auto [lo, hi] = std::minmax_element(rates.begin(), rates.end());
    return *hi - *lo;
}

double energy_efficiency(double sum_rate_bps_hz, double p_t_w, std::size_t n_rf, double p_rf_w) {
    const double consumed = p_t_w + static_cast<double>(n_rf) * p_rf_w;
    if (!(consumed > 0.0))
        throw std::invalid_argument("energy_efficiency: consumed power must be positive");
    return sum_rate_bps_hz / consumed;
}

MetricRecord make_metric_record(std::span<const double> rates, double p_t_w, std::size_t n_rf, double p_rf_w) {
    MetricRecord rec;
    rec.per_ue_rates.assign(rates.begin(), rates.end());
    rec.sum_rate = sum_rate(rates);
    rec.jain = jain_index(rates);
    rec.rate_gap = rate_gap(rates);
    rec.energy_efficiency = energy_efficiency(rec.sum_rate, p_t_w, n_rf, p_rf_w);
    return rec;
}

} // namespace fairhp
