// SPDX-License-Identifier: Apache-2.0
//
// Link-level performance measures and the dBm/W conversions used project-wide.

#ifndef FAIRHP_METRICS_HPP
#define FAIRHP_METRICS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace fairhp {

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

// Thermal noise over the band: PSD (dBm/Hz) + 10 log10(bandwidth), in watts.
double noise_power_watts(double psd_dbm_hz, double bandwidth_hz);

inline constexpr double kRfChainPowerW = 0.25;

// All four throw std::invalid_argument on an empty rate vector.
double sum_rate(std::span<const double> rates);
// (sum R)^2 / (K sum R^2); empty when every rate is zero.
std::optional<double> jain_index(std::span<const double> rates);
double rate_gap(std::span<const double> rates);

double energy_efficiency(double sum_rate_bps_hz, double p_t_w, std::size_t n_rf, double p_rf_w = kRfChainPowerW);

struct MetricRecord {
    std::vector<double> per_ue_rates;
    double sum_rate = 0.0;
    std::optional<double> jain;
    double rate_gap = 0.0;
    double energy_efficiency = 0.0;
};

MetricRecord make_metric_record(std::span<const double> rates, double p_t_w, std::size_t n_rf,
                                double p_rf_w = kRfChainPowerW);

} // namespace fairhp

#endif // FAIRHP_METRICS_HPP
