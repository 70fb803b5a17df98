#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hapsris/ris.hpp"

namespace hapsris {

struct RisPowerParams {
    double p_sw_w = 7.8e-3;                      // phase shifting, per element
    double p_dc_w = 0.31622776601683794e-3;      // biasing, per element (-5 dBm)
    double p_a_w = 2.0;                          // per amplifier

    void validate() const;
};

struct FeasibilityParams {
    double element_mass_kg = 0.010;
    double solar_irradiance_w_m2 = 1360.0;
    double solar_efficiency = 0.27;

    void validate() const;
};

struct FeasibilityReport {
    double wavelength_m = 0.0;
    double area_m2 = 0.0;
    double mass_kg = 0.0;
    double solar_area_m2 = 0.0;
};

struct LinkMetrics {
    int scheme_index = 0;
    Direction direction = Direction::Downlink;
    double tx_power_dbm = 0.0;
    int drop_id = 0;
    int gateway_id = 0;
    double elevation_deg = 0.0;
    double snr_db = 0.0;
    double rate_bps = 0.0;
    double energy_efficiency = 0.0;  // bit/J
};

/// Empirical distribution of a sample. Immutable once built.
class CdfSummary {
public:
    explicit CdfSummary(std::vector<double> values);

    /// Fraction of samples <= x.
    double evaluate(double x) const;
    /// Smallest sample v with evaluate(v) >= p, p in [0, 1].
    double percentile(double p) const;

    double min() const { return sorted_.front(); }
    double max() const { return sorted_.back(); }
    double mean() const;
    double sum() const;
    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted_values() const { return sorted_; }

private:
    std::vector<double> sorted_;
};

double shannon_rate(double snr_linear, double bandwidth_hz);

/// N P_sw + N P_dc + (N / L) P_A; the amplifier term vanishes in passive mode.
double ris_power_consumption(int n_total, RisMode mode, int group_size, const RisPowerParams& params);
double ris_power_consumption(const RisArchitecture& arch, const RisPowerParams& params);

/// Delivered bits per joule of transmit plus RIS power.
double energy_efficiency(double rate_bps, double tx_power_w, double ris_power_w);

FeasibilityReport feasibility_report(int n_total, double frequency_ghz, double cell_edge_fraction,
                                     double ris_power_w, const FeasibilityParams& params);

CdfSummary empirical_cdf(std::span<const double> values);

}  // namespace hapsris
