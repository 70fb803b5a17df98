#include "hapsris/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hapsris/error.hpp"
#include "hapsris/units.hpp"

namespace hapsris {

void RisPowerParams::validate() const {
    if (!(p_sw_w >= 0.0) || !(p_dc_w >= 0.0) || !(p_a_w >= 0.0))
        throw ConfigError("power: P_sw, P_dc and P_A must be >= 0");
}

void FeasibilityParams::validate() const {
    if (!(element_mass_kg > 0.0)) throw ConfigError("feasibility: element_mass_kg must be > 0");
    if (!(solar_irradiance_w_m2 > 0.0)) throw ConfigError("feasibility: solar_irradiance_w_m2 must be > 0");
    if (!(solar_efficiency > 0.0 && solar_efficiency <= 1.0))
        throw ConfigError("feasibility: solar_efficiency must be in (0, 1]");
}

CdfSummary::CdfSummary(std::vector<double> values) : sorted_(std::move(values)) {
    if (sorted_.empty()) throw DomainError("empirical_cdf: empty sample");
    for (double v : sorted_)
        if (!std::isfinite(v)) throw DomainError("empirical_cdf: non-finite value");
    std::sort(sorted_.begin(), sorted_.end());
}

double CdfSummary::evaluate(double x) const {
    const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

double CdfSummary::percentile(double p) const {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("percentile: p must be in [0, 1]");
    const auto n = sorted_.size();
    // smallest k with k / n >= p, guarding against p * n rounding up
    auto k = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
    if (k > 0 && static_cast<double>(k - 1) / static_cast<double>(n) >= p) --k;
    k = std::clamp<std::size_t>(k, 1, n);
    return sorted_[k - 1];
}

double CdfSummary::sum() const { return std::accumulate(sorted_.begin(), sorted_.end(), 0.0); }
double CdfSummary::mean() const { return sum() / static_cast<double>(sorted_.size()); }

double shannon_rate(double snr_linear, double bandwidth_hz) {
    if (!(snr_linear >= 0.0)) throw DomainError("shannon_rate: snr must be >= 0");
    if (!(bandwidth_hz > 0.0)) throw DomainError("shannon_rate: bandwidth must be > 0");
    return bandwidth_hz * std::log2(1.0 + snr_linear);
}

double ris_power_consumption(int n_total, RisMode mode, int group_size, const RisPowerParams& params) {
    if (n_total < 1) throw ConfigError("ris power: n_total must be >= 1");
    const double n = static_cast<double>(n_total);
    double watts = n * params.p_sw_w + n * params.p_dc_w;
    if (mode == RisMode::SubConnectedActive) {
        if (group_size < 1 || n_total % group_size != 0)
            throw ConfigError("ris power: n_total " + std::to_string(n_total) + " is not divisible by L " +
                              std::to_string(group_size));
        watts += static_cast<double>(n_total / group_size) * params.p_a_w;
    }
    return watts;
}

double ris_power_consumption(const RisArchitecture& arch, const RisPowerParams& params) {
    return ris_power_consumption(arch.n_total, arch.mode, arch.group_size, params);
}

double energy_efficiency(double rate_bps, double tx_power_w, double ris_power_w) {
    const double total = tx_power_w + ris_power_w;
    if (!(total > 0.0)) throw DomainError("energy_efficiency: total consumed power must be > 0");
    if (!(rate_bps >= 0.0)) throw DomainError("energy_efficiency: rate must be >= 0");
    return rate_bps / total;
}

FeasibilityReport feasibility_report(int n_total, double frequency_ghz, double cell_edge_fraction,
                                     double ris_power_w, const FeasibilityParams& params) {
    if (n_total < 1 || !(frequency_ghz > 0.0) || !(cell_edge_fraction > 0.0) || !(ris_power_w >= 0.0))
        throw DomainError("feasibility_report: inputs must be positive");
    params.validate();
    FeasibilityReport r;
    r.wavelength_m = wavelength_m(frequency_ghz);
    const double edge = cell_edge_fraction * r.wavelength_m;
    r.area_m2 = n_total * edge * edge;
    r.mass_kg = n_total * params.element_mass_kg;
    r.solar_area_m2 = ris_power_w / (params.solar_irradiance_w_m2 * params.solar_efficiency);
    return r;
}

CdfSummary empirical_cdf(std::span<const double> values) {
    return CdfSummary(std::vector<double>(values.begin(), values.end()));
}

}  // namespace hapsris
