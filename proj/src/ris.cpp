#include "hapsris/ris.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hapsris/error.hpp"
#include "hapsris/units.hpp"

namespace hapsris {

std::string to_string(Direction d) { return d == Direction::Downlink ? "downlink" : "uplink"; }

double element_gain_from_aperture_dbi(double cell_edge_fraction) {
    if (!(cell_edge_fraction > 0.0)) throw DomainError("element gain: cell edge fraction must be > 0");
    return linear_to_db(4.0 * kPi * cell_edge_fraction * cell_edge_fraction);
}

RisArchitecture RisArchitecture::passive(int n_total) {
    RisArchitecture a;
    a.mode = RisMode::Passive;
    a.n_total = n_total;
    a.group_size = 0;
    return a;
}

RisArchitecture RisArchitecture::active(int n_total, int group_size) {
    RisArchitecture a;
    a.mode = RisMode::SubConnectedActive;
    a.n_total = n_total;
    a.group_size = group_size;
    return a;
}

std::string RisArchitecture::label() const { return is_active() ? "L" + std::to_string(group_size) : "passive"; }

void RisArchitecture::validate() const {
    const std::string who = "ris " + label() + ": ";
    if (n_total < 1) throw ConfigError(who + "n_total must be >= 1");
    if (!std::isfinite(element_gain_dbi)) throw ConfigError(who + "element gain must be finite");
    if (!(unit_cell_edge_fraction > 0.0)) throw ConfigError(who + "unit_cell_edge_fraction must be > 0");
    if (!is_active()) return;
    if (group_size < 1 || group_size > n_total)
        throw ConfigError(who + "group size must satisfy 1 <= L <= n_total");
    if (n_total % group_size != 0)
        throw ConfigError(who + "n_total (" + std::to_string(n_total) + ") is not divisible by L (" +
                          std::to_string(group_size) + ")");
    if (!(pa_output_power_w > 0.0)) throw ConfigError(who + "pa_output_power_w must be > 0");
    if (!(amp_gain_floor >= 1.0)) throw ConfigError(who + "amp_gain_floor must be >= 1");
    if (!(amp_gain_cap >= amp_gain_floor)) throw ConfigError(who + "amp_gain_cap must be >= amp_gain_floor");
    if (!(ris_noise_figure_db >= 0.0)) throw ConfigError(who + "ris_noise_figure_db must be >= 0");
}

double dynamic_noise_power_w(double noise_density_w_hz, double bandwidth_hz, double ris_noise_figure_db) {
    return noise_density_w_hz * bandwidth_hz * db_to_linear(ris_noise_figure_db);
}

AmplifierState amplification_factor(const RisArchitecture& arch, double tx_power_w, const HopGain& hop1,
                                    double dynamic_noise_power_w) {
    if (!arch.is_active()) throw std::logic_error("amplification_factor: passive RIS has no amplifiers");
    if (!(tx_power_w > 0.0)) throw DomainError("amplification_factor: tx power must be > 0");
    if (!(dynamic_noise_power_w >= 0.0)) throw DomainError("amplification_factor: dynamic noise must be >= 0");

    AmplifierState s;
    s.input_power_per_element_w = tx_power_w * hop1.power_gain_linear;
    s.dynamic_noise_power_w = dynamic_noise_power_w;
    const double per_group_input = arch.group_size * (s.input_power_per_element_w + dynamic_noise_power_w);
    const double rho = std::sqrt(arch.pa_output_power_w / per_group_input);
    s.rho = std::clamp(rho, arch.amp_gain_floor, arch.amp_gain_cap);
    return s;
}

double cascade_snr(const CascadeLink& link, int n_total, const AmplifierState& amp, double tx_power_w,
                   double receiver_noise_power_w) {
    if (!(tx_power_w > 0.0) || !(receiver_noise_power_w > 0.0))
        throw DomainError("end_to_end_snr: tx and receiver noise power must be > 0");
    if (!(link.hop1.power_gain_linear > 0.0) || !(link.hop2.power_gain_linear > 0.0))
        throw DomainError("end_to_end_snr: hop gains must be > 0");
    const double n = static_cast<double>(n_total);
    const double rho2 = amp.rho * amp.rho;
    const double g1 = link.hop1.power_gain_linear;
    const double g2 = link.hop2.power_gain_linear;
    const double signal = tx_power_w * rho2 * n * n * g1 * g2;
    const double noise = rho2 * n * g2 * amp.dynamic_noise_power_w + receiver_noise_power_w;
    return signal / noise;
}

double end_to_end_snr(const CascadeLink& link, const RisArchitecture& arch, double tx_power_w,
                      double receiver_noise_power_w, double dynamic_noise_power_w) {
    const AmplifierState amp =
        arch.is_active() ? amplification_factor(arch, tx_power_w, link.hop1, dynamic_noise_power_w) : AmplifierState{};
    return cascade_snr(link, arch.n_total, amp, tx_power_w, receiver_noise_power_w);
}

double elementwise_oracle_snr(std::span<const double> hop1_amplitudes, std::span<const double> hop2_amplitudes,
                              std::span<const int> group_of, std::span<const double> rho_per_group,
                              double tx_power_w, double sigma_v2, double receiver_noise_power_w) {
    if (hop1_amplitudes.size() != hop2_amplitudes.size() || hop1_amplitudes.size() != group_of.size())
        throw DomainError("elementwise_oracle_snr: per-element inputs differ in length");
    if (hop1_amplitudes.empty()) throw DomainError("elementwise_oracle_snr: no elements");
    if (!(tx_power_w > 0.0) || !(receiver_noise_power_w > 0.0) || !(sigma_v2 >= 0.0))
        throw DomainError("elementwise_oracle_snr: invalid powers");

    std::vector<double> coherent(rho_per_group.size(), 0.0);
    std::vector<double> leaked(rho_per_group.size(), 0.0);
    for (std::size_t n = 0; n < hop1_amplitudes.size(); ++n) {
        const int g = group_of[n];
        if (g < 0 || static_cast<std::size_t>(g) >= rho_per_group.size())
            throw DomainError("elementwise_oracle_snr: group index out of range");
        coherent[g] += std::abs(hop1_amplitudes[n]) * std::abs(hop2_amplitudes[n]);
        leaked[g] += hop2_amplitudes[n] * hop2_amplitudes[n];
    }
    double amplitude = 0.0;
    double noise = receiver_noise_power_w;
    for (std::size_t g = 0; g < rho_per_group.size(); ++g) {
        amplitude += rho_per_group[g] * coherent[g];
        noise += sigma_v2 * rho_per_group[g] * rho_per_group[g] * leaked[g];
    }
    return tx_power_w * amplitude * amplitude / noise;
}

}  // namespace hapsris
