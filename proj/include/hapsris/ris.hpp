#pragma once

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "hapsris/channel.hpp"

namespace hapsris {

enum class RisMode { Passive, SubConnectedActive };

enum class Direction { Downlink, Uplink };

std::string to_string(Direction d);

/// Radiation gain of a unit cell of edge fraction*lambda: 4*pi*(fraction)^2, in dBi.
double element_gain_from_aperture_dbi(double cell_edge_fraction);

/// RIS hardware configuration. Passive mode ignores the amplifier fields;
/// switching all amplifiers off is modelled as a Passive architecture with
/// the same element count.
struct RisArchitecture {
    RisMode mode = RisMode::Passive;
    int n_total = 30000;
    int group_size = 0;  // elements per amplifier (L), active only
    double pa_output_power_w = 2.0;
    double amp_gain_floor = 1.0;
    double amp_gain_cap = std::numeric_limits<double>::infinity();
    double ris_noise_figure_db = 5.0;
    double element_gain_dbi = element_gain_from_aperture_dbi(0.2);
    double unit_cell_edge_fraction = 0.2;

    static RisArchitecture passive(int n_total);
    static RisArchitecture active(int n_total, int group_size);

    bool is_active() const { return mode == RisMode::SubConnectedActive; }
    int amplifier_count() const { return is_active() ? n_total / group_size : 0; }
    /// "passive" or "L500" style label.
    std::string label() const;
    void validate() const;
};

struct AmplifierState {
    double rho = 1.0;                      // amplitude gain shared by a group
    double input_power_per_element_w = 0.0;
    double dynamic_noise_power_w = 0.0;    // sigma_v^2 per element
};

struct CascadeLink {
    HopGain hop1;  // transmitter -> each RIS element
    HopGain hop2;  // each RIS element -> receiver
    Direction direction = Direction::Downlink;
};

/// sigma_v^2 = N0 * B * F_ris.
double dynamic_noise_power_w(double noise_density_w_hz, double bandwidth_hz, double ris_noise_figure_db);

/// Per-amplifier output budget at equality: L * rho^2 * (P_t g1 + sigma_v^2) = P_A,
/// then clamped to [amp_gain_floor, amp_gain_cap]. Throws std::logic_error in passive mode.
AmplifierState amplification_factor(const RisArchitecture& arch, double tx_power_w, const HopGain& hop1,
                                    double dynamic_noise_power_w);

/// Closed-form SNR with uniform per-element gains and ideal phase alignment:
///   P rho^2 N^2 g1 g2 / (rho^2 N g2 sigma_v^2 + n_rx)
double cascade_snr(const CascadeLink& link, int n_total, const AmplifierState& amp, double tx_power_w,
                   double receiver_noise_power_w);

/// End-to-end SNR for an architecture; in active mode the amplifier state
/// is derived from the output-power budget.
double end_to_end_snr(const CascadeLink& link, const RisArchitecture& arch, double tx_power_w,
                      double receiver_noise_power_w, double dynamic_noise_power_w);

/// Element-by-element SNR without the uniform-gain assumption:
///   P (sum_g rho_g sum_{n in g} |h1_n||h2_n|)^2 / (sigma_v^2 sum_g rho_g^2 sum_{n in g} |h2_n|^2 + n_rx)
/// group_of[n] indexes rho_per_group.
double elementwise_oracle_snr(std::span<const double> hop1_amplitudes, std::span<const double> hop2_amplitudes,
                              std::span<const int> group_of, std::span<const double> rho_per_group,
                              double tx_power_w, double sigma_v2, double receiver_noise_power_w);

}  // namespace hapsris
