#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "hapsris/rng.hpp"
#include "hapsris/scenario.hpp"

namespace hapsris {

struct LosTablePoint {
    double elevation_deg;
    double probability;
};

using LosTable = std::vector<LosTablePoint>;

/// Urban air-to-ground LoS probability in 10 degree steps, transcribed from
/// the 3GPP NTN urban table. Not a measured input of this study; override it
/// through the config for other environments. Mirrors data/los_table_urban.txt.
LosTable default_urban_los_table();

/// Two-column text (elevation_deg probability), one pair per line, '#' starts
/// a comment. Throws ConfigError with the line number on malformed input.
LosTable parse_los_table(std::istream& in);
LosTable load_los_table(const std::filesystem::path& path);

/// Throws ConfigError unless non-empty, strictly ascending, probabilities in [0,1].
void validate_los_table(const LosTable& table);

struct ChannelParams {
    double frequency_ghz = 2.4;
    double bandwidth_hz = 100e6;
    double noise_density_dbm_hz = -174.0;
    LosTable los_table = default_urban_los_table();
    double shadow_sigma_los_db = 4.0;
    double shadow_sigma_nlos_db = 6.0;
    double clutter_loss_nlos_db = 20.0;
    double atmospheric_margin_db = 0.0;
    double gs_antenna_gain_dbi = 43.2;
    double gw_antenna_gain_dbi = 0.0;
    double receiver_noise_figure_db = 0.0;

    void validate() const;

    /// Thermal noise density in W/Hz.
    double noise_density_w_hz() const;
    /// N0 * B * F at a ground receiver, W.
    double receiver_noise_power_w() const;
};

struct LinkState {
    bool is_los = true;
    double shadow_db = 0.0;
};

struct HopGain {
    double power_gain_linear = 0.0;
    double power_gain_db = 0.0;

    static HopGain from_db(double db);
    static HopGain from_linear(double linear);
};

/// Friis free-space loss, km and GHz units.
double fspl_db(double distance_km, double frequency_ghz);

/// Piecewise-linear in elevation, clamped to the end values outside the table.
double los_probability(double elevation_deg, const LosTable& table);

LinkState sample_link_state(double elevation_deg, const ChannelParams& params, RandomStream& rng);

/// Large-scale power gain of one hop, including the endpoint antenna and the
/// RIS element gain but not the transmit power.
HopGain hop_power_gain(const LinkGeometry& geometry, const LinkState& state,
                       double endpoint_antenna_gain_dbi, double element_gain_dbi,
                       const ChannelParams& params);

}  // namespace hapsris
