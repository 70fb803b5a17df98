#include "hapsris/channel.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>

#include "hapsris/error.hpp"
#include "hapsris/units.hpp"

namespace hapsris {

LosTable default_urban_los_table() {
    return {
        {10.0, 0.246}, {20.0, 0.386}, {30.0, 0.493}, {40.0, 0.613}, {50.0, 0.726},
        {60.0, 0.805}, {70.0, 0.919}, {80.0, 0.968}, {90.0, 0.992},
    };
}

void validate_los_table(const LosTable& table) {
    if (table.empty()) throw ConfigError("los table: empty");
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& pt = table[i];
        if (!std::isfinite(pt.elevation_deg) || !std::isfinite(pt.probability))
            throw ConfigError("los table: non-finite entry at row " + std::to_string(i + 1));
        if (pt.probability < 0.0 || pt.probability > 1.0)
            throw ConfigError("los table: probability outside [0,1] at row " + std::to_string(i + 1));
        if (i > 0 && !(pt.elevation_deg > table[i - 1].elevation_deg))
            throw ConfigError("los table: elevations must be strictly ascending (row " + std::to_string(i + 1) + ")");
    }
}

LosTable parse_los_table(std::istream& in) {
    LosTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        double elevation = 0.0;
        double probability = 0.0;
        if (!(fields >> elevation)) {
            fields.clear();
            std::string rest;
            if (fields >> rest) throw ConfigError("los table line " + std::to_string(line_no) + ": expected two numbers");
            continue;  // blank or comment-only
        }
        if (!(fields >> probability))
            throw ConfigError("los table line " + std::to_string(line_no) + ": expected two numbers");
        std::string extra;
        if (fields >> extra)
            throw ConfigError("los table line " + std::to_string(line_no) + ": unexpected token '" + extra + "'");
        table.push_back({elevation, probability});
    }
    validate_los_table(table);
    return table;
}

LosTable load_los_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open los table file: " + path.string());
    try {
        return parse_los_table(in);
    } catch (const ConfigError& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

void ChannelParams::validate() const {
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw ConfigError("channel: " + what);
    };
    require(frequency_ghz > 0.0 && std::isfinite(frequency_ghz), "frequency_ghz must be > 0");
    require(bandwidth_hz > 0.0 && std::isfinite(bandwidth_hz), "bandwidth must be > 0");
    require(std::isfinite(noise_density_dbm_hz), "noise density must be finite");
    require(shadow_sigma_los_db >= 0.0 && shadow_sigma_nlos_db >= 0.0, "shadowing sigmas must be >= 0");
    require(clutter_loss_nlos_db >= 0.0, "clutter_loss_nlos_db must be >= 0");
    require(atmospheric_margin_db >= 0.0, "atmospheric_margin_db must be >= 0");
    require(receiver_noise_figure_db >= 0.0, "receiver_noise_figure_db must be >= 0");
    require(std::isfinite(gs_antenna_gain_dbi) && std::isfinite(gw_antenna_gain_dbi), "antenna gains must be finite");
    validate_los_table(los_table);
}

double ChannelParams::noise_density_w_hz() const { return dbm_to_watt(noise_density_dbm_hz); }

double ChannelParams::receiver_noise_power_w() const {
    return noise_density_w_hz() * bandwidth_hz * db_to_linear(receiver_noise_figure_db);
}

HopGain HopGain::from_db(double db) { return {db_to_linear(db), db}; }
HopGain HopGain::from_linear(double linear) { return {linear, linear_to_db(linear)}; }

double fspl_db(double distance_km, double frequency_ghz) {
    if (!(distance_km > 0.0) || !(frequency_ghz > 0.0))
        throw DomainError("fspl_db: distance and frequency must be positive");
    return 92.45 + 20.0 * std::log10(distance_km) + 20.0 * std::log10(frequency_ghz);
}

double los_probability(double elevation_deg, const LosTable& table) {
    if (table.empty()) throw ConfigError("los_probability: empty table");
    if (elevation_deg <= table.front().elevation_deg) return table.front().probability;
    if (elevation_deg >= table.back().elevation_deg) return table.back().probability;
    const auto hi = std::upper_bound(table.begin(), table.end(), elevation_deg,
                                     [](double e, const LosTablePoint& p) { return e < p.elevation_deg; });
    const auto lo = hi - 1;
    const double t = (elevation_deg - lo->elevation_deg) / (hi->elevation_deg - lo->elevation_deg);
    return lo->probability + t * (hi->probability - lo->probability);
}

LinkState sample_link_state(double elevation_deg, const ChannelParams& params, RandomStream& rng) {
    const double p_los = los_probability(elevation_deg, params.los_table);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    LinkState s;
    s.is_los = unit(rng) < p_los;
    // always draw, so the stream position does not depend on the LoS outcome
    const double z = gauss(rng);
    s.shadow_db = z * (s.is_los ? params.shadow_sigma_los_db : params.shadow_sigma_nlos_db);
    return s;
}

HopGain hop_power_gain(const LinkGeometry& geometry, const LinkState& state, double endpoint_antenna_gain_dbi,
                       double element_gain_dbi, const ChannelParams& params) {
    if (!std::isfinite(endpoint_antenna_gain_dbi) || !std::isfinite(element_gain_dbi) ||
        !std::isfinite(state.shadow_db))
        throw DomainError("hop_power_gain: gains and shadowing must be finite");
    double db = -fspl_db(geometry.slant_distance_km, params.frequency_ghz) + endpoint_antenna_gain_dbi +
                element_gain_dbi - params.atmospheric_margin_db - state.shadow_db;
    if (!state.is_los) db -= params.clutter_loss_nlos_db;
    return HopGain::from_db(db);
}

}  // namespace hapsris
