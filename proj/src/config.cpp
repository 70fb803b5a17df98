#include "hapsris/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "hapsris/error.hpp"
#include "hapsris/units.hpp"

namespace hapsris {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string strip_comment(const std::string& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '#' || line[i] == ';') return line.substr(0, i);
    }
    return line;
}

std::optional<double> to_double(const std::string& s) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return v;
}

template <typename Int>
std::optional<Int> to_int(const std::string& s) {
    Int v{};
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return v;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// One parsed `key = value` with its location, for error context.
struct Entry {
    std::string value;
    int line = 0;
};

class Reader {
public:
    Reader(std::string origin, std::map<std::string, Entry> entries)
        : origin_(std::move(origin)), entries_(std::move(entries)) {}

    [[noreturn]] void fail(const std::string& key, const std::string& what) const {
        const auto it = entries_.find(key);
        const std::string where = it == entries_.end() ? origin_ : origin_ + ":" + std::to_string(it->second.line);
        throw ConfigError(where + ": " + key + ": " + what);
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }
    const std::string& raw(const std::string& key) const { return entries_.at(key).value; }

    void number(const std::string& key, double& out) const {
        if (!has(key)) return;
        const auto v = to_double(raw(key));
        if (!v || !std::isfinite(*v)) fail(key, "expected a finite number, got '" + raw(key) + "'");
        out = *v;
    }

    void integer(const std::string& key, int& out) const {
        if (!has(key)) return;
        const auto v = to_int<int>(raw(key));
        if (!v) fail(key, "expected an integer, got '" + raw(key) + "'");
        out = *v;
    }

    void seed(const std::string& key, std::uint64_t& out) const {
        if (!has(key)) return;
        const auto v = to_int<std::uint64_t>(raw(key));
        if (!v) fail(key, "expected an unsigned 64-bit integer, got '" + raw(key) + "'");
        out = *v;
    }

    void boolean(const std::string& key, bool& out) const {
        if (!has(key)) return;
        const std::string& v = raw(key);
        if (v == "true" || v == "yes" || v == "on" || v == "1") out = true;
        else if (v == "false" || v == "no" || v == "off" || v == "0") out = false;
        else fail(key, "expected true/false, got '" + v + "'");
    }

    /// Comma list; items may be ranges `start:stop` (step 1) or `start:step:stop`.
    void number_list(const std::string& key, std::vector<double>& out) const {
        if (!has(key)) return;
        std::vector<double> values;
        for (const auto& item : split_list(raw(key))) {
            std::vector<std::string> parts;
            std::stringstream ss(item);
            std::string part;
            while (std::getline(ss, part, ':')) parts.push_back(trim(part));
            std::vector<double> nums;
            for (const auto& p : parts) {
                const auto v = to_double(p);
                if (!v || !std::isfinite(*v)) fail(key, "bad number '" + p + "'");
                nums.push_back(*v);
            }
            if (nums.size() == 1) {
                values.push_back(nums[0]);
            } else if (nums.size() == 2 || nums.size() == 3) {
                const double start = nums[0];
                const double step = nums.size() == 3 ? nums[1] : 1.0;
                const double stop = nums.back();
                if (!(step > 0.0) || stop < start) fail(key, "bad range '" + item + "'");
                const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9));
                for (long i = 0; i <= count; ++i) values.push_back(start + static_cast<double>(i) * step);
            } else {
                fail(key, "bad list item '" + item + "'");
            }
        }
        if (values.empty()) fail(key, "empty list");
        out = std::move(values);
    }

private:
    std::string origin_;
    std::map<std::string, Entry> entries_;
};

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"scenario", {"radius_km", "haps_altitude_km", "ground_station_x_km", "ground_station_y_km", "num_gateways"}},
        {"channel",
         {"frequency_ghz", "bandwidth_mhz", "noise_density_dbm_hz", "gs_antenna_gain_dbi", "gw_antenna_gain_dbi",
          "receiver_noise_figure_db", "atmospheric_margin_db", "shadow_sigma_los_db", "shadow_sigma_nlos_db",
          "clutter_loss_nlos_db", "los_table_file", "high_gain_receiver", "high_gain_receiver_dbi"}},
        {"ris",
         {"n_total", "schemes", "group_size_L", "pa_output_power_w", "amp_gain_floor", "amp_gain_cap",
          "ris_noise_figure_db", "element_gain_dbi", "unit_cell_edge_fraction"}},
        {"power", {"p_sw_mw", "p_dc_dbm"}},
        {"feasibility", {"element_mass_kg", "solar_irradiance_w_m2", "solar_efficiency"}},
        {"campaign", {"dl_tx_power_dbm", "ul_tx_power_dbm", "num_drops", "master_seed"}},
    };
    return keys;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, const std::filesystem::path& base_dir, const std::string& origin) {
    std::map<std::string, Entry> entries;  // "section.key"
    std::string section;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& what) -> void {
        throw ConfigError(origin + ":" + std::to_string(line_no) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string body = trim(strip_comment(line));
        if (body.empty()) continue;
        if (body.front() == '[') {
            if (body.back() != ']') fail("malformed section header '" + body + "'");
            section = trim(std::string_view(body).substr(1, body.size() - 2));
            if (!known_keys().count(section)) fail("unknown section [" + section + "]");
            continue;
        }
        const auto eq = body.find('=');
        if (eq == std::string::npos) fail("expected 'key = value', got '" + body + "'");
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty()) fail("missing key before '='");
        if (section.empty()) fail("key '" + key + "' appears before any [section]");
        if (!known_keys().at(section).count(key)) fail("unknown key '" + key + "' in [" + section + "]");
        if (value.empty()) fail("key '" + key + "' has no value");
        const std::string full = section + "." + key;
        if (entries.count(full)) fail("duplicate key '" + key + "' in [" + section + "]");
        entries[full] = {value, line_no};
    }

    const Reader r(origin, std::move(entries));
    RunConfig cfg;
    CampaignSpec& spec = cfg.spec;
    spec = default_campaign_spec();

    auto& sc = spec.scenario;
    r.number("scenario.radius_km", sc.radius_km);
    r.number("scenario.haps_altitude_km", sc.haps_altitude_km);
    r.number("scenario.ground_station_x_km", sc.ground_station.x);
    r.number("scenario.ground_station_y_km", sc.ground_station.y);
    r.integer("scenario.num_gateways", sc.num_gateways);

    auto& ch = spec.channel;
    r.number("channel.frequency_ghz", ch.frequency_ghz);
    double bandwidth_mhz = ch.bandwidth_hz / 1e6;
    r.number("channel.bandwidth_mhz", bandwidth_mhz);
    ch.bandwidth_hz = bandwidth_mhz * 1e6;
    r.number("channel.noise_density_dbm_hz", ch.noise_density_dbm_hz);
    r.number("channel.gs_antenna_gain_dbi", ch.gs_antenna_gain_dbi);
    r.number("channel.gw_antenna_gain_dbi", ch.gw_antenna_gain_dbi);
    r.number("channel.receiver_noise_figure_db", ch.receiver_noise_figure_db);
    r.number("channel.atmospheric_margin_db", ch.atmospheric_margin_db);
    r.number("channel.shadow_sigma_los_db", ch.shadow_sigma_los_db);
    r.number("channel.shadow_sigma_nlos_db", ch.shadow_sigma_nlos_db);
    r.number("channel.clutter_loss_nlos_db", ch.clutter_loss_nlos_db);
    if (r.has("channel.los_table_file")) {
        std::filesystem::path p = r.raw("channel.los_table_file");
        if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
        try {
            ch.los_table = load_los_table(p);
        } catch (const std::exception& e) {
            r.fail("channel.los_table_file", e.what());
        }
    }
    r.boolean("channel.high_gain_receiver", spec.high_gain_receiver);
    r.number("channel.high_gain_receiver_dbi", spec.high_gain_receiver_dbi);

    // Shared RIS hardware fields, applied to every scheme and the reference grouping.
    RisArchitecture proto = spec.reference;
    r.integer("ris.n_total", proto.n_total);
    r.number("ris.pa_output_power_w", proto.pa_output_power_w);
    r.number("ris.amp_gain_floor", proto.amp_gain_floor);
    if (r.has("ris.amp_gain_cap") && (r.raw("ris.amp_gain_cap") == "unbounded" || r.raw("ris.amp_gain_cap") == "inf"))
        proto.amp_gain_cap = std::numeric_limits<double>::infinity();
    else
        r.number("ris.amp_gain_cap", proto.amp_gain_cap);
    r.number("ris.ris_noise_figure_db", proto.ris_noise_figure_db);
    r.number("ris.unit_cell_edge_fraction", proto.unit_cell_edge_fraction);
    if (!(proto.unit_cell_edge_fraction > 0.0)) r.fail("ris.unit_cell_edge_fraction", "must be > 0");
    proto.element_gain_dbi = element_gain_from_aperture_dbi(proto.unit_cell_edge_fraction);
    r.number("ris.element_gain_dbi", proto.element_gain_dbi);

    int reference_L = spec.reference.group_size;
    r.integer("ris.group_size_L", reference_L);
    auto make = [&proto](RisMode mode, int group_size) {
        RisArchitecture a = proto;
        a.mode = mode;
        a.group_size = mode == RisMode::Passive ? 0 : group_size;
        return a;
    };
    spec.reference = make(RisMode::SubConnectedActive, reference_L);

    std::vector<RisArchitecture> schemes;
    if (r.has("ris.schemes")) {
        for (const auto& item : split_list(r.raw("ris.schemes"))) {
            if (item == "passive") {
                schemes.push_back(make(RisMode::Passive, 0));
                continue;
            }
            const std::string digits = (item.size() > 1 && (item[0] == 'L' || item[0] == 'l')) ? item.substr(1) : item;
            const auto L = to_int<int>(digits);
            if (!L) r.fail("ris.schemes", "expected 'passive' or a group size, got '" + item + "'");
            schemes.push_back(make(RisMode::SubConnectedActive, *L));
        }
        if (schemes.empty()) r.fail("ris.schemes", "empty list");
    } else {
        for (const auto& s : spec.schemes) schemes.push_back(make(s.mode, s.group_size));
    }
    spec.schemes = std::move(schemes);

    double p_sw_mw = spec.power.p_sw_w * 1e3;
    double p_dc_dbm = -5.0;
    r.number("power.p_sw_mw", p_sw_mw);
    r.number("power.p_dc_dbm", p_dc_dbm);
    spec.power.p_sw_w = p_sw_mw * 1e-3;
    spec.power.p_dc_w = dbm_to_watt(p_dc_dbm);
    spec.power.p_a_w = proto.pa_output_power_w;

    r.number("feasibility.element_mass_kg", spec.feasibility.element_mass_kg);
    r.number("feasibility.solar_irradiance_w_m2", spec.feasibility.solar_irradiance_w_m2);
    r.number("feasibility.solar_efficiency", spec.feasibility.solar_efficiency);

    r.number_list("campaign.dl_tx_power_dbm", spec.dl_tx_power_dbm);
    r.number_list("campaign.ul_tx_power_dbm", spec.ul_tx_power_dbm);
    r.integer("campaign.num_drops", spec.num_drops);
    r.seed("campaign.master_seed", spec.master_seed);

    try {
        spec.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

RunConfig parse_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    RunConfig cfg = parse_config_text(text.str(), path.parent_path(), path.string());
    cfg.source = path;
    return cfg;
}

std::string default_config_text() {
    return R"(# HAPS-RIS backhaul campaign. Every key is optional; values shown are defaults.

[scenario]
radius_km = 50
haps_altitude_km = 20
ground_station_x_km = 5
ground_station_y_km = 5
num_gateways = 1000

[channel]
frequency_ghz = 2.4
bandwidth_mhz = 100
noise_density_dbm_hz = -174
gs_antenna_gain_dbi = 43.2
gw_antenna_gain_dbi = 0
receiver_noise_figure_db = 0
atmospheric_margin_db = 0
# Reconstructed channel knobs (not measured inputs).
shadow_sigma_los_db = 4
shadow_sigma_nlos_db = 6
clutter_loss_nlos_db = 20
# los_table_file = los_table_urban.txt
high_gain_receiver = false
high_gain_receiver_dbi = 15

[ris]
n_total = 30000
schemes = passive, 2000, 1000, 500
# grouping used for the power / feasibility report
group_size_L = 500
pa_output_power_w = 2
amp_gain_floor = 1
amp_gain_cap = unbounded
ris_noise_figure_db = 5
unit_cell_edge_fraction = 0.2
# element_gain_dbi defaults to 10*log10(4*pi*fraction^2)

[power]
p_sw_mw = 7.8
p_dc_dbm = -5

[feasibility]
element_mass_kg = 0.010
solar_irradiance_w_m2 = 1360
solar_efficiency = 0.27

[campaign]
dl_tx_power_dbm = 45:55
ul_tx_power_dbm = 28, 29, 30
num_drops = 100
master_seed = 1
)";
}

}  // namespace hapsris
