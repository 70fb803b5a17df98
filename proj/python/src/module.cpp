#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "hapsris/config.hpp"
#include "hapsris/engine.hpp"
#include "hapsris/error.hpp"
#include "hapsris/output.hpp"

namespace py = pybind11;
using namespace hapsris;

namespace {

CampaignSpec spec_from(const std::optional<std::filesystem::path>& config, std::optional<std::uint64_t> seed,
                       std::optional<int> drops, std::optional<int> gateways) {
    CampaignSpec spec = config ? parse_config(*config).spec : parse_config_text("").spec;
    if (seed) spec.master_seed = *seed;
    if (drops) spec.num_drops = *drops;
    if (gateways) spec.scenario.num_gateways = *gateways;
    spec.validate();
    return spec;
}

py::dict records_to_columns(const CampaignResult& r) {
    std::vector<std::string> scheme, direction;
    std::vector<int> group, drop, gateway;
    std::vector<double> tx, elevation, snr, rate, ee;
    for (const auto& m : r.records) {
        scheme.push_back(r.scheme_power[static_cast<std::size_t>(m.scheme_index)].label);
        group.push_back(r.scheme_power[static_cast<std::size_t>(m.scheme_index)].group_size);
        direction.push_back(to_string(m.direction));
        tx.push_back(m.tx_power_dbm);
        drop.push_back(m.drop_id);
        gateway.push_back(m.gateway_id);
        elevation.push_back(m.elevation_deg);
        snr.push_back(m.snr_db);
        rate.push_back(m.rate_bps);
        ee.push_back(m.energy_efficiency);
    }
    py::dict d;
    d["scheme"] = scheme;
    d["L"] = group;
    d["direction"] = direction;
    d["tx_power_dbm"] = tx;
    d["drop_id"] = drop;
    d["gateway_id"] = gateway;
    d["elevation_deg"] = elevation;
    d["snr_db"] = snr;
    d["rate_bps"] = rate;
    d["ee_bit_per_joule"] = ee;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "HAPS-mounted RIS backhaul simulator (C++ core)";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::enum_<Direction>(m, "Direction").value("Downlink", Direction::Downlink).value("Uplink", Direction::Uplink);

    py::class_<LinkGeometry>(m, "LinkGeometry")
        .def_readonly("horizontal_distance_km", &LinkGeometry::horizontal_distance_km)
        .def_readonly("slant_distance_km", &LinkGeometry::slant_distance_km)
        .def_readonly("elevation_deg", &LinkGeometry::elevation_deg);

    m.def(
        "link_geometry",
        [](std::array<double, 3> a, std::array<double, 3> b) {
            return link_geometry({a[0], a[1], a[2]}, {b[0], b[1], b[2]});
        },
        py::arg("a"), py::arg("b"), "Geometry between a ground point and an elevated point, (x, y, z) in km.");
    m.def("fspl_db", &fspl_db, py::arg("distance_km"), py::arg("frequency_ghz"));
    m.def(
        "los_probability",
        [](double elevation_deg, const std::vector<std::pair<double, double>>& table) {
            LosTable t;
            for (const auto& [e, p] : table) t.push_back({e, p});
            validate_los_table(t);
            return los_probability(elevation_deg, t);
        },
        py::arg("elevation_deg"), py::arg("table"));
    m.def("shannon_rate", &shannon_rate, py::arg("snr_linear"), py::arg("bandwidth_hz"));
    m.def(
        "ris_power_consumption",
        [](int n_total, std::optional<int> group_size, double p_sw_w, double p_dc_w, double p_a_w) {
            const RisPowerParams p{p_sw_w, p_dc_w, p_a_w};
            return group_size ? ris_power_consumption(n_total, RisMode::SubConnectedActive, *group_size, p)
                              : ris_power_consumption(n_total, RisMode::Passive, 0, p);
        },
        py::arg("n_total"), py::arg("group_size") = py::none(), py::arg("p_sw_w") = RisPowerParams{}.p_sw_w,
        py::arg("p_dc_w") = RisPowerParams{}.p_dc_w, py::arg("p_a_w") = RisPowerParams{}.p_a_w,
        "N P_sw + N P_dc + (N/L) P_A; group_size=None means passive.");
    m.def("energy_efficiency", &energy_efficiency, py::arg("rate_bps"), py::arg("tx_power_w"), py::arg("ris_power_w"));
    m.def(
        "feasibility_report",
        [](int n_total, double frequency_ghz, double cell_edge_fraction, double ris_power_w) {
            const auto r = feasibility_report(n_total, frequency_ghz, cell_edge_fraction, ris_power_w, {});
            py::dict d;
            d["wavelength_m"] = r.wavelength_m;
            d["area_m2"] = r.area_m2;
            d["mass_kg"] = r.mass_kg;
            d["solar_area_m2"] = r.solar_area_m2;
            return d;
        },
        py::arg("n_total") = 30000, py::arg("frequency_ghz") = 2.4, py::arg("cell_edge_fraction") = 0.2,
        py::arg("ris_power_w") = 363.48683298050514);
    m.def(
        "end_to_end_snr",
        [](double g1, double g2, int n_total, std::optional<int> group_size, double tx_power_w, double receiver_noise_w,
           double sigma_v2, double pa_output_power_w) {
            RisArchitecture arch = group_size ? RisArchitecture::active(n_total, *group_size) : RisArchitecture::passive(n_total);
            arch.pa_output_power_w = pa_output_power_w;
            arch.validate();
            const CascadeLink link{HopGain::from_linear(g1), HopGain::from_linear(g2), Direction::Downlink};
            return end_to_end_snr(link, arch, tx_power_w, receiver_noise_w, sigma_v2);
        },
        py::arg("hop1_gain"), py::arg("hop2_gain"), py::arg("n_total"), py::arg("group_size") = py::none(),
        py::arg("tx_power_w") = 1.0, py::arg("receiver_noise_w") = 3.981071705534973e-13, py::arg("sigma_v2") = 0.0,
        py::arg("pa_output_power_w") = 2.0);
    m.def(
        "elementwise_oracle_snr",
        [](const std::vector<double>& h1, const std::vector<double>& h2, const std::vector<int>& group_of,
           const std::vector<double>& rho, double tx, double sigma_v2, double noise) {
            return elementwise_oracle_snr(h1, h2, group_of, rho, tx, sigma_v2, noise);
        },
        py::arg("hop1_amplitudes"), py::arg("hop2_amplitudes"), py::arg("group_of"), py::arg("rho_per_group"),
        py::arg("tx_power_w"), py::arg("sigma_v2"), py::arg("receiver_noise_w"));

    m.def("default_config_text", &default_config_text);

    m.def(
        "run_campaign",
        [](std::optional<std::filesystem::path> config, std::optional<std::uint64_t> seed, std::optional<int> drops,
           std::optional<int> gateways, std::optional<std::filesystem::path> out_dir, int workers) {
            const CampaignSpec spec = spec_from(config, seed, drops, gateways);
            CampaignResult result;
            {
                py::gil_scoped_release release;
                result = run_campaign(spec, workers);
            }
            py::dict d;
            d["records"] = records_to_columns(result);
            py::list power;
            for (const auto& s : result.scheme_power) {
                py::dict row;
                row["scheme"] = s.label;
                row["L"] = s.group_size;
                row["amplifiers"] = s.amplifiers;
                row["ris_power_w"] = s.ris_power_w;
                power.append(row);
            }
            d["power"] = power;
            d["summary"] = summary_text(result);
            if (out_dir) {
                std::vector<std::string> paths;
                for (const auto& p : emit_results(result, *out_dir)) paths.push_back(p.string());
                d["files"] = paths;
            }
            return d;
        },
        py::arg("config") = py::none(), py::arg("seed") = py::none(), py::arg("drops") = py::none(),
        py::arg("gateways") = py::none(), py::arg("out_dir") = py::none(), py::arg("workers") = 0,
        "Run a campaign; returns column lists of per-gateway records plus the power table and summary.");

    m.def(
        "sweep_tx_power",
        [](const std::string& direction, int scheme_index, std::optional<std::filesystem::path> config,
           std::optional<std::uint64_t> seed, std::optional<int> drops, std::optional<int> gateways, int workers) {
            const CampaignSpec spec = spec_from(config, seed, drops, gateways);
            const Direction d = direction == "uplink" ? Direction::Uplink : Direction::Downlink;
            if (direction != "uplink" && direction != "downlink") throw ConfigError("direction must be downlink or uplink");
            std::vector<SweepRow> rows;
            {
                py::gil_scoped_release release;
                rows = sweep_tx_power(spec, d, scheme_index, workers);
            }
            py::list out;
            for (const auto& r : rows)
                out.append(py::make_tuple(r.tx_power_dbm, r.median_rate_bps,
                                          r.slope_bps_per_db ? py::cast(*r.slope_bps_per_db) : py::none()));
            return out;
        },
        py::arg("direction") = "downlink", py::arg("scheme_index") = 0, py::arg("config") = py::none(),
        py::arg("seed") = py::none(), py::arg("drops") = py::none(), py::arg("gateways") = py::none(),
        py::arg("workers") = 0, "Rows of (tx_power_dbm, median_rate_bps, slope_bps_per_db or None).");

    m.def(
        "select_grouping",
        [](const std::string& objective, const std::vector<std::optional<int>>& candidates, const std::string& direction,
           std::optional<std::filesystem::path> config, std::optional<std::uint64_t> seed, std::optional<int> drops,
           std::optional<int> gateways, int workers) {
            const CampaignSpec spec = spec_from(config, seed, drops, gateways);
            std::vector<RisArchitecture> archs;
            for (const auto& c : candidates) {
                RisArchitecture a = spec.reference;
                a.mode = c ? RisMode::SubConnectedActive : RisMode::Passive;
                a.group_size = c.value_or(0);
                archs.push_back(a);
            }
            const Direction d = direction == "uplink" ? Direction::Uplink : Direction::Downlink;
            GroupingSelection sel;
            {
                py::gil_scoped_release release;
                sel = select_grouping(spec, parse_objective(objective), archs, d, workers);
            }
            py::list table;
            for (const auto& c : sel.table) {
                py::dict row;
                row["scheme"] = c.architecture.label();
                row["amplifiers"] = c.amplifiers;
                row["ris_power_w"] = c.ris_power_w;
                row["sum_rate_bps"] = c.sum_rate_bps;
                row["mean_rate_bps"] = c.mean_rate_bps;
                row["median_ee_bit_per_joule"] = c.median_ee_bit_per_j;
                table.append(row);
            }
            return py::make_tuple(sel.architecture().label(), table);
        },
        py::arg("objective"), py::arg("candidates"), py::arg("direction") = "downlink", py::arg("config") = py::none(),
        py::arg("seed") = py::none(), py::arg("drops") = py::none(), py::arg("gateways") = py::none(),
        py::arg("workers") = 0, "Candidates are group sizes, None for passive. Returns (chosen label, table).");
}
