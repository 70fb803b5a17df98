#include "hapsris/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hapsris/error.hpp"
#include "hapsris/units.hpp"

namespace hapsris {

namespace {

std::string printf_string(const char* fmt, auto... args) {
    const int n = std::snprintf(nullptr, 0, fmt, args...);
    std::string s(static_cast<std::size_t>(n) + 1, '\0');
    std::snprintf(s.data(), s.size(), fmt, args...);
    s.resize(static_cast<std::size_t>(n));
    return s;
}

int scheme_group(const CampaignSpec& spec, int scheme_index) {
    const auto& a = spec.schemes.at(static_cast<std::size_t>(scheme_index));
    return a.is_active() ? a.group_size : 0;
}

const std::string& scheme_label(const CampaignResult& r, int scheme_index) {
    return r.scheme_power.at(static_cast<std::size_t>(scheme_index)).label;
}

}  // namespace

std::string format_number(double value) {
    if (value == 0.0) return "0";  // folds -0
    return printf_string("%.12g", value);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

std::string records_csv(const CampaignResult& result) {
    std::string out = "scheme,L,direction,tx_power_dbm,drop_id,gateway_id,elevation_deg,snr_db,rate_bps,ee_bit_per_joule\n";
    out.reserve(out.size() + result.records.size() * 96);
    for (const auto& m : result.records) {
        out += scheme_label(result, m.scheme_index);
        out += ',' + std::to_string(scheme_group(result.spec, m.scheme_index));
        out += ',' + to_string(m.direction);
        out += ',' + format_number(m.tx_power_dbm);
        out += ',' + std::to_string(m.drop_id);
        out += ',' + std::to_string(m.gateway_id);
        out += ',' + format_number(m.elevation_deg);
        out += ',' + format_number(m.snr_db);
        out += ',' + format_number(m.rate_bps);
        out += ',' + format_number(m.energy_efficiency);
        out += '\n';
    }
    return out;
}

std::string cdf_csv(const CampaignResult& result, const std::string& metric, Direction d) {
    if (metric != "rate" && metric != "ee") throw ConfigError("cdf metric must be 'rate' or 'ee'");
    std::string out = "scheme,tx_power_dbm,x,F(x)\n";
    for (const auto& s : result.series) {
        if (s.direction != d) continue;
        const CdfSummary& cdf = metric == "rate" ? s.rate : s.energy_efficiency;
        const std::string prefix = scheme_label(result, s.scheme_index) + ',' + format_number(s.tx_power_dbm) + ',';
        for (int i = 0; i < kCdfPoints; ++i) {
            const double t = static_cast<double>(i) / (kCdfPoints - 1);
            const double x = i == kCdfPoints - 1 ? cdf.max() : cdf.min() + t * (cdf.max() - cdf.min());
            out += prefix + format_number(x) + ',' + format_number(cdf.evaluate(x)) + '\n';
        }
    }
    return out;
}

std::string feasibility_text(const CampaignResult& result) {
    const auto& spec = result.spec;
    const auto& ref = spec.reference;
    const auto& f = result.feasibility;
    std::ostringstream o;
    o << "RIS power consumption (P_RIS = N*P_sw + N*P_dc + (N/L)*P_A)\n";
    o << printf_string("  P_sw = %.4g mW, P_dc = %.5g mW, P_A = %.4g W\n", spec.power.p_sw_w * 1e3,
                       spec.power.p_dc_w * 1e3, spec.power.p_a_w);
    o << "  scheme       L  amplifiers   P_RIS [W]\n";
    for (const auto& s : result.scheme_power)
        o << printf_string("  %-8s %5d  %10d  %10.2f\n", s.label.c_str(), s.group_size, s.amplifiers, s.ris_power_w);
    o << printf_string("  reference N=%d, L=%d (%d amplifiers): %.2f W (~%.0f W)\n", ref.n_total, ref.group_size,
                       ref.amplifier_count(), result.reference_power_w, std::ceil(result.reference_power_w));
    o << "\nPayload feasibility\n";
    o << printf_string("  wavelength: %.5f m at %.4g GHz\n", f.wavelength_m, spec.channel.frequency_ghz);
    o << printf_string("  surface area: %.2f m^2 (%d cells of (%.2g lambda)^2)\n", f.area_m2, ref.n_total,
                       ref.unit_cell_edge_fraction);
    // 27 m^2 is the commonly quoted figure for 30000 cells; it only holds for lambda = 0.15 m.
    const double lambda_27 = std::sqrt(27.0 / ref.n_total) / ref.unit_cell_edge_fraction;
    o << printf_string("  note: the quoted 27 m^2 estimate for %d cells implies lambda = %.3f m (%.2f GHz);\n"
                       "        at %.4g GHz the same cell size gives %.2f m^2.\n",
                       ref.n_total, lambda_27, kSpeedOfLight / lambda_27 / 1e9, spec.channel.frequency_ghz, f.area_m2);
    o << printf_string("  mass: %.1f kg (%.4g g per element)\n", f.mass_kg, spec.feasibility.element_mass_kg * 1e3);
    o << printf_string("  solar panel area: %.3f m^2 for %.2f W at %.4g W/m^2, %.0f%% efficiency\n", f.solar_area_m2,
                       result.reference_power_w, spec.feasibility.solar_irradiance_w_m2,
                       spec.feasibility.solar_efficiency * 100.0);
    return o.str();
}

std::string summary_text(const CampaignResult& result) {
    const auto& spec = result.spec;
    std::ostringstream o;
    o << "HAPS-RIS backhaul campaign summary\n";
    o << printf_string("seed %llu, %d drops x %d gateways, %zu schemes\n",
                       static_cast<unsigned long long>(spec.master_seed), spec.num_drops, spec.scenario.num_gateways,
                       spec.schemes.size());
    o << printf_string("area radius %.4g km, HAPS altitude %.4g km, ground station (%.4g, %.4g) km\n",
                       spec.scenario.radius_km, spec.scenario.haps_altitude_km, spec.scenario.ground_station.x,
                       spec.scenario.ground_station.y);
    o << printf_string("f = %.4g GHz, B = %.4g MHz, N0 = %.4g dBm/Hz\n\n", spec.channel.frequency_ghz,
                       spec.channel.bandwidth_hz / 1e6, spec.channel.noise_density_dbm_hz);
    o << feasibility_text(result);

    for (Direction d : {Direction::Downlink, Direction::Uplink}) {
        o << "\n" << to_string(d) << " rates [Mbit/s] and energy efficiency [Mbit/J]\n";
        o << "  scheme   tx[dBm]      p10      p50      p90     mean  sum/drop   EE p50\n";
        for (const auto& s : result.series) {
            if (s.direction != d) continue;
            const double sum_per_drop = s.rate.sum() / spec.num_drops;
            o << printf_string("  %-8s %7.2f %8.2f %8.2f %8.2f %8.2f %9.1f %8.4f\n",
                               scheme_label(result, s.scheme_index).c_str(), s.tx_power_dbm,
                               s.rate.percentile(0.1) / 1e6, s.rate.percentile(0.5) / 1e6,
                               s.rate.percentile(0.9) / 1e6, s.rate.mean() / 1e6, sum_per_drop / 1e6,
                               s.energy_efficiency.percentile(0.5) / 1e6);
        }
    }
    return o.str();
}

std::vector<std::filesystem::path> emit_results(const CampaignResult& result, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + out_dir.string() + ": " + ec.message());

    std::vector<std::filesystem::path> written;
    auto emit = [&](const std::string& name, const std::string& contents) {
        const auto path = out_dir / name;
        write_file(path, contents);
        written.push_back(path);
    };
    emit("records.csv", records_csv(result));
    for (const char* metric : {"rate", "ee"})
        for (Direction d : {Direction::Downlink, Direction::Uplink})
            emit(std::string("cdf_") + metric + "_" + to_string(d) + ".csv", cdf_csv(result, metric, d));
    emit("summary.txt", summary_text(result));
    return written;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::string& scheme, Direction d) {
    std::string out = "scheme,direction,tx_power_dbm,median_rate_bps,slope_bps_per_db\n";
    for (const auto& r : rows) {
        out += scheme + ',' + to_string(d) + ',' + format_number(r.tx_power_dbm) + ',' +
               format_number(r.median_rate_bps) + ',' + (r.slope_bps_per_db ? format_number(*r.slope_bps_per_db) : "") +
               '\n';
    }
    return out;
}

std::string grouping_csv(const GroupingSelection& selection) {
    std::string out = "scheme,L,amplifiers,ris_power_w,sum_rate_bps,mean_rate_bps,median_ee_bit_per_joule,chosen\n";
    for (std::size_t i = 0; i < selection.table.size(); ++i) {
        const auto& c = selection.table[i];
        out += c.architecture.label() + ',' + std::to_string(c.architecture.is_active() ? c.architecture.group_size : 0) +
               ',' + std::to_string(c.amplifiers) + ',' + format_number(c.ris_power_w) + ',' +
               format_number(c.sum_rate_bps) + ',' + format_number(c.mean_rate_bps) + ',' +
               format_number(c.median_ee_bit_per_j) + ',' + (i == selection.chosen ? "1" : "0") + '\n';
    }
    return out;
}

}  // namespace hapsris
