#include "hapsris/engine.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "hapsris/error.hpp"
#include "hapsris/units.hpp"

namespace hapsris {

namespace {

void validate_grid(const std::vector<double>& grid, const char* name) {
    if (grid.empty()) throw ConfigError(std::string("campaign: ") + name + " grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (!std::isfinite(grid[i])) throw ConfigError(std::string("campaign: ") + name + " grid has non-finite value");
        for (std::size_t j = 0; j < i; ++j)
            if (grid[j] == grid[i]) throw ConfigError(std::string("campaign: ") + name + " grid has duplicate values");
    }
}

// passive ranks above any active grouping
int group_rank(const RisArchitecture& a) { return a.is_active() ? a.group_size : INT_MAX; }

}  // namespace

double CampaignSpec::gateway_antenna_gain_dbi() const {
    return high_gain_receiver ? high_gain_receiver_dbi : channel.gw_antenna_gain_dbi;
}

const std::vector<double>& CampaignSpec::tx_grid(Direction d) const {
    return d == Direction::Downlink ? dl_tx_power_dbm : ul_tx_power_dbm;
}

void CampaignSpec::validate() const {
    scenario.validate();
    channel.validate();
    if (schemes.empty()) throw ConfigError("campaign: no RIS schemes configured");
    for (const auto& s : schemes) s.validate();
    reference.validate();
    power.validate();
    feasibility.validate();
    validate_grid(dl_tx_power_dbm, "downlink tx power");
    validate_grid(ul_tx_power_dbm, "uplink tx power");
    if (num_drops < 1) throw ConfigError("campaign: num_drops must be >= 1");
    if (!std::isfinite(high_gain_receiver_dbi)) throw ConfigError("campaign: high_gain_receiver_dbi must be finite");
}

CampaignSpec default_campaign_spec() {
    CampaignSpec spec;
    const int n = 30000;
    spec.schemes = {RisArchitecture::passive(n), RisArchitecture::active(n, 2000), RisArchitecture::active(n, 1000),
                    RisArchitecture::active(n, 500)};
    spec.reference = RisArchitecture::active(n, 500);
    for (int p = 45; p <= 55; ++p) spec.dl_tx_power_dbm.push_back(p);
    spec.ul_tx_power_dbm = {28.0, 29.0, 30.0};
    return spec;
}

DropRealization realize_drop(const CampaignSpec& spec, int drop_index) {
    if (drop_index < 0 || drop_index >= spec.num_drops) throw ConfigError("run_drop: drop index out of range");
    RandomStream rng = substream(spec.master_seed, static_cast<std::uint64_t>(drop_index));
    const Position3D haps = spec.scenario.haps();

    DropRealization drop;
    drop.gateways = sample_gateway_positions(spec.scenario, rng);
    drop.station_geometry = link_geometry(spec.scenario.ground_station, haps);
    drop.station_state = sample_link_state(drop.station_geometry.elevation_deg, spec.channel, rng);
    drop.gateway_geometry.reserve(drop.gateways.size());
    drop.gateway_state.reserve(drop.gateways.size());
    for (const auto& gw : drop.gateways) {
        const LinkGeometry g = link_geometry(gw, haps);
        drop.gateway_geometry.push_back(g);
        drop.gateway_state.push_back(sample_link_state(g.elevation_deg, spec.channel, rng));
    }
    return drop;
}

std::vector<LinkMetrics> evaluate_drop(const CampaignSpec& spec, const DropRealization& drop, int drop_index) {
    const auto& ch = spec.channel;
    const double rx_noise = ch.receiver_noise_power_w();
    const double gw_gain = spec.gateway_antenna_gain_dbi();
    const std::size_t gateways = drop.gateways.size();

    std::vector<LinkMetrics> out;
    out.reserve(gateways * spec.schemes.size() * (spec.dl_tx_power_dbm.size() + spec.ul_tx_power_dbm.size()));

    for (Direction dir : {Direction::Downlink, Direction::Uplink}) {
        for (std::size_t s = 0; s < spec.schemes.size(); ++s) {
            const RisArchitecture& arch = spec.schemes[s];
            const double ris_power = ris_power_consumption(arch, spec.power);
            const double sigma_v2 =
                arch.is_active() ? dynamic_noise_power_w(ch.noise_density_w_hz(), ch.bandwidth_hz, arch.ris_noise_figure_db)
                                 : 0.0;
            const HopGain station_hop =
                hop_power_gain(drop.station_geometry, drop.station_state, ch.gs_antenna_gain_dbi, arch.element_gain_dbi, ch);
            std::vector<HopGain> gateway_hops;
            gateway_hops.reserve(gateways);
            for (std::size_t g = 0; g < gateways; ++g)
                gateway_hops.push_back(
                    hop_power_gain(drop.gateway_geometry[g], drop.gateway_state[g], gw_gain, arch.element_gain_dbi, ch));

            for (double tx_dbm : spec.tx_grid(dir)) {
                const double tx_w = dbm_to_watt(tx_dbm);
                for (std::size_t g = 0; g < gateways; ++g) {
                    CascadeLink link;
                    link.direction = dir;
                    link.hop1 = dir == Direction::Downlink ? station_hop : gateway_hops[g];
                    link.hop2 = dir == Direction::Downlink ? gateway_hops[g] : station_hop;
                    const double snr = end_to_end_snr(link, arch, tx_w, rx_noise, sigma_v2);

                    LinkMetrics m;
                    m.scheme_index = static_cast<int>(s);
                    m.direction = dir;
                    m.tx_power_dbm = tx_dbm;
                    m.drop_id = drop_index;
                    m.gateway_id = static_cast<int>(g);
                    m.elevation_deg = drop.gateway_geometry[g].elevation_deg;
                    m.snr_db = linear_to_db(snr);
                    m.rate_bps = shannon_rate(snr, ch.bandwidth_hz);
                    m.energy_efficiency = energy_efficiency(m.rate_bps, tx_w, ris_power);
                    out.push_back(m);
                }
            }
        }
    }
    return out;
}

std::vector<LinkMetrics> run_drop(const CampaignSpec& spec, int drop_index) {
    spec.validate();
    return evaluate_drop(spec, realize_drop(spec, drop_index), drop_index);
}

const SeriesSummary& CampaignResult::find_series(int scheme_index, Direction d, double tx_power_dbm) const {
    for (const auto& s : series)
        if (s.scheme_index == scheme_index && s.direction == d && s.tx_power_dbm == tx_power_dbm) return s;
    throw ConfigError("no series for scheme " + std::to_string(scheme_index) + " " + to_string(d) + " at " +
                      std::to_string(tx_power_dbm) + " dBm");
}

std::size_t CampaignResult::record_count(Direction d) const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [d](const LinkMetrics& m) { return m.direction == d; }));
}

CampaignResult power_report(const CampaignSpec& spec) {
    spec.validate();
    CampaignResult result;
    result.spec = spec;
    for (const auto& arch : spec.schemes)
        result.scheme_power.push_back({arch.label(), arch.is_active() ? arch.group_size : 0, arch.amplifier_count(),
                                       ris_power_consumption(arch, spec.power)});
    result.reference_power_w = ris_power_consumption(spec.reference, spec.power);
    result.feasibility = feasibility_report(spec.reference.n_total, spec.channel.frequency_ghz,
                                            spec.reference.unit_cell_edge_fraction, result.reference_power_w,
                                            spec.feasibility);
    return result;
}

CampaignResult run_campaign(const CampaignSpec& spec, int workers) {
    CampaignResult result = power_report(spec);
    const int drops = spec.num_drops;

    std::vector<std::vector<LinkMetrics>> per_drop(static_cast<std::size_t>(drops));
    int threads = workers > 0 ? workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = std::min(threads, drops);

    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int d = next++; d < drops; d = next++) {
            try {
                per_drop[static_cast<std::size_t>(d)] = evaluate_drop(spec, realize_drop(spec, d), d);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    // merge strictly in drop order
    std::size_t total = 0;
    for (const auto& d : per_drop) total += d.size();
    result.records.reserve(total);
    for (auto& d : per_drop) {
        result.records.insert(result.records.end(), d.begin(), d.end());
        d.clear();
        d.shrink_to_fit();
    }

    // One bucket per (direction, scheme, tx); records arrive in that nested order per drop.
    const std::size_t gateways = static_cast<std::size_t>(spec.scenario.num_gateways);
    struct Bucket {
        int scheme;
        Direction dir;
        double tx;
        std::vector<double> rate, ee;
    };
    std::vector<Bucket> buckets;
    for (Direction dir : {Direction::Downlink, Direction::Uplink})
        for (std::size_t s = 0; s < spec.schemes.size(); ++s)
            for (double tx : spec.tx_grid(dir)) buckets.push_back({static_cast<int>(s), dir, tx, {}, {}});
    const std::size_t per_drop_records = buckets.size() * gateways;
    for (auto& b : buckets) {
        b.rate.reserve(gateways * static_cast<std::size_t>(drops));
        b.ee.reserve(gateways * static_cast<std::size_t>(drops));
    }
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        Bucket& b = buckets[(i % per_drop_records) / gateways];
        b.rate.push_back(result.records[i].rate_bps);
        b.ee.push_back(result.records[i].energy_efficiency);
    }
    result.series.reserve(buckets.size());
    for (auto& b : buckets)
        result.series.push_back({b.scheme, b.dir, b.tx, CdfSummary(std::move(b.rate)), CdfSummary(std::move(b.ee))});
    return result;
}

std::vector<SweepRow> sweep_from_result(const CampaignResult& result, Direction d, int scheme_index) {
    const auto& grid = result.spec.tx_grid(d);
    if (grid.size() < 2) throw ConfigError("sweep: tx power grid needs at least two points");
    if (!std::is_sorted(grid.begin(), grid.end())) throw ConfigError("sweep: tx power grid must be ascending");
    std::vector<SweepRow> rows;
    for (double tx : grid) {
        SweepRow row;
        row.tx_power_dbm = tx;
        row.median_rate_bps = result.find_series(scheme_index, d, tx).rate.percentile(0.5);
        if (!rows.empty())
            row.slope_bps_per_db = (row.median_rate_bps - rows.back().median_rate_bps) / (tx - rows.back().tx_power_dbm);
        rows.push_back(row);
    }
    return rows;
}

std::vector<SweepRow> sweep_tx_power(const CampaignSpec& spec, Direction d, int scheme_index, int workers) {
    if (spec.tx_grid(d).size() < 2) throw ConfigError("sweep: tx power grid needs at least two points");
    if (scheme_index < 0 || static_cast<std::size_t>(scheme_index) >= spec.schemes.size())
        throw ConfigError("sweep: scheme index out of range");
    CampaignSpec one = spec;
    one.schemes = {spec.schemes[static_cast<std::size_t>(scheme_index)]};
    return sweep_from_result(run_campaign(one, workers), d, 0);
}

double median_slope(const std::vector<SweepRow>& rows) {
    std::vector<double> slopes;
    for (const auto& r : rows)
        if (r.slope_bps_per_db) slopes.push_back(*r.slope_bps_per_db);
    if (slopes.empty()) throw DomainError("median_slope: no slopes");
    std::sort(slopes.begin(), slopes.end());
    const std::size_t n = slopes.size();
    return n % 2 == 1 ? slopes[n / 2] : 0.5 * (slopes[n / 2 - 1] + slopes[n / 2]);
}

GroupingObjective parse_objective(const std::string& name) {
    if (name == "max-sum-rate") return GroupingObjective::MaxSumRate;
    if (name == "max-ee" || name == "max-energy-efficiency") return GroupingObjective::MaxEnergyEfficiency;
    if (name == "min-power") return GroupingObjective::MinPower;
    throw ConfigError("unknown grouping objective '" + name + "' (max-sum-rate, max-ee, min-power)");
}

std::string to_string(GroupingObjective objective) {
    switch (objective) {
        case GroupingObjective::MaxSumRate: return "max-sum-rate";
        case GroupingObjective::MaxEnergyEfficiency: return "max-ee";
        case GroupingObjective::MinPower: return "min-power";
    }
    return "?";
}

GroupingSelection select_grouping(const CampaignSpec& spec, GroupingObjective objective,
                                  const std::vector<RisArchitecture>& candidates, Direction direction, int workers) {
    if (candidates.empty()) throw ConfigError("select_grouping: no candidate architectures");
    CampaignSpec trial = spec;
    trial.schemes = candidates;
    const CampaignResult result = run_campaign(trial, workers);

    GroupingSelection sel;
    sel.objective = objective;
    sel.direction = direction;
    const double grid_points = static_cast<double>(spec.tx_grid(direction).size());
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        std::vector<double> rates, ee;
        for (const auto& m : result.records) {
            if (m.direction != direction || m.scheme_index != static_cast<int>(c)) continue;
            rates.push_back(m.rate_bps);
            ee.push_back(m.energy_efficiency);
        }
        const CdfSummary rate_cdf(std::move(rates));
        GroupingCandidate row;
        row.architecture = candidates[c];
        row.amplifiers = candidates[c].amplifier_count();
        row.ris_power_w = result.scheme_power[c].ris_power_w;
        row.sum_rate_bps = rate_cdf.sum() / (static_cast<double>(spec.num_drops) * grid_points);
        row.mean_rate_bps = rate_cdf.mean();
        row.median_ee_bit_per_j = CdfSummary(std::move(ee)).percentile(0.5);
        sel.table.push_back(row);
    }

    auto score = [objective](const GroupingCandidate& c) {
        switch (objective) {
            case GroupingObjective::MaxSumRate: return c.sum_rate_bps;
            case GroupingObjective::MaxEnergyEfficiency: return c.median_ee_bit_per_j;
            case GroupingObjective::MinPower: return -c.ris_power_w;
        }
        return 0.0;
    };
    for (std::size_t c = 1; c < sel.table.size(); ++c) {
        const double a = score(sel.table[c]);
        const double b = score(sel.table[sel.chosen]);
        if (a > b || (a == b && group_rank(sel.table[c].architecture) > group_rank(sel.table[sel.chosen].architecture)))
            sel.chosen = c;
    }
    return sel;
}

}  // namespace hapsris
