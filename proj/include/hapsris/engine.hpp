#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hapsris/metrics.hpp"
#include "hapsris/scenario.hpp"

namespace hapsris {

/// Full experiment description.
struct CampaignSpec {
    AreaSpec scenario;
    ChannelParams channel;
    std::vector<RisArchitecture> schemes;
    std::vector<double> dl_tx_power_dbm;
    std::vector<double> ul_tx_power_dbm;
    int num_drops = 100;
    std::uint64_t master_seed = 1;

    RisPowerParams power;
    FeasibilityParams feasibility;
    /// Grouping used for the standalone power/feasibility report.
    RisArchitecture reference;

    /// 15 dBi receive antenna at the gateway side (CoW/UAV/base-station endpoints).
    bool high_gain_receiver = false;
    double high_gain_receiver_dbi = 15.0;

    /// Gain of the gateway-side antenna after the high-gain option is applied.
    double gateway_antenna_gain_dbi() const;
    const std::vector<double>& tx_grid(Direction d) const;
    void validate() const;
};

/// Table 1 parameters with Passive, L=2000, L=1000, L=500 schemes.
CampaignSpec default_campaign_spec();

/// Random part of one Monte Carlo drop. Depends only on (master_seed, drop
/// index) and the scenario/channel, never on the RIS schemes, so every scheme
/// is evaluated on common random numbers.
struct DropRealization {
    std::vector<Position3D> gateways;
    std::vector<LinkGeometry> gateway_geometry;   // gateway <-> HAPS
    std::vector<LinkState> gateway_state;
    LinkGeometry station_geometry;                // ground station <-> HAPS
    LinkState station_state;
};

DropRealization realize_drop(const CampaignSpec& spec, int drop_index);

/// Metrics for every (direction, scheme, tx power, gateway) on one realization.
/// Record order: direction, scheme, tx power, gateway.
std::vector<LinkMetrics> evaluate_drop(const CampaignSpec& spec, const DropRealization& drop, int drop_index);

std::vector<LinkMetrics> run_drop(const CampaignSpec& spec, int drop_index);

struct SeriesSummary {
    int scheme_index = 0;
    Direction direction = Direction::Downlink;
    double tx_power_dbm = 0.0;
    CdfSummary rate;
    CdfSummary energy_efficiency;
};

struct SchemePower {
    std::string label;
    int group_size = 0;
    int amplifiers = 0;
    double ris_power_w = 0.0;
};

struct CampaignResult {
    CampaignSpec spec;
    /// Drop-major, then the evaluate_drop order.
    std::vector<LinkMetrics> records;
    /// Ordered by direction, scheme, tx power.
    std::vector<SeriesSummary> series;
    std::vector<SchemePower> scheme_power;
    double reference_power_w = 0.0;
    FeasibilityReport feasibility;

    const SeriesSummary& find_series(int scheme_index, Direction d, double tx_power_dbm) const;
    std::size_t record_count(Direction d) const;
};

/// Runs all drops with `workers` threads (0 = hardware concurrency). Output is
/// independent of the worker count.
CampaignResult run_campaign(const CampaignSpec& spec, int workers = 0);

/// Power and feasibility numbers only; no Monte Carlo.
CampaignResult power_report(const CampaignSpec& spec);

struct SweepRow {
    double tx_power_dbm = 0.0;
    double median_rate_bps = 0.0;
    /// Median-rate difference to the previous grid point per dB; empty on the first row.
    std::optional<double> slope_bps_per_db;
};

std::vector<SweepRow> sweep_from_result(const CampaignResult& result, Direction d, int scheme_index);
std::vector<SweepRow> sweep_tx_power(const CampaignSpec& spec, Direction d, int scheme_index, int workers = 0);

/// Median of the defined slopes of a sweep table.
double median_slope(const std::vector<SweepRow>& rows);

enum class GroupingObjective { MaxSumRate, MaxEnergyEfficiency, MinPower };

GroupingObjective parse_objective(const std::string& name);
std::string to_string(GroupingObjective objective);

struct GroupingCandidate {
    RisArchitecture architecture;
    int amplifiers = 0;
    double ris_power_w = 0.0;
    double sum_rate_bps = 0.0;         // mean over drops and tx powers of the per-drop aggregate
    double mean_rate_bps = 0.0;        // time-shared per-gateway rate
    double median_ee_bit_per_j = 0.0;
};

struct GroupingSelection {
    std::size_t chosen = 0;
    GroupingObjective objective = GroupingObjective::MaxSumRate;
    Direction direction = Direction::Downlink;
    std::vector<GroupingCandidate> table;

    const RisArchitecture& architecture() const { return table.at(chosen).architecture; }
};

/// Evaluates every candidate on identical realizations and picks the best one
/// for the objective. Ties go to the larger group size (passive counts as the
/// largest).
GroupingSelection select_grouping(const CampaignSpec& spec, GroupingObjective objective,
                                  const std::vector<RisArchitecture>& candidates,
                                  Direction direction = Direction::Downlink, int workers = 0);

}  // namespace hapsris
