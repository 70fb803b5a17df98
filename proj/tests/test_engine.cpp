#include <cmath>
#include <map>

#include "doctest.h"
#include "hapsris/engine.hpp"
#include "hapsris/error.hpp"

using namespace hapsris;

namespace {

CampaignSpec small_spec(int gateways = 20, int drops = 3) {
    CampaignSpec spec = default_campaign_spec();
    spec.scenario.num_gateways = gateways;
    spec.num_drops = drops;
    spec.dl_tx_power_dbm = {45.0, 50.0};
    spec.ul_tx_power_dbm = {30.0};
    return spec;
}

bool same(const LinkMetrics& a, const LinkMetrics& b) {
    return a.scheme_index == b.scheme_index && a.direction == b.direction && a.tx_power_dbm == b.tx_power_dbm &&
           a.drop_id == b.drop_id && a.gateway_id == b.gateway_id && a.elevation_deg == b.elevation_deg &&
           a.snr_db == b.snr_db && a.rate_bps == b.rate_bps && a.energy_efficiency == b.energy_efficiency;
}

}  // namespace

TEST_CASE("run_drop is deterministic per (seed, drop)") {
    const auto spec = small_spec();
    const auto a = run_drop(spec, 1);
    const auto b = run_drop(spec, 1);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(same(a[i], b[i]));
    const auto c = run_drop(spec, 2);
    CHECK(a[0].rate_bps != c[0].rate_bps);
    CHECK_THROWS_AS(run_drop(spec, 3), ConfigError);
}

TEST_CASE("realization does not depend on the RIS schemes") {
    auto spec = small_spec();
    const auto a = realize_drop(spec, 0);
    spec.schemes = {RisArchitecture::active(30000, 100)};
    const auto b = realize_drop(spec, 0);
    for (std::size_t i = 0; i < a.gateways.size(); ++i) {
        CHECK(a.gateways[i].x == b.gateways[i].x);
        CHECK(a.gateway_state[i].shadow_db == b.gateway_state[i].shadow_db);
    }
}

TEST_CASE("active L=500 never loses to passive on a realization") {
    const auto spec = small_spec(100, 2);
    for (int d = 0; d < spec.num_drops; ++d) {
        const auto recs = run_drop(spec, d);
        std::map<std::tuple<int, double, int>, double> passive;
        for (const auto& m : recs)
            if (m.scheme_index == 0) passive[{static_cast<int>(m.direction), m.tx_power_dbm, m.gateway_id}] = m.rate_bps;
        for (const auto& m : recs)
            if (m.scheme_index == 3)
                CHECK(m.rate_bps >= passive.at({static_cast<int>(m.direction), m.tx_power_dbm, m.gateway_id}));
    }
}

TEST_CASE("ground-station antenna gain enters the downlink SNR additively") {
    auto spec = small_spec(30, 1);
    spec.schemes = {RisArchitecture::passive(30000)};
    auto zero = spec;
    zero.channel.gs_antenna_gain_dbi = 0.0;
    const auto a = run_drop(spec, 0);
    const auto b = run_drop(zero, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].direction == Direction::Downlink) CHECK(a[i].snr_db - b[i].snr_db == doctest::Approx(43.2).epsilon(1e-9));

    auto high = spec;
    high.high_gain_receiver = true;
    const auto h = run_drop(high, 0);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(h[i].snr_db - a[i].snr_db == doctest::Approx(15.0).epsilon(1e-9));
}

TEST_CASE("downlink and uplink see the same geometry") {
    const auto spec = small_spec(25, 1);
    const auto recs = run_drop(spec, 0);
    std::map<int, double> dl;
    for (const auto& m : recs)
        if (m.direction == Direction::Downlink) dl[m.gateway_id] = m.elevation_deg;
    for (const auto& m : recs)
        if (m.direction == Direction::Uplink) CHECK(m.elevation_deg == dl.at(m.gateway_id));
}

TEST_CASE("campaign record counts") {
    auto spec = small_spec(10, 2);
    spec.schemes = {RisArchitecture::passive(30000), RisArchitecture::active(30000, 500)};
    spec.dl_tx_power_dbm = {46.0};
    spec.ul_tx_power_dbm = {29.0};
    const auto r = run_campaign(spec, 2);
    CHECK(r.record_count(Direction::Downlink) == 40);
    CHECK(r.record_count(Direction::Uplink) == 40);
    CHECK(r.series.size() == 4);
    for (const auto& s : r.series) {
        CHECK(s.rate.size() == 20);
        CHECK(s.rate.evaluate(s.rate.max()) == 1.0);
    }
    spec.num_drops = 0;
    CHECK_THROWS_AS(run_campaign(spec), ConfigError);
}

TEST_CASE("campaign output does not depend on the worker count") {
    const auto spec = small_spec(15, 9);
    const auto one = run_campaign(spec, 1);
    const auto many = run_campaign(spec, 8);
    REQUIRE(one.records.size() == many.records.size());
    for (std::size_t i = 0; i < one.records.size(); ++i) CHECK(same(one.records[i], many.records[i]));
}

TEST_CASE("rate CDFs are stochastically ordered in L") {
    const auto r = run_campaign(small_spec(60, 4));
    for (Direction d : {Direction::Downlink, Direction::Uplink}) {
        for (double tx : r.spec.tx_grid(d)) {
            for (int s = 1; s < 4; ++s) {
                const auto& lo = r.find_series(s - 1, d, tx).rate;
                const auto& hi = r.find_series(s, d, tx).rate;
                for (double x : lo.sorted_values()) CHECK(lo.evaluate(x) >= hi.evaluate(x));
                for (double x : hi.sorted_values()) CHECK(lo.evaluate(x) >= hi.evaluate(x));
            }
        }
    }
}

TEST_CASE("tx-power sweep") {
    auto spec = small_spec(50, 3);
    const auto rows = sweep_tx_power(spec, Direction::Downlink, 0);
    REQUIRE(rows.size() == 2);
    CHECK_FALSE(rows[0].slope_bps_per_db.has_value());
    REQUIRE(rows[1].slope_bps_per_db.has_value());
    CHECK(*rows[1].slope_bps_per_db <= 1e8 * std::log2(std::pow(10.0, 0.1)));
    CHECK(*rows[1].slope_bps_per_db > 0.0);

    spec.ul_tx_power_dbm = {30.0};
    CHECK_THROWS_AS(sweep_tx_power(spec, Direction::Uplink, 0), ConfigError);
    CHECK_THROWS_AS(sweep_tx_power(spec, Direction::Downlink, 9), ConfigError);

    std::vector<SweepRow> fake{{1, 0, {}}, {2, 0, 3.0}, {3, 0, 1.0}, {4, 0, 2.0}, {5, 0, 10.0}};
    CHECK(median_slope(fake) == 2.5);
}

TEST_CASE("grouping selection") {
    const auto spec = small_spec(20, 2);
    const int n = 30000;
    const auto min_power = select_grouping(
        spec, GroupingObjective::MinPower,
        {RisArchitecture::active(n, 500), RisArchitecture::passive(n), RisArchitecture::active(n, 1000)});
    CHECK_FALSE(min_power.architecture().is_active());
    REQUIRE(min_power.table.size() == 3);
    CHECK(min_power.table[0].amplifiers == 60);

    const auto max_rate = select_grouping(
        spec, GroupingObjective::MaxSumRate,
        {RisArchitecture::active(n, 1000), RisArchitecture::active(n, 500), RisArchitecture::active(n, 2000)});
    CHECK(max_rate.architecture().group_size == 500);

    const auto max_ee = select_grouping(
        spec, GroupingObjective::MaxEnergyEfficiency,
        {RisArchitecture::passive(n), RisArchitecture::active(n, 2000), RisArchitecture::active(n, 500)});
    double best = 0.0;
    for (const auto& c : max_ee.table) best = std::max(best, c.median_ee_bit_per_j);
    CHECK(max_ee.table[max_ee.chosen].median_ee_bit_per_j == best);

    // with free amplifiers every candidate costs the same; ties go to the larger L
    auto free_amps = spec;
    free_amps.power.p_a_w = 0.0;
    const auto tie = select_grouping(free_amps, GroupingObjective::MinPower,
                                     {RisArchitecture::active(n, 500), RisArchitecture::active(n, 2000),
                                      RisArchitecture::active(n, 1000)});
    CHECK(tie.architecture().group_size == 2000);

    CHECK_THROWS_AS(select_grouping(spec, GroupingObjective::MinPower, {}), ConfigError);
    CHECK(parse_objective("max-ee") == GroupingObjective::MaxEnergyEfficiency);
    CHECK_THROWS_AS(parse_objective("fastest"), ConfigError);
}

TEST_CASE("power report needs no Monte Carlo") {
    const auto r = power_report(default_campaign_spec());
    CHECK(r.records.empty());
    CHECK(r.reference_power_w == doctest::Approx(363.48683298050514));
    REQUIRE(r.scheme_power.size() == 4);
    CHECK(r.scheme_power[1].amplifiers == 15);
    CHECK(r.scheme_power[3].amplifiers == 60);
    CHECK(r.feasibility.mass_kg == doctest::Approx(300.0));
}
