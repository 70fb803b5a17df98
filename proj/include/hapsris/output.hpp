#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "hapsris/engine.hpp"

namespace hapsris {

inline constexpr int kCdfPoints = 200;

/// Writes records.csv, cdf_{rate,ee}_{downlink,uplink}.csv and summary.txt.
/// Returns the written paths. Output bytes depend only on the result.
std::vector<std::filesystem::path> emit_results(const CampaignResult& result, const std::filesystem::path& out_dir);

std::string records_csv(const CampaignResult& result);
/// metric is "rate" or "ee".
std::string cdf_csv(const CampaignResult& result, const std::string& metric, Direction d);
std::string summary_text(const CampaignResult& result);
/// Power and payload section of the summary; also used standalone.
std::string feasibility_text(const CampaignResult& result);

std::string sweep_csv(const std::vector<SweepRow>& rows, const std::string& scheme, Direction d);
std::string grouping_csv(const GroupingSelection& selection);

/// Shortest round-trip-safe rendering at 12 significant digits.
std::string format_number(double value);

void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace hapsris
