#pragma once

#include <filesystem>
#include <string>

#include "hapsris/engine.hpp"

namespace hapsris {

/// Parsed experiment configuration.
///
/// The file is flat `key = value` text grouped by `[section]` headers; `#`
/// and `;` start comments. Every physical key carries its unit as a suffix
/// (`radius_km`, `frequency_ghz`, `p_dc_dbm`, ...). Unknown sections or keys
/// are rejected. Anything not set keeps its default.
struct RunConfig {
    CampaignSpec spec;
    std::filesystem::path source;
};

/// Throws ConfigError (with line or key context) or IoError.
RunConfig parse_config(const std::filesystem::path& path);

/// `base_dir` resolves relative paths such as `los_table_file`.
RunConfig parse_config_text(const std::string& text, const std::filesystem::path& base_dir = {},
                            const std::string& origin = "<config>");

/// Config text reproducing every default, with comments.
std::string default_config_text();

}  // namespace hapsris
