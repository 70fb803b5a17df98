#pragma once

#include <cmath>

namespace hapsris {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s
inline constexpr double kPi = 3.14159265358979323846;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

/// Free-space wavelength in metres for a carrier in GHz.
inline double wavelength_m(double frequency_ghz) { return kSpeedOfLight / (frequency_ghz * 1e9); }

}  // namespace hapsris
