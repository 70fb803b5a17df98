#pragma once

#include <vector>

#include "hapsris/rng.hpp"

namespace hapsris {

/// Point in a local Cartesian frame, km. z is altitude above the ground plane.
struct Position3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Disaster-area layout. The HAPS sits above the disk centre.
struct AreaSpec {
    double radius_km = 50.0;
    double haps_altitude_km = 20.0;
    Position3D ground_station{5.0, 5.0, 0.0};
    int num_gateways = 1000;

    Position3D haps() const { return {0.0, 0.0, haps_altitude_km}; }
    void validate() const;
};

struct LinkGeometry {
    double horizontal_distance_km = 0.0;
    double slant_distance_km = 0.0;
    double elevation_deg = 0.0;
};

/// Gateways uniformly distributed over the disk (r = R*sqrt(u)), all at z = 0.
std::vector<Position3D> sample_gateway_positions(const AreaSpec& area, RandomStream& rng);

/// Geometry between a ground endpoint and an elevated endpoint (either order).
/// Elevation is the look-up angle at the lower endpoint; 90 deg at nadir.
LinkGeometry link_geometry(const Position3D& a, const Position3D& b);

}  // namespace hapsris
