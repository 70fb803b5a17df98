#include "hapsris/scenario.hpp"

#include <cmath>
#include <string>

#include "hapsris/error.hpp"
#include "hapsris/units.hpp"

namespace hapsris {

namespace {

bool finite(const Position3D& p) { return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z); }

}  // namespace

void AreaSpec::validate() const {
    if (!(radius_km > 0.0) || !std::isfinite(radius_km))
        throw ConfigError("scenario: radius_km must be > 0, got " + std::to_string(radius_km));
    if (!(haps_altitude_km > 0.0) || !std::isfinite(haps_altitude_km))
        throw ConfigError("scenario: haps_altitude_km must be > 0, got " + std::to_string(haps_altitude_km));
    if (!finite(ground_station) || ground_station.z < 0.0)
        throw ConfigError("scenario: ground station position must be finite with z >= 0");
    if (std::hypot(ground_station.x, ground_station.y) > radius_km)
        throw ConfigError("scenario: ground station lies outside the disaster area");
    if (num_gateways < 1)
        throw ConfigError("scenario: num_gateways must be >= 1, got " + std::to_string(num_gateways));
}

std::vector<Position3D> sample_gateway_positions(const AreaSpec& area, RandomStream& rng) {
    area.validate();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Position3D> out;
    out.reserve(static_cast<std::size_t>(area.num_gateways));
    for (int i = 0; i < area.num_gateways; ++i) {
        const double r = area.radius_km * std::sqrt(unit(rng));
        const double theta = 2.0 * kPi * unit(rng);
        Position3D p{r * std::cos(theta), r * std::sin(theta), 0.0};
        // cos/sin rounding can push a rim point a few ulps outside
        while (p.x * p.x + p.y * p.y > area.radius_km * area.radius_km) {
            p.x *= 1.0 - 1e-15;
            p.y *= 1.0 - 1e-15;
        }
        out.push_back(p);
    }
    return out;
}

LinkGeometry link_geometry(const Position3D& a, const Position3D& b) {
    if (!finite(a) || !finite(b)) throw GeometryError("link_geometry: non-finite coordinates");
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = std::abs(a.z - b.z);
    const double horizontal = std::hypot(dx, dy);
    if (horizontal == 0.0 && dz == 0.0) throw GeometryError("link_geometry: coincident endpoints");
    if (dz == 0.0) throw GeometryError("link_geometry: no elevated endpoint (equal altitudes)");

    LinkGeometry g;
    g.horizontal_distance_km = horizontal;
    g.slant_distance_km = std::hypot(horizontal, dz);
    g.elevation_deg = horizontal == 0.0 ? 90.0 : std::atan(dz / horizontal) * 180.0 / kPi;
    return g;
}

}  // namespace hapsris
