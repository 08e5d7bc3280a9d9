#pragma once

#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bugnav/geom.hpp"
#include "bugnav/world.hpp"

namespace bugnav {

class OriginInsideObstacle : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Idealized (noise-free) range sensor. The full-circle default makes both
// boundary-following directions observable from a single sweep.
struct SensorConfig {
    double max_range = 20.0;  // feet
    int beam_count = 181;
    double fov = 2.0 * std::numbers::pi;  // radians, centered on heading
};

// One range sweep. Headings are absolute (world frame); a range equal to
// max_range encodes "no return".
struct Scan {
    Point2 origin;
    std::vector<double> headings;
    std::vector<double> ranges;
    double max_range = 0.0;
};

struct ScanReturn {
    std::size_t beam = 0;
    double range = 0.0;
    Point2 point;
};

/// Distance from origin along heading to the nearest obstacle boundary or
/// workspace bounds, clamped to max_range. Throws OriginInsideObstacle if the
/// origin lies strictly inside an obstacle.
double cast_ray(const Environment& env, Point2 origin, double heading, double max_range);

/// Sweep of cfg.beam_count rays evenly spaced over
/// [heading - fov/2, heading + fov/2].
Scan take_scan(const Environment& env, const Pose& pose, const SensorConfig& cfg);

/// Shortest return in the scan, or nullopt when every beam reads max_range.
std::optional<ScanReturn> nearest_return(const Scan& scan);

/// True iff the straight segment p -> goal keeps at least `clearance` from
/// every obstacle. With clearance 0 this reduces to "the segment does not
/// pass through any obstacle interior" (boundary grazing still counts as
/// visible).
bool goal_visible(const Environment& env, Point2 p, Point2 goal, double clearance);

}  // namespace bugnav
