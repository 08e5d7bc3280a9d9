#include "bugnav/sense.hpp"

#include <algorithm>
#include <limits>

namespace bugnav {

namespace {

constexpr double kDirEps = 1e-12;

// Entry distance of the ray into an axis-aligned box, or +inf when the ray
// misses it. Used only as a conservative pre-filter.
double ray_aabb_entry(Point2 o, Point2 d, const Aabb& box) {
    double tmin = 0.0;
    double tmax = std::numeric_limits<double>::infinity();
    const double od[2] = {o.x, o.y};
    const double dd[2] = {d.x, d.y};
    const double lo[2] = {box.lo.x, box.lo.y};
    const double hi[2] = {box.hi.x, box.hi.y};
    for (int axis = 0; axis < 2; ++axis) {
        if (std::abs(dd[axis]) < kDirEps) {
            if (od[axis] < lo[axis] - kGeomEps || od[axis] > hi[axis] + kGeomEps) {
                return std::numeric_limits<double>::infinity();
            }
        } else {
            double t1 = (lo[axis] - od[axis]) / dd[axis];
            double t2 = (hi[axis] - od[axis]) / dd[axis];
            if (t1 > t2) std::swap(t1, t2);
            tmin = std::max(tmin, t1);
            tmax = std::min(tmax, t2);
            if (tmin > tmax + kGeomEps) return std::numeric_limits<double>::infinity();
        }
    }
    return tmin;
}

// Ray/segment intersection parameter along the ray, or +inf.
double ray_segment_param(Point2 o, Point2 d, const Segment2& s) {
    const Point2 e = s.q - s.p;
    const double denom = cross(d, e);
    if (std::abs(denom) < kDirEps) return std::numeric_limits<double>::infinity();
    const Point2 ap = s.p - o;
    const double t = cross(ap, e) / denom;
    const double u = cross(ap, d) / denom;
    if (t < 0.0 || u < -kDirEps || u > 1.0 + kDirEps) {
        return std::numeric_limits<double>::infinity();
    }
    return t;
}

double ray_bounds_exit(Point2 o, Point2 d, const Bounds& b) {
    double best = std::numeric_limits<double>::infinity();
    if (d.x > kDirEps) best = std::min(best, (b.max.x - o.x) / d.x);
    if (d.x < -kDirEps) best = std::min(best, (b.min.x - o.x) / d.x);
    if (d.y > kDirEps) best = std::min(best, (b.max.y - o.y) / d.y);
    if (d.y < -kDirEps) best = std::min(best, (b.min.y - o.y) / d.y);
    return std::max(best, 0.0);
}

double cast_ray_unchecked(const Environment& env, Point2 origin, double heading,
                          double max_range) {
    const Point2 d = heading_vec(heading);
    double best = ray_bounds_exit(origin, d, env.bounds);
    for (const Polygon& poly : env.obstacles) {
        if (ray_aabb_entry(origin, d, poly.aabb()) >= best) continue;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            best = std::min(best, ray_segment_param(origin, d, poly.edge(i)));
        }
    }
    return std::min(best, max_range);
}

void require_origin_free(const Environment& env, Point2 origin) {
    for (const Polygon& poly : env.obstacles) {
        if (point_strictly_inside(origin, poly)) {
            throw OriginInsideObstacle("ray origin inside an obstacle");
        }
    }
}

}  // namespace

double cast_ray(const Environment& env, Point2 origin, double heading, double max_range) {
    require_origin_free(env, origin);
    return cast_ray_unchecked(env, origin, heading, max_range);
}

Scan take_scan(const Environment& env, const Pose& pose, const SensorConfig& cfg) {
    if (cfg.beam_count < 3) throw std::invalid_argument("beam_count must be >= 3");
    if (!(cfg.max_range > 0.0)) throw std::invalid_argument("max_range must be > 0");
    if (!(cfg.fov > 0.0) || cfg.fov > 2.0 * std::numbers::pi + kGeomEps) {
        throw std::invalid_argument("fov must be in (0, 2*pi]");
    }
    require_origin_free(env, pose.position);
    Scan scan;
    scan.origin = pose.position;
    scan.max_range = cfg.max_range;
    scan.headings.reserve(cfg.beam_count);
    scan.ranges.reserve(cfg.beam_count);
    const double spacing = cfg.fov / static_cast<double>(cfg.beam_count - 1);
    const double mid = 0.5 * static_cast<double>(cfg.beam_count - 1);
    for (int i = 0; i < cfg.beam_count; ++i) {
        // symmetric offsets about the heading, so mirrored geometry yields
        // exactly mirrored ranges
        const double h = pose.heading + (static_cast<double>(i) - mid) * spacing;
        scan.headings.push_back(h);
        scan.ranges.push_back(cast_ray_unchecked(env, pose.position, h, cfg.max_range));
    }
    return scan;
}

std::optional<ScanReturn> nearest_return(const Scan& scan) {
    std::optional<ScanReturn> best;
    for (std::size_t i = 0; i < scan.ranges.size(); ++i) {
        if (scan.ranges[i] >= scan.max_range - kGeomEps) continue;
        if (!best || scan.ranges[i] < best->range) {
            best = ScanReturn{i, scan.ranges[i],
                              scan.origin + scan.ranges[i] * heading_vec(scan.headings[i])};
        }
    }
    return best;
}

bool goal_visible(const Environment& env, Point2 p, Point2 goal, double clearance) {
    if (dist(p, goal) < kGeomEps) return true;
    const Segment2 seg{p, goal};
    for (const Polygon& poly : env.obstacles) {
        if (clearance > 0.0) {
            if (segment_polygon_clearance(seg, poly) < clearance) return false;
        } else {
            if (segment_enters_interior(seg, poly)) return false;
        }
    }
    return true;
}

}  // namespace bugnav
