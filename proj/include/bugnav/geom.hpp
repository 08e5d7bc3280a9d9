#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace bugnav {

// Incidence tolerance for geometric predicates, in feet. All comparisons
// against boundaries use this band rather than exact float equality.
inline constexpr double kGeomEps = 1e-9;

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 v) { return {s * v.x, s * v.y}; }
inline bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 v) { return std::hypot(v.x, v.y); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Euclidean distance between two points.
double dist(Point2 p, Point2 q);

/// Unit vector along v; (1,0) if v is (numerically) zero.
Point2 unit(Point2 v);

/// Unit vector for a heading angle.
inline Point2 heading_vec(double heading) { return {std::cos(heading), std::sin(heading)}; }

/// Rotate v by +90 degrees (counterclockwise).
inline Point2 rot_ccw(Point2 v) { return {-v.y, v.x}; }
/// Rotate v by -90 degrees (clockwise).
inline Point2 rot_cw(Point2 v) { return {v.y, -v.x}; }

/// Normalize an angle to (-pi, pi].
double normalize_angle(double a);

/// Planar position plus heading, heading normalized to (-pi, pi].
struct Pose {
    Point2 position;
    double heading = 0.0;
};

class DegenerateLine : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Implicit-form line a*x + b*y = c with a^2 + b^2 = 1, canonicalized so
// a > 0, or a == 0 and b > 0. Slope/intercept are derived views that are
// undefined for vertical lines.
struct Line2 {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;

    /// Signed incidence residual a*x + b*y - c (distance to the line).
    double eval(Point2 p) const { return a * p.x + b * p.y - c; }

    std::optional<double> slope() const;
    std::optional<double> intercept() const;
};

/// Line through two distinct points. Throws DegenerateLine if p1 == p2.
Line2 line_through(Point2 p1, Point2 p2);

struct Segment2 {
    Point2 p;
    Point2 q;
};

struct Aabb {
    Point2 lo{0.0, 0.0};
    Point2 hi{0.0, 0.0};
};

inline bool aabb_overlap(const Aabb& a, const Aabb& b, double pad = 0.0) {
    return a.lo.x <= b.hi.x + pad && b.lo.x <= a.hi.x + pad &&
           a.lo.y <= b.hi.y + pad && b.lo.y <= a.hi.y + pad;
}

// Simple polygon, vertices stored counterclockwise (normalized on
// construction), closed implicitly. Construction rejects degenerate input.
class Polygon {
public:
    explicit Polygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Aabb& aabb() const { return box_; }
    double area() const { return area_; }

    Segment2 edge(std::size_t i) const {
        return {verts_[i], verts_[(i + 1) % verts_.size()]};
    }

private:
    std::vector<Point2> verts_;
    Aabb box_;
    double area_ = 0.0;
};

/// Reason a vertex list does not form a valid simple polygon, or nullopt.
std::optional<std::string> polygon_issue(const std::vector<Point2>& vertices);

struct PolyHit {
    double t = 0.0;  // parameter along the segment, in [0, 1]
    Point2 point;
};

/// Earliest parameter where the segment meets the closed polygon (boundary
/// contact counts). A start point inside reports t = 0.
std::optional<PolyHit> segment_polygon_hit(const Segment2& s, const Polygon& poly);

/// Closed containment: interior or boundary (even-odd rule, boundary included).
bool point_in_polygon(Point2 p, const Polygon& poly);

/// Strict interior containment (boundary excluded by the kGeomEps band).
bool point_strictly_inside(Point2 p, const Polygon& poly);

/// Distance from a point to the polygon boundary (zero only on the boundary).
double point_boundary_distance(Point2 p, const Polygon& poly);

/// Distance from a point to a segment.
double point_segment_distance(Point2 p, const Segment2& s);

/// Distance between two segments (zero if they intersect).
double segment_segment_distance(const Segment2& a, const Segment2& b);

/// True iff the segment passes through the open interior of the polygon.
/// Touching or sliding along the boundary does not count.
bool segment_enters_interior(const Segment2& s, const Polygon& poly);

/// Minimum distance from the segment to the closed polygon (zero when the
/// segment touches or crosses it).
double segment_polygon_clearance(const Segment2& s, const Polygon& poly);

}  // namespace bugnav
