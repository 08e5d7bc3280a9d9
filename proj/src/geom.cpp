#include "bugnav/geom.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

namespace bugnav {

namespace {

constexpr double kParamEps = 1e-12;

// Solve p + t*r = a + u*(b - a). Returns false for (anti)parallel segments.
bool seg_seg_params(Point2 p, Point2 r, Point2 a, Point2 b, double& t, double& u) {
    const Point2 e = b - a;
    const double denom = cross(r, e);
    if (std::abs(denom) < kParamEps) return false;
    const Point2 ap = a - p;
    t = cross(ap, e) / denom;
    u = cross(ap, r) / denom;
    return true;
}

// Parameters along [p, p+r] where the segment overlaps a collinear edge
// [a, b]; empty when not collinear or no overlap.
std::vector<double> collinear_overlap_params(Point2 p, Point2 r, Point2 a, Point2 b) {
    std::vector<double> out;
    const double len2 = dot(r, r);
    if (len2 < kParamEps) return out;
    const double scale = std::sqrt(len2) * std::max(1.0, std::max(norm(a - p), norm(b - p)));
    if (std::abs(cross(r, b - a)) > kParamEps * std::max(1.0, scale)) return out;
    if (std::abs(cross(a - p, r)) > kGeomEps * std::max(1.0, scale)) return out;
    double ta = dot(a - p, r) / len2;
    double tb = dot(b - p, r) / len2;
    if (ta > tb) std::swap(ta, tb);
    const double lo = std::max(0.0, ta);
    const double hi = std::min(1.0, tb);
    if (lo <= hi) {
        out.push_back(lo);
        out.push_back(hi);
    }
    return out;
}

Aabb segment_aabb(const Segment2& s) {
    return {{std::min(s.p.x, s.q.x), std::min(s.p.y, s.q.y)},
            {std::max(s.p.x, s.q.x), std::max(s.p.y, s.q.y)}};
}

}  // namespace

double dist(Point2 p, Point2 q) { return std::hypot(p.x - q.x, p.y - q.y); }

Point2 unit(Point2 v) {
    const double n = norm(v);
    if (n < kParamEps) return {1.0, 0.0};
    return {v.x / n, v.y / n};
}

double normalize_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(a, two_pi);
    if (r > std::numbers::pi) r -= two_pi;
    if (r <= -std::numbers::pi) r += two_pi;
    return r;
}

std::optional<double> Line2::slope() const {
    if (std::abs(b) < kParamEps) return std::nullopt;
    return -a / b;
}

std::optional<double> Line2::intercept() const {
    if (std::abs(b) < kParamEps) return std::nullopt;
    return c / b;
}

Line2 line_through(Point2 p1, Point2 p2) {
    const Point2 d = p2 - p1;
    const double len = norm(d);
    if (len < kGeomEps) throw DegenerateLine("line_through: coincident points");
    Line2 l;
    l.a = d.y / len;
    l.b = -d.x / len;
    l.c = l.a * p1.x + l.b * p1.y;
    if (l.a < 0.0 || (l.a == 0.0 && l.b < 0.0)) {
        l.a = -l.a;
        l.b = -l.b;
        l.c = -l.c;
    }
    // clear negative zeros so canonical forms compare bitwise
    if (l.a == 0.0) l.a = 0.0;
    if (l.b == 0.0) l.b = 0.0;
    if (l.c == 0.0) l.c = 0.0;
    return l;
}

Polygon::Polygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
    if (auto issue = polygon_issue(verts_)) {
        throw std::invalid_argument("invalid polygon: " + *issue);
    }
    double a2 = 0.0;
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point2& p = verts_[i];
        const Point2& q = verts_[(i + 1) % verts_.size()];
        a2 += cross(p, q);
    }
    if (a2 < 0.0) {
        std::reverse(verts_.begin(), verts_.end());
        a2 = -a2;
    }
    area_ = 0.5 * a2;
    box_.lo = box_.hi = verts_[0];
    for (const Point2& v : verts_) {
        box_.lo.x = std::min(box_.lo.x, v.x);
        box_.lo.y = std::min(box_.lo.y, v.y);
        box_.hi.x = std::max(box_.hi.x, v.x);
        box_.hi.y = std::max(box_.hi.y, v.y);
    }
}

std::optional<std::string> polygon_issue(const std::vector<Point2>& vertices) {
    const std::size_t n = vertices.size();
    if (n < 3) return "fewer than 3 vertices";
    for (const Point2& v : vertices) {
        if (!is_finite(v)) return "non-finite vertex";
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dist(vertices[i], vertices[(i + 1) % n]) < kGeomEps) {
            return "repeated adjacent vertices";
        }
    }
    double a2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        a2 += cross(vertices[i], vertices[(i + 1) % n]);
    }
    if (std::abs(a2) < 2.0 * kGeomEps) return "zero area";
    // collinear reversals (spikes)
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 u = vertices[(i + 1) % n] - vertices[i];
        const Point2 v = vertices[(i + 2) % n] - vertices[(i + 1) % n];
        if (std::abs(cross(u, v)) < kGeomEps * std::max(1.0, norm(u) * norm(v)) && dot(u, v) < 0.0) {
            return "spike (collinear reversal)";
        }
    }
    // pairwise intersection of non-adjacent edges
    for (std::size_t i = 0; i < n; ++i) {
        const Segment2 ei{vertices[i], vertices[(i + 1) % n]};
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            const Segment2 ej{vertices[j], vertices[(j + 1) % n]};
            double t, u;
            if (seg_seg_params(ei.p, ei.q - ei.p, ej.p, ej.q, t, u)) {
                if (t > -kParamEps && t < 1.0 + kParamEps && u > -kParamEps && u < 1.0 + kParamEps) {
                    return "self-intersecting";
                }
            } else if (!collinear_overlap_params(ei.p, ei.q - ei.p, ej.p, ej.q).empty()) {
                return "self-intersecting (collinear overlap)";
            }
        }
    }
    return std::nullopt;
}

double point_segment_distance(Point2 p, const Segment2& s) {
    const Point2 d = s.q - s.p;
    const double len2 = dot(d, d);
    if (len2 < kParamEps) return dist(p, s.p);
    double t = dot(p - s.p, d) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, s.p + t * d);
}

double point_boundary_distance(Point2 p, const Polygon& poly) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        best = std::min(best, point_segment_distance(p, poly.edge(i)));
    }
    return best;
}

bool point_in_polygon(Point2 p, const Polygon& poly) {
    if (point_boundary_distance(p, poly) <= kGeomEps) return true;
    bool inside = false;
    const auto& vs = poly.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2& a = vs[j];
        const Point2& b = vs[i];
        if ((a.y > p.y) != (b.y > p.y) &&
            p.x < (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x) {
            inside = !inside;
        }
    }
    return inside;
}

bool point_strictly_inside(Point2 p, const Polygon& poly) {
    if (point_boundary_distance(p, poly) <= kGeomEps) return false;
    return point_in_polygon(p, poly);
}

std::optional<PolyHit> segment_polygon_hit(const Segment2& s, const Polygon& poly) {
    if (!aabb_overlap(segment_aabb(s), poly.aabb(), kGeomEps)) return std::nullopt;
    if (point_in_polygon(s.p, poly)) return PolyHit{0.0, s.p};
    const Point2 r = s.q - s.p;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Segment2 e = poly.edge(i);
        double t, u;
        if (seg_seg_params(s.p, r, e.p, e.q, t, u)) {
            if (t > -kParamEps && t < 1.0 + kParamEps && u > -kParamEps && u < 1.0 + kParamEps) {
                best = std::min(best, std::clamp(t, 0.0, 1.0));
            }
        } else {
            for (double t2 : collinear_overlap_params(s.p, r, e.p, e.q)) {
                best = std::min(best, t2);
            }
        }
    }
    if (!std::isfinite(best)) return std::nullopt;
    return PolyHit{best, s.p + best * r};
}

double segment_segment_distance(const Segment2& a, const Segment2& b) {
    double t, u;
    if (seg_seg_params(a.p, a.q - a.p, b.p, b.q, t, u)) {
        if (t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0) return 0.0;
    }
    double best = point_segment_distance(a.p, b);
    best = std::min(best, point_segment_distance(a.q, b));
    best = std::min(best, point_segment_distance(b.p, a));
    best = std::min(best, point_segment_distance(b.q, a));
    return best;
}

bool segment_enters_interior(const Segment2& s, const Polygon& poly) {
    if (!aabb_overlap(segment_aabb(s), poly.aabb(), kGeomEps)) return false;
    if (point_strictly_inside(s.p, poly) || point_strictly_inside(s.q, poly)) return true;
    const Point2 r = s.q - s.p;
    std::vector<double> ts{0.0, 1.0};
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Segment2 e = poly.edge(i);
        double t, u;
        if (seg_seg_params(s.p, r, e.p, e.q, t, u)) {
            if (t > kParamEps && t < 1.0 - kParamEps && u > -kParamEps && u < 1.0 + kParamEps) {
                ts.push_back(t);
            }
        } else {
            for (double t2 : collinear_overlap_params(s.p, r, e.p, e.q)) ts.push_back(t2);
        }
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
        if (ts[i + 1] - ts[i] < 1e-12) continue;
        const Point2 mid = s.p + (0.5 * (ts[i] + ts[i + 1])) * r;
        if (point_strictly_inside(mid, poly)) return true;
    }
    return false;
}

double segment_polygon_clearance(const Segment2& s, const Polygon& poly) {
    if (segment_enters_interior(s, poly)) return 0.0;
    if (point_in_polygon(s.p, poly) || point_in_polygon(s.q, poly)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        best = std::min(best, segment_segment_distance(s, poly.edge(i)));
    }
    return best;
}

}  // namespace bugnav
