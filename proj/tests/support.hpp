#pragma once

// Shared helpers for the test suites: independent geometry oracles,
// deterministic random scenario generation, subprocess capture, and a tiny
// XML well-formedness check. Oracles here deliberately avoid the library's
// own predicates.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "bugnav/geom.hpp"
#include "bugnav/world.hpp"

namespace testsupport {

using bugnav::Point2;

// ---- independent geometry oracles ----------------------------------------

// Winding-number containment (boundary treated as inside via a small band).
inline bool winding_inside(Point2 p, const std::vector<Point2>& poly) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[(i + 1) % n];
        const Point2 ab{b.x - a.x, b.y - a.y};
        const Point2 ap{p.x - a.x, p.y - a.y};
        const double len2 = ab.x * ab.x + ab.y * ab.y;
        double t = len2 > 0.0 ? (ap.x * ab.x + ap.y * ab.y) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        const double dx = p.x - (a.x + t * ab.x);
        const double dy = p.y - (a.y + t * ab.y);
        if (std::sqrt(dx * dx + dy * dy) <= 1e-9) return true;
    }
    double angle = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[(i + 1) % n];
        const double a1 = std::atan2(a.y - p.y, a.x - p.x);
        const double a2 = std::atan2(b.y - p.y, b.x - p.x);
        double da = a2 - a1;
        while (da > std::numbers::pi) da -= 2.0 * std::numbers::pi;
        while (da < -std::numbers::pi) da += 2.0 * std::numbers::pi;
        angle += da;
    }
    return std::abs(angle) > std::numbers::pi;
}

// Brute-force earliest hit of a segment against a polygon: containment of
// the start plus an O(n) sweep over edges with the classic orientation test.
inline std::optional<double> naive_segment_poly_hit(Point2 p, Point2 q,
                                                    const std::vector<Point2>& poly) {
    if (winding_inside(p, poly)) return 0.0;
    const double rx = q.x - p.x;
    const double ry = q.y - p.y;
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = poly[i];
        const Point2 b = poly[(i + 1) % n];
        const double ex = b.x - a.x;
        const double ey = b.y - a.y;
        const double denom = rx * ey - ry * ex;
        if (std::abs(denom) < 1e-14) continue;
        const double t = ((a.x - p.x) * ey - (a.y - p.y) * ex) / denom;
        const double u = ((a.x - p.x) * ry - (a.y - p.y) * rx) / denom;
        if (t >= -1e-12 && t <= 1.0 + 1e-12 && u >= -1e-12 && u <= 1.0 + 1e-12) {
            best = std::min(best, std::max(t, 0.0));
        }
    }
    if (!std::isfinite(best)) return std::nullopt;
    return best;
}

// Exact visibility oracle for convex obstacles: clip the segment against
// each polygon's half-planes (Cyrus-Beck); the segment is clear when no
// clipped interval has a strictly interior midpoint. Boundary grazing does
// not block.
inline bool naive_segment_clear(Point2 p, Point2 q,
                                const std::vector<std::vector<Point2>>& polys) {
    const double rx = q.x - p.x;
    const double ry = q.y - p.y;
    for (const auto& poly : polys) {
        const std::size_t n = poly.size();
        double area2 = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            area2 += poly[i].x * poly[(i + 1) % n].y - poly[(i + 1) % n].x * poly[i].y;
        }
        const double orient = area2 >= 0.0 ? 1.0 : -1.0;
        double t_in = 0.0;
        double t_out = 1.0;
        bool miss = false;
        for (std::size_t i = 0; i < n && !miss; ++i) {
            const Point2 a = poly[i];
            const Point2 b = poly[(i + 1) % n];
            // inward normal of edge a->b for a counterclockwise ring
            const double nx = orient * -(b.y - a.y);
            const double ny = orient * (b.x - a.x);
            const double denom = nx * rx + ny * ry;
            const double num = nx * (a.x - p.x) + ny * (a.y - p.y);
            if (std::abs(denom) < 1e-15) {
                if (num > 0.0) miss = true;  // parallel and outside this half-plane
            } else {
                const double t = num / denom;
                if (denom > 0.0) {
                    t_in = std::max(t_in, t);
                } else {
                    t_out = std::min(t_out, t);
                }
            }
        }
        if (miss || t_in > t_out) continue;
        const double mid = 0.5 * (t_in + t_out);
        const Point2 m{p.x + mid * rx, p.y + mid * ry};
        bool strictly_inside = true;
        for (std::size_t i = 0; i < n && strictly_inside; ++i) {
            const Point2 a = poly[i];
            const Point2 b = poly[(i + 1) % n];
            const double nx = orient * -(b.y - a.y);
            const double ny = orient * (b.x - a.x);
            const double len = std::sqrt(nx * nx + ny * ny);
            const double sd = (nx * (m.x - a.x) + ny * (m.y - a.y)) / (len > 0.0 ? len : 1.0);
            if (sd <= 1e-9) strictly_inside = false;
        }
        if (strictly_inside) return false;
    }
    return true;
}

// ---- random generators -----------------------------------------------------

// Convex polygon: vertices on an axis-scaled circle in sorted angular order.
inline std::vector<Point2> random_convex_polygon(std::mt19937& rng, Point2 center, double radius) {
    std::uniform_int_distribution<int> n_verts(3, 8);
    std::uniform_real_distribution<double> angle_jitter(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> squish(0.6, 1.4);
    const int n = n_verts(rng);
    const double phase = angle_jitter(rng);
    const double ax = radius * squish(rng);
    const double ay = radius * squish(rng);
    std::vector<double> angles;
    std::uniform_real_distribution<double> slot(0.2, 1.0);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += slot(rng);
        angles.push_back(acc);
    }
    std::vector<Point2> out;
    for (int i = 0; i < n; ++i) {
        const double a = phase + angles[i] / acc * 2.0 * std::numbers::pi;
        out.push_back({center.x + ax * std::cos(a), center.y + ay * std::sin(a)});
    }
    return out;
}

inline double poly_poly_gap(const bugnav::Polygon& a, const bugnav::Polygon& b) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            best = std::min(best, bugnav::segment_segment_distance(a.edge(i), b.edge(j)));
        }
    }
    return best;
}

// Sample points just outside the polygon boundary, where a boundary
// follower would actually walk.
inline std::vector<Point2> offset_boundary_samples(const bugnav::Polygon& poly, double offset,
                                                   double spacing) {
    std::vector<Point2> out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto edge = poly.edge(i);
        const Point2 dir = bugnav::unit(edge.q - edge.p);
        const Point2 outward = bugnav::rot_cw(dir);  // ring is counterclockwise
        const double len = bugnav::dist(edge.p, edge.q);
        const int steps = std::max(1, static_cast<int>(len / spacing));
        for (int k = 0; k <= steps; ++k) {
            const Point2 base = edge.p + (len * k / steps) * dir;
            out.push_back(base + offset * outward);
        }
    }
    return out;
}

// A visibility-leaving follower can only terminate if, somewhere along the
// walked boundary, the straight segment to the goal is clear. Obstacles are
// admitted only while that stays true for every obstacle placed so far.
inline bool boundary_sees_goal(const bugnav::Polygon& poly,
                               const std::vector<bugnav::Polygon>& all, Point2 goal,
                               double clearance) {
    for (const Point2& p : offset_boundary_samples(poly, 0.05, 0.15)) {
        bool clear = true;
        for (const bugnav::Polygon& other : all) {
            if (bugnav::segment_polygon_clearance({p, goal}, other) < clearance) {
                clear = false;
                break;
            }
        }
        if (clear) return true;
    }
    return false;
}

// Randomized workspace with 1..5 well-separated convex obstacles and
// validated start/goal. Separation margins keep every scenario reachable.
inline bugnav::Environment random_scenario(std::mt19937& rng, int index) {
    const bugnav::Bounds bounds{{0.0, 0.0}, {60.0, 40.0}};
    std::uniform_real_distribution<double> start_y(8.0, 32.0);
    std::uniform_real_distribution<double> cx(10.0, 50.0);
    std::uniform_real_distribution<double> cy(7.0, 33.0);
    std::uniform_real_distribution<double> rad(1.5, 4.0);
    std::uniform_int_distribution<int> count(1, 5);

    const Point2 start{3.0, start_y(rng)};
    const Point2 goal{57.0, start_y(rng)};
    const int want = count(rng);

    std::vector<bugnav::Polygon> polys;
    std::vector<std::vector<Point2>> rings;
    for (int attempts = 0; static_cast<int>(polys.size()) < want && attempts < 300; ++attempts) {
        const Point2 c{cx(rng), cy(rng)};
        auto ring = random_convex_polygon(rng, c, rad(rng));
        if (bugnav::polygon_issue(ring)) continue;
        bugnav::Polygon poly(ring);
        bool ok = poly.aabb().lo.x > bounds.min.x + 2.0 && poly.aabb().lo.y > bounds.min.y + 2.0 &&
                  poly.aabb().hi.x < bounds.max.x - 2.0 && poly.aabb().hi.y < bounds.max.y - 2.0;
        if (ok) {
            ok = bugnav::point_boundary_distance(start, poly) > 2.0 &&
                 !bugnav::point_in_polygon(start, poly) &&
                 bugnav::point_boundary_distance(goal, poly) > 2.0 &&
                 !bugnav::point_in_polygon(goal, poly);
        }
        for (const bugnav::Polygon& other : polys) {
            if (!ok) break;
            ok = poly_poly_gap(poly, other) > 1.5;
        }
        if (ok) {
            // admitting this obstacle must leave a goal-visible stretch on
            // every boundary, its own included
            std::vector<bugnav::Polygon> with(polys);
            with.push_back(poly);
            for (const bugnav::Polygon& each : with) {
                if (!boundary_sees_goal(each, with, goal, 0.1)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            polys.push_back(std::move(poly));
            rings.push_back(std::move(ring));
        }
    }

    std::vector<std::vector<Point2>> obstacle_rings = rings;
    return bugnav::make_environment("random-" + std::to_string(index), bounds, start, goal,
                                    bugnav::kDefaultSpeed, obstacle_rings);
}

// ---- process + file helpers ------------------------------------------------

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline std::string temp_path(const std::string& stem) {
    static int counter = 0;
    return "/tmp/bugnav_test_" + std::to_string(::getpid()) + "_" + stem + "_" +
           std::to_string(counter++);
}

inline RunResult run_command(const std::string& cmd) {
    const std::string out_file = temp_path("stdout");
    const std::string err_file = temp_path("stderr");
    const std::string full = cmd + " > " + out_file + " 2> " + err_file;
    const int rc = std::system(full.c_str());
    RunResult result;
    result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return result;
}

// ---- minimal XML well-formedness check -------------------------------------

inline bool xml_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        if (text[i] != '<') {
            ++i;
            continue;
        }
        const std::size_t close = text.find('>', i);
        if (close == std::string::npos) return false;
        std::string tag = text.substr(i + 1, close - i - 1);
        i = close + 1;
        if (tag.empty()) return false;
        if (tag[0] == '?' || tag[0] == '!') continue;
        const bool self_closing = tag.back() == '/';
        if (self_closing) tag.pop_back();
        bool closing = false;
        if (tag[0] == '/') {
            closing = true;
            tag.erase(0, 1);
        }
        const std::size_t space = tag.find_first_of(" \t\n");
        const std::string name = space == std::string::npos ? tag : tag.substr(0, space);
        if (name.empty()) return false;
        if (closing) {
            if (stack.empty() || stack.back() != name) return false;
            stack.pop_back();
        } else if (!self_closing) {
            stack.push_back(name);
        }
    }
    return stack.empty();
}

}  // namespace testsupport
