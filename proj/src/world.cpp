#include "bugnav/world.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace bugnav {

namespace {

using nlohmann::json;

Point2 parse_point(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(what + " must be a [x, y] number pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key())) {
            throw ParseError("unknown key '" + item.key() + "' in " + where);
        }
    }
}

bool in_bounds(Point2 p, const Bounds& b) {
    return p.x >= b.min.x - kGeomEps && p.x <= b.max.x + kGeomEps &&
           p.y >= b.min.y - kGeomEps && p.y <= b.max.y + kGeomEps;
}

std::string fmt_point(Point2 p) {
    std::ostringstream os;
    os << "(" << p.x << ", " << p.y << ")";
    return os.str();
}

}  // namespace

const char* issue_code_name(IssueCode code) {
    switch (code) {
        case IssueCode::StartInsideObstacle: return "StartInsideObstacle";
        case IssueCode::GoalInsideObstacle: return "GoalInsideObstacle";
        case IssueCode::OutOfBounds: return "OutOfBounds";
        case IssueCode::BadPolygon: return "BadPolygon";
        case IssueCode::NonPositiveSpeed: return "NonPositiveSpeed";
    }
    return "?";
}

namespace {

std::string issues_message(const std::vector<ScenarioIssue>& issues) {
    std::ostringstream os;
    os << "invalid scenario:";
    for (const auto& i : issues) os << " [" << issue_code_name(i.code) << "] " << i.detail << ";";
    return os.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<ScenarioIssue> issues)
    : std::runtime_error(issues_message(issues)), issues_(std::move(issues)) {}

Environment make_environment(std::string name, Bounds bounds, Point2 start, Point2 goal,
                             double speed, std::vector<std::vector<Point2>> obstacles) {
    std::vector<ScenarioIssue> issues;
    const bool bounds_ok = is_finite(bounds.min) && is_finite(bounds.max) &&
                           bounds.min.x < bounds.max.x && bounds.min.y < bounds.max.y;
    if (!bounds_ok) {
        issues.push_back({IssueCode::OutOfBounds, "bounds must satisfy min < max on both axes"});
    }
    if (!(speed > 0.0) || !std::isfinite(speed)) {
        issues.push_back({IssueCode::NonPositiveSpeed, "speed must be > 0"});
    }
    if (bounds_ok) {
        if (!is_finite(start) || !in_bounds(start, bounds)) {
            issues.push_back({IssueCode::OutOfBounds, "start " + fmt_point(start) + " outside bounds"});
        }
        if (!is_finite(goal) || !in_bounds(goal, bounds)) {
            issues.push_back({IssueCode::OutOfBounds, "goal " + fmt_point(goal) + " outside bounds"});
        }
    }

    std::vector<Polygon> polys;
    polys.reserve(obstacles.size());
    for (std::size_t i = 0; i < obstacles.size(); ++i) {
        if (auto why = polygon_issue(obstacles[i])) {
            issues.push_back({IssueCode::BadPolygon, "obstacle " + std::to_string(i) + ": " + *why});
            continue;
        }
        Polygon poly(obstacles[i]);
        if (bounds_ok) {
            for (const Point2& v : poly.vertices()) {
                if (!in_bounds(v, bounds)) {
                    issues.push_back({IssueCode::OutOfBounds,
                                      "obstacle " + std::to_string(i) + " vertex " + fmt_point(v) +
                                          " outside bounds"});
                    break;
                }
            }
        }
        polys.push_back(std::move(poly));
    }
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (is_finite(start) && point_in_polygon(start, polys[i])) {
            issues.push_back({IssueCode::StartInsideObstacle,
                              "start " + fmt_point(start) + " inside obstacle " + std::to_string(i)});
        }
        if (is_finite(goal) && point_in_polygon(goal, polys[i])) {
            issues.push_back({IssueCode::GoalInsideObstacle,
                              "goal " + fmt_point(goal) + " inside obstacle " + std::to_string(i)});
        }
    }
    if (!issues.empty()) throw ValidationError(std::move(issues));

    Environment env;
    env.name = std::move(name);
    env.bounds = bounds;
    env.start = start;
    env.goal = goal;
    env.speed = speed;
    env.obstacles = std::move(polys);
    return env;
}

Environment load_scenario(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("scenario document must be a JSON object");
    reject_unknown_keys(doc, {"name", "bounds", "start", "goal", "speed", "obstacles"}, "scenario");

    for (const char* key : {"name", "bounds", "start", "goal"}) {
        if (!doc.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
    }
    if (!doc["name"].is_string()) throw ParseError("'name' must be a string");
    if (!doc["bounds"].is_object()) throw ParseError("'bounds' must be an object");
    reject_unknown_keys(doc["bounds"], {"min", "max"}, "bounds");
    if (!doc["bounds"].contains("min") || !doc["bounds"].contains("max")) {
        throw ParseError("'bounds' needs 'min' and 'max'");
    }

    Bounds bounds{parse_point(doc["bounds"]["min"], "bounds.min"),
                  parse_point(doc["bounds"]["max"], "bounds.max")};
    const Point2 start = parse_point(doc["start"], "start");
    const Point2 goal = parse_point(doc["goal"], "goal");

    double speed = kDefaultSpeed;
    if (doc.contains("speed")) {
        if (!doc["speed"].is_number()) throw ParseError("'speed' must be a number");
        speed = doc["speed"].get<double>();
    }

    std::vector<std::vector<Point2>> obstacles;
    if (doc.contains("obstacles")) {
        if (!doc["obstacles"].is_array()) throw ParseError("'obstacles' must be an array");
        for (const auto& ring : doc["obstacles"]) {
            if (!ring.is_array()) throw ParseError("each obstacle must be an array of [x, y] pairs");
            std::vector<Point2> vs;
            for (const auto& v : ring) vs.push_back(parse_point(v, "obstacle vertex"));
            obstacles.push_back(std::move(vs));
        }
    }

    return make_environment(doc["name"].get<std::string>(), bounds, start, goal, speed,
                            std::move(obstacles));
}

Environment load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_scenario(buf.str());
}

std::string render_scenario(const Environment& env) {
    json doc;
    doc["name"] = env.name;
    doc["bounds"]["min"] = {env.bounds.min.x, env.bounds.min.y};
    doc["bounds"]["max"] = {env.bounds.max.x, env.bounds.max.y};
    doc["start"] = {env.start.x, env.start.y};
    doc["goal"] = {env.goal.x, env.goal.y};
    doc["speed"] = env.speed;
    doc["obstacles"] = json::array();
    for (const Polygon& poly : env.obstacles) {
        json ring = json::array();
        for (const Point2& v : poly.vertices()) ring.push_back({v.x, v.y});
        doc["obstacles"].push_back(std::move(ring));
    }
    return doc.dump(2) + "\n";
}

std::vector<Environment> builtin_scenarios() {
    std::vector<Environment> out;

    // Straight 172 ft run, no obstacles. Bounds sit beyond the default
    // sensor range so the sweep reads empty over the whole run.
    out.push_back(make_environment("open-field", {{-25.0, -25.0}, {197.0, 25.0}}, {0.0, 0.0},
                                   {172.0, 0.0}, kDefaultSpeed, {}));

    // Single rectangular obstacle straddling the start-goal line.
    out.push_back(make_environment(
        "block", {{-2.0, -5.0}, {12.0, 5.0}}, {0.0, 0.0}, {10.0, 0.0}, kDefaultSpeed,
        {{{4.0, -1.0}, {6.0, -1.0}, {6.0, 1.0}, {4.0, 1.0}}}));

    // Two nearby blocks; the second one is offset below the line so the
    // side choice matters.
    out.push_back(make_environment(
        "two-blocks", {{-2.0, -5.0}, {14.0, 5.0}}, {0.0, 0.0}, {12.0, 0.0}, kDefaultSpeed,
        {{{3.0, -1.0}, {5.0, -1.0}, {5.0, 1.0}, {3.0, 1.0}},
         {{5.6, -1.5}, {7.6, -1.5}, {7.6, 0.5}, {5.6, 0.5}}}));

    // Goal sealed inside a hollow square ring (walls overlap at the corners
    // so the ring is airtight). Any run must report it unreachable.
    out.push_back(make_environment(
        "enclosed-goal", {{-2.0, -8.0}, {28.0, 8.0}}, {0.0, 0.0}, {20.0, 0.0}, kDefaultSpeed,
        {{{17.0, -3.0}, {17.5, -3.0}, {17.5, 3.0}, {17.0, 3.0}},
         {{22.5, -3.0}, {23.0, -3.0}, {23.0, 3.0}, {22.5, 3.0}},
         {{17.0, 2.5}, {23.0, 2.5}, {23.0, 3.0}, {17.0, 3.0}},
         {{17.0, -3.0}, {23.0, -3.0}, {23.0, -2.5}, {17.0, -2.5}}}));

    return out;
}

Environment builtin_scenario(const std::string& name) {
    for (Environment& env : builtin_scenarios()) {
        if (env.name == name) return std::move(env);
    }
    throw std::out_of_range("no builtin scenario named '" + name + "'");
}

}  // namespace bugnav
