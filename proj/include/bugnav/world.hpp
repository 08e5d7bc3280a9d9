#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bugnav/geom.hpp"

namespace bugnav {

// Speed implied by a 172 ft straight run covered in 120 s.
inline constexpr double kDefaultSpeed = 172.0 / 120.0;

struct Bounds {
    Point2 min;
    Point2 max;
};

// Workspace model: rectangular bounds, start/goal, polygonal obstacles and a
// constant translation speed. Units are fixed to feet and seconds; there is
// no conversion layer. Immutable after load; safe to share across
// concurrent runs.
struct Environment {
    static constexpr const char* kUnits = "feet/seconds";

    std::string name;
    Bounds bounds;
    Point2 start;
    Point2 goal;
    double speed = kDefaultSpeed;
    std::vector<Polygon> obstacles;
};

enum class IssueCode {
    StartInsideObstacle,
    GoalInsideObstacle,
    OutOfBounds,
    BadPolygon,
    NonPositiveSpeed,
};

const char* issue_code_name(IssueCode code);

struct ScenarioIssue {
    IssueCode code;
    std::string detail;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<ScenarioIssue> issues);
    const std::vector<ScenarioIssue>& issues() const { return issues_; }

private:
    std::vector<ScenarioIssue> issues_;
};

/// Validate raw scenario fields and assemble an Environment. Obstacle
/// orientation is normalized to counterclockwise. Throws ValidationError
/// with every detected issue.
Environment make_environment(std::string name, Bounds bounds, Point2 start, Point2 goal,
                             double speed, std::vector<std::vector<Point2>> obstacles);

/// Parse and validate a scenario JSON document (see README for the schema).
/// Throws ParseError on malformed documents, ValidationError on invalid ones.
Environment load_scenario(const std::string& json_text);

/// Convenience file wrapper around load_scenario.
Environment load_scenario_file(const std::string& path);

/// Serialize an Environment back to scenario JSON.
std::string render_scenario(const Environment& env);

/// The built-in benchmark scenarios: open-field, block, two-blocks,
/// enclosed-goal.
std::vector<Environment> builtin_scenarios();

/// Look up a builtin by name; throws std::out_of_range for unknown names.
Environment builtin_scenario(const std::string& name);

}  // namespace bugnav
