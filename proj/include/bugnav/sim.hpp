#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bugnav/nav.hpp"
#include "bugnav/sense.hpp"
#include "bugnav/world.hpp"

namespace bugnav {

enum class Outcome { GoalReached, Unreachable, StepBudgetExceeded, Stuck };

const char* outcome_name(Outcome o);

// Fixed-step simulation configuration. Zero-valued speed / goal_tolerance
// mean "derive the default" (environment speed, half a step).
struct SimParams {
    double step_size = 0.05;       // feet per tick
    double speed = 0.0;            // feet/second; 0 -> environment speed
    long max_steps = 1000000;
    SensorConfig sensor;
    double clearance = 0.02;       // boundary-following standoff, feet
    double goal_tolerance = 0.0;   // feet; 0 -> step_size / 2
    double contact_threshold = 0.3;
    bool distbug_verbatim = false;
    bool visibility_limit_sensor = false;

    double effective_goal_tolerance() const {
        return goal_tolerance > 0.0 ? goal_tolerance : 0.5 * step_size;
    }
    NavParams nav_params() const {
        NavParams p;
        p.step_size = step_size;
        p.contact_threshold = contact_threshold;
        p.clearance = clearance;
        p.distbug_verbatim = distbug_verbatim;
        p.visibility_limit_sensor = visibility_limit_sensor;
        return p;
    }
};

struct TraceSample {
    double t = 0.0;  // seconds
    Pose pose;
    Behavior behavior = Behavior::MoveToGoal;
    double d_goal = 0.0;  // feet
};

struct TrajectoryTrace {
    std::vector<TraceSample> samples;
    Outcome outcome = Outcome::StepBudgetExceeded;
};

struct PathMetrics {
    double path_length = 0.0;  // feet
    double duration = 0.0;     // seconds
    double smoothness = 0.0;   // radians, sum of |heading changes|
    std::vector<Point2> leave_points;
    Outcome outcome = Outcome::StepBudgetExceeded;
};

struct ComparisonRow {
    Algorithm algorithm;
    PathMetrics metrics;
};

// A moved segment crossed an obstacle interior. Navigation is responsible
// for never commanding such a motion, so this is a hard fault, not an
// outcome.
class InternalCollisionFault : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class EmptyTrace : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The guard run() applies to every moved segment; throws
/// InternalCollisionFault when the motion crosses an obstacle interior.
void check_motion(const Environment& env, const Segment2& moved);

/// Run one algorithm on one environment: sense -> step -> move, until the
/// goal is reached, the state machine reports unreachable, progress stalls,
/// or the step budget runs out.
TrajectoryTrace run(const Environment& env, Algorithm algorithm, const SimParams& params);

/// Summarize a trace. Leave points are read off the behavior transitions.
PathMetrics metrics(const TrajectoryTrace& trace, const Environment& env);

/// Run several algorithms on the same environment and parameters; rows keep
/// the input order.
std::vector<ComparisonRow> compare(const Environment& env, const std::vector<Algorithm>& algorithms,
                                   const SimParams& params);

}  // namespace bugnav
