#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bugnav/geom.hpp"
#include "bugnav/sense.hpp"
#include "bugnav/world.hpp"

namespace bugnav {

enum class Algorithm { Bug1, Bug2, DistBug, IBA };

const char* algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(const std::string& name);

enum class Behavior { MoveToGoal, ObstacleAvoidance, Done, Unreachable };

const char* behavior_name(Behavior b);
std::optional<Behavior> parse_behavior(const std::string& name);

enum class FollowSide { Left, Right };

// Fixed start-goal reference line plus its endpoints (Bug-2's leave test).
struct MLine {
    Line2 line;
    Point2 start;
    Point2 goal;
};

// Tunables shared by all four steppers. Distances in feet.
struct NavParams {
    double step_size = 0.05;
    // goal-ward range at which goal seeking yields to boundary following
    double contact_threshold = 0.3;
    // lateral standoff tracked while boundary following; kept small so the
    // recorded path stays within a couple of steps of the true boundary
    double clearance = 0.02;
    int min_loop_steps = 8;
    long stall_window = 10000;
    bool distbug_verbatim = false;        // leave on any d_next > d_current
    bool visibility_limit_sensor = false; // cap IBA's visibility at sensor range

    // minimum goal-distance improvement a leave must show over the episode
    // baseline; kept well below step_size or grazing contacts (tiny chord
    // through an obstacle) would falsely read as unreachable
    double eps_progress() const { return 0.02 * step_size; }
    double eps_mline() const { return 0.5 * step_size; }
    double eps_loop() const { return 2.0 * step_size; }
    double visibility_clearance() const { return 0.5 * clearance; }
    double safety_margin() const { return 0.25 * clearance; }
};

enum class Bug1Phase { None, Surveying, Returning };

// Per-run navigation memory. A value type: steppers take a state and return
// the successor, so concurrent runs need no synchronization.
struct NavState {
    Algorithm algorithm = Algorithm::Bug1;
    NavParams params;
    Behavior behavior = Behavior::MoveToGoal;

    std::optional<Point2> hit_point;    // pose at contact
    std::optional<Point2> leave_point;  // pose at the most recent leave
    FollowSide follow_side = FollowSide::Left;
    std::optional<double> d_min;  // running minimum goal distance on boundary
    double d_current = 0.0;
    Bug1Phase phase = Bug1Phase::None;
    std::vector<Point2> boundary_path;  // Bug-1 survey record
    std::optional<MLine> m_line;        // Bug-2 only
    std::optional<Line2> ref_line;      // current straight reference path
    long steps_on_boundary = 0;
    bool stuck = false;

    // internal boundary-following bookkeeping
    bool anchored = false;          // standoff tracking has stabilized
    Point2 anchor;                  // loop-closure reference on the follow path
    double d_baseline = 0.0;        // goal distance baseline for leave tests
    bool departed_anchor = false;
    Point2 best_point;              // Bug-1 argmin of goal distance
    double best_d = 0.0;
};

// One motion step: travel `step` feet along `heading`. halt implies step 0.
struct MotionCommand {
    double heading = 0.0;
    double step = 0.0;
    bool halt = false;
};

struct StepResult {
    NavState state;
    MotionCommand command;
};

class LostWall : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fresh state for one algorithm on one environment. Bug-2 additionally
/// stores the start-goal m-line.
NavState init_state(Algorithm algorithm, const Environment& env, NavParams params = {});

StepResult step_bug1(const NavState& state, const Pose& pose, const Scan& scan,
                     const Environment& env);
StepResult step_bug2(const NavState& state, const Pose& pose, const Scan& scan,
                     const Environment& env);
StepResult step_distbug(const NavState& state, const Pose& pose, const Scan& scan,
                        const Environment& env);
StepResult step_iba(const NavState& state, const Pose& pose, const Scan& scan,
                    const Environment& env);

/// Dispatch on state.algorithm.
StepResult step(const NavState& state, const Pose& pose, const Scan& scan,
                const Environment& env);

/// Side whose half-sweep (beams left vs right of the bearing to goal) has the
/// larger summed free range; ties go Left.
FollowSide choose_follow_direction(const Scan& scan, const Pose& pose, Point2 goal);

/// Heading that keeps the nearest sensed boundary at `clearance` on the
/// trailing side (Left: wall on the right), advancing by `step`. Throws
/// LostWall when the scan holds no return.
MotionCommand wall_follow_command(const Scan& scan, const Pose& pose, FollowSide side,
                                  double clearance, double step);

}  // namespace bugnav
