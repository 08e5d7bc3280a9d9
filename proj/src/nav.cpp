#include "bugnav/nav.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace bugnav {

namespace {

double bearing_to(Point2 from, Point2 to) { return std::atan2(to.y - from.y, to.x - from.x); }

double free_distance(const Environment& env, Point2 p, double heading, double limit) {
    return cast_ray(env, p, heading, limit);
}

// Reset boundary-following memory and aim straight at the goal from `pos`.
// A leave against a wall inside the safety margin emits a zero-length
// motion; the simulator's stall detector then surfaces the livelock.
MotionCommand leave_boundary(NavState& st, Point2 pos, Point2 goal, const Environment& env) {
    const NavParams& p = st.params;
    const double d = dist(pos, goal);
    const double bearing = d < kGeomEps ? 0.0 : bearing_to(pos, goal);
    const double range = free_distance(env, pos, bearing, p.step_size + p.safety_margin() + 1.0);
    double allowed = std::min(d, range - p.safety_margin());
    if (allowed < 1e-9) allowed = 0.0;

    st.behavior = Behavior::MoveToGoal;
    st.leave_point = pos;
    st.phase = Bug1Phase::None;
    st.boundary_path.clear();
    st.steps_on_boundary = 0;
    st.anchored = false;
    st.departed_anchor = false;
    if (d > kGeomEps) st.ref_line = line_through(pos, goal);
    return MotionCommand{bearing, std::min(p.step_size, allowed), false};
}

// Clamp a boundary-following command against exact geometry. When the
// proposed heading is blocked inside the margin, rotate away from the
// followed wall in 5 degree increments until the path opens up.
MotionCommand clamp_boundary_motion(const Environment& env, Point2 pos, MotionCommand cmd,
                                    FollowSide side, const NavParams& p, bool& blocked) {
    const double margin = p.safety_margin();
    const double want = cmd.step;
    const double turn =
        (side == FollowSide::Left ? 1.0 : -1.0) * (std::numbers::pi / 36.0);
    for (int k = 0; k <= 72; ++k) {
        const double h = cmd.heading + turn * static_cast<double>(k);
        const double range = free_distance(env, pos, h, want + margin + 1.0);
        const double allowed = range - margin;
        if (allowed >= 0.25 * want) {
            blocked = false;
            return MotionCommand{normalize_angle(h), std::min(want, allowed), false};
        }
    }
    blocked = true;
    return MotionCommand{cmd.heading, 0.0, true};
}

StepResult step_common(NavState st, const Pose& pose, const Scan& scan, const Environment& env) {
    const NavParams& p = st.params;
    const Point2 pos = pose.position;
    const Point2 goal = env.goal;
    const double d = dist(pos, goal);
    st.d_current = d;

    if (st.behavior == Behavior::Done || st.behavior == Behavior::Unreachable) {
        return {st, MotionCommand{pose.heading, 0.0, true}};
    }

    if (st.behavior == Behavior::MoveToGoal) {
        if (d < kGeomEps) {
            st.behavior = Behavior::Done;
            return {st, MotionCommand{pose.heading, 0.0, true}};
        }
        const double bearing = bearing_to(pos, goal);
        const double range =
            free_distance(env, pos, bearing, p.contact_threshold + 2.0 * p.step_size);
        if (range >= p.contact_threshold) {
            const double step_len =
                std::max(0.0, std::min({p.step_size, d, range - p.safety_margin()}));
            return {st, MotionCommand{bearing, step_len, false}};
        }
        // contact: switch to boundary following, pick a side, fall through
        st.behavior = Behavior::ObstacleAvoidance;
        st.hit_point = pos;
        st.d_baseline = d;
        st.d_min = d;
        st.steps_on_boundary = 0;
        st.anchored = false;
        st.departed_anchor = false;
        st.follow_side = (st.algorithm == Algorithm::IBA)
                             ? choose_follow_direction(scan, pose, goal)
                             : FollowSide::Left;
        if (st.algorithm == Algorithm::Bug1) {
            st.phase = Bug1Phase::Surveying;
            st.boundary_path.clear();
        }
    }

    st.steps_on_boundary += 1;
    if (st.steps_on_boundary > p.stall_window) {
        st.stuck = true;
        return {st, MotionCommand{pose.heading, 0.0, true}};
    }

    MotionCommand follow = wall_follow_command(scan, pose, st.follow_side, p.clearance, p.step_size);
    const auto wall = nearest_return(scan);

    if (!st.anchored) {
        const bool settled = wall && std::abs(wall->range - p.clearance) <= 0.5 * p.clearance;
        if (settled || st.steps_on_boundary > 60) {
            st.anchored = true;
            st.anchor = pos;
            st.departed_anchor = false;
            st.d_baseline = std::min(st.d_baseline, d);
            if (st.algorithm == Algorithm::Bug1) {
                st.best_point = pos;
                st.best_d = d;
            }
        }
    }

    bool loop_closed = false;
    if (st.anchored) {
        const double da = dist(pos, st.anchor);
        if (da > 2.0 * p.eps_loop()) st.departed_anchor = true;
        if (st.departed_anchor && st.steps_on_boundary >= p.min_loop_steps &&
            da <= p.eps_loop()) {
            loop_closed = true;
        }
    }

    bool left = false;
    MotionCommand leave_cmd;

    switch (st.algorithm) {
        case Algorithm::Bug1: {
            if (st.phase == Bug1Phase::Surveying && st.anchored) {
                st.boundary_path.push_back(pos);
                if (d < st.best_d) {
                    st.best_d = d;
                    st.best_point = pos;
                }
                st.d_min = std::min(st.d_min.value_or(d), d);
                if (loop_closed) st.phase = Bug1Phase::Returning;
            } else if (st.phase == Bug1Phase::Returning) {
                if (dist(pos, st.best_point) <= p.step_size) {
                    // at the recorded minimum: classical blocked-departure test
                    const double bearing = bearing_to(pos, goal);
                    const double range =
                        free_distance(env, pos, bearing, p.contact_threshold + p.step_size);
                    if (range < p.contact_threshold) {
                        st.behavior = Behavior::Unreachable;
                        return {st, MotionCommand{pose.heading, 0.0, true}};
                    }
                    leave_cmd = leave_boundary(st, pos, goal, env);
                    left = true;
                }
            }
            break;
        }
        case Algorithm::Bug2: {
            if (st.anchored && st.m_line) {
                const double resid = std::abs(st.m_line->line.eval(pos));
                if (resid <= p.eps_mline() && d <= st.d_baseline - p.eps_progress()) {
                    leave_cmd = leave_boundary(st, pos, goal, env);
                    left = true;
                }
            }
            if (!left && loop_closed) {
                st.behavior = Behavior::Unreachable;
                return {st, MotionCommand{pose.heading, 0.0, true}};
            }
            break;
        }
        case Algorithm::DistBug: {
            // lookahead one boundary step along the wall tangent
            if (wall) {
                const Point2 n = unit(pos - wall->point);
                const Point2 tangent = st.follow_side == FollowSide::Left ? rot_cw(n) : rot_ccw(n);
                const double d_next = dist(pos + p.step_size * tangent, goal);
                const bool fire = p.distbug_verbatim
                                      ? (d_next > d)
                                      : (st.anchored && d_next > d &&
                                         d <= st.d_baseline - p.eps_progress());
                if (fire) {
                    leave_cmd = leave_boundary(st, pos, goal, env);
                    left = true;
                }
            }
            if (!left) st.d_min = std::min(st.d_min.value_or(d), d);
            if (!left && loop_closed) {
                st.behavior = Behavior::Unreachable;
                return {st, MotionCommand{pose.heading, 0.0, true}};
            }
            break;
        }
        case Algorithm::IBA: {
            bool visible = goal_visible(env, pos, goal, p.visibility_clearance());
            if (visible && p.visibility_limit_sensor && d > scan.max_range) visible = false;
            if (visible) {
                leave_cmd = leave_boundary(st, pos, goal, env);
                left = true;
            }
            if (!left && loop_closed) {
                st.behavior = Behavior::Unreachable;
                return {st, MotionCommand{pose.heading, 0.0, true}};
            }
            break;
        }
    }

    if (left) return {st, leave_cmd};

    bool blocked = false;
    const MotionCommand cmd = clamp_boundary_motion(env, pos, follow, st.follow_side, p, blocked);
    if (blocked) st.stuck = true;
    return {st, cmd};
}

}  // namespace

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Bug1: return "bug1";
        case Algorithm::Bug2: return "bug2";
        case Algorithm::DistBug: return "distbug";
        case Algorithm::IBA: return "iba";
    }
    return "?";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
    if (name == "bug1") return Algorithm::Bug1;
    if (name == "bug2") return Algorithm::Bug2;
    if (name == "distbug") return Algorithm::DistBug;
    if (name == "iba") return Algorithm::IBA;
    return std::nullopt;
}

const char* behavior_name(Behavior b) {
    switch (b) {
        case Behavior::MoveToGoal: return "move_to_goal";
        case Behavior::ObstacleAvoidance: return "obstacle_avoidance";
        case Behavior::Done: return "done";
        case Behavior::Unreachable: return "unreachable";
    }
    return "?";
}

std::optional<Behavior> parse_behavior(const std::string& name) {
    if (name == "move_to_goal") return Behavior::MoveToGoal;
    if (name == "obstacle_avoidance") return Behavior::ObstacleAvoidance;
    if (name == "done") return Behavior::Done;
    if (name == "unreachable") return Behavior::Unreachable;
    return std::nullopt;
}

NavState init_state(Algorithm algorithm, const Environment& env, NavParams params) {
    NavState st;
    st.algorithm = algorithm;
    st.params = params;
    st.behavior = Behavior::MoveToGoal;
    st.d_current = dist(env.start, env.goal);
    if (dist(env.start, env.goal) > kGeomEps) {
        st.ref_line = line_through(env.start, env.goal);
        if (algorithm == Algorithm::Bug2) {
            st.m_line = MLine{*st.ref_line, env.start, env.goal};
        }
    }
    return st;
}

FollowSide choose_follow_direction(const Scan& scan, const Pose& pose, Point2 goal) {
    const double bearing = bearing_to(pose.position, goal);
    constexpr double eps_a = 1e-9;
    double left_sum = 0.0;
    double right_sum = 0.0;
    for (std::size_t i = 0; i < scan.headings.size(); ++i) {
        const double delta = normalize_angle(scan.headings[i] - bearing);
        if (delta > eps_a && delta < std::numbers::pi - eps_a) {
            left_sum += scan.ranges[i];
        } else if (delta < -eps_a && delta > -std::numbers::pi + eps_a) {
            right_sum += scan.ranges[i];
        }
    }
    const double tie = 1e-6 * std::max(1.0, left_sum + right_sum);
    if (std::abs(left_sum - right_sum) <= tie) return FollowSide::Left;
    return left_sum > right_sum ? FollowSide::Left : FollowSide::Right;
}

MotionCommand wall_follow_command(const Scan& scan, const Pose& pose, FollowSide side,
                                  double clearance, double step) {
    const auto wall = nearest_return(scan);
    if (!wall) throw LostWall("no obstacle return within sensor range");

    const Point2 n = unit(pose.position - wall->point);  // outward wall normal
    const Point2 tangent = (side == FollowSide::Left) ? rot_cw(n) : rot_ccw(n);

    // deadbeat standoff regulation: correction angle sized so one step
    // cancels the standoff error, capped at 45 degrees
    const double gain = 1.0 / step;
    const double err = wall->range - clearance;
    const double corr = std::clamp(std::atan(gain * err), -std::numbers::pi / 4.0,
                                   std::numbers::pi / 4.0);
    const Point2 dir = std::cos(corr) * tangent - std::sin(corr) * n;
    return MotionCommand{std::atan2(dir.y, dir.x), step, false};
}

StepResult step_bug1(const NavState& state, const Pose& pose, const Scan& scan,
                     const Environment& env) {
    if (state.algorithm != Algorithm::Bug1) throw std::logic_error("state is not a Bug1 state");
    return step_common(state, pose, scan, env);
}

StepResult step_bug2(const NavState& state, const Pose& pose, const Scan& scan,
                     const Environment& env) {
    if (state.algorithm != Algorithm::Bug2) throw std::logic_error("state is not a Bug2 state");
    return step_common(state, pose, scan, env);
}

StepResult step_distbug(const NavState& state, const Pose& pose, const Scan& scan,
                        const Environment& env) {
    if (state.algorithm != Algorithm::DistBug) {
        throw std::logic_error("state is not a DistBug state");
    }
    return step_common(state, pose, scan, env);
}

StepResult step_iba(const NavState& state, const Pose& pose, const Scan& scan,
                    const Environment& env) {
    if (state.algorithm != Algorithm::IBA) throw std::logic_error("state is not an IBA state");
    return step_common(state, pose, scan, env);
}

StepResult step(const NavState& state, const Pose& pose, const Scan& scan,
                const Environment& env) {
    switch (state.algorithm) {
        case Algorithm::Bug1: return step_bug1(state, pose, scan, env);
        case Algorithm::Bug2: return step_bug2(state, pose, scan, env);
        case Algorithm::DistBug: return step_distbug(state, pose, scan, env);
        case Algorithm::IBA: return step_iba(state, pose, scan, env);
    }
    throw std::logic_error("unknown algorithm");
}

}  // namespace bugnav
