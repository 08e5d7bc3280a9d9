#include "bugnav/sim.hpp"

#include <cmath>
#include <sstream>

namespace bugnav {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::GoalReached: return "goal_reached";
        case Outcome::Unreachable: return "unreachable";
        case Outcome::StepBudgetExceeded: return "step_budget_exceeded";
        case Outcome::Stuck: return "stuck";
    }
    return "?";
}

void check_motion(const Environment& env, const Segment2& moved) {
    for (std::size_t k = 0; k < env.obstacles.size(); ++k) {
        if (segment_enters_interior(moved, env.obstacles[k])) {
            std::ostringstream os;
            os << "motion segment (" << moved.p.x << "," << moved.p.y << ")->(" << moved.q.x
               << "," << moved.q.y << ") penetrates obstacle " << k;
            throw InternalCollisionFault(os.str());
        }
    }
}

TrajectoryTrace run(const Environment& env, Algorithm algorithm, const SimParams& params) {
    if (!(params.step_size > 0.0)) throw std::invalid_argument("step_size must be > 0");
    if (params.max_steps < 1) throw std::invalid_argument("max_steps must be >= 1");
    const double tol = params.effective_goal_tolerance();
    if (tol < 0.5 * params.step_size - kGeomEps) {
        throw std::invalid_argument("goal_tolerance must be >= step_size / 2");
    }
    const double speed = params.speed > 0.0 ? params.speed : env.speed;

    NavState state = init_state(algorithm, env, params.nav_params());
    Pose pose{env.start,
              dist(env.start, env.goal) > kGeomEps
                  ? std::atan2(env.goal.y - env.start.y, env.goal.x - env.start.x)
                  : 0.0};

    TrajectoryTrace trace;
    trace.samples.push_back({0.0, pose, state.behavior, dist(pose.position, env.goal)});

    double t = 0.0;
    double best_d = trace.samples.front().d_goal;
    long since_improve = 0;

    for (long i = 0; i < params.max_steps; ++i) {
        const double d = dist(pose.position, env.goal);
        if (d <= tol) {
            trace.samples.back().behavior = Behavior::Done;
            trace.outcome = Outcome::GoalReached;
            return trace;
        }

        const Scan scan = take_scan(env, pose, params.sensor);
        StepResult res = bugnav::step(state, pose, scan, env);
        state = std::move(res.state);

        if (state.behavior == Behavior::Unreachable) {
            trace.samples.back().behavior = Behavior::Unreachable;
            trace.outcome = Outcome::Unreachable;
            return trace;
        }
        if (state.stuck) {
            trace.outcome = Outcome::Stuck;
            return trace;
        }

        const MotionCommand& cmd = res.command;
        if (cmd.step > 1e-12) {
            const Point2 next = pose.position + cmd.step * heading_vec(cmd.heading);
            check_motion(env, {pose.position, next});
            pose = Pose{next, normalize_angle(cmd.heading)};
            t += cmd.step / speed;
            trace.samples.push_back({t, pose, state.behavior, dist(next, env.goal)});
        }

        if (best_d - dist(pose.position, env.goal) > 1e-9) {
            best_d = dist(pose.position, env.goal);
            since_improve = 0;
        } else if (++since_improve > state.params.stall_window) {
            trace.outcome = Outcome::Stuck;
            return trace;
        }
    }

    trace.outcome = Outcome::StepBudgetExceeded;
    return trace;
}

PathMetrics metrics(const TrajectoryTrace& trace, const Environment&) {
    if (trace.samples.empty()) throw EmptyTrace("trace has no samples");
    PathMetrics m;
    m.outcome = trace.outcome;
    m.duration = trace.samples.back().t;
    for (std::size_t i = 1; i < trace.samples.size(); ++i) {
        const TraceSample& a = trace.samples[i - 1];
        const TraceSample& b = trace.samples[i];
        m.path_length += dist(a.pose.position, b.pose.position);
        m.smoothness += std::abs(normalize_angle(b.pose.heading - a.pose.heading));
        const bool was_following = a.behavior == Behavior::ObstacleAvoidance;
        const bool now_seeking = b.behavior == Behavior::MoveToGoal || b.behavior == Behavior::Done;
        if (was_following && now_seeking) {
            m.leave_points.push_back(a.pose.position);
        }
    }
    return m;
}

std::vector<ComparisonRow> compare(const Environment& env,
                                   const std::vector<Algorithm>& algorithms,
                                   const SimParams& params) {
    if (algorithms.empty()) throw std::invalid_argument("compare needs at least one algorithm");
    std::vector<ComparisonRow> rows;
    rows.reserve(algorithms.size());
    for (Algorithm a : algorithms) {
        const TrajectoryTrace trace = run(env, a, params);
        rows.push_back({a, metrics(trace, env)});
    }
    return rows;
}

}  // namespace bugnav
