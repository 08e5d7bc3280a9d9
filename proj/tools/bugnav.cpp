// bugnav: run and compare reactive bug-family navigators on 2D scenarios,
// dump trajectory traces as CSV and render SVG figures.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bugnav/nav.hpp"
#include "bugnav/sim.hpp"
#include "bugnav/svg.hpp"
#include "bugnav/trace_io.hpp"
#include "bugnav/world.hpp"

namespace {

using namespace bugnav;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnreachable = 2;
constexpr int kExitNoProgress = 3;

struct CommonOpts {
    std::string scenario;
    double step = 0.05;
    double speed = 0.0;
    double sensor_range = 20.0;
    int beams = 181;
    double fov = 2.0 * std::numbers::pi;
    double clearance = 0.02;
    long max_steps = 1000000;
    std::string distbug_leave = "guarded";
    std::string visibility_limit = "unlimited";
};

void add_common_options(CLI::App* cmd, CommonOpts& o, bool needs_scenario = true) {
    auto* sc = cmd->add_option("--scenario", o.scenario, "Scenario file path or builtin:NAME");
    if (needs_scenario) sc->required();
    cmd->add_option("--step", o.step, "Step size, feet");
    cmd->add_option("--speed", o.speed, "Speed override, feet/second");
    cmd->add_option("--sensor-range", o.sensor_range, "Sensor max range, feet");
    cmd->add_option("--beams", o.beams, "Sensor beam count");
    cmd->add_option("--fov", o.fov, "Sensor field of view, radians");
    cmd->add_option("--clearance", o.clearance, "Boundary-following standoff, feet");
    cmd->add_option("--max-steps", o.max_steps, "Step budget")->envname("BUGNAV_MAX_STEPS");
    cmd->add_option("--distbug-leave", o.distbug_leave, "DistBug leave test: guarded|verbatim")
        ->check(CLI::IsMember({"guarded", "verbatim"}));
    cmd->add_option("--visibility-limit", o.visibility_limit,
                    "IBA visibility horizon: sensor|unlimited")
        ->check(CLI::IsMember({"sensor", "unlimited"}));
}

SimParams to_sim_params(const CommonOpts& o) {
    SimParams p;
    p.step_size = o.step;
    p.speed = o.speed;
    p.max_steps = o.max_steps;
    p.sensor.max_range = o.sensor_range;
    p.sensor.beam_count = o.beams;
    p.sensor.fov = o.fov;
    p.clearance = o.clearance;
    p.distbug_verbatim = o.distbug_leave == "verbatim";
    p.visibility_limit_sensor = o.visibility_limit == "sensor";
    return p;
}

Environment resolve_scenario(const std::string& locator) {
    constexpr std::string_view prefix = "builtin:";
    if (locator.rfind(prefix, 0) == 0) {
        const std::string name = locator.substr(prefix.size());
        try {
            return builtin_scenario(name);
        } catch (const std::out_of_range&) {
            std::string names;
            for (const Environment& env : builtin_scenarios()) {
                if (!names.empty()) names += ", ";
                names += env.name;
            }
            throw std::runtime_error("unknown builtin scenario '" + name + "' (valid: " + names +
                                     ")");
        }
    }
    return load_scenario_file(locator);
}

Algorithm resolve_algorithm(const std::string& name) {
    if (auto a = parse_algorithm(name)) return *a;
    throw std::runtime_error("unknown algorithm '" + name +
                             "' (valid: bug1, bug2, distbug, iba)");
}

int outcome_exit_code(Outcome o) {
    switch (o) {
        case Outcome::GoalReached: return kExitOk;
        case Outcome::Unreachable: return kExitUnreachable;
        case Outcome::StepBudgetExceeded:
        case Outcome::Stuck: return kExitNoProgress;
    }
    return kExitError;
}

std::string machine_line(const PathMetrics& m, std::size_t steps) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "outcome=%s length_ft=%.6f duration_s=%.6f smoothness_rad=%.6f steps=%zu "
                  "leaves=%zu",
                  outcome_name(m.outcome), m.path_length, m.duration, m.smoothness, steps,
                  m.leave_points.size());
    return buf;
}

int cmd_run(const CommonOpts& opts, const std::vector<std::string>& algo_names,
            const std::string& out_path, const std::string& svg_path) {
    if (algo_names.size() != 1) {
        std::cerr << "error: run takes exactly one --algo\n";
        return kExitError;
    }
    const Environment env = resolve_scenario(opts.scenario);
    const Algorithm algo = resolve_algorithm(algo_names.front());
    const SimParams params = to_sim_params(opts);

    const TrajectoryTrace trace = run(env, algo, params);
    const PathMetrics m = metrics(trace, env);

    if (!out_path.empty()) write_trace_csv(trace, out_path);
    if (!svg_path.empty()) {
        write_svg(env, {{algorithm_name(algo), trace.samples}}, svg_path);
    }

    std::cout << machine_line(m, trace.samples.size()) << "\n\n";
    std::cout << "scenario:    " << env.name << "\n";
    std::cout << "algorithm:   " << algorithm_name(algo) << "\n";
    std::cout << "outcome:     " << outcome_name(m.outcome) << "\n";
    char buf[128];
    std::snprintf(buf, sizeof(buf), "path length: %.3f ft\n", m.path_length);
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "duration:    %.3f s\n", m.duration);
    std::cout << buf;
    std::snprintf(buf, sizeof(buf), "smoothness:  %.3f rad\n", m.smoothness);
    std::cout << buf;
    for (const Point2& lp : m.leave_points) {
        std::snprintf(buf, sizeof(buf), "leave point: (%.3f, %.3f)\n", lp.x, lp.y);
        std::cout << buf;
    }
    if (!out_path.empty()) std::cout << "trace:       " << out_path << "\n";
    if (!svg_path.empty()) std::cout << "figure:      " << svg_path << "\n";
    return outcome_exit_code(m.outcome);
}

int cmd_compare(const CommonOpts& opts, const std::string& algos_csv, const std::string& out_path,
                const std::string& svg_path) {
    std::vector<Algorithm> algos;
    std::vector<std::string> names;
    std::stringstream ss(algos_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        algos.push_back(resolve_algorithm(item));
        names.push_back(item);
    }
    if (algos.size() < 2) {
        std::cerr << "error: compare needs at least two algorithms (--algos a,b,...)\n";
        return kExitError;
    }

    const Environment env = resolve_scenario(opts.scenario);
    const SimParams params = to_sim_params(opts);

    std::vector<ComparisonRow> rows;
    std::vector<TracePlot> plots;
    for (std::size_t i = 0; i < algos.size(); ++i) {
        const TrajectoryTrace trace = run(env, algos[i], params);
        rows.push_back({algos[i], metrics(trace, env)});
        plots.push_back({names[i], trace.samples});
    }

    const std::string csv = comparison_to_csv(rows);
    std::cout << csv;
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write comparison file: " + out_path);
        out << csv;
    }
    if (!svg_path.empty()) write_svg(env, plots, svg_path);

    int exit_code = kExitOk;
    for (const ComparisonRow& row : rows) {
        exit_code = std::max(exit_code, outcome_exit_code(row.metrics.outcome));
    }
    return exit_code;
}

int cmd_render(const std::string& scenario, const std::vector<std::string>& trace_paths,
               const std::string& svg_path) {
    const Environment env = resolve_scenario(scenario);
    std::vector<TracePlot> plots;
    for (const std::string& path : trace_paths) {
        plots.push_back({std::filesystem::path(path).stem().string(), read_trace_csv(path)});
    }
    write_svg(env, plots, svg_path);
    std::cout << "wrote " << svg_path << " (" << plots.size() << " trace"
              << (plots.size() == 1 ? "" : "s") << ")\n";
    return kExitOk;
}

int cmd_scenarios() {
    for (const Environment& env : builtin_scenarios()) std::cout << env.name << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"2D navigation benchmark for bug-family obstacle avoidance"};
    app.require_subcommand(1);

    CommonOpts run_opts;
    std::vector<std::string> run_algos;
    std::string run_out, run_svg;
    CLI::App* run_cmd = app.add_subcommand("run", "Run one algorithm on a scenario");
    add_common_options(run_cmd, run_opts);
    run_cmd->add_option("--algo", run_algos, "Algorithm: bug1|bug2|distbug|iba")->required();
    run_cmd->add_option("--out", run_out, "Trace CSV output path");
    run_cmd->add_option("--svg", run_svg, "SVG figure output path");

    CommonOpts cmp_opts;
    std::string cmp_algos, cmp_out, cmp_svg;
    CLI::App* cmp_cmd = app.add_subcommand("compare", "Run several algorithms on one scenario");
    add_common_options(cmp_cmd, cmp_opts);
    cmp_cmd->add_option("--algos", cmp_algos, "Comma-separated algorithms")->required();
    cmp_cmd->add_option("--out", cmp_out, "Comparison CSV output path");
    cmp_cmd->add_option("--svg", cmp_svg, "SVG figure output path");

    std::string render_scenario_arg, render_svg_path;
    std::vector<std::string> render_traces;
    CLI::App* render_cmd = app.add_subcommand("render", "Render trace CSVs over a scenario");
    render_cmd->add_option("--scenario", render_scenario_arg, "Scenario file path or builtin:NAME")
        ->required();
    render_cmd->add_option("--trace", render_traces, "Trace CSV path (repeatable)")->required();
    render_cmd->add_option("--svg", render_svg_path, "SVG output path")->required();

    app.add_subcommand("scenarios", "List builtin scenarios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_opts, run_algos, run_out, run_svg);
        if (cmp_cmd->parsed()) return cmd_compare(cmp_opts, cmp_algos, cmp_out, cmp_svg);
        if (render_cmd->parsed()) {
            return cmd_render(render_scenario_arg, render_traces, render_svg_path);
        }
        return cmd_scenarios();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
