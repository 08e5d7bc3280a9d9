#include "bugnav/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace bugnav {

namespace {

constexpr char kHeader[] = "t,x,y,heading,behavior,d_goal";

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    return out;
}

double parse_number(const std::string& s, int line_no) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw TraceParseError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
    }
    if (used != s.size()) {
        throw TraceParseError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
    }
    return v;
}

}  // namespace

std::string trace_to_csv(const TrajectoryTrace& trace) {
    std::string out = kHeader;
    out += '\n';
    for (const TraceSample& s : trace.samples) {
        out += fixed6(s.t);
        out += ',';
        out += fixed6(s.pose.position.x);
        out += ',';
        out += fixed6(s.pose.position.y);
        out += ',';
        out += fixed6(s.pose.heading);
        out += ',';
        out += behavior_name(s.behavior);
        out += ',';
        out += fixed6(s.d_goal);
        out += '\n';
    }
    return out;
}

void write_trace_csv(const TrajectoryTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write trace file: " + path);
    out << trace_to_csv(trace);
}

std::vector<TraceSample> read_trace_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw TraceParseError("cannot open trace file: " + path);
    std::string line;
    if (!std::getline(in, line) || line != kHeader) {
        throw TraceParseError("missing or wrong trace header in " + path);
    }
    std::vector<TraceSample> samples;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 6) {
            throw TraceParseError("line " + std::to_string(line_no) + ": expected 6 fields");
        }
        TraceSample s;
        s.t = parse_number(fields[0], line_no);
        s.pose.position.x = parse_number(fields[1], line_no);
        s.pose.position.y = parse_number(fields[2], line_no);
        s.pose.heading = parse_number(fields[3], line_no);
        const auto b = parse_behavior(fields[4]);
        if (!b) {
            throw TraceParseError("line " + std::to_string(line_no) + ": unknown behavior '" +
                                  fields[4] + "'");
        }
        s.behavior = *b;
        s.d_goal = parse_number(fields[5], line_no);
        samples.push_back(s);
    }
    return samples;
}

std::string comparison_to_csv(const std::vector<ComparisonRow>& rows) {
    std::string out = "algo,outcome,path_length_ft,duration_s,smoothness_rad,leave_points\n";
    for (const ComparisonRow& row : rows) {
        out += algorithm_name(row.algorithm);
        out += ',';
        out += outcome_name(row.metrics.outcome);
        out += ',';
        out += fixed6(row.metrics.path_length);
        out += ',';
        out += fixed6(row.metrics.duration);
        out += ',';
        out += fixed6(row.metrics.smoothness);
        out += ',';
        for (std::size_t i = 0; i < row.metrics.leave_points.size(); ++i) {
            if (i) out += ';';
            out += fixed6(row.metrics.leave_points[i].x);
            out += ' ';
            out += fixed6(row.metrics.leave_points[i].y);
        }
        out += '\n';
    }
    return out;
}

}  // namespace bugnav
