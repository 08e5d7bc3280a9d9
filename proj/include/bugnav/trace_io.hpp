#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bugnav/sim.hpp"

namespace bugnav {

class TraceParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Trace CSV: header `t,x,y,heading,behavior,d_goal`, fixed 6-decimal
/// formatting, LF line endings. Byte-stable for identical traces.
std::string trace_to_csv(const TrajectoryTrace& trace);
void write_trace_csv(const TrajectoryTrace& trace, const std::string& path);

/// Parse a trace CSV back into samples. Throws TraceParseError on malformed
/// input.
std::vector<TraceSample> read_trace_csv(const std::string& path);

/// Comparison CSV: `algo,outcome,path_length_ft,duration_s,smoothness_rad,leave_points`.
/// Leave points are `x y` pairs joined with `;`.
std::string comparison_to_csv(const std::vector<ComparisonRow>& rows);

}  // namespace bugnav
