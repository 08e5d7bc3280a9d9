#include "bugnav/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bugnav {

namespace {

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const Environment& env, const std::vector<TracePlot>& traces) {
    const double world_w = env.bounds.max.x - env.bounds.min.x;
    const double world_h = env.bounds.max.y - env.bounds.min.y;
    const double pad = 40.0;
    const double plot_w = 800.0;
    const double scale = plot_w / world_w;
    const double plot_h = world_h * scale;
    const double legend_h = 24.0 * (static_cast<double>(traces.size()) + 1.0);
    const double width = plot_w + 2.0 * pad;
    const double height = plot_h + 2.0 * pad + legend_h;

    // world -> screen, y flipped
    const auto sx = [&](double x) { return pad + (x - env.bounds.min.x) * scale; };
    const auto sy = [&](double y) { return pad + (env.bounds.max.y - y) * scale; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    out << "  <rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
        << "\" fill=\"#ffffff\"/>\n";
    out << "  <rect x=\"" << num(sx(env.bounds.min.x)) << "\" y=\"" << num(sy(env.bounds.max.y))
        << "\" width=\"" << num(world_w * scale) << "\" height=\"" << num(world_h * scale)
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";

    for (const Polygon& poly : env.obstacles) {
        out << "  <polygon points=\"";
        for (std::size_t i = 0; i < poly.size(); ++i) {
            if (i) out << ' ';
            out << num(sx(poly.vertices()[i].x)) << ',' << num(sy(poly.vertices()[i].y));
        }
        out << "\" fill=\"#b0b6bd\" stroke=\"#5b6470\" stroke-width=\"1\"/>\n";
    }

    for (std::size_t k = 0; k < traces.size(); ++k) {
        const TracePlot& tp = traces[k];
        const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "  <polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < tp.samples.size(); ++i) {
            if (i) out << ' ';
            out << num(sx(tp.samples[i].pose.position.x)) << ','
                << num(sy(tp.samples[i].pose.position.y));
        }
        out << "\"/>\n";
        for (std::size_t i = 1; i < tp.samples.size(); ++i) {
            const bool leaving = tp.samples[i - 1].behavior == Behavior::ObstacleAvoidance &&
                                 (tp.samples[i].behavior == Behavior::MoveToGoal ||
                                  tp.samples[i].behavior == Behavior::Done);
            if (leaving) {
                out << "  <circle cx=\"" << num(sx(tp.samples[i - 1].pose.position.x)) << "\" cy=\""
                    << num(sy(tp.samples[i - 1].pose.position.y))
                    << "\" r=\"4\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
            }
        }
    }

    out << "  <circle cx=\"" << num(sx(env.start.x)) << "\" cy=\"" << num(sy(env.start.y))
        << "\" r=\"5\" fill=\"#2ca02c\"/>\n";
    out << "  <circle cx=\"" << num(sx(env.goal.x)) << "\" cy=\"" << num(sy(env.goal.y))
        << "\" r=\"5\" fill=\"#d62728\"/>\n";

    double ly = plot_h + 2.0 * pad;
    out << "  <text x=\"" << num(pad) << "\" y=\"" << num(ly) << "\" font-family=\"monospace\" "
        << "font-size=\"14\">" << escape_xml(env.name) << "</text>\n";
    for (std::size_t k = 0; k < traces.size(); ++k) {
        ly += 24.0;
        const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
        out << "  <rect x=\"" << num(pad) << "\" y=\"" << num(ly - 10.0)
            << "\" width=\"24\" height=\"4\" fill=\"" << color << "\"/>\n";
        out << "  <text x=\"" << num(pad + 32.0) << "\" y=\"" << num(ly)
            << "\" font-family=\"monospace\" font-size=\"14\">" << escape_xml(traces[k].label)
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void write_svg(const Environment& env, const std::vector<TracePlot>& traces,
               const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write svg file: " + path);
    out << render_svg(env, traces);
}

}  // namespace bugnav
