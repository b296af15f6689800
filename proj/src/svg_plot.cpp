#include "fclda/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "fclda/log.hpp"

namespace fclda {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kPad = 40.0;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Mapper {
    double xmin, xmax, ymin, ymax;

    double sx(double x) const { return kPad + (x - xmin) / (xmax - xmin) * (kWidth - 2 * kPad); }
    // SVG y grows downward
    double sy(double y) const {
        return kHeight - kPad - (y - ymin) / (ymax - ymin) * (kHeight - 2 * kPad);
    }
};

// Intersections of w0 + w.x = 0 with the bounding-box edges.
std::vector<std::array<double, 2>> clip_line(const std::vector<double>& v, double xmin,
                                             double xmax, double ymin, double ymax) {
    const double w0 = v[0], wx = v[1], wy = v[2];
    std::vector<std::array<double, 2>> pts;
    auto push = [&](double x, double y) {
        for (const auto& p : pts)
            if (std::abs(p[0] - x) < 1e-9 && std::abs(p[1] - y) < 1e-9) return;
        pts.push_back({x, y});
    };
    if (std::abs(wy) > 1e-15) {
        for (double x : {xmin, xmax}) {
            const double y = -(w0 + wx * x) / wy;
            if (y >= ymin - 1e-9 && y <= ymax + 1e-9) push(x, std::clamp(y, ymin, ymax));
        }
    }
    if (std::abs(wx) > 1e-15) {
        for (double y : {ymin, ymax}) {
            const double x = -(w0 + wy * y) / wx;
            if (x >= xmin - 1e-9 && x <= xmax + 1e-9) push(std::clamp(x, xmin, xmax), y);
        }
    }
    return pts;
}

}  // namespace

PlotResult render_boundary_plot(const DiscriminantModel& model, const Dataset& ds) {
    if (ds.n_features() != 2)
        throw std::invalid_argument(
            "plot: only 2-D feature spaces can be drawn as a cross-section; dataset has " +
            std::to_string(ds.n_features()) + " features");
    if (model.v.size() != 3) throw std::invalid_argument("plot: model is not 2-D");

    double xmin = ds.samples[0][0], xmax = xmin, ymin = ds.samples[0][1], ymax = ymin;
    for (const auto& s : ds.samples) {
        xmin = std::min(xmin, s[0]);
        xmax = std::max(xmax, s[0]);
        ymin = std::min(ymin, s[1]);
        ymax = std::max(ymax, s[1]);
    }
    if (xmax - xmin < 1e-12) xmax = xmin + 1.0;
    if (ymax - ymin < 1e-12) ymax = ymin + 1.0;

    const Mapper map{xmin, xmax, ymin, ymax};
    auto segment = clip_line(model.v, xmin, xmax, ymin, ymax);

    PlotResult out;
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "  <rect x=\"" << fmt(kPad) << "\" y=\"" << fmt(kPad) << "\" width=\""
        << fmt(kWidth - 2 * kPad) << "\" height=\"" << fmt(kHeight - 2 * kPad)
        << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";

    svg << "  <g>\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const double cx = map.sx(ds.samples[i][0]);
        const double cy = map.sy(ds.samples[i][1]);
        if (ds.labels[i] == ds.class_order[0]) {
            svg << "    <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
                << "\" r=\"3\" fill=\"#1f77b4\" fill-opacity=\"0.8\"/>\n";
        } else {
            svg << "    <rect x=\"" << fmt(cx - 3) << "\" y=\"" << fmt(cy - 3)
                << "\" width=\"6\" height=\"6\" fill=\"#d62728\" fill-opacity=\"0.8\"/>\n";
        }
    }
    svg << "  </g>\n";

    std::ostringstream csv;
    csv << "kind," << ds.feature_names[0] << "," << ds.feature_names[1] << ",label\n";
    if (segment.size() >= 2) {
        out.boundary_drawn = true;
        svg << "  <line x1=\"" << fmt(map.sx(segment[0][0])) << "\" y1=\""
            << fmt(map.sy(segment[0][1])) << "\" x2=\"" << fmt(map.sx(segment[1][0]))
            << "\" y2=\"" << fmt(map.sy(segment[1][1]))
            << "\" stroke=\"#222\" stroke-width=\"2\"/>\n";
        for (int i = 0; i < 2; ++i) {
            char line[128];
            std::snprintf(line, sizeof line, "boundary,%.17g,%.17g,\n", segment[i][0],
                          segment[i][1]);
            csv << line;
        }
    } else {
        log::info("plot: decision boundary does not cross the data bounding box");
        svg << "  <!-- decision boundary outside the data bounding box -->\n";
    }
    svg << "</svg>\n";

    for (std::size_t i = 0; i < ds.size(); ++i) {
        char line[160];
        std::snprintf(line, sizeof line, "point,%.17g,%.17g,%s\n", ds.samples[i][0],
                      ds.samples[i][1], ds.labels[i].c_str());
        csv << line;
    }

    out.svg = svg.str();
    out.csv = csv.str();
    return out;
}

PlotResult write_boundary_plot(const DiscriminantModel& model, const Dataset& ds,
                               const std::string& out_path) {
    PlotResult res = render_boundary_plot(model, ds);
    std::ofstream svg(out_path, std::ios::binary);
    if (!svg) throw std::runtime_error("cannot open file for writing: " + out_path);
    svg << res.svg;
    std::ofstream csv(out_path + ".csv", std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open file for writing: " + out_path + ".csv");
    csv << res.csv;
    return res;
}

}  // namespace fclda
