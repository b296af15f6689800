#pragma once

#include <string>

#include "fclda/dataset.hpp"
#include "fclda/fclda.hpp"

namespace fclda {

struct PlotResult {
    std::string svg;
    std::string csv;           // line endpoints plus every point
    bool boundary_drawn = false;
};

/// Scatter of a 2-D binary dataset plus the decision line g(x) = 0 clipped to
/// the data bounding box. Class-1 samples render as circles, class-2 as
/// squares. When the boundary misses the box the points are still rendered
/// and boundary_drawn stays false.
PlotResult render_boundary_plot(const DiscriminantModel& model, const Dataset& ds);

/// Renders and writes out_path (SVG) and the companion CSV next to it
/// (same path with ".csv" appended).
PlotResult write_boundary_plot(const DiscriminantModel& model, const Dataset& ds,
                               const std::string& out_path);

}  // namespace fclda
