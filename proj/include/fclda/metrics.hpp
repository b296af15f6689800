#pragma once

#include <array>
#include <vector>

#include "fclda/dataset.hpp"
#include "fclda/fclda.hpp"

namespace fclda {

struct MarginReport {
    double nm_right = 0.0;  // class-1 noise margin
    double nm_left = 0.0;   // class-2 noise margin
    std::array<int, 2> misclassified{0, 0};
    std::vector<double> per_sample_margins;  // g(x_i), dataset order
    double alpha = 0.0;
    bool degenerate = false;  // a margin was too close to zero to invert
};

/// Harmonic noise margin 1 / sum_i 1/(v . (1, x_i)) over one class's samples,
/// without sign reflection for either class. Uses the normalized v by
/// default; raw switches to the LP point. Returns 0 and sets *degenerate
/// when any margin is below 1e-12 in magnitude.
double noise_margin(const DiscriminantModel& model, const Dataset& ds, int class_index,
                    bool raw = false, bool* degenerate = nullptr);

/// Misclassified sample counts per class index {1, 2}.
std::array<int, 2> misclassification_count(const DiscriminantModel& model, const Dataset& ds);

MarginReport margin_report(const DiscriminantModel& model, const Dataset& ds, bool raw = false);

}  // namespace fclda
