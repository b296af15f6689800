#pragma once

#include <array>
#include <vector>

#include "fclda/dataset.hpp"
#include "fclda/fclda.hpp"

namespace fclda {

/// Closed-form ordinary (Fisher) linear discriminant, the comparison
/// baseline: w proportional to S_w^-1 (mu1 - mu2) with the threshold at the
/// midpoint of the projected means.
struct FisherModel {
    std::vector<double> w;  // unit Euclidean norm
    double w0 = 0.0;
    std::array<std::vector<double>, 2> class_means;
    std::vector<std::vector<double>> pooled_scatter;
    std::array<std::string, 2> class_labels;
    std::vector<std::string> feature_names;
};

/// Requires a binary dataset (class_order of size 2). A singular pooled
/// scatter falls back to a small ridge before giving up.
FisherModel fit_fisher(const Dataset& ds);

double fisher_decision(const FisherModel& m, const std::vector<double>& x);

/// Repackages the baseline in DiscriminantModel form so the shared metrics
/// and persistence paths apply; alpha is reported as 1 (the baseline has no
/// fuzzy program behind it).
DiscriminantModel fisher_as_discriminant(const FisherModel& m);

}  // namespace fclda
