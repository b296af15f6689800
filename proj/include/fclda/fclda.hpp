#pragma once

#include <array>
#include <string>
#include <vector>

#include "fclda/dataset.hpp"
#include "fclda/fuzzy_lp.hpp"

namespace fclda {

enum class Criterion { Modified, Perceptron };

enum class ToleranceMode { PerSample, GlobalMax };

/// Degree-of-tolerance knob: theta is the fraction (e.g. 0.1 or 0.2), the
/// mode picks what it is a fraction of. The resources are all zero here, so
/// tolerances are scaled to sample magnitudes instead: PerSample uses each
/// reflected sample's own Euclidean norm, GlobalMax the largest norm.
struct ToleranceConfig {
    double theta = 0.2;
    ToleranceMode mode = ToleranceMode::PerSample;
};

struct DiscriminantModel {
    std::vector<double> v;      // (w0, w1..wp), Euclidean-normalized
    std::vector<double> v_raw;  // LP point certifying alpha
    double alpha = 0.0;
    double z_lower = 0.0;
    double z_upper = 0.0;
    Criterion criterion = Criterion::Modified;
    ToleranceConfig tolerance;
    int iterations = 1;
    bool converged = true;
    bool degenerate_objective = false;  // objective vector vanished
    std::vector<std::string> feature_names;
    std::array<std::string, 2> class_labels;
};

struct Prediction {
    int class_index = 1;  // 1 or 2
    double decision_value = 0.0;
    bool tie = false;  // g(x) == 0, assigned to class 1
};

/// Objective coefficients summing every reflected sample (no selection).
std::vector<double> objective_modified(const ReflectedDataset& rd);

/// Objective coefficients summing only the samples misclassified by v, i.e.
/// those with v . y_i < -margin_eps. Zero vector when none are.
std::vector<double> objective_perceptron(const ReflectedDataset& rd, const std::vector<double>& v,
                                         double margin_eps = 0.0);

/// Per-constraint tolerances t_k from the config.
std::vector<double> compute_tolerances(const ReflectedDataset& rd, const ToleranceConfig& cfg);

/// The fuzzy program behind fit: rows -y_k, resources 0, box 1, tolerances
/// from cfg, objective as given. Exposed so tests can evaluate memberships.
FuzzyLpProblem build_problem(const ReflectedDataset& rd, std::vector<double> objective,
                             const ToleranceConfig& cfg);

DiscriminantModel fit(const ReflectedDataset& rd, Criterion criterion, const ToleranceConfig& cfg);

Prediction predict(const DiscriminantModel& model, const std::vector<double>& x);

/// min(mu_0, min_k mu_k) at the model's LP point, rebuilding the terminal
/// objective from the model itself. Max-min optimality makes this equal the
/// reported alpha.
double alpha_certificate(const DiscriminantModel& model, const ReflectedDataset& rd);

}  // namespace fclda
