#include "fclda/model_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace fclda {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json number_or_null(double v) {
    if (std::isnan(v)) return nullptr;
    return v;
}

ordered_json metrics_block(const MarginReport& rep) {
    ordered_json j;
    j["nm_right"] = rep.nm_right;
    j["nm_left"] = rep.nm_left;
    j["misclassified_class1"] = rep.misclassified[0];
    j["misclassified_class2"] = rep.misclassified[1];
    j["degenerate_margin"] = rep.degenerate;
    j["per_sample_margins"] = rep.per_sample_margins;
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string criterion_name(Criterion c) {
    return c == Criterion::Modified ? "modified" : "perceptron";
}

std::string tolerance_mode_name(ToleranceMode m) {
    return m == ToleranceMode::PerSample ? "per-sample" : "global-max";
}

ToleranceMode tolerance_mode_from_name(const std::string& name) {
    if (name == "per-sample") return ToleranceMode::PerSample;
    if (name == "global-max") return ToleranceMode::GlobalMax;
    throw std::invalid_argument("unknown tolerance mode: " + name);
}

std::string model_document(const DiscriminantModel& model,
                           const std::optional<MarginReport>& metrics) {
    ordered_json j;
    j["format"] = "fclda-model/1";
    j["criterion"] = criterion_name(model.criterion);
    j["theta"] = model.tolerance.theta;
    j["tolerance_mode"] = tolerance_mode_name(model.tolerance.mode);
    j["alpha"] = number_or_null(model.alpha);
    j["z_lower"] = model.z_lower;
    j["z_upper"] = model.z_upper;
    j["iterations"] = model.iterations;
    j["converged"] = model.converged;
    j["degenerate_objective"] = model.degenerate_objective;
    j["v"] = model.v;
    j["v_raw"] = model.v_raw;
    j["feature_names"] = model.feature_names;
    j["classes"] = {model.class_labels[0], model.class_labels[1]};
    if (metrics) j["metrics"] = metrics_block(*metrics);
    return dump(j);
}

std::string fisher_document(const FisherModel& model,
                            const std::optional<MarginReport>& metrics) {
    const DiscriminantModel d = fisher_as_discriminant(model);
    ordered_json j;
    j["format"] = "fclda-model/1";
    j["criterion"] = "olda";
    j["theta"] = nullptr;
    j["tolerance_mode"] = nullptr;
    j["alpha"] = nullptr;
    j["z_lower"] = nullptr;
    j["z_upper"] = nullptr;
    j["iterations"] = 1;
    j["converged"] = true;
    j["degenerate_objective"] = false;
    j["v"] = d.v;
    j["v_raw"] = d.v_raw;
    j["feature_names"] = model.feature_names;
    j["classes"] = {model.class_labels[0], model.class_labels[1]};
    if (metrics) j["metrics"] = metrics_block(*metrics);
    return dump(j);
}

void save_document(const std::string& document, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << document;
    if (!out) throw std::runtime_error("failed writing: " + path);
}

LoadedModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("cannot parse model file " + path + ": " + e.what());
    }

    LoadedModel out;
    out.criterion_tag = j.at("criterion").get<std::string>();
    DiscriminantModel& m = out.model;
    if (out.criterion_tag == "perceptron") m.criterion = Criterion::Perceptron;
    if (!j.at("theta").is_null()) m.tolerance.theta = j.at("theta").get<double>();
    if (!j.at("tolerance_mode").is_null())
        m.tolerance.mode = tolerance_mode_from_name(j.at("tolerance_mode").get<std::string>());
    m.alpha = j.at("alpha").is_null() ? std::nan("") : j.at("alpha").get<double>();
    m.z_lower = j.at("z_lower").is_null() ? 0.0 : j.at("z_lower").get<double>();
    m.z_upper = j.at("z_upper").is_null() ? 0.0 : j.at("z_upper").get<double>();
    m.iterations = j.at("iterations").get<int>();
    m.converged = j.at("converged").get<bool>();
    m.degenerate_objective = j.at("degenerate_objective").get<bool>();
    m.v = j.at("v").get<std::vector<double>>();
    m.v_raw = j.at("v_raw").get<std::vector<double>>();
    m.feature_names = j.at("feature_names").get<std::vector<std::string>>();
    const auto classes = j.at("classes").get<std::vector<std::string>>();
    if (classes.size() != 2) throw std::runtime_error("model file must list exactly two classes");
    m.class_labels = {classes[0], classes[1]};
    return out;
}

}  // namespace fclda
