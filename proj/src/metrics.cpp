#include "fclda/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fclda {

namespace {

int class_index_of(const DiscriminantModel& model, const std::string& label) {
    if (label == model.class_labels[0]) return 1;
    if (label == model.class_labels[1]) return 2;
    throw std::runtime_error("metrics: label '" + label + "' unknown to the model");
}

double decision_value(const std::vector<double>& v, const std::vector<double>& x) {
    double g = v[0];
    for (std::size_t j = 0; j < x.size(); ++j) g += v[j + 1] * x[j];
    return g;
}

}  // namespace

double noise_margin(const DiscriminantModel& model, const Dataset& ds, int class_index, bool raw,
                    bool* degenerate) {
    if (class_index != 1 && class_index != 2)
        throw std::invalid_argument("noise_margin: class index must be 1 or 2");
    const std::vector<double>& v = raw ? model.v_raw : model.v;
    if (degenerate) *degenerate = false;

    double recip_sum = 0.0;
    std::size_t count = 0;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        if (class_index_of(model, ds.labels[i]) != class_index) continue;
        ++count;
        const double margin = decision_value(v, ds.samples[i]);
        if (std::abs(margin) < 1e-12) {
            if (degenerate) *degenerate = true;
            return 0.0;
        }
        recip_sum += 1.0 / margin;
    }
    if (count == 0) throw std::runtime_error("noise_margin: class has no samples");
    if (std::abs(recip_sum) < 1e-300) {
        if (degenerate) *degenerate = true;
        return 0.0;
    }
    return 1.0 / recip_sum;
}

std::array<int, 2> misclassification_count(const DiscriminantModel& model, const Dataset& ds) {
    if (ds.n_features() + 1 != model.v.size())
        throw std::invalid_argument("misclassification_count: feature dimension mismatch");
    std::array<int, 2> counts{0, 0};
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const int truth = class_index_of(model, ds.labels[i]);
        if (predict(model, ds.samples[i]).class_index != truth) ++counts[truth - 1];
    }
    return counts;
}

MarginReport margin_report(const DiscriminantModel& model, const Dataset& ds, bool raw) {
    MarginReport rep;
    rep.alpha = model.alpha;
    bool deg_r = false, deg_l = false;
    rep.nm_right = noise_margin(model, ds, 1, raw, &deg_r);
    rep.nm_left = noise_margin(model, ds, 2, raw, &deg_l);
    rep.degenerate = deg_r || deg_l;
    rep.misclassified = misclassification_count(model, ds);
    const std::vector<double>& v = raw ? model.v_raw : model.v;
    rep.per_sample_margins.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i)
        rep.per_sample_margins.push_back(decision_value(v, ds.samples[i]));
    return rep;
}

}  // namespace fclda
