#include "fclda/fisher.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fclda {

namespace {

// Cholesky solve of the symmetric positive-definite system a x = b.
// Returns false when a pivot degenerates.
bool cholesky_solve(std::vector<std::vector<double>> a, std::vector<double> b,
                    std::vector<double>& x) {
    const std::size_t n = b.size();
    for (std::size_t j = 0; j < n; ++j) {
        double diag = a[j][j];
        for (std::size_t k = 0; k < j; ++k) diag -= a[j][k] * a[j][k];
        if (diag <= 0.0 || !std::isfinite(diag)) return false;
        a[j][j] = std::sqrt(diag);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = a[i][j];
            for (std::size_t k = 0; k < j; ++k) s -= a[i][k] * a[j][k];
            a[i][j] = s / a[j][j];
        }
    }
    // forward: L y = b
    for (std::size_t i = 0; i < n; ++i) {
        double s = b[i];
        for (std::size_t k = 0; k < i; ++k) s -= a[i][k] * b[k];
        b[i] = s / a[i][i];
    }
    // backward: L^T x = y
    x.assign(n, 0.0);
    for (std::size_t i = n; i-- > 0;) {
        double s = b[i];
        for (std::size_t k = i + 1; k < n; ++k) s -= a[k][i] * x[k];
        x[i] = s / a[i][i];
    }
    return true;
}

}  // namespace

FisherModel fit_fisher(const Dataset& ds) {
    if (ds.class_order.size() != 2)
        throw std::invalid_argument("fit_fisher: dataset must have exactly two classes");
    const std::size_t p = ds.n_features();

    FisherModel m;
    m.class_labels = {ds.class_order[0], ds.class_order[1]};
    m.feature_names = ds.feature_names;

    std::array<std::vector<double>, 2> mean{std::vector<double>(p, 0.0),
                                            std::vector<double>(p, 0.0)};
    std::array<std::size_t, 2> count{0, 0};
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const int c = ds.labels[i] == ds.class_order[0] ? 0 : 1;
        ++count[c];
        for (std::size_t j = 0; j < p; ++j) mean[c][j] += ds.samples[i][j];
    }
    if (count[0] == 0 || count[1] == 0)
        throw std::invalid_argument("fit_fisher: a class has no samples");
    for (int c = 0; c < 2; ++c)
        for (std::size_t j = 0; j < p; ++j) mean[c][j] /= static_cast<double>(count[c]);

    std::vector<std::vector<double>> scatter(p, std::vector<double>(p, 0.0));
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const int c = ds.labels[i] == ds.class_order[0] ? 0 : 1;
        for (std::size_t a = 0; a < p; ++a) {
            const double da = ds.samples[i][a] - mean[c][a];
            for (std::size_t b = 0; b < p; ++b)
                scatter[a][b] += da * (ds.samples[i][b] - mean[c][b]);
        }
    }
    m.class_means = mean;
    m.pooled_scatter = scatter;

    std::vector<double> delta(p);
    for (std::size_t j = 0; j < p; ++j) delta[j] = mean[0][j] - mean[1][j];

    std::vector<double> w;
    if (!cholesky_solve(scatter, delta, w)) {
        double trace = 0.0;
        for (std::size_t j = 0; j < p; ++j) trace += scatter[j][j];
        // absolute floor keeps an exactly-zero scatter solvable
        const double ridge = 1e-8 * trace / static_cast<double>(p) + 1e-12;
        auto ridged = scatter;
        for (std::size_t j = 0; j < p; ++j) ridged[j][j] += ridge;
        if (!cholesky_solve(ridged, delta, w))
            throw std::runtime_error("fit_fisher: pooled scatter singular even with ridge");
    }

    double norm = 0.0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-300) throw std::runtime_error("fit_fisher: degenerate direction");
    for (double& x : w) x /= norm;

    double w0 = 0.0;
    for (std::size_t j = 0; j < p; ++j) w0 -= w[j] * 0.5 * (mean[0][j] + mean[1][j]);
    m.w = std::move(w);
    m.w0 = w0;
    return m;
}

double fisher_decision(const FisherModel& m, const std::vector<double>& x) {
    if (x.size() != m.w.size())
        throw std::invalid_argument("fisher_decision: feature dimension mismatch");
    double g = m.w0;
    for (std::size_t j = 0; j < x.size(); ++j) g += m.w[j] * x[j];
    return g;
}

DiscriminantModel fisher_as_discriminant(const FisherModel& m) {
    DiscriminantModel d;
    d.v_raw.reserve(m.w.size() + 1);
    d.v_raw.push_back(m.w0);
    for (double x : m.w) d.v_raw.push_back(x);
    double norm = 0.0;
    for (double x : d.v_raw) norm += x * x;
    norm = std::sqrt(norm);
    d.v.resize(d.v_raw.size());
    for (std::size_t j = 0; j < d.v_raw.size(); ++j) d.v[j] = d.v_raw[j] / norm;
    d.alpha = std::numeric_limits<double>::quiet_NaN();  // no fuzzy program behind it
    d.class_labels = m.class_labels;
    d.feature_names = m.feature_names;
    return d;
}

}  // namespace fclda
