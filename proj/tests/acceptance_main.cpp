// Acceptance suite: one line per criterion, each pinned to its stated
// tolerance. Exits nonzero when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fclda/fclda.hpp"
#include "fclda/fisher.hpp"
#include "fclda/iris.hpp"
#include "fclda/metrics.hpp"

using namespace fclda;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d [%s] %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct BracketLog {
    int checked = 0;
    bool ordered = true;
};
BracketLog g_brackets;

void log_bracket(double z0, double z1) {
    ++g_brackets.checked;
    if (!(z0 <= z1 + 1e-9 * (1.0 + std::abs(z1)))) g_brackets.ordered = false;
}

LinearProgram random_lp(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dd(1, 4), dm(0, 8);
    std::uniform_real_distribution<double> coef(-5.0, 5.0);
    const int d = dd(rng), m = dm(rng);
    LinearProgram lp;
    lp.objective.resize(d);
    for (auto& v : lp.objective) v = coef(rng);
    lp.rows.assign(m, std::vector<double>(d));
    lp.rhs.resize(m);
    for (int i = 0; i < m; ++i) {
        for (auto& v : lp.rows[i]) v = coef(rng);
        lp.rhs[i] = coef(rng);
    }
    lp.lower.resize(d);
    lp.upper.resize(d);
    for (int j = 0; j < d; ++j) {
        const double a = coef(rng), b = coef(rng);
        lp.lower[j] = std::min(a, b);
        lp.upper[j] = std::max(a, b);
    }
    return lp;
}

struct IrisRun {
    DiscriminantModel model;
    MarginReport report;
};

}  // namespace

int main() {
    const Dataset pair = select_binary(iris_dataset(), "versicolor", "virginica",
                                       {"sepal_width", "petal_width"});
    const ReflectedDataset rd = augment_reflect(pair);

    // --- train the four FC-LDA models used by criteria 1-3 and 6 ---
    const auto t_fit = std::chrono::steady_clock::now();
    IrisRun mod10, mod20, perc10, perc20;
    {
        mod10.model = fit(rd, Criterion::Modified, {0.1, ToleranceMode::PerSample});
        mod20.model = fit(rd, Criterion::Modified, {0.2, ToleranceMode::PerSample});
        const double t_mod = seconds_since(t_fit);
        const auto t_perc = std::chrono::steady_clock::now();
        perc10.model = fit(rd, Criterion::Perceptron, {0.1, ToleranceMode::PerSample});
        perc20.model = fit(rd, Criterion::Perceptron, {0.2, ToleranceMode::PerSample});
        const double t_perc_s = seconds_since(t_perc);
        for (IrisRun* r : {&mod10, &mod20, &perc10, &perc20}) {
            r->report = margin_report(r->model, pair);
            log_bracket(r->model.z_lower, r->model.z_upper);
        }

        // criterion 1: perceptron alpha is exactly 1 at both tolerance degrees
        const bool alpha_ok = perc10.model.alpha == 1.0 && perc20.model.alpha == 1.0;
        const bool time_ok = t_perc_s < 1.0;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "iris perceptron alpha = %g / %g (want 1 / 1), fits took %.2f s",
                      perc10.model.alpha, perc20.model.alpha, t_perc_s);
        report(1, alpha_ok && time_ok, buf);
        (void)t_mod;
    }

    {  // criterion 2: modified alpha in (0.2, 0.9), monotone across theta
        const double a1 = mod10.model.alpha, a2 = mod20.model.alpha;
        const bool in_range = a1 > 0.2 && a1 < 0.9 && a2 > 0.2 && a2 < 0.9;
        const bool monotone = a2 >= a1 - 1e-6;
        char buf[160];
        std::snprintf(buf, sizeof buf, "iris modified alpha = %.4f (theta 0.1), %.4f (theta 0.2)",
                      a1, a2);
        report(2, in_range && monotone, buf);
    }

    {  // criterion 3: noise-margin ordering and sign pattern
        const bool order10 = mod10.report.nm_right > perc10.report.nm_right;
        const bool order20 = mod20.report.nm_right > perc20.report.nm_right;
        const bool signs = perc10.report.nm_left < 0.0 && perc20.report.nm_left < 0.0;
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "NM_R mod/perc: %.5f/%.5f (theta 0.1), %.5f/%.5f (theta 0.2); "
                      "NM_L perc: %.5f, %.5f",
                      mod10.report.nm_right, perc10.report.nm_right, mod20.report.nm_right,
                      perc20.report.nm_right, perc10.report.nm_left, perc20.report.nm_left);
        report(3, order10 && order20 && signs, buf);
    }

    {  // criterion 4: 200 seeded random LPs against the vertex oracle
        const auto t0 = std::chrono::steady_clock::now();
        std::mt19937_64 rng(20240217);
        bool statuses_ok = true, values_ok = true;
        for (int trial = 0; trial < 200; ++trial) {
            const LinearProgram lp = random_lp(rng);
            const LpSolution a = solve(lp);
            const LpSolution b = brute_force_solve(lp);
            if (a.status != b.status) statuses_ok = false;
            if (a.status == LpStatus::Optimal && b.status == LpStatus::Optimal &&
                std::abs(a.objective_value - b.objective_value) >
                    1e-6 * (1.0 + std::abs(b.objective_value)))
                values_ok = false;
        }
        const double elapsed = seconds_since(t0);
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "200 random LPs vs oracle: status %s, objectives %s, %.2f s",
                      statuses_ok ? "100%" : "mismatch", values_ok ? "within 1e-6" : "off",
                      elapsed);
        report(4, statuses_ok && values_ok && elapsed < 5.0, buf);
    }

    {  // criterion 5: zero tolerance reduces to the crisp program with alpha 1
        std::mt19937_64 rng(5005);
        std::uniform_int_distribution<int> dd(1, 3), dm(1, 6);
        std::uniform_real_distribution<double> coef(-3.0, 3.0), res(0.0, 3.0);
        bool ok = true;
        for (int trial = 0; trial < 50; ++trial) {
            FuzzyLpProblem p;
            const int d = dd(rng), m = dm(rng);
            p.objective.resize(d);
            for (auto& v : p.objective) v = coef(rng);
            p.constraint_matrix.assign(m, std::vector<double>(d));
            p.resources.resize(m);
            for (int k = 0; k < m; ++k) {
                for (auto& v : p.constraint_matrix[k]) v = coef(rng);
                p.resources[k] = res(rng);  // nonnegative: the origin stays feasible
            }
            p.tolerances.assign(m, 0.0);
            p.variable_box = 1.0;

            const FuzzySolution s = solve_maxmin(p);
            log_bracket(s.z_lower, s.z_upper);
            LinearProgram crisp;
            crisp.objective = p.objective;
            crisp.rows = p.constraint_matrix;
            crisp.rhs = p.resources;
            crisp.lower.assign(d, -1.0);
            crisp.upper.assign(d, 1.0);
            const LpSolution ref = solve(crisp);
            if (s.alpha != 1.0 || ref.status != LpStatus::Optimal ||
                std::abs(dot(p.objective, s.point) - ref.objective_value) >
                    1e-9 * (1.0 + std::abs(ref.objective_value))) {
                ok = false;
                break;
            }
        }
        report(5, ok, "50 zero-tolerance problems: alpha = 1 and crisp optimum recovered");
    }

    {  // criterion 6: the worst membership at the LP point equals alpha
        bool ok = true;
        double worst_gap = 0.0;
        for (const IrisRun* r : {&mod10, &mod20, &perc10, &perc20}) {
            const double cert = alpha_certificate(r->model, rd);
            const double gap = std::abs(cert - r->model.alpha);
            worst_gap = std::max(worst_gap, gap);
            if (gap > 1e-6) ok = false;
        }
        char buf[120];
        std::snprintf(buf, sizeof buf, "max |certificate - alpha| = %.2e over 4 models",
                      worst_gap);
        report(6, ok, buf);
    }

    {  // criterion 7: bracket ordering everywhere it was computed
        // also sweep random fuzzy problems for extra coverage
        std::mt19937_64 rng(777);
        std::uniform_int_distribution<int> dd(1, 3), dm(1, 6);
        std::uniform_real_distribution<double> coef(-3.0, 3.0), tol(0.0, 2.0), res(-1.0, 3.0);
        for (int trial = 0; trial < 100; ++trial) {
            FuzzyLpProblem p;
            const int d = dd(rng), m = dm(rng);
            p.objective.resize(d);
            for (auto& v : p.objective) v = coef(rng);
            p.constraint_matrix.assign(m, std::vector<double>(d));
            p.resources.resize(m);
            p.tolerances.resize(m);
            for (int k = 0; k < m; ++k) {
                for (auto& v : p.constraint_matrix[k]) v = coef(rng);
                p.resources[k] = res(rng);
                p.tolerances[k] = tol(rng);
            }
            p.variable_box = 1.5;
            const CrispBracket br = solve_crisp_bracket(p);
            if (br.lower_status == LpStatus::Optimal && br.upper_status == LpStatus::Optimal)
                log_bracket(br.z_lower, br.z_upper);
        }
        char buf[120];
        std::snprintf(buf, sizeof buf, "z_lower <= z_upper on all %d brackets solved",
                      g_brackets.checked);
        report(7, g_brackets.ordered && g_brackets.checked > 100, buf);
    }

    {  // criterion 8: separable synthetic data trains to zero errors
        bool ok = true;
        std::string detail;
        for (std::uint64_t seed : {7ull, 42ull}) {
            const Dataset ds = synthetic_two_gaussians(50, {2.0, 0.0}, {-2.0, 0.0}, 0.5, seed);
            const ReflectedDataset rds = augment_reflect(ds);
            const DiscriminantModel mod =
                fit(rds, Criterion::Modified, {0.1, ToleranceMode::PerSample});
            const DiscriminantModel per =
                fit(rds, Criterion::Perceptron, {0.1, ToleranceMode::PerSample});
            log_bracket(mod.z_lower, mod.z_upper);
            const auto cm = misclassification_count(mod, ds);
            const auto cp = misclassification_count(per, ds);
            if (cm[0] + cm[1] != 0 || cp[0] + cp[1] != 0) ok = false;
            if (!(per.converged && per.iterations <= 50 && per.alpha == 1.0)) ok = false;
            detail += "seed " + std::to_string(seed) + ": mod " + std::to_string(cm[0] + cm[1]) +
                      " errors, perc " + std::to_string(cp[0] + cp[1]) + " errors (" +
                      std::to_string(per.iterations) + " iterations); ";
        }
        report(8, ok, detail + "empty misclassified set reached");
    }

    {  // criterion 9: the Fisher baseline, oracle-checked and compared on iris
        std::mt19937_64 rng(8086);
        std::uniform_real_distribution<double> coef(-2.0, 2.0);
        std::uniform_int_distribution<int> dim(1, 4), count(4, 30);
        bool oracle_ok = true;
        for (int trial = 0; trial < 50 && oracle_ok; ++trial) {
            const int p = dim(rng);
            Dataset ds;
            ds.feature_names.resize(p);
            for (int j = 0; j < p; ++j) ds.feature_names[j] = "f" + std::to_string(j);
            ds.class_order = {"a", "b"};
            for (int c = 0; c < 2; ++c) {
                std::vector<double> mu(p);
                for (auto& v : mu) v = coef(rng);
                const int n = count(rng) + p + 1;
                for (int i = 0; i < n; ++i) {
                    std::vector<double> x(p);
                    for (int j = 0; j < p; ++j) x[j] = mu[j] + coef(rng);
                    ds.samples.push_back(std::move(x));
                    ds.labels.push_back(c == 0 ? "a" : "b");
                }
            }
            const FisherModel m = fit_fisher(ds);

            // independent route: dense Gaussian elimination on the scatter system
            std::array<std::vector<double>, 2> mu{std::vector<double>(p, 0.0),
                                                  std::vector<double>(p, 0.0)};
            std::array<int, 2> n{0, 0};
            for (std::size_t i = 0; i < ds.size(); ++i) {
                const int c = ds.labels[i] == "a" ? 0 : 1;
                ++n[c];
                for (int j = 0; j < p; ++j) mu[c][j] += ds.samples[i][j];
            }
            for (int c = 0; c < 2; ++c)
                for (int j = 0; j < p; ++j) mu[c][j] /= n[c];
            std::vector<std::vector<double>> a(p, std::vector<double>(p, 0.0));
            for (std::size_t i = 0; i < ds.size(); ++i) {
                const int c = ds.labels[i] == "a" ? 0 : 1;
                for (int r = 0; r < p; ++r)
                    for (int q = 0; q < p; ++q)
                        a[r][q] += (ds.samples[i][r] - mu[c][r]) * (ds.samples[i][q] - mu[c][q]);
            }
            std::vector<double> b(p);
            for (int j = 0; j < p; ++j) b[j] = mu[0][j] - mu[1][j];
            for (int col = 0; col < p; ++col) {
                int piv = col;
                for (int r = col + 1; r < p; ++r)
                    if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
                std::swap(a[piv], a[col]);
                std::swap(b[piv], b[col]);
                for (int r = 0; r < p; ++r) {
                    if (r == col) continue;
                    const double f = a[r][col] / a[col][col];
                    for (int q = 0; q < p; ++q) a[r][q] -= f * a[col][q];
                    b[r] -= f * b[col];
                }
            }
            std::vector<double> w(p);
            double nn = 0.0;
            for (int j = 0; j < p; ++j) {
                w[j] = b[j] / a[j][j];
                nn += w[j] * w[j];
            }
            nn = std::sqrt(nn);
            for (int j = 0; j < p; ++j)
                if (std::abs(m.w[j] - w[j] / nn) > 1e-8) oracle_ok = false;
        }

        const FisherModel iris_fisher = fit_fisher(pair);
        const auto fc = misclassification_count(fisher_as_discriminant(iris_fisher), pair);
        const int fisher_errors = fc[0] + fc[1];
        const int perc_errors10 = perc10.report.misclassified[0] + perc10.report.misclassified[1];
        const int perc_errors20 = perc20.report.misclassified[0] + perc20.report.misclassified[1];
        const bool window = std::abs(fisher_errors - perc_errors10) <= 2 &&
                            std::abs(fisher_errors - perc_errors20) <= 2;
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "oracle %s; iris errors: fisher %d vs perceptron %d / %d (within +-2)",
                      oracle_ok ? "matched within 1e-8" : "MISMATCH", fisher_errors,
                      perc_errors10, perc_errors20);
        report(9, oracle_ok && window, buf);
    }

    std::printf("%d of 9 criteria passed\n", 9 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
