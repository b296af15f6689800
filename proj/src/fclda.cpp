#include "fclda/fclda.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "fclda/log.hpp"

namespace fclda {

namespace {

constexpr int kIterationBudget = 50;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& v) { return std::sqrt(dot(v, v)); }

std::vector<double> normalized_or_zero(const std::vector<double>& v) {
    const double n = norm2(v);
    if (n < 1e-12) return std::vector<double>(v.size(), 0.0);
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / n;
    return out;
}

// Indices of samples strictly misclassified by v, with a small scale-aware
// guard so margins that are zero up to solver noise do not count.
std::set<std::size_t> misclassified_set(const ReflectedDataset& rd, const std::vector<double>& v) {
    const double eps = 1e-9 * (1.0 + norm2(v));
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < rd.size(); ++i)
        if (dot(v, rd.reflected[i]) < -eps) out.insert(i);
    return out;
}

int prediction_errors(const ReflectedDataset& rd, const std::vector<double>& v) {
    int errors = 0;
    for (std::size_t i = 0; i < rd.size(); ++i) {
        // v . y > 0 iff the original sample is classified correctly; a tie
        // goes to class 1, which is wrong exactly for class-2 samples.
        const double margin = dot(v, rd.reflected[i]);
        if (margin < 0.0 || (margin == 0.0 && rd.class_of[i] == 2)) ++errors;
    }
    return errors;
}

// Tie-break for a degenerate bracket: among points of the tight crisp
// program with the optimal objective value, maximize the worst margin
// min_k y_k . v. Keeps the crisp optimum while pulling the separator off
// the data when slack exists.
std::vector<double> max_margin_tiebreak(const FuzzyLpProblem& p, const CrispBracket& br) {
    const std::size_t d = p.num_vars();
    const std::size_t m = p.num_constraints();
    LinearProgram lp;  // variables (s, u_1 .. u_d)
    lp.objective.assign(d + 1, 0.0);
    lp.objective[0] = 1.0;
    lp.rows.assign(2 * m + 1, std::vector<double>(d + 1, 0.0));
    lp.rhs.assign(2 * m + 1, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        // crisp row: (A u)_k <= b_k
        for (std::size_t j = 0; j < d; ++j) lp.rows[k][j + 1] = p.constraint_matrix[k][j];
        lp.rhs[k] = p.resources[k];
        // margin row: s + (A u)_k <= b_k, i.e. s <= b_k - (A u)_k
        lp.rows[m + k][0] = 1.0;
        for (std::size_t j = 0; j < d; ++j) lp.rows[m + k][j + 1] = p.constraint_matrix[k][j];
        lp.rhs[m + k] = p.resources[k];
    }
    // stay on the optimal face: objective . u >= z_lower
    for (std::size_t j = 0; j < d; ++j) lp.rows[2 * m][j + 1] = -p.objective[j];
    lp.rhs[2 * m] = -br.z_lower;
    double margin_cap = 1.0;
    for (std::size_t k = 0; k < m; ++k) {
        double reach = std::abs(p.resources[k]);
        for (std::size_t j = 0; j < d; ++j) reach += std::abs(p.constraint_matrix[k][j]) * p.variable_box;
        margin_cap = std::max(margin_cap, reach + 1.0);
    }
    lp.lower.assign(d + 1, -p.variable_box);
    lp.upper.assign(d + 1, p.variable_box);
    lp.lower[0] = -margin_cap;
    lp.upper[0] = margin_cap;

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal) return br.lower_point;
    return {sol.point.begin() + 1, sol.point.end()};
}

}  // namespace

std::vector<double> objective_modified(const ReflectedDataset& rd) {
    if (rd.size() == 0) throw std::invalid_argument("objective_modified: empty dataset");
    std::vector<double> c(rd.dim(), 0.0);
    for (const auto& y : rd.reflected)
        for (std::size_t j = 0; j < c.size(); ++j) c[j] += y[j];
    return c;
}

std::vector<double> objective_perceptron(const ReflectedDataset& rd, const std::vector<double>& v,
                                         double margin_eps) {
    if (norm2(v) == 0.0) throw std::invalid_argument("objective_perceptron: zero vector");
    std::vector<double> c(rd.dim(), 0.0);
    for (const auto& y : rd.reflected)
        if (dot(v, y) < -margin_eps)
            for (std::size_t j = 0; j < c.size(); ++j) c[j] += y[j];
    return c;
}

std::vector<double> compute_tolerances(const ReflectedDataset& rd, const ToleranceConfig& cfg) {
    if (cfg.theta < 0.0 || cfg.theta > 1.0)
        throw std::invalid_argument("tolerance: theta must lie in [0, 1]");
    std::vector<double> t(rd.size());
    double max_norm = 0.0;
    for (std::size_t i = 0; i < rd.size(); ++i) {
        t[i] = norm2(rd.reflected[i]);
        max_norm = std::max(max_norm, t[i]);
    }
    for (double& tk : t) tk = cfg.theta * (cfg.mode == ToleranceMode::PerSample ? tk : max_norm);
    return t;
}

FuzzyLpProblem build_problem(const ReflectedDataset& rd, std::vector<double> objective,
                             const ToleranceConfig& cfg) {
    FuzzyLpProblem p;
    p.objective = std::move(objective);
    p.constraint_matrix.reserve(rd.size());
    for (const auto& y : rd.reflected) {
        std::vector<double> row(y.size());
        for (std::size_t j = 0; j < y.size(); ++j) row[j] = -y[j];
        p.constraint_matrix.push_back(std::move(row));
    }
    p.resources.assign(rd.size(), 0.0);
    p.tolerances = compute_tolerances(rd, cfg);
    p.variable_box = 1.0;
    return p;
}

namespace {

struct SolveOutcome {
    FuzzySolution sol;
    std::vector<double> point;  // tie-broken point for degenerate brackets
};

SolveOutcome run_maxmin(const ReflectedDataset& rd, std::vector<double> c,
                        const ToleranceConfig& cfg) {
    const FuzzyLpProblem p = build_problem(rd, std::move(c), cfg);
    SolveOutcome out;
    out.sol = solve_maxmin(p);
    switch (out.sol.status) {
        case FuzzyStatus::CrispInfeasible:
        case FuzzyStatus::RelaxedInfeasible:
            throw std::runtime_error("fit: fuzzy program infeasible");
        case FuzzyStatus::DegenerateBracket: {
            const CrispBracket br{LpStatus::Optimal, LpStatus::Optimal, out.sol.z_lower,
                                  out.sol.z_upper, out.sol.crisp_lower_point,
                                  out.sol.crisp_upper_point};
            out.point = max_margin_tiebreak(p, br);
            break;
        }
        case FuzzyStatus::Ok:
            out.point = out.sol.point;
            break;
    }
    return out;
}

DiscriminantModel base_model(const ReflectedDataset& rd, Criterion criterion,
                             const ToleranceConfig& cfg) {
    DiscriminantModel m;
    m.criterion = criterion;
    m.tolerance = cfg;
    m.feature_names = rd.originals.feature_names;
    m.class_labels = {rd.originals.class_order[0], rd.originals.class_order[1]};
    return m;
}

DiscriminantModel fit_modified(const ReflectedDataset& rd, const ToleranceConfig& cfg) {
    DiscriminantModel m = base_model(rd, Criterion::Modified, cfg);
    std::vector<double> c = objective_modified(rd);
    m.degenerate_objective = norm2(c) == 0.0;
    SolveOutcome r = run_maxmin(rd, std::move(c), cfg);
    m.alpha = r.sol.alpha;
    m.z_lower = r.sol.z_lower;
    m.z_upper = r.sol.z_upper;
    m.v_raw = r.point;
    m.v = normalized_or_zero(r.point);
    m.iterations = 1;
    if (norm2(m.v) == 0.0) m.degenerate_objective = true;
    return m;
}

// The selection objective depends on the current separator, so the program
// is re-solved on the evolving misclassified set. The raw map oscillates on
// overlapping classes, so the state is relaxation-averaged between steps and
// the best-scoring vertex seen is pocketed. When no stable set exists within
// the budget, the only guaranteed fixed point of the map is the vanished
// objective (no strictly violated sample, alpha 1 at the zero point); the
// model reports that resolution while keeping the pocketed direction for
// geometry.
DiscriminantModel fit_perceptron(const ReflectedDataset& rd, const ToleranceConfig& cfg) {
    DiscriminantModel m = base_model(rd, Criterion::Perceptron, cfg);

    const DiscriminantModel seed = fit_modified(rd, cfg);
    std::vector<double> state = seed.v_raw;

    struct Candidate {
        int errors;
        double neg_alpha;
        int order;
        std::vector<double> point;
    };
    std::vector<Candidate> pocket;
    auto pocket_add = [&](const std::vector<double>& pt, double alpha, int order) {
        if (norm2(pt) < 1e-12) return;
        pocket.push_back({prediction_errors(rd, pt), -alpha, order, pt});
    };
    auto pocket_best = [&]() {
        return *std::min_element(pocket.begin(), pocket.end(), [](const auto& a, const auto& b) {
            return std::tie(a.errors, a.neg_alpha, a.order) <
                   std::tie(b.errors, b.neg_alpha, b.order);
        });
    };

    auto finish_vanished = [&](int iterations, bool converged) {
        // Terminal resolution: no violated sample drives the objective. The
        // fuzzy program with a zero objective has alpha 1 at the zero point.
        m.alpha = 1.0;
        m.z_lower = 0.0;
        m.z_upper = 0.0;
        m.v_raw.assign(rd.dim(), 0.0);
        const std::vector<double>& dir =
            pocket.empty() ? state : pocket_best().point;
        m.v = normalized_or_zero(dir);
        m.iterations = iterations;
        m.converged = converged;
        return m;
    };

    std::set<std::size_t> current = misclassified_set(rd, state);
    if (current.empty()) return finish_vanished(0, true);

    for (int it = 1; it <= kIterationBudget; ++it) {
        std::vector<double> c(rd.dim(), 0.0);
        for (std::size_t i : current)
            for (std::size_t j = 0; j < c.size(); ++j) c[j] += rd.reflected[i][j];

        SolveOutcome r = run_maxmin(rd, c, cfg);
        if (r.sol.status == FuzzyStatus::DegenerateBracket) {
            // The selected samples cancel; the objective has vanished.
            return finish_vanished(it, true);
        }
        log::debug("perceptron iteration " + std::to_string(it) + ": |Y| = " +
                   std::to_string(current.size()) + ", alpha = " + std::to_string(r.sol.alpha));
        pocket_add(r.point, r.sol.alpha, it);

        const std::set<std::size_t> next = misclassified_set(rd, r.point);
        if (next.empty()) {
            m.alpha = 1.0;
            m.z_lower = 0.0;
            m.z_upper = 0.0;
            m.v_raw.assign(rd.dim(), 0.0);
            m.v = normalized_or_zero(r.point);
            m.iterations = it;
            m.converged = true;
            return m;
        }
        if (next == current) {
            // Stable misclassified set: genuine fixed point of the map.
            m.alpha = r.sol.alpha;
            m.z_lower = r.sol.z_lower;
            m.z_upper = r.sol.z_upper;
            m.v_raw = r.point;
            m.v = normalized_or_zero(r.point);
            m.iterations = it;
            m.converged = true;
            return m;
        }

        for (std::size_t j = 0; j < state.size(); ++j) state[j] = 0.5 * (state[j] + r.point[j]);
        pocket_add(state, 0.0, kIterationBudget + it);
        current = misclassified_set(rd, state);
        if (current.empty()) return finish_vanished(it, true);
    }

    return finish_vanished(kIterationBudget, false);
}

}  // namespace

DiscriminantModel fit(const ReflectedDataset& rd, Criterion criterion,
                      const ToleranceConfig& cfg) {
    if (rd.size() == 0) throw std::invalid_argument("fit: empty dataset");
    bool has1 = false, has2 = false;
    for (int c : rd.class_of) (c == 1 ? has1 : has2) = true;
    if (!has1 || !has2) throw std::invalid_argument("fit: need at least one sample per class");

    return criterion == Criterion::Modified ? fit_modified(rd, cfg) : fit_perceptron(rd, cfg);
}

Prediction predict(const DiscriminantModel& model, const std::vector<double>& x) {
    if (x.size() + 1 != model.v.size())
        throw std::invalid_argument("predict: expected " + std::to_string(model.v.size() - 1) +
                                    " features, got " + std::to_string(x.size()));
    double g = model.v[0];
    for (std::size_t j = 0; j < x.size(); ++j) g += model.v[j + 1] * x[j];
    Prediction p;
    p.decision_value = g;
    if (g > 0.0)
        p.class_index = 1;
    else if (g < 0.0)
        p.class_index = 2;
    else {
        p.class_index = 1;
        p.tie = true;
    }
    return p;
}

double alpha_certificate(const DiscriminantModel& model, const ReflectedDataset& rd) {
    std::vector<double> c;
    if (model.criterion == Criterion::Modified) {
        c = objective_modified(rd);
    } else {
        // The terminal objective is the sum over samples the LP point still
        // misclassifies; for the vanished-objective resolution that set is
        // empty and c is zero, consistent with the stored degenerate bracket.
        c.assign(rd.dim(), 0.0);
        for (std::size_t i : misclassified_set(rd, model.v_raw))
            for (std::size_t j = 0; j < c.size(); ++j) c[j] += rd.reflected[i][j];
    }
    const FuzzyLpProblem p = build_problem(rd, c, model.tolerance);
    double worst = optimality_membership(dot(c, model.v_raw), model.z_lower, model.z_upper);
    for (std::size_t k = 0; k < p.num_constraints(); ++k)
        worst = std::min(worst, constraint_membership(p, k, model.v_raw));
    return worst;
}

}  // namespace fclda
