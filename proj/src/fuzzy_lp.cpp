#include "fclda/fuzzy_lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fclda {

namespace {

LinearProgram crisp_program(const FuzzyLpProblem& p, bool relaxed) {
    LinearProgram lp;
    lp.objective = p.objective;
    lp.rows = p.constraint_matrix;
    lp.rhs = p.resources;
    if (relaxed)
        for (std::size_t k = 0; k < lp.rhs.size(); ++k) lp.rhs[k] += p.tolerances[k];
    lp.lower.assign(p.num_vars(), -p.variable_box);
    lp.upper.assign(p.num_vars(), p.variable_box);
    return lp;
}

double row_dot(const FuzzyLpProblem& p, std::size_t k, const std::vector<double>& u) {
    double s = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) s += p.constraint_matrix[k][j] * u[j];
    return s;
}

}  // namespace

void validate(const FuzzyLpProblem& p) {
    validate(crisp_program(p, false));
    if (p.tolerances.size() != p.num_constraints())
        throw std::invalid_argument("fuzzy lp: tolerance count does not match constraints");
    for (double t : p.tolerances)
        if (!(t >= 0.0)) throw std::invalid_argument("fuzzy lp: tolerances must be >= 0");
    if (!(p.variable_box > 0.0))
        throw std::invalid_argument("fuzzy lp: variable box must be positive");
}

double constraint_membership(const FuzzyLpProblem& p, std::size_t k,
                             const std::vector<double>& u) {
    if (k >= p.num_constraints())
        throw std::out_of_range("constraint_membership: index " + std::to_string(k));
    const double lhs = row_dot(p, k, u);
    const double b = p.resources[k];
    const double t = p.tolerances[k];
    if (t == 0.0) return lhs <= b ? 1.0 : 0.0;
    if (lhs <= b) return 1.0;
    if (lhs >= b + t) return 0.0;
    return 1.0 - (lhs - b) / t;
}

bool bracket_degenerate(double z_lower, double z_upper) {
    return z_upper - z_lower < 1e-12 * (1.0 + std::abs(z_upper));
}

double optimality_membership(double cu, double z_lower, double z_upper) {
    if (z_lower > z_upper + 1e-9 * (1.0 + std::abs(z_upper)))
        throw std::invalid_argument("optimality_membership: z_lower exceeds z_upper");
    if (bracket_degenerate(z_lower, z_upper)) return 1.0;
    if (cu >= z_upper) return 1.0;
    if (cu <= z_lower) return 0.0;
    return (cu - z_lower) / (z_upper - z_lower);
}

CrispBracket solve_crisp_bracket(const FuzzyLpProblem& p) {
    validate(p);
    CrispBracket out;
    const LpSolution tight = solve(crisp_program(p, false));
    out.lower_status = tight.status;
    if (tight.status == LpStatus::Optimal) {
        out.z_lower = tight.objective_value;
        out.lower_point = tight.point;
    }
    const LpSolution relaxed = solve(crisp_program(p, true));
    out.upper_status = relaxed.status;
    if (relaxed.status == LpStatus::Optimal) {
        out.z_upper = relaxed.objective_value;
        out.upper_point = relaxed.point;
    }
    return out;
}

FuzzySolution solve_maxmin(const FuzzyLpProblem& p) {
    const CrispBracket br = solve_crisp_bracket(p);
    FuzzySolution out;
    out.z_lower = br.z_lower;
    out.z_upper = br.z_upper;
    out.crisp_lower_point = br.lower_point;
    out.crisp_upper_point = br.upper_point;

    if (br.upper_status == LpStatus::Infeasible) {
        out.status = FuzzyStatus::RelaxedInfeasible;
        return out;
    }
    if (br.lower_status == LpStatus::Infeasible) {
        out.status = FuzzyStatus::CrispInfeasible;
        return out;
    }

    if (bracket_degenerate(br.z_lower, br.z_upper)) {
        // Every feasible point is equally optimal; report the crisp optimum.
        out.status = FuzzyStatus::DegenerateBracket;
        out.alpha = 1.0;
        out.point = br.lower_point;
        return out;
    }

    const std::size_t d = p.num_vars();
    const std::size_t m = p.num_constraints();
    LinearProgram lp;  // variables (alpha, u_1 .. u_d)
    lp.objective.assign(d + 1, 0.0);
    lp.objective[0] = 1.0;
    lp.rows.assign(m + 1, std::vector<double>(d + 1, 0.0));
    lp.rhs.assign(m + 1, 0.0);
    for (std::size_t k = 0; k < m; ++k) {
        lp.rows[k][0] = p.tolerances[k];
        for (std::size_t j = 0; j < d; ++j) lp.rows[k][j + 1] = p.constraint_matrix[k][j];
        lp.rhs[k] = p.resources[k] + p.tolerances[k];
    }
    // objective . u - alpha (z1 - z0) >= z0, in <= form
    lp.rows[m][0] = br.z_upper - br.z_lower;
    for (std::size_t j = 0; j < d; ++j) lp.rows[m][j + 1] = -p.objective[j];
    lp.rhs[m] = -br.z_lower;
    lp.lower.assign(d + 1, -p.variable_box);
    lp.upper.assign(d + 1, p.variable_box);
    lp.lower[0] = 0.0;
    lp.upper[0] = 1.0;

    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::Optimal)
        throw std::runtime_error("solve_maxmin: augmented program unexpectedly infeasible" +
                                 (sol.diagnostic.empty() ? std::string() : " (" + sol.diagnostic + ")"));
    out.status = FuzzyStatus::Ok;
    out.alpha = std::clamp(sol.point[0], 0.0, 1.0);
    out.point.assign(sol.point.begin() + 1, sol.point.end());
    return out;
}

}  // namespace fclda
