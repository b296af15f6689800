#pragma once

#include <vector>

#include "fclda/lp_solver.hpp"

namespace fclda {

/// Linear program with fuzzy resources: maximize objective . u subject to
/// constraint_matrix . u <= resources, where constraint k may be violated by
/// up to tolerances[k] with linearly decaying satisfaction. Every variable is
/// boxed to [-variable_box, variable_box] to keep the crisp programs bounded.
struct FuzzyLpProblem {
    std::vector<double> objective;
    std::vector<std::vector<double>> constraint_matrix;
    std::vector<double> resources;
    std::vector<double> tolerances;  // one per constraint, each >= 0
    double variable_box = 1.0;

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_constraints() const { return constraint_matrix.size(); }
};

enum class FuzzyStatus { Ok, CrispInfeasible, RelaxedInfeasible, DegenerateBracket };

/// Optima of the two crisp programs bracketing the fuzzy one: z_lower uses
/// resources b, z_upper uses the fully relaxed b + t.
struct CrispBracket {
    LpStatus lower_status = LpStatus::Infeasible;
    LpStatus upper_status = LpStatus::Infeasible;
    double z_lower = 0.0;
    double z_upper = 0.0;
    std::vector<double> lower_point;
    std::vector<double> upper_point;
};

struct FuzzySolution {
    FuzzyStatus status = FuzzyStatus::CrispInfeasible;
    std::vector<double> point;
    double alpha = 0.0;
    double z_lower = 0.0;
    double z_upper = 0.0;
    std::vector<double> crisp_lower_point;
    std::vector<double> crisp_upper_point;
};

void validate(const FuzzyLpProblem& p);

/// Satisfaction degree of constraint k at u: 1 below the resource, linear
/// decay across [b_k, b_k + t_k], 0 beyond. A zero tolerance degenerates to
/// the crisp indicator.
double constraint_membership(const FuzzyLpProblem& p, std::size_t k, const std::vector<double>& u);

/// Degree of optimality of an objective value cu against the bracket
/// [z_lower, z_upper]; 1 everywhere when the bracket is degenerate.
double optimality_membership(double cu, double z_lower, double z_upper);

/// True when z_upper - z_lower < 1e-12 * (1 + |z_upper|).
bool bracket_degenerate(double z_lower, double z_upper);

CrispBracket solve_crisp_bracket(const FuzzyLpProblem& p);

/// Max-min aggregation: maximize alpha subject to
///   objective . u >= z_lower + alpha (z_upper - z_lower)
///   (A u)_k + alpha t_k <= b_k + t_k
///   0 <= alpha <= 1, |u_j| <= variable_box.
/// On a degenerate bracket the objective row is dropped, alpha is 1 by the
/// convention that every feasible point is equally optimal, and the returned
/// point is the crisp optimizer.
FuzzySolution solve_maxmin(const FuzzyLpProblem& p);

}  // namespace fclda
