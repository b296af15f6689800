#pragma once

#include <string>
#include <vector>

namespace fclda {

/// Bounded-variable linear program:
///   maximize  objective . u
///   s.t.      rows[k] . u <= rhs[k]   for every row k
///             lower[j] <= u[j] <= upper[j]
/// All bounds are finite, so the feasible region is always bounded.
struct LinearProgram {
    std::vector<double> objective;
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t num_vars() const { return objective.size(); }
    std::size_t num_rows() const { return rows.size(); }
};

enum class LpStatus { Optimal, Infeasible };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> point;     // present iff Optimal
    double objective_value = 0.0;  // present iff Optimal
    std::string diagnostic;        // non-empty when the solver gave up numerically
};

/// Checks dimensions, finiteness and lower <= upper; throws std::invalid_argument.
void validate(const LinearProgram& lp);

/// Feasibility slack used when checking candidate points: 1e-8 * (1 + max|rhs|).
double feasibility_tolerance(const LinearProgram& lp);

/// Two-phase dense simplex with Bland's rule. Deterministic; pure function.
LpSolution solve(const LinearProgram& lp);

/// Vertex-enumeration oracle: intersects every choice of num_vars active
/// constraints drawn from the rows and box facets, keeps the best feasible
/// vertex. Requires num_vars <= 6 and num_rows + 2*num_vars <= 24.
LpSolution brute_force_solve(const LinearProgram& lp);

}  // namespace fclda
