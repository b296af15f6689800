#include "fclda/lp_solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>

namespace fclda {

namespace {

constexpr double kReducedCostTol = 1e-9;  // optimality comparison on reduced costs
constexpr double kPivotTol = 1e-10;       // entries below this never pivot

bool all_finite(const std::vector<double>& v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

}  // namespace

void validate(const LinearProgram& lp) {
    const std::size_t d = lp.num_vars();
    if (d == 0) throw std::invalid_argument("lp: no variables");
    if (lp.lower.size() != d || lp.upper.size() != d)
        throw std::invalid_argument("lp: bound vectors must match variable count");
    if (lp.rows.size() != lp.rhs.size())
        throw std::invalid_argument("lp: row count does not match rhs count");
    if (!all_finite(lp.objective) || !all_finite(lp.rhs) || !all_finite(lp.lower) ||
        !all_finite(lp.upper))
        throw std::invalid_argument("lp: non-finite entry");
    for (const auto& row : lp.rows) {
        if (row.size() != d) throw std::invalid_argument("lp: row width does not match variables");
        if (!all_finite(row)) throw std::invalid_argument("lp: non-finite entry");
    }
    for (std::size_t j = 0; j < d; ++j)
        if (lp.lower[j] > lp.upper[j])
            throw std::invalid_argument("lp: lower bound exceeds upper bound at variable " +
                                        std::to_string(j));
}

double feasibility_tolerance(const LinearProgram& lp) {
    double bmax = 0.0;
    for (double b : lp.rhs) bmax = std::max(bmax, std::abs(b));
    return 1e-8 * (1.0 + bmax);
}

namespace {

// Dense tableau simplex over the shifted problem x = u - lower >= 0 with
// rows [A; I] x <= [b - A*lower; upper - lower].  Rows whose shifted rhs is
// negative are negated and given an artificial variable for phase 1.
//
// The objective row stores reduced costs in the convention
//   zrow_j = c_B B^-1 A_j - c_j,
// so a negative entry marks an improving column.
class Tableau {
public:
    explicit Tableau(const LinearProgram& lp) : lp_(lp), d_(lp.num_vars()), m_(lp.num_rows()) {
        rows_ = m_ + d_;  // structural rows plus upper-bound rows
        shift_ = lp.lower;
        rhs_.resize(rows_);
        for (std::size_t i = 0; i < m_; ++i) {
            double s = lp.rhs[i];
            for (std::size_t j = 0; j < d_; ++j) s -= lp.rows[i][j] * shift_[j];
            rhs_[i] = s;
        }
        for (std::size_t j = 0; j < d_; ++j) rhs_[m_ + j] = lp.upper[j] - lp.lower[j];

        n_art_ = 0;
        for (std::size_t i = 0; i < rows_; ++i)
            if (rhs_[i] < 0.0) ++n_art_;

        cols_ = d_ + rows_ + n_art_ + 1;  // structural + slacks + artificials + rhs
        t_.assign((rows_ + 1) * cols_, 0.0);
        basis_.resize(rows_);

        std::size_t art = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            const double sign = rhs_[i] < 0.0 ? -1.0 : 1.0;
            for (std::size_t j = 0; j < d_; ++j) {
                const double a = i < m_ ? lp.rows[i][j] : (i - m_ == j ? 1.0 : 0.0);
                at(i, j) = sign * a;
            }
            at(i, d_ + i) = sign;  // slack
            at(i, cols_ - 1) = sign * rhs_[i];
            if (sign < 0.0) {
                at(i, d_ + rows_ + art) = 1.0;
                basis_[i] = d_ + rows_ + art;
                ++art;
            } else {
                basis_[i] = d_ + i;
            }
        }
    }

    // Returns empty diagnostic on success (including proven infeasibility).
    std::string run(LpSolution& out) {
        if (n_art_ > 0) {
            // Phase 1: maximize -sum(artificials). Artificial columns carry
            // cost -1, so zrow starts at +1 there, minus each artificial row.
            for (std::size_t j = 0; j < n_art_; ++j) obj(d_ + rows_ + j) = 1.0;
            for (std::size_t i = 0; i < rows_; ++i)
                if (basis_[i] >= d_ + rows_) add_row_to_obj(i, -1.0);
            if (!iterate(cols_ - 1)) return "pivot budget exhausted in phase 1";
            if (obj(cols_ - 1) < -1e-7 * (1.0 + max_abs_rhs())) {
                out.status = LpStatus::Infeasible;
                return {};
            }
            drive_out_artificials();
            for (std::size_t j = 0; j < cols_; ++j) obj(j) = 0.0;
        }

        for (std::size_t j = 0; j < d_; ++j) obj(j) = -lp_.objective[j];
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < d_ && lp_.objective[basis_[i]] != 0.0)
                add_row_to_obj(i, lp_.objective[basis_[i]]);
        // Artificial columns are not eligible to enter in phase 2.
        if (!iterate(d_ + rows_)) return "pivot budget exhausted in phase 2";

        out.status = LpStatus::Optimal;
        out.point.assign(d_, 0.0);
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < d_) out.point[basis_[i]] = at(i, cols_ - 1);
        double val = 0.0;
        for (std::size_t j = 0; j < d_; ++j) {
            out.point[j] += shift_[j];
            val += lp_.objective[j] * out.point[j];
        }
        out.objective_value = val;
        return {};
    }

private:
    double& at(std::size_t i, std::size_t j) { return t_[i * cols_ + j]; }
    double& obj(std::size_t j) { return t_[rows_ * cols_ + j]; }

    double max_abs_rhs() const {
        double b = 0.0;
        for (double r : rhs_) b = std::max(b, std::abs(r));
        return b;
    }

    void add_row_to_obj(std::size_t i, double factor) {
        for (std::size_t j = 0; j < cols_; ++j) obj(j) += factor * at(i, j);
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const double p = at(pr, pc);
        for (std::size_t j = 0; j < cols_; ++j) at(pr, j) /= p;
        at(pr, pc) = 1.0;
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == pr) continue;
            const double f = t_[i * cols_ + pc];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < cols_; ++j) t_[i * cols_ + j] -= f * at(pr, j);
            t_[i * cols_ + pc] = 0.0;
        }
        basis_[pr] = pc;
    }

    // Bland's rule: lowest-index entering column with a negative reduced
    // cost, ratio ties broken by the lowest basis variable index.
    bool iterate(std::size_t enter_limit) {
        const std::size_t budget = 2000 + 200 * (rows_ + cols_);
        for (std::size_t step = 0; step < budget; ++step) {
            std::size_t enter = enter_limit;
            for (std::size_t j = 0; j < enter_limit; ++j) {
                if (obj(j) < -kReducedCostTol) {
                    enter = j;
                    break;
                }
            }
            if (enter == enter_limit) return true;  // optimal

            std::size_t leave = rows_;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows_; ++i) {
                const double a = at(i, enter);
                if (a <= kPivotTol) continue;
                const double ratio = at(i, cols_ - 1) / a;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio <= best_ratio + 1e-12 && (leave == rows_ || basis_[i] < basis_[leave]))) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
            if (leave == rows_) {
                // Unreachable with finite boxes; treat as numerical failure.
                return false;
            }
            pivot(leave, enter);
        }
        return false;
    }

    // Phase-1 optimum leaves artificials basic only at value zero; pivot them
    // onto any structural or slack column. Rows offering no pivot are
    // redundant and keep a zero-valued artificial that can never re-enter.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_; ++i) {
            if (basis_[i] < d_ + rows_) continue;
            for (std::size_t j = 0; j < d_ + rows_; ++j) {
                if (std::abs(at(i, j)) > kPivotTol) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    const LinearProgram& lp_;
    std::size_t d_, m_, rows_, cols_, n_art_;
    std::vector<double> t_;
    std::vector<double> rhs_;
    std::vector<double> shift_;
    std::vector<std::size_t> basis_;
};

bool point_feasible(const LinearProgram& lp, const std::vector<double>& u, double tol) {
    for (std::size_t j = 0; j < lp.num_vars(); ++j)
        if (u[j] < lp.lower[j] - tol || u[j] > lp.upper[j] + tol) return false;
    for (std::size_t i = 0; i < lp.num_rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < lp.num_vars(); ++j) s += lp.rows[i][j] * u[j];
        if (s > lp.rhs[i] + tol) return false;
    }
    return true;
}

// Gaussian elimination with partial pivoting; returns false when singular.
bool solve_square(std::vector<std::vector<double>> a, std::vector<double> b,
                  std::vector<double>& x) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-10) return false;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            b[r] -= f * b[col];
        }
    }
    x.assign(n, 0.0);
    for (std::size_t ri = n; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t j = ri + 1; j < n; ++j) s -= a[ri][j] * x[j];
        x[ri] = s / a[ri][ri];
    }
    return true;
}

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    validate(lp);
    LpSolution out;
    Tableau tab(lp);
    std::string diag = tab.run(out);
    if (!diag.empty()) {
        out.status = LpStatus::Infeasible;
        out.point.clear();
        out.diagnostic = diag;
        return out;
    }
    if (out.status == LpStatus::Optimal &&
        !point_feasible(lp, out.point, feasibility_tolerance(lp))) {
        out.status = LpStatus::Infeasible;
        out.point.clear();
        out.diagnostic = "simplex returned an infeasible vertex";
    }
    return out;
}

LpSolution brute_force_solve(const LinearProgram& lp) {
    validate(lp);
    const std::size_t d = lp.num_vars();
    const std::size_t m = lp.num_rows();
    if (d > 6 || m + 2 * d > 24)
        throw std::invalid_argument("brute_force_solve: instance above the combinatorial limit");

    // Constraint pool as equalities a.u = b: rows, then lower, then upper facets.
    const std::size_t pool = m + 2 * d;
    auto facet = [&](std::size_t idx, std::vector<double>& a, double& b) {
        if (idx < m) {
            a = lp.rows[idx];
            b = lp.rhs[idx];
        } else if (idx < m + d) {
            a.assign(d, 0.0);
            a[idx - m] = 1.0;
            b = lp.lower[idx - m];
        } else {
            a.assign(d, 0.0);
            a[idx - m - d] = 1.0;
            b = lp.upper[idx - m - d];
        }
    };

    const double tol = feasibility_tolerance(lp);
    LpSolution best;
    best.status = LpStatus::Infeasible;

    std::vector<std::size_t> pick(d);
    for (std::size_t j = 0; j < d; ++j) pick[j] = j;
    std::vector<std::vector<double>> a(d, std::vector<double>(d));
    std::vector<double> b(d), x;

    bool more = true;
    while (more) {
        for (std::size_t j = 0; j < d; ++j) facet(pick[j], a[j], b[j]);
        if (solve_square(a, b, x) && point_feasible(lp, x, tol)) {
            double val = 0.0;
            for (std::size_t j = 0; j < d; ++j) val += lp.objective[j] * x[j];
            if (best.status == LpStatus::Infeasible || val > best.objective_value) {
                best.status = LpStatus::Optimal;
                best.objective_value = val;
                best.point = x;
            }
        }
        more = false;
        for (std::size_t j = d; j-- > 0;) {
            if (pick[j] + (d - j) < pool) {
                ++pick[j];
                for (std::size_t k = j + 1; k < d; ++k) pick[k] = pick[k - 1] + 1;
                more = true;
                break;
            }
        }
    }
    return best;
}

}  // namespace fclda
