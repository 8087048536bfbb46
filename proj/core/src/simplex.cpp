#include "qms/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qms {

namespace {

constexpr double kReducedCostEps = 1e-9;
constexpr double kPivotEps = 1e-11;
constexpr long kIterationCap = 1000000;

// Dense tableau over the columns [original | artificial | rhs].  Artificial
// variables start basic and never re-enter once they leave.
class Tableau {
public:
    Tableau(const LinearFeasibilityProblem& problem)
        : n_(problem.variable_count), m_(static_cast<int>(problem.rows.size())) {
        row_sign_.assign(m_, 1.0);
        t_.assign(m_, std::vector<double>(n_ + m_ + 1, 0.0));
        basis_.resize(m_);
        for (int i = 0; i < m_; ++i) {
            const double sign = problem.rhs[i] < 0.0 ? -1.0 : 1.0;
            row_sign_[i] = sign;
            for (int j = 0; j < n_; ++j) t_[i][j] = sign * problem.rows[i][j];
            t_[i][n_ + i] = 1.0;
            t_[i][rhs_col()] = sign * problem.rhs[i];
            basis_[i] = n_ + i;
        }
        cost_.assign(n_ + m_ + 1, 0.0);
    }

    int rhs_col() const { return n_ + m_; }

    // Reduced costs for minimizing the sum of artificial variables.
    void load_phase1_cost() {
        std::fill(cost_.begin(), cost_.end(), 0.0);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j <= rhs_col(); ++j) cost_[j] -= t_[i][j];
        for (int i = 0; i < m_; ++i) cost_[n_ + i] += 1.0;
    }

    // Reduced costs for minimizing c.x (artificials already out of basis).
    void load_phase2_cost(std::span<const double> c) {
        std::fill(cost_.begin(), cost_.end(), 0.0);
        std::copy(c.begin(), c.end(), cost_.begin());
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] >= n_) continue;
            const double cb = c[basis_[i]];
            if (cb == 0.0) continue;
            for (int j = 0; j <= rhs_col(); ++j) cost_[j] -= cb * t_[i][j];
        }
    }

    // Bland's rule over the original columns; returns false at optimality.
    // Throws on the iteration cap; an unbounded ray sets *unbounded.
    bool pivot_step(bool* unbounded) {
        int entering = -1;
        for (int j = 0; j < n_; ++j)
            if (cost_[j] < -kReducedCostEps && !is_basic(j)) {
                entering = j;
                break;
            }
        if (entering < 0) return false;

        int leaving = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m_; ++i) {
            if (t_[i][entering] <= kPivotEps) continue;
            const double ratio = t_[i][rhs_col()] / t_[i][entering];
            if (ratio < best_ratio - 1e-15 ||
                (ratio < best_ratio + 1e-15 && (leaving < 0 || basis_[i] < basis_[leaving]))) {
                best_ratio = ratio;
                leaving = i;
            }
        }
        if (leaving < 0) {
            *unbounded = true;
            return false;
        }
        pivot(leaving, entering);
        return true;
    }

    void run(bool* unbounded) {
        *unbounded = false;
        for (long iter = 0; iter < kIterationCap; ++iter)
            if (!pivot_step(unbounded)) return;
        throw std::runtime_error("simplex: iteration cap exceeded, problem numerically degenerate");
    }

    void pivot(int row, int col) {
        const double inv = 1.0 / t_[row][col];
        for (double& x : t_[row]) x *= inv;
        t_[row][col] = 1.0;
        for (int i = 0; i < m_; ++i) {
            if (i == row || t_[i][col] == 0.0) continue;
            const double factor = t_[i][col];
            for (int j = 0; j <= rhs_col(); ++j) t_[i][j] -= factor * t_[row][j];
            t_[i][col] = 0.0;
        }
        if (cost_[col] != 0.0) {
            const double factor = cost_[col];
            for (int j = 0; j <= rhs_col(); ++j) cost_[j] -= factor * t_[row][j];
            cost_[col] = 0.0;
        }
        basis_[row] = col;
    }

    double artificial_total() const {
        double sum = 0.0;
        for (int i = 0; i < m_; ++i)
            if (basis_[i] >= n_) sum += t_[i][rhs_col()];
        return sum;
    }

    // Farkas vector in the original row order; y_i = sign_i * (1 - r_{n+i}).
    std::vector<double> farkas_certificate() const {
        std::vector<double> y(m_);
        for (int i = 0; i < m_; ++i) y[i] = row_sign_[i] * (1.0 - cost_[n_ + i]);
        double scale = 0.0;
        for (const double v : y) scale = std::max(scale, std::abs(v));
        if (scale > 0.0)
            for (double& v : y) v /= scale;
        return y;
    }

    // Pivot basic artificials onto original columns; drop rows that turn out
    // redundant (no nonzero original coefficient).
    void purge_artificials() {
        for (int i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            int col = -1;
            for (int j = 0; j < n_; ++j)
                if (std::abs(t_[i][j]) > kPivotEps && !is_basic(j)) {
                    col = j;
                    break;
                }
            if (col >= 0) {
                pivot(i, col);
            } else {
                t_.erase(t_.begin() + i);
                basis_.erase(basis_.begin() + i);
                row_sign_.erase(row_sign_.begin() + i);
                --m_;
                --i;
            }
        }
    }

    std::vector<double> solution() const {
        std::vector<double> x(n_, 0.0);
        for (int i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_[i][rhs_col()];
        return x;
    }

private:
    bool is_basic(int col) const {
        return std::find(basis_.begin(), basis_.end(), col) != basis_.end();
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<double>> t_;
    std::vector<double> cost_;
    std::vector<int> basis_;
    std::vector<double> row_sign_;
};

}  // namespace

void LinearFeasibilityProblem::validate() const {
    if (variable_count <= 0) throw std::invalid_argument("LinearFeasibilityProblem: no variables");
    if (rows.size() != rhs.size())
        throw std::invalid_argument("LinearFeasibilityProblem: row/rhs count mismatch");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != variable_count)
            throw std::invalid_argument("LinearFeasibilityProblem: inconsistent row length");
        for (const double v : row)
            if (!std::isfinite(v)) throw std::invalid_argument("LinearFeasibilityProblem: non-finite entry");
    }
    for (const double v : rhs)
        if (!std::isfinite(v)) throw std::invalid_argument("LinearFeasibilityProblem: non-finite rhs");
}

bool verify_feasible_point(const LinearFeasibilityProblem& problem, std::span<const double> x,
                           double tol) {
    if (static_cast<int>(x.size()) != problem.variable_count) return false;
    for (const double v : x)
        if (v < -tol) return false;
    for (std::size_t i = 0; i < problem.rows.size(); ++i) {
        double dot = 0.0;
        for (int j = 0; j < problem.variable_count; ++j) dot += problem.rows[i][j] * x[j];
        if (std::abs(dot - problem.rhs[i]) > tol) return false;
    }
    return true;
}

bool verify_infeasibility_certificate(const LinearFeasibilityProblem& problem,
                                      std::span<const double> y, double tol) {
    if (y.size() != problem.rows.size()) return false;
    for (int j = 0; j < problem.variable_count; ++j) {
        double dot = 0.0;
        for (std::size_t i = 0; i < problem.rows.size(); ++i) dot += y[i] * problem.rows[i][j];
        if (dot > tol) return false;
    }
    double yb = 0.0;
    for (std::size_t i = 0; i < problem.rows.size(); ++i) yb += y[i] * problem.rhs[i];
    return yb > 1e-9;
}

FeasibilityOutcome solve_feasibility(const LinearFeasibilityProblem& problem, double tol) {
    problem.validate();
    FeasibilityOutcome out;
    if (problem.rows.empty()) {
        out.status = FeasibilityStatus::Feasible;
        out.witness.assign(problem.variable_count, 0.0);
        return out;
    }

    Tableau tab(problem);
    tab.load_phase1_cost();
    bool unbounded = false;
    tab.run(&unbounded);
    if (unbounded) throw std::runtime_error("simplex: phase 1 reported unbounded");

    if (tab.artificial_total() > tol) {
        out.status = FeasibilityStatus::Infeasible;
        out.certificate = tab.farkas_certificate();
        if (!verify_infeasibility_certificate(problem, out.certificate, tol))
            throw std::runtime_error("simplex: infeasibility certificate failed re-validation");
        return out;
    }

    out.status = FeasibilityStatus::Feasible;
    out.witness = tab.solution();
    for (double& v : out.witness)
        if (v < 0.0) v = 0.0;  // clear roundoff dust
    if (!verify_feasible_point(problem, out.witness, tol))
        throw std::runtime_error("simplex: feasible witness failed re-validation");
    return out;
}

LinearProgramResult solve_linear_program(const LinearFeasibilityProblem& problem,
                                         std::span<const double> objective, bool maximize,
                                         double tol) {
    problem.validate();
    if (static_cast<int>(objective.size()) != problem.variable_count)
        throw std::invalid_argument("solve_linear_program: objective length mismatch");

    LinearProgramResult res;
    std::vector<double> c(objective.begin(), objective.end());
    if (maximize)
        for (double& v : c) v = -v;

    Tableau tab(problem);
    tab.load_phase1_cost();
    bool unbounded = false;
    tab.run(&unbounded);
    if (unbounded) throw std::runtime_error("simplex: phase 1 reported unbounded");

    if (tab.artificial_total() > tol) {
        res.status = LpStatus::Infeasible;
        res.certificate = tab.farkas_certificate();
        if (!verify_infeasibility_certificate(problem, res.certificate, tol))
            throw std::runtime_error("simplex: infeasibility certificate failed re-validation");
        return res;
    }

    tab.purge_artificials();
    tab.load_phase2_cost(c);
    tab.run(&unbounded);
    if (unbounded) {
        res.status = LpStatus::Unbounded;
        return res;
    }

    res.status = LpStatus::Optimal;
    res.x = tab.solution();
    for (double& v : res.x)
        if (v < 0.0) v = 0.0;
    if (!verify_feasible_point(problem, res.x, tol))
        throw std::runtime_error("simplex: optimal point failed re-validation");
    double obj = 0.0;
    for (int j = 0; j < problem.variable_count; ++j) obj += objective[j] * res.x[j];
    res.objective = obj;
    return res;
}

}  // namespace qms
