#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace fuzzylad::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Bound {
    double lower = 0.0;
    double upper = kInf;
};

struct Row {
    std::vector<double> coefficients;
    double rhs = 0.0;
};

/// min c^T x  s.t.  A_eq x = b_eq,  A_ub x <= b_ub,  lower <= x <= upper.
class LinearProgram {
public:
    /// All variables start with bounds [0, +inf) and a zero objective.
    explicit LinearProgram(std::size_t num_vars);

    std::size_t num_vars() const { return objective_.size(); }

    void set_objective(std::vector<double> c);
    void set_objective_coefficient(std::size_t var, double c);
    void set_bounds(std::size_t var, double lower, double upper);
    void add_equality(std::vector<double> coefficients, double rhs);
    void add_less_equal(std::vector<double> coefficients, double rhs);

    const std::vector<double>& objective() const { return objective_; }
    const std::vector<Row>& equalities() const { return eq_; }
    const std::vector<Row>& inequalities() const { return ub_; }
    const std::vector<Bound>& bounds() const { return bounds_; }

private:
    void check_row(const std::vector<double>& row) const;

    std::vector<double> objective_;
    std::vector<Row> eq_;
    std::vector<Row> ub_;
    std::vector<Bound> bounds_;
};

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

const char* to_string(Status s);

struct Solution {
    Status status = Status::Infeasible;
    std::vector<double> x;
    double objective_value = 0.0;
    std::size_t iterations = 0;
};

struct Options {
    double feas_tol = 1e-9;
    double pivot_tol = 1e-10;
    std::size_t max_iters = 100000;
    /// Consecutive non-improving pivots before switching to Bland's rule.
    std::size_t stall_threshold = 50;
};

/// Dense two-phase primal simplex.
///
/// Entering variable: most negative reduced cost (lowest index on ties) until
/// `stall_threshold` consecutive degenerate pivots, then Bland's rule for the
/// rest of the phase. Leaving variable: minimum ratio, ties broken by the
/// lowest basic variable index. The procedure is deterministic.
Solution solve(const LinearProgram& lp, const Options& opts = {});

/// Largest violation of any constraint or bound at x.
double max_violation(const LinearProgram& lp, const std::vector<double>& x);

}  // namespace fuzzylad::lp
