#include "fuzzylad/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fuzzylad::lp {

LinearProgram::LinearProgram(std::size_t num_vars) : objective_(num_vars, 0.0), bounds_(num_vars) {}

void LinearProgram::check_row(const std::vector<double>& row) const {
    if (row.size() != num_vars()) {
        throw std::invalid_argument("constraint row has " + std::to_string(row.size()) + " coefficients, expected " +
                                    std::to_string(num_vars()));
    }
}

void LinearProgram::set_objective(std::vector<double> c) {
    check_row(c);
    objective_ = std::move(c);
}

void LinearProgram::set_objective_coefficient(std::size_t var, double c) { objective_.at(var) = c; }

void LinearProgram::set_bounds(std::size_t var, double lower, double upper) {
    if (std::isnan(lower) || std::isnan(upper) || lower > upper || lower == kInf || upper == -kInf) {
        throw std::invalid_argument("invalid bounds for variable " + std::to_string(var));
    }
    bounds_.at(var) = {lower, upper};
}

void LinearProgram::add_equality(std::vector<double> coefficients, double rhs) {
    check_row(coefficients);
    eq_.push_back({std::move(coefficients), rhs});
}

void LinearProgram::add_less_equal(std::vector<double> coefficients, double rhs) {
    check_row(coefficients);
    ub_.push_back({std::move(coefficients), rhs});
}

const char* to_string(Status s) {
    switch (s) {
        case Status::Optimal: return "optimal";
        case Status::Infeasible: return "infeasible";
        case Status::Unbounded: return "unbounded";
        case Status::IterationLimit: return "iteration limit";
    }
    return "unknown";
}

double max_violation(const LinearProgram& lp, const std::vector<double>& x) {
    auto dot = [&](const std::vector<double>& r) {
        double s = 0.0;
        for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
        return s;
    };
    double worst = 0.0;
    for (const auto& r : lp.equalities()) worst = std::max(worst, std::abs(dot(r.coefficients) - r.rhs));
    for (const auto& r : lp.inequalities()) worst = std::max(worst, dot(r.coefficients) - r.rhs);
    for (std::size_t j = 0; j < x.size(); ++j) {
        worst = std::max({worst, lp.bounds()[j].lower - x[j], x[j] - lp.bounds()[j].upper});
    }
    return worst;
}

namespace {

// How an original variable is expressed through non-negative columns.
struct VarMap {
    enum class Kind { Shift, Reflect, Split } kind;
    std::size_t col;
    double offset;  // lower bound for Shift, upper bound for Reflect
};

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_(rows * (cols + 1), 0.0), z_(cols + 1, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
    double at(std::size_t i, std::size_t j) const { return t_[i * (cols_ + 1) + j]; }
    double& rhs(std::size_t i) { return at(i, cols_); }
    double rhs(std::size_t i) const { return at(i, cols_); }
    double& z(std::size_t j) { return z_[j]; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void pivot(std::size_t r, std::size_t e) {
        const std::size_t w = cols_ + 1;
        double* pr = &t_[r * w];
        const double inv = 1.0 / pr[e];
        for (std::size_t j = 0; j < w; ++j) pr[j] *= inv;
        pr[e] = 1.0;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r) continue;
            double* pi = &t_[i * w];
            const double f = pi[e];
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < w; ++j) pi[j] -= f * pr[j];
            pi[e] = 0.0;
        }
        const double f = z_[e];
        if (f != 0.0) {
            for (std::size_t j = 0; j < w; ++j) z_[j] -= f * pr[j];
            z_[e] = 0.0;
        }
    }

    void drop_row(std::size_t r) {
        const std::size_t w = cols_ + 1;
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r * w), t_.begin() + static_cast<std::ptrdiff_t>((r + 1) * w));
        --rows_;
    }

    void reset_objective() { std::fill(z_.begin(), z_.end(), 0.0); }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> t_;
    std::vector<double> z_;  // reduced costs; last entry is -objective
};

enum class PhaseResult { Optimal, Unbounded, IterationLimit };

class Simplex {
public:
    Simplex(Tableau& tab, std::vector<std::size_t>& basis, const Options& opts, std::size_t& iterations)
        : tab_(tab), basis_(basis), opts_(opts), iterations_(iterations) {}

    PhaseResult run(std::size_t allowed_cols) {
        bool bland = false;
        std::size_t stall = 0;
        for (;;) {
            const std::size_t e = choose_entering(allowed_cols, bland);
            if (e == kNone) return PhaseResult::Optimal;
            const std::size_t r = choose_leaving(e);
            if (r == kNone) return PhaseResult::Unbounded;
            if (++iterations_ > opts_.max_iters) return PhaseResult::IterationLimit;

            const double step = std::max(tab_.rhs(r), 0.0) / tab_.at(r, e);
            const double improvement = -tab_.z(e) * step;
            stall = improvement <= 1e-12 ? stall + 1 : 0;
            if (stall >= opts_.stall_threshold) bland = true;

            tab_.pivot(r, e);
            basis_[r] = e;
        }
    }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::size_t choose_entering(std::size_t allowed_cols, bool bland) {
        std::size_t best = kNone;
        double best_cost = -opts_.feas_tol;
        for (std::size_t j = 0; j < allowed_cols; ++j) {
            const double d = tab_.z(j);
            if (d < best_cost) {
                best = j;
                if (bland) break;
                best_cost = d;
            }
        }
        return best;
    }

    std::size_t choose_leaving(std::size_t e) {
        std::size_t best = kNone;
        double best_ratio = 0.0;
        for (std::size_t i = 0; i < tab_.rows(); ++i) {
            const double a = tab_.at(i, e);
            if (a <= opts_.pivot_tol) continue;
            const double ratio = std::max(tab_.rhs(i), 0.0) / a;
            if (best == kNone || ratio < best_ratio - 1e-12 ||
                (ratio <= best_ratio + 1e-12 && basis_[i] < basis_[best])) {
                best = i;
                best_ratio = ratio;
            }
        }
        return best;
    }

    Tableau& tab_;
    std::vector<std::size_t>& basis_;
    const Options& opts_;
    std::size_t& iterations_;
};

}  // namespace

Solution solve(const LinearProgram& lp, const Options& opts) {
    const std::size_t n = lp.num_vars();

    // Express every variable through non-negative columns.
    std::vector<VarMap> vars;
    vars.reserve(n);
    std::size_t structural = 0;
    std::vector<std::pair<std::size_t, double>> column_upper;  // (column, width) for doubly bounded vars
    for (std::size_t j = 0; j < n; ++j) {
        const Bound& b = lp.bounds()[j];
        if (std::isfinite(b.lower)) {
            vars.push_back({VarMap::Kind::Shift, structural, b.lower});
            if (std::isfinite(b.upper)) column_upper.emplace_back(structural, b.upper - b.lower);
            structural += 1;
        } else if (std::isfinite(b.upper)) {
            vars.push_back({VarMap::Kind::Reflect, structural, b.upper});
            structural += 1;
        } else {
            vars.push_back({VarMap::Kind::Split, structural, 0.0});
            structural += 2;
        }
    }

    struct StdRow {
        std::vector<double> a;
        double rhs;
        bool equality;
    };
    std::vector<StdRow> rows;
    auto transform = [&](const Row& r, bool equality) {
        StdRow s{std::vector<double>(structural, 0.0), r.rhs, equality};
        for (std::size_t j = 0; j < n; ++j) {
            const double c = r.coefficients[j];
            if (c == 0.0) continue;
            const VarMap& v = vars[j];
            switch (v.kind) {
                case VarMap::Kind::Shift:
                    s.a[v.col] += c;
                    s.rhs -= c * v.offset;
                    break;
                case VarMap::Kind::Reflect:
                    s.a[v.col] -= c;
                    s.rhs -= c * v.offset;
                    break;
                case VarMap::Kind::Split:
                    s.a[v.col] += c;
                    s.a[v.col + 1] -= c;
                    break;
            }
        }
        rows.push_back(std::move(s));
    };
    for (const auto& r : lp.equalities()) transform(r, true);
    for (const auto& r : lp.inequalities()) transform(r, false);
    for (const auto& [col, width] : column_upper) {
        StdRow s{std::vector<double>(structural, 0.0), width, false};
        s.a[col] = 1.0;
        rows.push_back(std::move(s));
    }

    const std::size_t m = rows.size();
    std::size_t slacks = 0;
    for (const auto& r : rows) slacks += r.equality ? 0 : 1;
    std::size_t artificials = 0;
    for (const auto& r : rows) artificials += (r.equality || r.rhs < 0.0) ? 1 : 0;

    const std::size_t cols = structural + slacks + artificials;
    Tableau tab(m, cols);
    std::vector<std::size_t> basis(m);
    std::size_t next_slack = structural;
    std::size_t next_art = structural + slacks;
    for (std::size_t i = 0; i < m; ++i) {
        const StdRow& r = rows[i];
        const double sign = r.rhs < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < structural; ++j) tab.at(i, j) = sign * r.a[j];
        tab.rhs(i) = sign * r.rhs;
        if (!r.equality) tab.at(i, next_slack) = sign;
        if (r.equality || sign < 0.0) {
            tab.at(i, next_art) = 1.0;
            basis[i] = next_art++;
        } else {
            basis[i] = next_slack;
        }
        if (!r.equality) ++next_slack;
    }

    Solution sol;
    Simplex simplex(tab, basis, opts, sol.iterations);
    const std::size_t first_art = structural + slacks;

    if (artificials > 0) {
        // Phase 1: minimise the sum of artificials.
        tab.reset_objective();
        for (std::size_t j = first_art; j < cols; ++j) tab.z(j) = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] < first_art) continue;
            for (std::size_t j = 0; j <= cols; ++j) tab.z(j) -= tab.at(i, j);
        }
        const PhaseResult p1 = simplex.run(cols);
        if (p1 == PhaseResult::IterationLimit) {
            sol.status = Status::IterationLimit;
            return sol;
        }
        if (-tab.z(cols) > opts.feas_tol) {
            sol.status = Status::Infeasible;
            return sol;
        }
        // Drive remaining zero-level artificials out of the basis.
        for (std::size_t i = 0; i < tab.rows();) {
            if (basis[i] < first_art) {
                ++i;
                continue;
            }
            std::size_t e = first_art;
            for (std::size_t j = 0; j < first_art; ++j) {
                if (std::abs(tab.at(i, j)) > opts.pivot_tol) {
                    e = j;
                    break;
                }
            }
            if (e < first_art) {
                tab.pivot(i, e);
                basis[i] = e;
                ++i;
            } else {
                tab.drop_row(i);  // redundant constraint
                basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    // Phase 2 on the structural objective; artificials may not re-enter.
    tab.reset_objective();
    for (std::size_t j = 0; j < n; ++j) {
        const double c = lp.objective()[j];
        const VarMap& v = vars[j];
        switch (v.kind) {
            case VarMap::Kind::Shift: tab.z(v.col) += c; break;
            case VarMap::Kind::Reflect: tab.z(v.col) -= c; break;
            case VarMap::Kind::Split:
                tab.z(v.col) += c;
                tab.z(v.col + 1) -= c;
                break;
        }
    }
    for (std::size_t i = 0; i < tab.rows(); ++i) {
        const double f = tab.z(basis[i]);
        if (f == 0.0) continue;
        for (std::size_t j = 0; j <= cols; ++j) tab.z(j) -= f * tab.at(i, j);
    }
    const PhaseResult p2 = simplex.run(first_art);
    if (p2 == PhaseResult::IterationLimit) {
        sol.status = Status::IterationLimit;
        return sol;
    }
    if (p2 == PhaseResult::Unbounded) {
        sol.status = Status::Unbounded;
        return sol;
    }

    std::vector<double> y(cols, 0.0);
    for (std::size_t i = 0; i < tab.rows(); ++i) y[basis[i]] = std::max(tab.rhs(i), 0.0);
    sol.x.assign(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        const VarMap& v = vars[j];
        switch (v.kind) {
            case VarMap::Kind::Shift: sol.x[j] = v.offset + y[v.col]; break;
            case VarMap::Kind::Reflect: sol.x[j] = v.offset - y[v.col]; break;
            case VarMap::Kind::Split: sol.x[j] = y[v.col] - y[v.col + 1]; break;
        }
    }
    sol.objective_value = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.objective_value += lp.objective()[j] * sol.x[j];
    sol.status = Status::Optimal;
    return sol;
}

}  // namespace fuzzylad::lp
