#include "fuzzylad/lad.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "fuzzylad/error.hpp"

namespace fuzzylad {

const char* to_string(Model m) {
    switch (m) {
        case Model::P0: return "P0";
        case Model::P: return "P";
        case Model::PUnit: return "PUnit";
        case Model::PSigma: return "PSigma";
        case Model::QSigma: return "QSigma";
    }
    return "?";
}

const char* to_string(Selection s) { return s == Selection::Vertex ? "vertex" : "balanced"; }

std::optional<Selection> parse_selection(std::string_view name) {
    if (name == "vertex") return Selection::Vertex;
    if (name == "balanced") return Selection::Balanced;
    return std::nullopt;
}

std::optional<Model> parse_model(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "p0") return Model::P0;
    if (s == "p") return Model::P;
    if (s == "punit") return Model::PUnit;
    if (s == "psigma") return Model::PSigma;
    if (s == "qsigma") return Model::QSigma;
    return std::nullopt;
}

SigmaConstraint::SigmaConstraint(const TrFN& value) : value_(value) {
    if (!strictly_positive(value)) throw ValidationError("sigma total must have strictly positive components");
}

double lad_objective(const TrFPR& x, std::span<const TrFN> utilities) {
    const std::size_t n = x.size();
    if (utilities.size() != n) throw ValidationError("utility vector length does not match the relation");
    const TrFN& t0 = x.neutral().value();
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            z += distance(add(x(i, j), t0), add(utilities[i], negate(utilities[j])));
        }
    }
    return z;
}

namespace {

bool uses_sigma(Model m) { return m == Model::PSigma || m == Model::QSigma; }

}  // namespace

lp::LinearProgram build_lp(const TrFPR& x, Model model, const std::optional<SigmaConstraint>& sigma) {
    if (uses_sigma(model) != sigma.has_value()) {
        throw ValidationError(std::string("model ") + to_string(model) +
                              (sigma ? " does not take a sigma total" : " requires a sigma total"));
    }
    const std::size_t n = x.size();
    const LadLayout at{n};
    const std::size_t vars = at.num_vars();
    const TrFN& t0 = x.neutral().value();

    lp::LinearProgram prog(vars);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t alpha = 0; alpha < 4; ++alpha) {
            switch (model) {
                case Model::P0: prog.set_bounds(at.utility(k, alpha), -lp::kInf, lp::kInf); break;
                case Model::PUnit: prog.set_bounds(at.utility(k, alpha), 0.0, 1.0); break;
                default: prog.set_bounds(at.utility(k, alpha), 0.0, lp::kInf); break;
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t alpha = 0; alpha < 4; ++alpha) {
                const std::size_t v = at.deviation(i, j, alpha);
                prog.set_objective_coefficient(v, 0.25);
                // deviation = x_ij + T0 - (u_i^alpha + 1 - u_j^mirror)
                const double c = x(i, j)[alpha] + t0[alpha] - 1.0;
                std::vector<double> row(vars, 0.0);
                row[v] = -1.0;
                row[at.utility(i, alpha)] = -1.0;
                row[at.utility(j, mirror(alpha))] = 1.0;
                prog.add_less_equal(row, -c);
                row[at.utility(i, alpha)] = 1.0;
                row[at.utility(j, mirror(alpha))] = -1.0;
                prog.add_less_equal(std::move(row), c);
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t alpha = 0; alpha + 1 < 4; ++alpha) {
            std::vector<double> row(vars, 0.0);
            row[at.utility(k, alpha)] = 1.0;
            row[at.utility(k, alpha + 1)] = -1.0;
            prog.add_less_equal(std::move(row), 0.0);
        }
    }
    if (sigma) {
        for (std::size_t alpha = 0; alpha < 4; ++alpha) {
            std::vector<double> row(vars, 0.0);
            for (std::size_t k = 0; k < n; ++k) row[at.utility(k, alpha)] = 1.0;
            prog.add_equality(std::move(row), sigma->value()[alpha]);
        }
    }
    return prog;
}

namespace {

lp::Solution solve_or_throw(const lp::LinearProgram& prog, Model model, const lp::Options& opts) {
    lp::Solution sol = lp::solve(prog, opts);
    switch (sol.status) {
        case lp::Status::Optimal: return sol;
        case lp::Status::Infeasible:
            throw Infeasible(std::string("model ") + to_string(model) + " has no feasible utility vector");
        default:
            throw SolverFailure(std::string("simplex stopped with status: ") + lp::to_string(sol.status));
    }
}

std::vector<std::array<double, 4>> utility_block(const lp::Solution& sol, std::size_t n) {
    const LadLayout at{n};
    std::vector<std::array<double, 4>> u(n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t alpha = 0; alpha < 4; ++alpha) u[k][alpha] = sol.x[at.utility(k, alpha)];
    }
    return u;
}

// Averages the optimal vertices that minimise and maximise each magnitude.
std::vector<std::array<double, 4>> balanced_point(lp::LinearProgram prog, std::size_t n, double z_star, Model model,
                                                  const DeriveOptions& opts) {
    const LadLayout at{n};
    const std::size_t vars = at.num_vars();
    std::vector<double> deviation_sum(vars, 0.0);
    for (std::size_t v = 4 * n; v < vars; ++v) deviation_sum[v] = 0.25;
    prog.add_less_equal(std::move(deviation_sum), z_star + opts.lp.feas_tol * std::max(1.0, z_star));

    std::vector<std::array<double, 4>> centre(n, std::array<double, 4>{});
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (double sense : {1.0, -1.0}) {
            std::vector<double> c(vars, 0.0);
            c[at.utility(i, 0)] = c[at.utility(i, 3)] = sense * opts.mag_weights.w1();
            c[at.utility(i, 1)] = c[at.utility(i, 2)] = sense * opts.mag_weights.w2();
            prog.set_objective(std::move(c));
            const auto u = utility_block(solve_or_throw(prog, model, opts.lp), n);
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t alpha = 0; alpha < 4; ++alpha) centre[k][alpha] += u[k][alpha];
            }
            ++count;
        }
    }
    for (auto& u : centre) {
        for (double& v : u) v /= static_cast<double>(count);
    }
    return centre;
}

}  // namespace

UtilityVector derive_utility(const TrFPR& x, Model model, const std::optional<SigmaConstraint>& sigma,
                             const DeriveOptions& opts) {
    if (opts.selection == Selection::Balanced && (model == Model::P0 || model == Model::P)) {
        throw ValidationError(std::string("balanced selection needs a bounded optimal face; model ") +
                              to_string(model) + " is invariant under crisp shifts");
    }
    const std::size_t n = x.size();
    lp::LinearProgram prog = build_lp(x, model, sigma);
    const lp::Solution sol = solve_or_throw(prog, model, opts.lp);
    auto raw = opts.selection == Selection::Balanced
                   ? balanced_point(std::move(prog), n, sol.objective_value, model, opts)
                   : utility_block(sol, n);

    UtilityVector out;
    out.model = model;
    out.utilities.reserve(n);
    for (auto& u : raw) {
        // Remove sub-tolerance ordering noise left by the simplex.
        if (model != Model::P0) u[0] = std::max(u[0], 0.0);
        for (std::size_t alpha = 1; alpha < 4; ++alpha) u[alpha] = std::max(u[alpha], u[alpha - 1]);
        out.utilities.push_back(TrFN::unchecked(u[0], u[1], u[2], u[3]));
    }
    out.objective = lad_objective(x, out.utilities);
    return out;
}

UtilityVector shift_normalize(const UtilityVector& u) {
    double lowest = 0.0;
    for (const auto& t : u.utilities) lowest = std::min(lowest, t.a());
    UtilityVector out = u;
    out.model = u.model == Model::P0 ? Model::P : u.model;
    if (lowest < 0.0) {
        const double delta = -lowest;
        for (auto& t : out.utilities) t = TrFN::unchecked(t.a() + delta, t.b() + delta, t.c() + delta, t.d() + delta);
    }
    return out;
}

UtilityVector derive_utility(const TrMPR& y, const DeriveOptions& opts) {
    return derive_utility(to_additive(y), Model::P, std::nullopt, opts);
}

UtilityVector derive_weights(const TrMPR& y, const SigmaConstraint& sigma, const DeriveOptions& opts) {
    return derive_utility(to_additive(y), Model::QSigma, sigma, opts);
}

UtilityVector fast_path_consistent(const TrFPR& x, std::size_t k) {
    if (k >= x.size()) throw ValidationError("column index out of range");
    const ConsistencyReport report = check_consistency(x);
    if (!report.consistent) throw NotConsistent("relation is not consistent; solve a LAD model instead");
    UtilityVector out;
    out.model = Model::P;
    for (std::size_t i = 0; i < x.size(); ++i) out.utilities.push_back(x(i, k));
    out.objective = lad_objective(x, out.utilities);
    return out;
}

}  // namespace fuzzylad
