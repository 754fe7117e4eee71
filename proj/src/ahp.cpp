#include "fuzzylad/ahp.hpp"

#include <cmath>
#include <future>
#include <numeric>
#include <string>

#include "fuzzylad/error.hpp"

namespace fuzzylad {

AhpProblem::AhpProblem(std::vector<double> criteria_weights, std::vector<TrMPR> matrices, SigmaConstraint sigma,
                       MagWeights mag_weights, Selection selection)
    : criteria_weights_(std::move(criteria_weights)),
      matrices_(std::move(matrices)),
      sigma_(sigma),
      mag_weights_(mag_weights),
      selection_(selection) {
    if (matrices_.empty()) throw ValidationError("AHP problem needs at least one criterion");
    if (criteria_weights_.size() != matrices_.size()) {
        throw ValidationError("AHP problem needs one weight per criterion matrix");
    }
    for (double w : criteria_weights_) {
        if (!(w >= 0.0)) throw ValidationError("criterion weights must be non-negative");
    }
    if (std::abs(std::accumulate(criteria_weights_.begin(), criteria_weights_.end(), 0.0) - 1.0) > 1e-12) {
        throw ValidationError("criterion weights must sum to 1");
    }
    const auto& first = matrices_.front();
    for (std::size_t k = 1; k < matrices_.size(); ++k) {
        if (matrices_[k].size() != first.size()) {
            throw ValidationError("criterion " + std::to_string(k + 1) + " matrix has a different dimension");
        }
        if (!(matrices_[k].neutral() == first.neutral())) {
            throw ValidationError("criterion " + std::to_string(k + 1) + " matrix has a different neutral element");
        }
    }
}

AhpResult run_ahp(const AhpProblem& p) {
    const auto& mats = p.matrices();
    DeriveOptions opts;
    opts.selection = p.selection();
    opts.mag_weights = p.mag_weights();
    std::vector<std::future<UtilityVector>> jobs;
    jobs.reserve(mats.size());
    for (const auto& y : mats) {
        jobs.push_back(std::async(std::launch::async, [&y, &p, &opts] { return derive_weights(y, p.sigma(), opts); }));
    }

    AhpResult r;
    for (std::size_t k = 0; k < jobs.size(); ++k) {
        try {
            r.local_weights.push_back(jobs[k].get());
        } catch (const Infeasible& e) {
            throw Infeasible("criterion " + std::to_string(k + 1) + ": " + e.what());
        } catch (const SolverFailure& e) {
            throw SolverFailure("criterion " + std::to_string(k + 1) + ": " + e.what());
        }
        r.per_criterion_objectives.push_back(r.local_weights.back().objective);
    }

    const std::size_t n = p.alternatives();
    for (std::size_t i = 0; i < n; ++i) {
        TrFN acc = TrFN::unchecked(0.0, 0.0, 0.0, 0.0);
        for (std::size_t k = 0; k < mats.size(); ++k) {
            const double omega = p.criteria_weights()[k];
            if (omega > 0.0) acc = add(acc, scale(omega, r.local_weights[k].utilities[i]));
        }
        r.global_weights.push_back(acc);
        r.magnitudes.push_back(magnitude(acc, p.mag_weights()));
    }
    r.ranking = rank(r.global_weights, p.mag_weights());
    return r;
}

TrFN fuzzy_divide(const TrFN& x, const TrFN& y) {
    if (!strictly_positive(y)) throw ValidationError("fuzzy division needs a strictly positive divisor");
    return TrFN::unchecked(x.a() / y.d(), x.b() / y.c(), x.c() / y.b(), x.d() / y.a());
}

namespace {

std::vector<TrFN> normalize_rows(const std::vector<TrFN>& rows) {
    TrFN total = TrFN::unchecked(0.0, 0.0, 0.0, 0.0);
    for (const auto& r : rows) total = add(total, r);
    std::vector<TrFN> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(fuzzy_divide(r, total));
    return out;
}

}  // namespace

std::vector<TrFN> amm_weights(const TrMPR& y) {
    const std::size_t n = y.size();
    std::vector<TrFN> rows;
    for (std::size_t i = 0; i < n; ++i) {
        TrFN s = TrFN::unchecked(0.0, 0.0, 0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) s = add(s, y(i, j));
        rows.push_back(s);
    }
    return normalize_rows(rows);
}

std::vector<TrFN> gmm_weights(const TrMPR& y) {
    const std::size_t n = y.size();
    std::vector<TrFN> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::array<double, 4> log_sum{};
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t alpha = 0; alpha < 4; ++alpha) log_sum[alpha] += std::log(y(i, j)[alpha]);
        }
        const double inv_n = 1.0 / static_cast<double>(n);
        rows.push_back(TrFN::unchecked(std::exp(log_sum[0] * inv_n), std::exp(log_sum[1] * inv_n),
                                       std::exp(log_sum[2] * inv_n), std::exp(log_sum[3] * inv_n)));
    }
    return normalize_rows(rows);
}

double deviation(const TrMPR& y, std::span<const TrFN> weights) {
    if (weights.size() != y.size()) throw ValidationError("one weight per alternative is required");
    return lad_objective(to_additive(y), weights);
}

}  // namespace fuzzylad
