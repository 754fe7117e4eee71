#include "fuzzylad/aggregate.hpp"

#include <cmath>
#include <future>
#include <numeric>

#include "fuzzylad/error.hpp"

namespace fuzzylad {

GroupWeights::GroupWeights(std::vector<double> weights) : w_(std::move(weights)) {
    if (w_.empty()) throw ValidationError("group weights are empty");
    for (double v : w_) {
        if (!(v >= 0.0)) throw ValidationError("group weights must be non-negative");
    }
    if (std::abs(std::accumulate(w_.begin(), w_.end(), 0.0) - 1.0) > 1e-12) {
        throw ValidationError("group weights must sum to 1");
    }
}

namespace {

// sum_k w_k t_k, skipping zero weights (scale() requires r > 0).
TrFN convex_combination(const GroupWeights& w, auto&& term) {
    TrFN acc = TrFN::unchecked(0.0, 0.0, 0.0, 0.0);
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] > 0.0) acc = add(acc, scale(w[k], term(k)));
    }
    return acc;
}

}  // namespace

TrFPR aggregate_relations(std::span<const TrFPR> relations, const GroupWeights& w) {
    if (relations.size() != w.size()) throw ValidationError("one weight per relation is required");
    const std::size_t n = relations.front().size();
    const NeutralElement& neutral = relations.front().neutral();
    for (const auto& x : relations) {
        if (x.size() != n) throw ValidationError("relations in a group must share the dimension");
        if (!(x.neutral() == neutral)) throw ValidationError("relations in a group must share the neutral element");
    }
    TrFNMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = convex_combination(w, [&](std::size_t k) -> const TrFN& { return relations[k](i, j); });
        }
    }
    return TrFPR(std::move(out), neutral);
}

UtilityVector aggregate_utilities(std::span<const UtilityVector> utilities, const GroupWeights& w,
                                  const TrFPR& aggregate) {
    if (utilities.size() != w.size()) throw ValidationError("one weight per utility vector is required");
    const std::size_t n = aggregate.size();
    for (const auto& u : utilities) {
        if (u.utilities.size() != n) throw ValidationError("utility vectors must all have length n");
    }
    UtilityVector out;
    out.model = utilities.front().model;
    for (std::size_t i = 0; i < n; ++i) {
        out.utilities.push_back(
            convex_combination(w, [&](std::size_t k) -> const TrFN& { return utilities[k].utilities[i]; }));
    }
    out.objective = lad_objective(aggregate, out.utilities);
    return out;
}

BoundsReport verify_bounds(std::span<const TrFPR> relations, const GroupWeights& w) {
    const TrFPR agg = aggregate_relations(relations, w);

    std::vector<std::future<UtilityVector>> jobs;
    jobs.reserve(relations.size());
    for (const auto& x : relations) {
        jobs.push_back(std::async(std::launch::async, [&x] { return derive_utility(x, Model::P); }));
    }
    std::vector<UtilityVector> experts;
    experts.reserve(jobs.size());
    for (auto& j : jobs) experts.push_back(j.get());

    BoundsReport r;
    r.z_star_agg = derive_utility(agg, Model::P).objective;
    r.z_agg_at_uc = aggregate_utilities(experts, w, agg).objective;
    for (std::size_t k = 0; k < experts.size(); ++k) r.weighted_sum += w[k] * experts[k].objective;
    constexpr double slack = 1e-7;
    r.holds = r.z_star_agg <= r.z_agg_at_uc + slack && r.z_agg_at_uc <= r.weighted_sum + slack;
    return r;
}

}  // namespace fuzzylad
