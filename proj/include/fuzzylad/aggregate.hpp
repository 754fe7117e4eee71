#pragma once

#include <span>
#include <vector>

#include "fuzzylad/lad.hpp"
#include "fuzzylad/prefrel.hpp"

namespace fuzzylad {

/// Non-negative expert weights summing to one (within 1e-12).
class GroupWeights {
public:
    explicit GroupWeights(std::vector<double> weights);
    std::size_t size() const { return w_.size(); }
    double operator[](std::size_t k) const { return w_[k]; }
    const std::vector<double>& values() const { return w_; }

private:
    std::vector<double> w_;
};

/// Entrywise convex combination of relations sharing dimension and neutral.
TrFPR aggregate_relations(std::span<const TrFPR> relations, const GroupWeights& w);

/// Componentwise convex combination of utility vectors. The objective of the
/// result is evaluated against `aggregate`, the relation it is meant to fit.
UtilityVector aggregate_utilities(std::span<const UtilityVector> utilities, const GroupWeights& w,
                                  const TrFPR& aggregate);

struct BoundsReport {
    double z_star_agg = 0.0;    ///< optimal objective on the aggregated relation
    double z_agg_at_uc = 0.0;   ///< objective of the aggregated utilities on it
    double weighted_sum = 0.0;  ///< sum_k w_k times each expert's optimum
    bool holds = false;
};

/// Evaluates the group bound chain z_star_agg <= z_agg_at_uc <= weighted_sum
/// with model P for every solve, allowing 1e-7 slack on each inequality.
/// Per-expert solves run concurrently.
BoundsReport verify_bounds(std::span<const TrFPR> relations, const GroupWeights& w);

}  // namespace fuzzylad
