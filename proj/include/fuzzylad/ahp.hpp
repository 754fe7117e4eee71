#pragma once

#include <span>
#include <vector>

#include "fuzzylad/lad.hpp"
#include "fuzzylad/prefrel.hpp"
#include "fuzzylad/trfn.hpp"

namespace fuzzylad {

/// One-level fuzzy AHP: crisp criterion weights and one TrMPR per criterion.
class AhpProblem {
public:
    AhpProblem(std::vector<double> criteria_weights, std::vector<TrMPR> matrices, SigmaConstraint sigma,
               MagWeights mag_weights = MagWeights{}, Selection selection = Selection::Balanced);

    const std::vector<double>& criteria_weights() const { return criteria_weights_; }
    const std::vector<TrMPR>& matrices() const { return matrices_; }
    const SigmaConstraint& sigma() const { return sigma_; }
    const MagWeights& mag_weights() const { return mag_weights_; }
    /// Optimum picked from each criterion's optimal face.
    Selection selection() const { return selection_; }
    std::size_t alternatives() const { return matrices_.front().size(); }

private:
    std::vector<double> criteria_weights_;
    std::vector<TrMPR> matrices_;
    SigmaConstraint sigma_;
    MagWeights mag_weights_;
    Selection selection_;
};

struct AhpResult {
    std::vector<UtilityVector> local_weights;  ///< one per criterion
    std::vector<TrFN> global_weights;
    std::vector<double> magnitudes;
    std::vector<RankEntry> ranking;
    std::vector<double> per_criterion_objectives;
};

/// Local LAD weights per criterion (solved concurrently, merged in criterion
/// order), global weights as the criterion-weighted sum, ranking by magnitude.
/// Solver errors are rethrown with the 1-based criterion index prepended.
AhpResult run_ahp(const AhpProblem& p);

/// (a, b, c, d) / (a', b', c', d') = (a/d', b/c', c/b', d/a') for positive operands.
TrFN fuzzy_divide(const TrFN& x, const TrFN& y);

/// Arithmetic-mean baseline: normalized fuzzy row sums.
std::vector<TrFN> amm_weights(const TrMPR& y);
/// Geometric-mean baseline: normalized componentwise row geometric means.
std::vector<TrFN> gmm_weights(const TrMPR& y);

/// LAD objective of arbitrary weights against the additive image of y.
double deviation(const TrMPR& y, std::span<const TrFN> weights);

}  // namespace fuzzylad
