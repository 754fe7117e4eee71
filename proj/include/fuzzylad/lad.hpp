#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fuzzylad/lp.hpp"
#include "fuzzylad/prefrel.hpp"
#include "fuzzylad/trfn.hpp"

namespace fuzzylad {

/// Which least-absolute-deviation model produced a utility vector.
enum class Model {
    P0,      ///< ordering constraints only
    P,       ///< plus u^a >= 0
    PUnit,   ///< plus 0 <= u^a and u^d <= 1
    PSigma,  ///< P plus componentwise total-sum equalities
    QSigma,  ///< PSigma on the additive image of a multiplicative relation
};

const char* to_string(Model m);
/// Parses "p0", "p", "punit", "psigma", "qsigma" (case-insensitive).
std::optional<Model> parse_model(std::string_view name);

/// Prescribed total of all utilities; every component strictly positive.
class SigmaConstraint {
public:
    explicit SigmaConstraint(const TrFN& value);
    const TrFN& value() const { return value_; }

private:
    TrFN value_;
};

/// How a point is picked from a (possibly non-unique) optimal face.
enum class Selection {
    Vertex,    ///< the basic solution the simplex stops at
    Balanced,  ///< centroid of the 2n optimal vertices that minimise and
               ///< maximise each alternative's magnitude
};

const char* to_string(Selection s);
std::optional<Selection> parse_selection(std::string_view name);

struct DeriveOptions {
    Selection selection = Selection::Vertex;
    MagWeights mag_weights{};
    lp::Options lp{};
};

struct UtilityVector {
    std::vector<TrFN> utilities;
    double objective = 0.0;
    Model model = Model::P;
};

/// Sum over all (i, j), diagonal included, of d(x_ij + T0, u_i + u_j°).
double lad_objective(const TrFPR& x, std::span<const TrFN> utilities);

/// Variable layout of the linearized model: 4n utility components followed
/// by 4n^2 deviation variables.
struct LadLayout {
    std::size_t n;
    std::size_t utility(std::size_t k, std::size_t alpha) const { return 4 * k + alpha; }
    std::size_t deviation(std::size_t i, std::size_t j, std::size_t alpha) const {
        return 4 * n + 4 * (i * n + j) + alpha;
    }
    std::size_t num_vars() const { return 4 * n + 4 * n * n; }
};

/// Linear program for the chosen model. `sigma` must be present exactly when
/// the model is PSigma or QSigma.
lp::LinearProgram build_lp(const TrFPR& x, Model model, const std::optional<SigmaConstraint>& sigma = std::nullopt);

/// Solves the model and returns the optimal utilities. The reported objective
/// is evaluated directly from the returned utilities.
/// Throws Infeasible when a sigma total cannot be met.
///
/// With Selection::Balanced the optimum is re-centred on the optimal face:
/// the extreme magnitudes of every alternative are found by 2n additional
/// solves restricted to the optimal objective, and their solutions averaged.
/// The average is optimal because the face is convex. Only the bounded
/// models (PUnit, PSigma, QSigma) accept it; P0 and P throw ValidationError.
UtilityVector derive_utility(const TrFPR& x, Model model = Model::PUnit,
                             const std::optional<SigmaConstraint>& sigma = std::nullopt,
                             const DeriveOptions& opts = {});

/// Adds the crisp shift -min_k u_k^a (when negative) to every utility. The
/// objective is carried over unchanged since the shift cancels in u_i + u_j°.
UtilityVector shift_normalize(const UtilityVector& u);

/// Unconstrained-sum utilities of a multiplicative relation (model P on its
/// additive image).
UtilityVector derive_utility(const TrMPR& y, const DeriveOptions& opts = {});

/// Normalized fuzzy weights of a multiplicative relation under a total.
UtilityVector derive_weights(const TrMPR& y, const SigmaConstraint& sigma, const DeriveOptions& opts = {});

/// Column k of a consistent relation as its exact utility vector.
/// Throws NotConsistent when the relation fails the 1e-9 consistency check.
UtilityVector fast_path_consistent(const TrFPR& x, std::size_t k);

}  // namespace fuzzylad
