#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "fuzzylad/trfn.hpp"

namespace fuzzylad {

/// Ratio-scale bound m of a multiplicative relation; an integer >= 2.
class Scale {
public:
    explicit Scale(int m);
    int value() const { return m_; }
    double lower() const { return 1.0 / m_; }
    double upper() const { return static_cast<double>(m_); }

private:
    int m_;
};

/// Neutral (indifference) trapezoid of a relation.
///
/// Additive: fixed point of negation inside [0,1], so a + d = 1 and b + c = 1.
/// Multiplicative: fixed point of inversion inside [1/m, m], so a*d = b*c = 1.
/// Both fixed-point equalities are checked within 1e-12.
class NeutralElement {
public:
    enum class Kind { Additive, Multiplicative };

    static NeutralElement additive(const TrFN& value);
    static NeutralElement multiplicative(const TrFN& value, Scale m);

    const TrFN& value() const { return value_; }
    Kind kind() const { return kind_; }
    /// Only meaningful for multiplicative neutrals.
    Scale scale() const { return scale_; }

    bool operator==(const NeutralElement& o) const {
        return value_ == o.value_ && kind_ == o.kind_ && scale_.value() == o.scale_.value();
    }

private:
    NeutralElement(TrFN v, Kind k, Scale m) : value_(v), kind_(k), scale_(m) {}
    TrFN value_;
    Kind kind_;
    Scale scale_;
};

/// Dense row-major n x n matrix of trapezoids.
class TrFNMatrix {
public:
    TrFNMatrix() = default;
    explicit TrFNMatrix(std::size_t n, const TrFN& fill = TrFN{}) : n_(n), cells_(n * n, fill) {}

    std::size_t size() const { return n_; }
    const TrFN& operator()(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }
    TrFN& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }

private:
    std::size_t n_ = 0;
    std::vector<TrFN> cells_;
};

/// Additive trapezoidal fuzzy preference relation.
///
/// Every entry lies in [0,1], the diagonal equals the neutral and
/// x_ji is the negation of x_ij. Construction checks reciprocity and the
/// diagonal to 1e-12 absolute and then stores the lower triangle as the exact
/// negation of the upper one, so downstream code sees exact reciprocity.
class TrFPR {
public:
    TrFPR(TrFNMatrix entries, NeutralElement neutral);

    std::size_t size() const { return entries_.size(); }
    const TrFN& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const TrFNMatrix& entries() const { return entries_; }
    const NeutralElement& neutral() const { return neutral_; }

private:
    TrFNMatrix entries_;
    NeutralElement neutral_;
};

/// Multiplicative trapezoidal fuzzy preference relation on scale m.
///
/// Entries lie in [1/m, m], the diagonal equals the neutral and
/// y_ij = I(y_ji). Reciprocity and the diagonal are checked to 1e-9 relative;
/// the lower triangle is then stored as the exact inverse of the upper one.
class TrMPR {
public:
    TrMPR(TrFNMatrix entries, NeutralElement neutral);

    std::size_t size() const { return entries_.size(); }
    Scale scale() const { return neutral_.scale(); }
    const TrFN& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const TrFNMatrix& entries() const { return entries_; }
    const NeutralElement& neutral() const { return neutral_; }

private:
    TrFNMatrix entries_;
    NeutralElement neutral_;
};

/// m^(2x - 1) for x in [0,1].
double phi(double x, Scale m);
/// 1/2 + 1/2 log_m(y) for y in [1/m, m].
double phi_inv(double y, Scale m);

/// Componentwise phi; monotone, so the trapezoid shape is kept.
TrFN phi(const TrFN& t, Scale m);
TrFN phi_inv(const TrFN& t, Scale m);

TrMPR to_multiplicative(const TrFPR& x, Scale m);
TrFPR to_additive(const TrMPR& y);

struct ConsistencyReport {
    bool consistent = true;
    double max_violation = 0.0;
    /// 0-based (i, j, k) of the first triple reaching max_violation.
    std::array<std::size_t, 3> worst_triple{0, 0, 0};
    /// Every triple whose violation exceeds the tolerance, in (i, j, k) order.
    std::vector<std::array<std::size_t, 3>> violating;
};

inline constexpr double kConsistencyTolerance = 1e-9;

/// max over (i, j, k) of d(x_ij + T0, x_ik + x_kj).
ConsistencyReport check_consistency(const TrFPR& x, double tol = kConsistencyTolerance);
/// max over (i, j, k) of d(y_ij * S0, y_ik * y_kj).
ConsistencyReport check_consistency(const TrMPR& y, double tol = kConsistencyTolerance);

/// Builds the consistent relation x_ij = u_i + u_j° - T0 (componentwise,
/// with the mirrored component of u_j). Throws OutOfUnitInterval when an
/// entry leaves [0,1] or loses the trapezoid shape, and when the diagonal does
/// not reproduce the neutral, which happens if a utility's spreads differ
/// from the neutral's.
TrFPR from_utilities(std::span<const TrFN> utilities, const NeutralElement& neutral);

}  // namespace fuzzylad
