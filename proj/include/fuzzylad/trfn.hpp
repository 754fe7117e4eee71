#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace fuzzylad {

/// Trapezoidal fuzzy number T(a, b, c, d) with a <= b <= c <= d.
///
/// Membership is 1 on [b, c] and falls linearly to 0 at a and d. The public
/// constructor validates the shape with exact comparisons; the arithmetic
/// below preserves the shape by construction and skips the check.
class TrFN {
public:
    constexpr TrFN() = default;
    TrFN(double a, double b, double c, double d);

    /// Crisp number r as the degenerate trapezoid T(r, r, r, r).
    static TrFN crisp(double r);

    /// Builds without validation; callers guarantee a <= b <= c <= d.
    static constexpr TrFN unchecked(double a, double b, double c, double d) {
        TrFN t;
        t.v_ = {a, b, c, d};
        return t;
    }

    constexpr double a() const { return v_[0]; }
    constexpr double b() const { return v_[1]; }
    constexpr double c() const { return v_[2]; }
    constexpr double d() const { return v_[3]; }

    /// Component by position 0..3 (a, b, c, d).
    constexpr double operator[](std::size_t i) const { return v_[i]; }
    constexpr const std::array<double, 4>& components() const { return v_; }

    bool operator==(const TrFN&) const = default;

    std::string to_string(int precision = 4) const;

private:
    std::array<double, 4> v_{0.0, 0.0, 0.0, 0.0};
};

/// Index of the component paired with `alpha` under negation (a<->d, b<->c).
constexpr std::size_t mirror(std::size_t alpha) { return 3 - alpha; }

/// Weights of the magnitude ranking functional w1(a + d) + w2(b + c).
class MagWeights {
public:
    /// (1/12, 5/12), i.e. Mag(T) = (a + 5b + 5c + d) / 12.
    MagWeights();
    /// Requires w1 > 0, w2 > 0 and 2(w1 + w2) = 1 within 1e-12.
    MagWeights(double w1, double w2);

    double w1() const { return w1_; }
    double w2() const { return w2_; }

private:
    double w1_;
    double w2_;
};

TrFN add(const TrFN& x, const TrFN& y);
TrFN sub(const TrFN& x, const TrFN& y);
/// r * T, r > 0.
TrFN scale(double r, const TrFN& t);
/// Componentwise product of strictly positive trapezoids.
TrFN mul(const TrFN& x, const TrFN& y);
/// Standard negation T(1 - d, 1 - c, 1 - b, 1 - a); defined on all reals.
TrFN negate(const TrFN& t);
/// Multiplicative inverse T(1/d, 1/c, 1/b, 1/a) of a strictly positive trapezoid.
TrFN invert(const TrFN& t);

inline TrFN operator+(const TrFN& x, const TrFN& y) { return add(x, y); }
inline TrFN operator-(const TrFN& x, const TrFN& y) { return sub(x, y); }

/// Normalized Manhattan distance: mean absolute componentwise difference.
double distance(const TrFN& x, const TrFN& y);

double magnitude(const TrFN& t, const MagWeights& w = MagWeights{});

/// True when every component is > 0.
bool strictly_positive(const TrFN& t);

/// Magnitudes closer than this are reported as ties.
inline constexpr double kRankTieTolerance = 1e-9;

/// One rank position; `tied_with_previous` marks a tie with the entry before.
struct RankEntry {
    std::size_t index;
    double magnitude;
    bool tied_with_previous;
};

/// Descending, stable order by magnitude. Adjacent magnitudes within
/// kRankTieTolerance are flagged as ties.
std::vector<RankEntry> rank(std::span<const TrFN> values, const MagWeights& w = MagWeights{});

/// Fixed-point rendering with round-half-even; never prints "-0.0000".
std::string format_fixed(double x, int precision = 4);

/// Renders a ranking as "A1 > A2 ~ A3" with 1-based labels.
std::string ranking_string(std::span<const RankEntry> ranking);

}  // namespace fuzzylad
