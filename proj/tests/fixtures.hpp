#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "fuzzylad/ahp.hpp"
#include "fuzzylad/prefrel.hpp"
#include "fuzzylad/trfn.hpp"

namespace fixtures {

using fuzzylad::NeutralElement;
using fuzzylad::Scale;
using fuzzylad::TrFN;
using fuzzylad::TrFNMatrix;
using fuzzylad::TrFPR;
using fuzzylad::TrMPR;

inline const TrFN kT0{0.4, 0.5, 0.5, 0.6};

inline TrFNMatrix matrix(const std::vector<std::vector<TrFN>>& rows) {
    TrFNMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

inline TrFPR sample_fpr() {
    return TrFPR(matrix({{kT0, {0.6, 0.7, 0.7, 0.8}, {0.6, 0.7, 0.8, 0.9}},
                         {{0.2, 0.3, 0.3, 0.4}, kT0, {0.5, 0.6, 0.7, 0.8}},
                         {{0.1, 0.2, 0.3, 0.4}, {0.2, 0.3, 0.4, 0.5}, kT0}}),
                 NeutralElement::additive(kT0));
}

inline TrFPR consistent_fpr() {
    return TrFPR(matrix({{kT0, {0.6, 0.7, 0.7, 0.8}, {0.7, 0.8, 0.8, 0.9}},
                         {{0.2, 0.3, 0.3, 0.4}, kT0, {0.5, 0.6, 0.6, 0.7}},
                         {{0.1, 0.2, 0.2, 0.3}, {0.3, 0.4, 0.4, 0.5}, kT0}}),
                 NeutralElement::additive(kT0));
}

/// 9^p, the building block of the multiplicative examples.
inline double p9(double p) { return std::pow(9.0, p); }

inline TrFN s0() { return TrFN(p9(-0.2), 1.0, 1.0, p9(0.2)); }

inline NeutralElement mult_neutral() { return NeutralElement::multiplicative(s0(), Scale(9)); }

inline TrMPR sample_mpr() {
    const TrFN s = s0();
    return TrMPR(matrix({{s, {p9(0.2), p9(0.4), p9(0.4), p9(0.6)}, {p9(0.2), p9(0.4), p9(0.6), p9(0.8)}},
                         {{p9(-0.6), p9(-0.4), p9(-0.4), p9(-0.2)}, s, {1.0, p9(0.2), p9(0.4), p9(0.6)}},
                         {{p9(-0.8), p9(-0.6), p9(-0.4), p9(-0.2)}, {p9(-0.6), p9(-0.4), p9(-0.2), 1.0}, s}}),
                 mult_neutral());
}

inline TrMPR land_y1() {
    const TrFN s = s0();
    return TrMPR(matrix({{s, {1.0 / 3, 1.0 / 2, 1.0 / 2, 1}, {2, 3, 3, 4}, {3, 4, 5, 6}},
                         {{1, 2, 2, 3}, s, {4, 5, 6, 7}, {5, 6, 7, 8}},
                         {{1.0 / 4, 1.0 / 3, 1.0 / 3, 1.0 / 2}, {1.0 / 7, 1.0 / 6, 1.0 / 5, 1.0 / 4}, s, {1, 1, 2, 3}},
                         {{1.0 / 6, 1.0 / 5, 1.0 / 4, 1.0 / 3}, {1.0 / 8, 1.0 / 7, 1.0 / 6, 1.0 / 5}, {1.0 / 3, 1.0 / 2, 1, 1}, s}}),
                 mult_neutral());
}

inline TrMPR land_y2() {
    const TrFN s = s0();
    return TrMPR(matrix({{s, {2, 3, 4, 5}, {5, 6, 7, 8}, {1, 1, 2, 3}},
                         {{1.0 / 5, 1.0 / 4, 1.0 / 3, 1.0 / 2}, s, {3, 4, 4, 5}, {1.0 / 3, 1.0 / 2, 1.0 / 2, 1}},
                         {{1.0 / 8, 1.0 / 7, 1.0 / 6, 1.0 / 5}, {1.0 / 5, 1.0 / 4, 1.0 / 4, 1.0 / 3}, s,
                          {1.0 / 6, 1.0 / 5, 1.0 / 4, 1.0 / 3}},
                         {{1.0 / 3, 1.0 / 2, 1, 1}, {1, 2, 2, 3}, {3, 4, 5, 6}, s}}),
                 mult_neutral());
}

inline TrMPR land_y3() {
    const TrFN s = s0();
    return TrMPR(matrix({{s, {2, 3, 3, 4}, {6, 7, 7, 8}, {4, 5, 5, 6}},
                         {{1.0 / 4, 1.0 / 3, 1.0 / 3, 1.0 / 2}, s, {4, 5, 5, 6}, {2, 3, 3, 4}},
                         {{1.0 / 8, 1.0 / 7, 1.0 / 7, 1.0 / 6}, {1.0 / 6, 1.0 / 5, 1.0 / 5, 1.0 / 4}, s,
                          {1.0 / 3, 1.0 / 3, 1.0 / 2, 1.0 / 2}},
                         {{1.0 / 6, 1.0 / 5, 1.0 / 5, 1.0 / 4}, {1.0 / 4, 1.0 / 3, 1.0 / 3, 1.0 / 2}, {2, 2, 3, 3}, s}}),
                 mult_neutral());
}

inline const TrFN kSigma{0.8, 0.9, 1.1, 1.2};

inline fuzzylad::AhpProblem land_problem(fuzzylad::Selection sel = fuzzylad::Selection::Balanced) {
    return fuzzylad::AhpProblem({0.5, 0.3, 0.2}, {land_y1(), land_y2(), land_y3()}, fuzzylad::SigmaConstraint(kSigma),
                                fuzzylad::MagWeights{}, sel);
}

/// Local weights printed for the land-project case, one block per criterion.
inline const std::array<std::array<TrFN, 4>, 3> kPrintedLocal{{
    {{{0.3000, 0.3291, 0.3713, 0.3713},
      {0.4577, 0.4868, 0.4868, 0.5073},
      {0.0423, 0.0790, 0.1628, 0.2423},
      {0.0000, 0.0051, 0.0791, 0.0791}}},
    {{{0.3711, 0.3711, 0.5155, 0.5712},
      {0.1500, 0.2134, 0.2134, 0.2577},
      {0.0000, 0.0000, 0.0000, 0.0000},
      {0.2789, 0.3155, 0.3711, 0.3711}}},
    {{{0.4244, 0.4996, 0.4996, 0.5732},
      {0.2667, 0.2667, 0.3667, 0.3667},
      {0.0000, 0.0004, 0.0248, 0.0512},
      {0.1089, 0.1333, 0.2089, 0.2089}}},
}};

// Random instances -----------------------------------------------------------

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

/// Four sorted uniforms in [lo, hi].
inline TrFN random_trfn(Rng& rng, double lo, double hi) {
    std::array<double, 4> v{uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
    std::sort(v.begin(), v.end());
    return TrFN(v[0], v[1], v[2], v[3]);
}

inline TrFN random_neutral(Rng& rng) {
    const double a = uniform(rng, 0.0, 0.5);
    const double b = uniform(rng, a, 0.5);
    return TrFN(a, b, 1.0 - b, 1.0 - a);
}

inline TrFPR random_trfpr(Rng& rng, std::size_t n, const TrFN& t0) {
    TrFNMatrix m(n, t0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = random_trfn(rng, 0.0, 1.0);
            m(j, i) = fuzzylad::negate(m(i, j));
        }
    }
    return TrFPR(m, NeutralElement::additive(t0));
}

/// Utilities whose spreads match t0, kept small enough that the consistent
/// relation they generate stays inside [0,1].
inline std::vector<TrFN> compatible_utilities(Rng& rng, std::size_t n, const TrFN& t0) {
    const double left = t0.b() - t0.a();
    const double core = t0.c() - t0.b();
    const double right = t0.d() - t0.c();
    // x_ij^a = u_i^a - u_j^a + t0^a must stay >= 0 and x_ij^d <= 1.
    const double room = std::min(t0.a(), 1.0 - t0.d());
    std::vector<TrFN> u;
    for (std::size_t k = 0; k < n; ++k) {
        const double base = uniform(rng, 0.0, room);
        u.emplace_back(base, base + left, base + left + core, base + left + core + right);
    }
    return u;
}

inline double max_component_gap(const TrFN& x, const TrFN& y) {
    double g = 0.0;
    for (std::size_t k = 0; k < 4; ++k) g = std::max(g, std::abs(x[k] - y[k]));
    return g;
}

}  // namespace fixtures
