#include "fuzzylad/prefrel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzylad/error.hpp"

namespace fuzzylad {

namespace {

constexpr double kFixedPointTol = 1e-12;
constexpr double kAdditiveReciprocityTol = 1e-12;
constexpr double kMultiplicativeReciprocityTol = 1e-9;
constexpr double kRangeSlack = 1e-12;

std::string cell(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool in_unit_interval(const TrFN& t) { return t.a() >= 0.0 && t.d() <= 1.0; }

bool within_scale(const TrFN& t, Scale m) {
    return t.a() >= m.lower() * (1.0 - kRangeSlack) && t.d() <= m.upper() * (1.0 + kRangeSlack);
}

double max_abs_diff(const TrFN& x, const TrFN& y) {
    double r = 0.0;
    for (std::size_t k = 0; k < 4; ++k) r = std::max(r, std::abs(x[k] - y[k]));
    return r;
}

double max_rel_diff(const TrFN& x, const TrFN& y) {
    double r = 0.0;
    for (std::size_t k = 0; k < 4; ++k) r = std::max(r, std::abs(x[k] - y[k]) / std::abs(y[k]));
    return r;
}

}  // namespace

Scale::Scale(int m) : m_(m) {
    if (m < 2) throw ValidationError("scale m must be an integer >= 2, got " + std::to_string(m));
}

NeutralElement NeutralElement::additive(const TrFN& v) {
    if (!in_unit_interval(v)) throw ValidationError("neutral element " + v.to_string() + " is not inside [0,1]");
    if (std::abs(v.a() + v.d() - 1.0) > kFixedPointTol) {
        throw ValidationError("neutral element " + v.to_string() +
                              " is not a fixed point of negation (a + d != 1)");
    }
    if (std::abs(v.b() + v.c() - 1.0) > kFixedPointTol) {
        throw ValidationError("neutral element " + v.to_string() +
                              " is not a fixed point of negation (b + c != 1)");
    }
    return NeutralElement(v, Kind::Additive, Scale(2));
}

NeutralElement NeutralElement::multiplicative(const TrFN& v, Scale m) {
    if (!strictly_positive(v) || !within_scale(v, m)) {
        throw ValidationError("neutral element " + v.to_string() + " is not inside [1/m, m] for m = " +
                              std::to_string(m.value()));
    }
    if (std::abs(v.a() * v.d() - 1.0) > kFixedPointTol) {
        throw ValidationError("neutral element " + v.to_string() +
                              " is not a fixed point of inversion (a * d != 1)");
    }
    if (std::abs(v.b() * v.c() - 1.0) > kFixedPointTol) {
        throw ValidationError("neutral element " + v.to_string() +
                              " is not a fixed point of inversion (b * c != 1)");
    }
    return NeutralElement(v, Kind::Multiplicative, m);
}

TrFPR::TrFPR(TrFNMatrix entries, NeutralElement neutral) : entries_(std::move(entries)), neutral_(neutral) {
    if (neutral_.kind() != NeutralElement::Kind::Additive) {
        throw ValidationError("a TrFPR needs an additive neutral element");
    }
    const std::size_t n = entries_.size();
    if (n == 0) throw ValidationError("preference relation must have at least one alternative");
    const TrFN& t0 = neutral_.value();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!in_unit_interval(entries_(i, j))) {
                throw ValidationError("entry " + cell(i, j) + " is not inside [0,1]");
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (max_abs_diff(entries_(k, k), t0) > kAdditiveReciprocityTol) {
            throw ValidationError("diagonal entry " + cell(k, k) + " does not equal the neutral element");
        }
        entries_(k, k) = t0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const TrFN expected = negate(entries_(i, j));
            if (max_abs_diff(entries_(j, i), expected) > kAdditiveReciprocityTol) {
                throw ValidationError("entry " + cell(j, i) + " is not the negation of entry " + cell(i, j));
            }
            entries_(j, i) = expected;
        }
    }
}

TrMPR::TrMPR(TrFNMatrix entries, NeutralElement neutral) : entries_(std::move(entries)), neutral_(neutral) {
    if (neutral_.kind() != NeutralElement::Kind::Multiplicative) {
        throw ValidationError("a TrMPR needs a multiplicative neutral element");
    }
    const std::size_t n = entries_.size();
    if (n == 0) throw ValidationError("preference relation must have at least one alternative");
    const Scale m = neutral_.scale();
    const TrFN& s0 = neutral_.value();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!strictly_positive(entries_(i, j)) || !within_scale(entries_(i, j), m)) {
                throw ValidationError("entry " + cell(i, j) + " is not inside [1/m, m] for m = " +
                                      std::to_string(m.value()));
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (max_rel_diff(entries_(k, k), s0) > kMultiplicativeReciprocityTol) {
            throw ValidationError("diagonal entry " + cell(k, k) + " does not equal the neutral element");
        }
        entries_(k, k) = s0;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const TrFN expected = invert(entries_(i, j));
            if (max_rel_diff(entries_(j, i), expected) > kMultiplicativeReciprocityTol) {
                throw ValidationError("entry " + cell(j, i) + " is not the inverse of entry " + cell(i, j));
            }
            entries_(j, i) = expected;
        }
    }
}

double phi(double x, Scale m) {
    if (!(x >= 0.0 && x <= 1.0)) throw ValidationError("additive preference must lie in [0,1]");
    return std::pow(m.upper(), 2.0 * x - 1.0);
}

double phi_inv(double y, Scale m) {
    if (!(y >= m.lower() * (1.0 - kRangeSlack) && y <= m.upper() * (1.0 + kRangeSlack))) {
        throw ValidationError("multiplicative preference must lie in [1/m, m]");
    }
    return std::clamp(0.5 + 0.5 * std::log(y) / std::log(m.upper()), 0.0, 1.0);
}

TrFN phi(const TrFN& t, Scale m) {
    return TrFN::unchecked(phi(t.a(), m), phi(t.b(), m), phi(t.c(), m), phi(t.d(), m));
}

TrFN phi_inv(const TrFN& t, Scale m) {
    return TrFN::unchecked(phi_inv(t.a(), m), phi_inv(t.b(), m), phi_inv(t.c(), m), phi_inv(t.d(), m));
}

TrMPR to_multiplicative(const TrFPR& x, Scale m) {
    const std::size_t n = x.size();
    TrFNMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = phi(x(i, j), m);
    }
    return TrMPR(std::move(out), NeutralElement::multiplicative(phi(x.neutral().value(), m), m));
}

TrFPR to_additive(const TrMPR& y) {
    const std::size_t n = y.size();
    const Scale m = y.scale();
    TrFNMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = phi_inv(y(i, j), m);
    }
    return TrFPR(std::move(out), NeutralElement::additive(phi_inv(y.neutral().value(), m)));
}

namespace {

template <typename Combine>
ConsistencyReport scan_triples(std::size_t n, double tol, Combine&& violation) {
    ConsistencyReport r;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const double v = violation(i, j, k);
                if (v > r.max_violation) {
                    r.max_violation = v;
                    r.worst_triple = {i, j, k};
                }
                if (v > tol) r.violating.push_back({i, j, k});
            }
        }
    }
    r.consistent = r.max_violation <= tol;
    return r;
}

}  // namespace

ConsistencyReport check_consistency(const TrFPR& x, double tol) {
    const TrFN& t0 = x.neutral().value();
    return scan_triples(x.size(), tol, [&](std::size_t i, std::size_t j, std::size_t k) {
        return distance(add(x(i, j), t0), add(x(i, k), x(k, j)));
    });
}

ConsistencyReport check_consistency(const TrMPR& y, double tol) {
    const TrFN& s0 = y.neutral().value();
    return scan_triples(y.size(), tol, [&](std::size_t i, std::size_t j, std::size_t k) {
        return distance(mul(y(i, j), s0), mul(y(i, k), y(k, j)));
    });
}

TrFPR from_utilities(std::span<const TrFN> utilities, const NeutralElement& neutral) {
    if (neutral.kind() != NeutralElement::Kind::Additive) {
        throw ValidationError("from_utilities needs an additive neutral element");
    }
    const std::size_t n = utilities.size();
    if (n == 0) throw ValidationError("utility vector is empty");
    const TrFN& t0 = neutral.value();
    TrFNMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::array<double, 4> v{};
            for (std::size_t alpha = 0; alpha < 4; ++alpha) {
                v[alpha] = utilities[i][alpha] + (1.0 - utilities[j][mirror(alpha)]) - t0[alpha];
            }
            for (std::size_t alpha = 0; alpha < 4; ++alpha) {
                if (v[alpha] < -kRangeSlack || v[alpha] > 1.0 + kRangeSlack) {
                    throw OutOfUnitInterval("entry " + cell(i, j) +
                                            " leaves [0,1]; utilities are too spread for the neutral element");
                }
                v[alpha] = std::clamp(v[alpha], 0.0, 1.0);
                if (alpha > 0 && v[alpha] < v[alpha - 1]) {
                    if (v[alpha - 1] - v[alpha] > kRangeSlack) {
                        throw OutOfUnitInterval("entry " + cell(i, j) + " is not a valid trapezoid");
                    }
                    v[alpha] = v[alpha - 1];
                }
            }
            out(i, j) = TrFN::unchecked(v[0], v[1], v[2], v[3]);
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (max_abs_diff(out(k, k), t0) > kConsistencyTolerance) {
            throw OutOfUnitInterval("utility " + std::to_string(k + 1) +
                                    " has spreads that differ from the neutral element's, so the diagonal "
                                    "cannot equal the neutral");
        }
        out(k, k) = t0;
    }
    return TrFPR(std::move(out), neutral);
}

}  // namespace fuzzylad
