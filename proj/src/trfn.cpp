#include "fuzzylad/trfn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "fuzzylad/error.hpp"

namespace fuzzylad {

TrFN::TrFN(double a, double b, double c, double d) : v_{a, b, c, d} {
    for (double x : v_) {
        if (!std::isfinite(x)) throw ValidationError("TrFN component is not finite");
    }
    if (!(a <= b && b <= c && c <= d)) {
        throw ValidationError("TrFN requires a <= b <= c <= d, got " + to_string(6));
    }
}

TrFN TrFN::crisp(double r) { return TrFN(r, r, r, r); }

std::string TrFN::to_string(int precision) const {
    return "T(" + format_fixed(v_[0], precision) + ", " + format_fixed(v_[1], precision) + ", " +
           format_fixed(v_[2], precision) + ", " + format_fixed(v_[3], precision) + ")";
}

MagWeights::MagWeights() : w1_(1.0 / 12.0), w2_(5.0 / 12.0) {}

MagWeights::MagWeights(double w1, double w2) : w1_(w1), w2_(w2) {
    if (!(w1 > 0.0 && w2 > 0.0)) throw ValidationError("magnitude weights must be positive");
    if (std::abs(2.0 * (w1 + w2) - 1.0) > 1e-12) {
        throw ValidationError("magnitude weights must satisfy 2(w1 + w2) = 1");
    }
}

TrFN add(const TrFN& x, const TrFN& y) {
    return TrFN::unchecked(x.a() + y.a(), x.b() + y.b(), x.c() + y.c(), x.d() + y.d());
}

TrFN sub(const TrFN& x, const TrFN& y) {
    return TrFN::unchecked(x.a() - y.d(), x.b() - y.c(), x.c() - y.b(), x.d() - y.a());
}

TrFN scale(double r, const TrFN& t) {
    if (!(r > 0.0)) throw ValidationError("scale factor must be positive");
    return TrFN::unchecked(r * t.a(), r * t.b(), r * t.c(), r * t.d());
}

bool strictly_positive(const TrFN& t) { return t.a() > 0.0; }

TrFN mul(const TrFN& x, const TrFN& y) {
    if (!strictly_positive(x) || !strictly_positive(y)) {
        throw ValidationError("product is defined for strictly positive TrFNs only");
    }
    return TrFN::unchecked(x.a() * y.a(), x.b() * y.b(), x.c() * y.c(), x.d() * y.d());
}

TrFN negate(const TrFN& t) {
    return TrFN::unchecked(1.0 - t.d(), 1.0 - t.c(), 1.0 - t.b(), 1.0 - t.a());
}

TrFN invert(const TrFN& t) {
    if (!strictly_positive(t)) throw ValidationError("inverse is defined for strictly positive TrFNs only");
    return TrFN::unchecked(1.0 / t.d(), 1.0 / t.c(), 1.0 / t.b(), 1.0 / t.a());
}

double distance(const TrFN& x, const TrFN& y) {
    return (std::abs(x.a() - y.a()) + std::abs(x.b() - y.b()) + std::abs(x.c() - y.c()) +
            std::abs(x.d() - y.d())) /
           4.0;
}

double magnitude(const TrFN& t, const MagWeights& w) {
    return w.w1() * (t.a() + t.d()) + w.w2() * (t.b() + t.c());
}

std::vector<RankEntry> rank(std::span<const TrFN> values, const MagWeights& w) {
    std::vector<RankEntry> out;
    out.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out.push_back({i, magnitude(values[i], w), false});
    std::stable_sort(out.begin(), out.end(),
                     [](const RankEntry& l, const RankEntry& r) { return l.magnitude > r.magnitude; });
    for (std::size_t i = 1; i < out.size(); ++i) {
        out[i].tied_with_previous = out[i - 1].magnitude - out[i].magnitude <= kRankTieTolerance;
    }
    // Ties are reported in input order so the result does not depend on
    // sub-tolerance noise in the magnitudes.
    for (std::size_t first = 0; first < out.size();) {
        std::size_t last = first + 1;
        while (last < out.size() && out[last].tied_with_previous) ++last;
        std::stable_sort(out.begin() + static_cast<std::ptrdiff_t>(first),
                         out.begin() + static_cast<std::ptrdiff_t>(last),
                         [](const RankEntry& l, const RankEntry& r) { return l.index < r.index; });
        for (std::size_t i = first; i < last; ++i) out[i].tied_with_previous = i != first;
        first = last;
    }
    return out;
}

std::string format_fixed(double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, x);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string ranking_string(std::span<const RankEntry> ranking) {
    std::string s;
    for (const auto& e : ranking) {
        if (!s.empty()) s += e.tied_with_previous ? " ~ " : " > ";
        s += "A" + std::to_string(e.index + 1);
    }
    return s;
}

}  // namespace fuzzylad
