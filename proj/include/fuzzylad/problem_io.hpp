#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "fuzzylad/ahp.hpp"
#include "fuzzylad/lad.hpp"
#include "fuzzylad/prefrel.hpp"

namespace fuzzylad::io {

/// Documents keep their fields in insertion order.
using Json = nlohmann::ordered_json;

/// Malformed document: bad JSON, missing or mistyped field, bad number.
/// The message starts with the location (JSON path, or line/column).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed problem file. `relation` holds a TrFPR for kind "additive", a TrMPR
/// for "multiplicative" and an AhpProblem for "ahp".
struct Problem {
    std::variant<TrFPR, TrMPR, AhpProblem> relation;
    std::optional<SigmaConstraint> sigma;
    std::optional<MagWeights> mag_weights;

    bool is_additive() const { return relation.index() == 0; }
    bool is_multiplicative() const { return relation.index() == 1; }
    bool is_ahp() const { return relation.index() == 2; }
    const char* kind() const;
};

/// Parses a scalar given as a JSON number or a string: a decimal, a fraction
/// "p/q", or a power "b^e" where b and e are decimals or fractions and b may be
/// the letter m (replaced by `scale`). Fractions and powers are evaluated
/// before the single rounding to double.
double parse_scalar(const Json& value, std::optional<int> scale, const std::string& where);

/// Throws ParseError for structural problems and ValidationError when the
/// content violates a relation invariant (shape, reciprocity, neutral, range).
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

Json tuple_json(const TrFN& t);
Json to_json(const TrFPR& x);
Json to_json(const TrMPR& y);
Json to_json(const UtilityVector& u, const MagWeights& w = MagWeights{});

/// Two-space indented rendering with arrays of scalars kept on one line.
/// Numbers use the shortest round-trip form.
std::string dump(const Json& doc);

}  // namespace fuzzylad::io
