#include "fuzzylad/problem_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fuzzylad/error.hpp"

namespace fuzzylad::io {

const char* Problem::kind() const {
    switch (relation.index()) {
        case 0: return "additive";
        case 1: return "multiplicative";
        default: return "ahp";
    }
}

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

double parse_decimal(std::string_view s, const std::string& where) {
    double v = 0.0;
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    if (begin != end && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end || begin == end) {
        throw ParseError(where + ": cannot read number '" + std::string(s) + "'");
    }
    return v;
}

double parse_rational(const std::string& s, const std::string& where) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return parse_decimal(s, where);
    const double num = parse_decimal(trim(std::string_view(s).substr(0, slash)), where);
    const double den = parse_decimal(trim(std::string_view(s).substr(slash + 1)), where);
    if (den == 0.0) throw ParseError(where + ": division by zero in '" + s + "'");
    return num / den;
}

std::string index_path(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

const Json& require(const Json& doc, const char* field, const std::string& where = "") {
    if (!doc.contains(field)) {
        throw ParseError((where.empty() ? std::string(field) : where + "." + field) + ": required field is missing");
    }
    return doc.at(field);
}

std::array<double, 4> parse_tuple(const Json& v, std::optional<int> scale, const std::string& where) {
    if (!v.is_array() || v.size() != 4) throw ParseError(where + ": expected an array [a, b, c, d]");
    std::array<double, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) out[k] = parse_scalar(v[k], scale, index_path(where, k));
    return out;
}

TrFN make_trfn(const std::array<double, 4>& t, const std::string& what) {
    try {
        return TrFN(t[0], t[1], t[2], t[3]);
    } catch (const ValidationError& e) {
        throw ValidationError(what + ": " + e.what());
    }
}

TrFNMatrix parse_matrix(const Json& m, std::optional<int> scale, std::optional<std::size_t> n,
                        const std::string& where) {
    if (!m.is_array() || m.empty()) throw ParseError(where + ": expected a non-empty array of rows");
    const std::size_t size = m.size();
    if (n && *n != size) {
        throw ParseError(where + ": has " + std::to_string(size) + " rows but n = " + std::to_string(*n));
    }
    std::vector<std::array<double, 4>> raw;
    raw.reserve(size * size);
    for (std::size_t i = 0; i < size; ++i) {
        const std::string row_path = index_path(where, i);
        const Json& row = m[i];
        if (!row.is_array() || row.size() != size) {
            throw ParseError(row_path + ": expected " + std::to_string(size) + " entries");
        }
        for (std::size_t j = 0; j < size; ++j) raw.push_back(parse_tuple(row[j], scale, index_path(row_path, j)));
    }
    TrFNMatrix out(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) {
            out(i, j) = make_trfn(raw[i * size + j],
                                  "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    }
    return out;
}

}  // namespace

double parse_scalar(const Json& value, std::optional<int> scale, const std::string& where) {
    if (value.is_number()) return value.get<double>();
    if (!value.is_string()) throw ParseError(where + ": expected a number or a numeric string");
    const std::string s = trim(value.get<std::string>());
    const auto caret = s.find('^');
    if (caret == std::string::npos) return parse_rational(s, where);
    const std::string base_text = trim(std::string_view(s).substr(0, caret));
    const std::string exp_text = trim(std::string_view(s).substr(caret + 1));
    double base = 0.0;
    if (base_text == "m") {
        if (!scale) throw ParseError(where + ": 'm' used as a base but the file has no scale");
        base = *scale;
    } else {
        base = parse_rational(base_text, where);
    }
    if (!(base > 0.0)) throw ParseError(where + ": power base must be positive");
    std::string e = exp_text;
    if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = trim(std::string_view(e).substr(1, e.size() - 2));
    return std::pow(base, parse_rational(e, where));
}

Problem parse_problem(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("document: expected a JSON object");

    const Json& kind_field = require(doc, "kind");
    if (!kind_field.is_string()) throw ParseError("kind: expected a string");
    const std::string kind = kind_field.get<std::string>();
    if (kind != "additive" && kind != "multiplicative" && kind != "ahp") {
        throw ParseError("kind: expected \"additive\", \"multiplicative\" or \"ahp\", got \"" + kind + "\"");
    }

    std::optional<std::size_t> n;
    if (doc.contains("n")) {
        if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0) {
            throw ParseError("n: expected a positive integer");
        }
        n = doc["n"].get<std::size_t>();
    }

    std::optional<int> scale;
    if (doc.contains("scale")) {
        if (!doc["scale"].is_number_integer()) throw ParseError("scale: expected an integer >= 2");
        scale = doc["scale"].get<int>();
    } else if (kind != "additive") {
        throw ParseError("scale: required field is missing");
    }
    if (kind == "additive" && scale) {
        throw ParseError("scale: only multiplicative and ahp files carry a scale");
    }

    const auto neutral_raw = parse_tuple(require(doc, "neutral"), scale, "neutral");

    std::optional<std::array<double, 4>> sigma_raw;
    if (doc.contains("sigma")) sigma_raw = parse_tuple(doc["sigma"], scale, "sigma");

    std::optional<std::pair<double, double>> mag_raw;
    if (doc.contains("mag_weights")) {
        const Json& mw = doc["mag_weights"];
        if (!mw.is_array() || mw.size() != 2) throw ParseError("mag_weights: expected an array [w1, w2]");
        mag_raw = {parse_scalar(mw[0], scale, "mag_weights[0]"), parse_scalar(mw[1], scale, "mag_weights[1]")};
    }

    std::vector<double> criteria_weights;
    std::vector<TrFNMatrix> matrices;
    if (kind == "ahp") {
        const Json& cw = require(doc, "criteria_weights");
        if (!cw.is_array() || cw.empty()) throw ParseError("criteria_weights: expected a non-empty array");
        for (std::size_t k = 0; k < cw.size(); ++k) {
            criteria_weights.push_back(parse_scalar(cw[k], scale, index_path("criteria_weights", k)));
        }
        const Json& ms = require(doc, "matrices");
        if (!ms.is_array() || ms.size() != criteria_weights.size()) {
            throw ParseError("matrices: expected one matrix per criterion weight");
        }
        if (!sigma_raw) throw ParseError("sigma: required field is missing for kind \"ahp\"");
        for (std::size_t k = 0; k < ms.size(); ++k) {
            matrices.push_back(parse_matrix(ms[k], scale, n, index_path("matrices", k)));
        }
    } else {
        matrices.push_back(parse_matrix(require(doc, "matrix"), scale, n, "matrix"));
    }

    // Everything below checks content rather than structure.
    const TrFN neutral_value = make_trfn(neutral_raw, "neutral");
    std::optional<SigmaConstraint> sigma;
    if (sigma_raw) sigma = SigmaConstraint(make_trfn(*sigma_raw, "sigma"));
    std::optional<MagWeights> mag;
    if (mag_raw) mag = MagWeights(mag_raw->first, mag_raw->second);

    if (kind == "additive") {
        return Problem{TrFPR(std::move(matrices.front()), NeutralElement::additive(neutral_value)), sigma, mag};
    }
    const NeutralElement neutral = NeutralElement::multiplicative(neutral_value, Scale(*scale));
    if (kind == "multiplicative") {
        return Problem{TrMPR(std::move(matrices.front()), neutral), sigma, mag};
    }
    std::vector<TrMPR> relations;
    for (std::size_t k = 0; k < matrices.size(); ++k) {
        try {
            relations.emplace_back(std::move(matrices[k]), neutral);
        } catch (const ValidationError& e) {
            throw ValidationError("criterion " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    return Problem{AhpProblem(std::move(criteria_weights), std::move(relations), *sigma, mag.value_or(MagWeights{})),
                   sigma, mag};
}

Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path + ": cannot open file");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

Json tuple_json(const TrFN& t) { return Json::array({t.a(), t.b(), t.c(), t.d()}); }

namespace {

Json matrix_json(const TrFNMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(tuple_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json to_json(const TrFPR& x) {
    return Json{{"kind", "additive"}, {"n", x.size()}, {"neutral", tuple_json(x.neutral().value())},
                {"matrix", matrix_json(x.entries())}};
}

Json to_json(const TrMPR& y) {
    return Json{{"kind", "multiplicative"},
                {"n", y.size()},
                {"scale", y.scale().value()},
                {"neutral", tuple_json(y.neutral().value())},
                {"matrix", matrix_json(y.entries())}};
}

Json to_json(const UtilityVector& u, const MagWeights& w) {
    Json utilities = Json::array();
    Json mags = Json::array();
    for (const auto& t : u.utilities) {
        utilities.push_back(tuple_json(t));
        mags.push_back(magnitude(t, w));
    }
    const auto ranking = rank(u.utilities, w);
    Json order = Json::array();
    for (const auto& e : ranking) order.push_back(e.index + 1);
    return Json{{"model", to_string(u.model)}, {"objective", u.objective}, {"utilities", std::move(utilities)},
                {"magnitudes", std::move(mags)},   {"ranking", ranking_string(ranking)}, {"order", std::move(order)}};
}

namespace {

bool is_flat(const Json& v) {
    return std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
}

void write(std::string& out, const Json& v, int depth) {
    const std::string pad(2 * depth + 2, ' ');
    const std::string close_pad(2 * depth, ' ');
    if (v.is_object() && !v.empty()) {
        out += "{\n";
        std::size_t k = 0;
        for (auto it = v.begin(); it != v.end(); ++it, ++k) {
            out += pad + Json(it.key()).dump() + ": ";
            write(out, it.value(), depth + 1);
            out += k + 1 < v.size() ? ",\n" : "\n";
        }
        out += close_pad + "}";
    } else if (v.is_array() && !v.empty() && !is_flat(v)) {
        out += "[\n";
        for (std::size_t k = 0; k < v.size(); ++k) {
            out += pad;
            write(out, v[k], depth + 1);
            out += k + 1 < v.size() ? ",\n" : "\n";
        }
        out += close_pad + "]";
    } else if (v.is_array()) {
        out += "[";
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k > 0) out += ", ";
            out += v[k].dump();
        }
        out += "]";
    } else {
        out += v.dump();
    }
}

}  // namespace

std::string dump(const Json& doc) {
    std::string out;
    write(out, doc, 0);
    return out;
}

}  // namespace fuzzylad::io
