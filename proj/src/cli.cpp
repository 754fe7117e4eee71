#include "fuzzylad/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fuzzylad/ahp.hpp"
#include "fuzzylad/error.hpp"
#include "fuzzylad/lad.hpp"
#include "fuzzylad/prefrel.hpp"
#include "fuzzylad/problem_io.hpp"

namespace fuzzylad::cli {

using io::Json;

namespace {

/// Bad flag values or flag combinations; reported with exit code 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Globals {
    bool json = false;
    std::optional<double> tol;
    std::string mag_weights;
};

std::vector<double> parse_list(const std::string& text, std::size_t count, std::optional<int> scale,
                               const std::string& flag) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string piece;
    while (std::getline(in, piece, ',')) values.push_back(io::parse_scalar(Json(piece), scale, flag));
    if (values.size() != count) {
        throw UsageError(flag + ": expected " + std::to_string(count) + " comma-separated values");
    }
    return values;
}

MagWeights resolve_mag(const Globals& g, const io::Problem& p) {
    if (!g.mag_weights.empty()) {
        const auto w = parse_list(g.mag_weights, 2, std::nullopt, "--mag-weights");
        return MagWeights(w[0], w[1]);
    }
    return p.mag_weights.value_or(MagWeights{});
}

std::optional<int> file_scale(const io::Problem& p) {
    if (p.is_multiplicative()) return std::get<TrMPR>(p.relation).scale().value();
    return std::nullopt;
}

std::optional<SigmaConstraint> resolve_sigma(const std::string& flag, const io::Problem& p) {
    if (flag.empty()) return p.sigma;
    const auto v = parse_list(flag, 4, file_scale(p), "--sigma");
    return SigmaConstraint(TrFN(v[0], v[1], v[2], v[3]));
}

Selection resolve_selection(const std::string& name, Model model) {
    if (name == "auto") {
        return model == Model::P0 || model == Model::P ? Selection::Vertex : Selection::Balanced;
    }
    return *parse_selection(name);
}

std::string triple_string(const std::array<std::size_t, 3>& t) {
    return "(" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," + std::to_string(t[2] + 1) + ")";
}

Json triple_json(const std::array<std::size_t, 3>& t) { return Json::array({t[0] + 1, t[1] + 1, t[2] + 1}); }

std::string label(const char* prefix, std::size_t k) { return prefix + std::to_string(k + 1); }

void print_vector(std::ostream& out, const char* prefix, std::span<const TrFN> values, const MagWeights& w,
                  const std::string& indent = "") {
    for (std::size_t k = 0; k < values.size(); ++k) {
        out << indent << label(prefix, k) << " = " << values[k].to_string() << "   Mag = "
            << format_fixed(magnitude(values[k], w)) << '\n';
    }
}

Json vector_json(std::span<const TrFN> values) {
    Json out = Json::array();
    for (const auto& t : values) out.push_back(io::tuple_json(t));
    return out;
}

Json magnitudes_json(std::span<const TrFN> values, const MagWeights& w) {
    Json out = Json::array();
    for (const auto& t : values) out.push_back(magnitude(t, w));
    return out;
}

void emit(std::ostream& out, const Json& doc) { out << io::dump(doc) << '\n'; }

// validate -------------------------------------------------------------------

int cmd_validate(const Globals& g, const std::string& path, std::ostream& out) {
    const io::Problem p = io::load_problem(path);
    std::size_t n = 0;
    std::size_t criteria = 1;
    if (p.is_additive()) n = std::get<TrFPR>(p.relation).size();
    if (p.is_multiplicative()) n = std::get<TrMPR>(p.relation).size();
    if (p.is_ahp()) {
        const auto& a = std::get<AhpProblem>(p.relation);
        n = a.alternatives();
        criteria = a.matrices().size();
    }
    if (g.json) {
        Json doc{{"valid", true}, {"kind", p.kind()}, {"n", n}};
        if (p.is_ahp()) doc["criteria"] = criteria;
        emit(out, doc);
    } else if (p.is_ahp()) {
        out << "valid ahp problem: " << criteria << " criteria, " << n << " alternatives\n";
    } else {
        out << "valid " << p.kind() << " relation: " << n << " alternatives\n";
    }
    return kOk;
}

// consistency ----------------------------------------------------------------

Json report_json(const ConsistencyReport& r) {
    Json violating = Json::array();
    for (const auto& t : r.violating) violating.push_back(triple_json(t));
    return Json{{"consistent", r.consistent},
                {"max_violation", r.max_violation},
                {"worst_triple", triple_json(r.worst_triple)},
                {"violating", std::move(violating)}};
}

void print_report(std::ostream& out, const ConsistencyReport& r, const std::string& indent = "") {
    out << indent << "verdict: " << (r.consistent ? "consistent" : "inconsistent") << '\n';
    out << indent << "max_violation: " << format_fixed(r.max_violation) << '\n';
    out << indent << "worst_triple: " << triple_string(r.worst_triple) << '\n';
    out << indent << "violating_triples: " << r.violating.size() << '\n';
    if (!r.violating.empty()) {
        out << indent << "violating:";
        for (const auto& t : r.violating) out << ' ' << triple_string(t);
        out << '\n';
    }
}

int cmd_consistency(const Globals& g, const std::string& path, std::ostream& out) {
    const io::Problem p = io::load_problem(path);
    const double tol = g.tol.value_or(kConsistencyTolerance);
    std::vector<ConsistencyReport> reports;
    if (p.is_additive()) reports.push_back(check_consistency(std::get<TrFPR>(p.relation), tol));
    if (p.is_multiplicative()) reports.push_back(check_consistency(std::get<TrMPR>(p.relation), tol));
    if (p.is_ahp()) {
        for (const auto& y : std::get<AhpProblem>(p.relation).matrices()) reports.push_back(check_consistency(y, tol));
    }

    if (g.json) {
        if (!p.is_ahp()) {
            Json doc = report_json(reports.front());
            doc["tolerance"] = tol;
            emit(out, doc);
        } else {
            Json all = Json::array();
            for (const auto& r : reports) all.push_back(report_json(r));
            emit(out, Json{{"tolerance", tol}, {"criteria", std::move(all)}});
        }
        return kOk;
    }
    if (!p.is_ahp()) {
        print_report(out, reports.front());
        return kOk;
    }
    for (std::size_t k = 0; k < reports.size(); ++k) {
        out << "criterion " << k + 1 << ":\n";
        print_report(out, reports[k], "  ");
    }
    return kOk;
}

// utility --------------------------------------------------------------------

struct UtilityFlags {
    std::string model = "punit";
    std::string sigma;
    std::string select = "auto";
};

int cmd_utility(const Globals& g, const std::string& path, const UtilityFlags& f, std::ostream& out) {
    const io::Problem p = io::load_problem(path);
    if (p.is_ahp()) throw UsageError("utility: ahp files are handled by the ahp command");
    const auto parsed = parse_model(f.model);
    if (!parsed || *parsed == Model::QSigma) throw UsageError("--model: expected p0, p, punit or psigma");
    Model model = *parsed;

    std::optional<SigmaConstraint> sigma;
    if (model == Model::PSigma) {
        sigma = resolve_sigma(f.sigma, p);
        if (!sigma) throw UsageError("--model psigma needs --sigma or a sigma field in the file");
    } else if (!f.sigma.empty()) {
        throw UsageError("--sigma only applies to --model psigma");
    }

    DeriveOptions opts;
    opts.selection = resolve_selection(f.select, model);
    opts.mag_weights = resolve_mag(g, p);

    UtilityVector u;
    if (p.is_additive()) {
        u = derive_utility(std::get<TrFPR>(p.relation), model, sigma, opts);
    } else {
        if (model == Model::PSigma) model = Model::QSigma;
        u = derive_utility(to_additive(std::get<TrMPR>(p.relation)), model, sigma, opts);
    }

    if (g.json) {
        Json doc = io::to_json(u, opts.mag_weights);
        doc["selection"] = to_string(opts.selection);
        emit(out, doc);
        return kOk;
    }
    out << "model: " << to_string(u.model) << '\n';
    out << "selection: " << to_string(opts.selection) << '\n';
    print_vector(out, "u", u.utilities, opts.mag_weights);
    out << "objective: " << format_fixed(u.objective) << '\n';
    out << "ranking: " << ranking_string(rank(u.utilities, opts.mag_weights)) << '\n';
    return kOk;
}

// weights --------------------------------------------------------------------

struct WeightsFlags {
    std::string method = "lad";
    std::string sigma;
    std::string select = "auto";
};

struct MethodResult {
    std::string method;
    std::vector<TrFN> weights;
    double deviation;
};

void print_methods(std::ostream& out, const std::vector<MethodResult>& results, const MagWeights& w,
                   const std::string& indent = "") {
    for (const auto& r : results) {
        out << indent << "method: " << r.method << '\n';
        print_vector(out, "w", r.weights, w, indent + "  ");
        out << indent << "  deviation: " << format_fixed(r.deviation) << '\n';
        out << indent << "  ranking: " << ranking_string(rank(r.weights, w)) << '\n';
    }
}

Json methods_json(const std::vector<MethodResult>& results, const MagWeights& w) {
    Json all = Json::array();
    for (const auto& r : results) {
        all.push_back(Json{{"method", r.method},
                           {"weights", vector_json(r.weights)},
                           {"magnitudes", magnitudes_json(r.weights, w)},
                           {"deviation", r.deviation},
                           {"ranking", ranking_string(rank(r.weights, w))}});
    }
    return all;
}

std::vector<MethodResult> baselines(const TrMPR& y) {
    std::vector<MethodResult> out;
    auto amm = amm_weights(y);
    const double amm_dev = deviation(y, amm);
    out.push_back({"amm", std::move(amm), amm_dev});
    auto gmm = gmm_weights(y);
    const double gmm_dev = deviation(y, gmm);
    out.push_back({"gmm", std::move(gmm), gmm_dev});
    return out;
}

int cmd_weights(const Globals& g, const std::string& path, const WeightsFlags& f, std::ostream& out) {
    const io::Problem p = io::load_problem(path);
    if (p.is_ahp()) throw UsageError("weights: ahp files are handled by the ahp command");
    const bool want_lad = f.method == "lad" || f.method == "all";
    const bool want_baselines = f.method == "amm" || f.method == "gmm" || f.method == "all";
    if (want_baselines && !p.is_multiplicative()) {
        throw UsageError("weights: amm and gmm need a multiplicative relation");
    }
    if (!want_lad && !f.sigma.empty()) throw UsageError("--sigma only applies to --method lad or all");

    DeriveOptions opts;
    opts.mag_weights = resolve_mag(g, p);
    std::vector<MethodResult> results;
    if (want_lad) {
        const auto sigma = resolve_sigma(f.sigma, p);
        if (!sigma) throw UsageError("--method lad needs --sigma or a sigma field in the file");
        const Model model = p.is_additive() ? Model::PSigma : Model::QSigma;
        opts.selection = resolve_selection(f.select, model);
        UtilityVector u = p.is_additive() ? derive_utility(std::get<TrFPR>(p.relation), model, sigma, opts)
                                          : derive_weights(std::get<TrMPR>(p.relation), *sigma, opts);
        results.push_back({"lad", std::move(u.utilities), u.objective});
    }
    if (want_baselines) {
        for (auto& r : baselines(std::get<TrMPR>(p.relation))) {
            if (f.method == "all" || f.method == r.method) results.push_back(std::move(r));
        }
    }

    if (g.json) {
        emit(out, Json{{"methods", methods_json(results, opts.mag_weights)}});
    } else {
        print_methods(out, results, opts.mag_weights);
    }
    return kOk;
}

// ahp ------------------------------------------------------------------------

struct AhpFlags {
    bool compare = false;
    std::string select = "auto";
};

int cmd_ahp(const Globals& g, const std::string& path, const AhpFlags& f, std::ostream& out) {
    const io::Problem p = io::load_problem(path);
    if (!p.is_ahp()) throw UsageError("ahp: the file kind must be \"ahp\"");
    const auto& parsed = std::get<AhpProblem>(p.relation);
    const MagWeights w = resolve_mag(g, p);
    const AhpProblem problem(parsed.criteria_weights(), parsed.matrices(), parsed.sigma(), w,
                             resolve_selection(f.select, Model::QSigma));
    const AhpResult r = run_ahp(problem);

    std::vector<std::vector<MethodResult>> comparison;
    if (f.compare) {
        for (std::size_t k = 0; k < problem.matrices().size(); ++k) {
            std::vector<MethodResult> block;
            block.push_back({"lad", r.local_weights[k].utilities, r.local_weights[k].objective});
            for (auto& b : baselines(problem.matrices()[k])) block.push_back(std::move(b));
            comparison.push_back(std::move(block));
        }
    }

    if (g.json) {
        Json locals = Json::array();
        for (const auto& u : r.local_weights) locals.push_back(io::to_json(u, w));
        Json order = Json::array();
        for (const auto& e : r.ranking) order.push_back(e.index + 1);
        Json doc{{"selection", to_string(problem.selection())},
                 {"criteria_weights", problem.criteria_weights()},
                 {"per_criterion_objectives", r.per_criterion_objectives},
                 {"local_weights", std::move(locals)},
                 {"global_weights", vector_json(r.global_weights)},
                 {"magnitudes", r.magnitudes},
                 {"ranking", ranking_string(r.ranking)},
                 {"order", std::move(order)}};
        if (f.compare) {
            Json blocks = Json::array();
            for (const auto& block : comparison) blocks.push_back(methods_json(block, w));
            doc["comparison"] = std::move(blocks);
        }
        emit(out, doc);
        return kOk;
    }

    out << "selection: " << to_string(problem.selection()) << '\n';
    for (std::size_t k = 0; k < r.local_weights.size(); ++k) {
        out << "criterion " << k + 1 << " (weight " << format_fixed(problem.criteria_weights()[k])
            << "): objective " << format_fixed(r.per_criterion_objectives[k]) << '\n';
        print_vector(out, "w", r.local_weights[k].utilities, w, "  ");
    }
    out << "global weights:\n";
    print_vector(out, "A", r.global_weights, w, "  ");
    out << "ranking: " << ranking_string(r.ranking) << '\n';
    for (std::size_t k = 0; k < comparison.size(); ++k) {
        out << "comparison, criterion " << k + 1 << ":\n";
        print_methods(out, comparison[k], w, "  ");
    }
    return kOk;
}

// convert --------------------------------------------------------------------

struct ConvertFlags {
    std::string to;
    std::optional<int> scale;
    std::string out_path;
};

int cmd_convert(const std::string& path, const ConvertFlags& f, std::ostream& out) {
    const io::Problem p = io::load_problem(path);
    if (p.is_ahp()) throw UsageError("convert: ahp files cannot be converted");
    if (f.to == p.kind()) throw UsageError(std::string("convert: the file is already ") + p.kind());

    Json doc;
    if (p.is_additive()) {
        doc = io::to_json(to_multiplicative(std::get<TrFPR>(p.relation), Scale(f.scale.value_or(9))));
    } else {
        if (f.scale) throw UsageError("--scale only applies when converting to multiplicative");
        doc = io::to_json(to_additive(std::get<TrMPR>(p.relation)));
    }
    if (p.sigma) doc["sigma"] = io::tuple_json(p.sigma->value());
    if (p.mag_weights) doc["mag_weights"] = Json::array({p.mag_weights->w1(), p.mag_weights->w2()});

    if (f.out_path.empty()) {
        emit(out, doc);
        return kOk;
    }
    std::ofstream file(f.out_path);
    if (!file) throw io::ParseError(f.out_path + ": cannot open for writing");
    file << io::dump(doc) << '\n';
    if (!file.flush()) throw io::ParseError(f.out_path + ": write failed");
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trapezoidal fuzzy preference relations: validation, consistency, LAD utilities and fuzzy AHP."};
    app.name("fuzzylad");
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    app.add_flag("--json", g.json, "Print machine-readable JSON");
    app.add_option("--tol", g.tol, "Consistency tolerance")->check(CLI::NonNegativeNumber);
    app.add_option("--mag-weights", g.mag_weights, "Magnitude weights w1,w2");

    std::string path;
    auto* validate = app.add_subcommand("validate", "Check a problem file");
    validate->add_option("file", path)->required();

    auto* consistency = app.add_subcommand("consistency", "Check consistency of the relation(s)");
    consistency->add_option("file", path)->required();

    UtilityFlags uf;
    auto* utility = app.add_subcommand("utility", "Derive LAD utilities");
    utility->add_option("file", path)->required();
    utility->add_option("--model", uf.model, "p0, p, punit or psigma")->capture_default_str();
    utility->add_option("--sigma", uf.sigma, "Total a,b,c,d for psigma");
    utility->add_option("--select", uf.select, "auto, vertex or balanced")
        ->check(CLI::IsMember({"auto", "vertex", "balanced"}))
        ->capture_default_str();

    WeightsFlags wf;
    auto* weights = app.add_subcommand("weights", "Derive normalized fuzzy weights");
    weights->add_option("file", path)->required();
    weights->add_option("--method", wf.method, "lad, amm, gmm or all")
        ->check(CLI::IsMember({"lad", "amm", "gmm", "all"}))
        ->capture_default_str();
    weights->add_option("--sigma", wf.sigma, "Total a,b,c,d for lad");
    weights->add_option("--select", wf.select, "auto, vertex or balanced")
        ->check(CLI::IsMember({"auto", "vertex", "balanced"}))
        ->capture_default_str();

    AhpFlags af;
    auto* ahp = app.add_subcommand("ahp", "Run the fuzzy AHP pipeline");
    ahp->add_option("file", path)->required();
    ahp->add_flag("--compare", af.compare, "Add AMM and GMM baselines per criterion");
    ahp->add_option("--select", af.select, "auto, vertex or balanced")
        ->check(CLI::IsMember({"auto", "vertex", "balanced"}))
        ->capture_default_str();

    ConvertFlags cf;
    auto* convert = app.add_subcommand("convert", "Convert between additive and multiplicative form");
    convert->add_option("file", path)->required();
    convert->add_option("--to", cf.to, "additive or multiplicative")
        ->required()
        ->check(CLI::IsMember({"additive", "multiplicative"}));
    convert->add_option("--scale", cf.scale, "Scale m for multiplicative output (default 9)")
        ->check(CLI::Range(2, 1000000));
    convert->add_option("--out", cf.out_path, "Output file (stdout when omitted)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (validate->parsed()) return cmd_validate(g, path, out);
        if (consistency->parsed()) return cmd_consistency(g, path, out);
        if (utility->parsed()) return cmd_utility(g, path, uf, out);
        if (weights->parsed()) return cmd_weights(g, path, wf, out);
        if (ahp->parsed()) return cmd_ahp(g, path, af, out);
        if (convert->parsed()) return cmd_convert(path, cf, out);
    } catch (const io::ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kParseError;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidationError;
    } catch (const Infeasible& e) {
        err << "infeasible: " << e.what() << '\n';
        return kSolverError;
    } catch (const SolverFailure& e) {
        err << "solver failure: " << e.what() << '\n';
        return kSolverError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    }
    return kParseError;
}

}  // namespace fuzzylad::cli
