#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "fuzzylad/cli.hpp"
#include "fuzzylad/problem_io.hpp"

namespace fs = std::filesystem;
using namespace fuzzylad;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FUZZYLAD_TEST_DATA) + "/" + name; }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

/// Scratch directory removed on scope exit.
struct Scratch {
    fs::path dir;
    Scratch() {
        dir = fs::temp_directory_path() / ("fuzzylad-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(dir);
    }
    ~Scratch() { fs::remove_all(dir); }
    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
    static inline int counter = 0;
};

}  // namespace

TEST_CASE("validate") {
    auto r = call({"validate", data("sample_fpr.json")});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "valid additive relation: 3 alternatives\n");

    r = call({"validate", data("land_projects.json")});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "valid ahp problem: 3 criteria, 4 alternatives\n");

    r = call({"validate", data("bad_neutral.json")});
    CHECK(r.code == cli::kValidationError);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "validation error: "));

    r = call({"validate", data("sample_fpr_perturbed.json")});
    CHECK(r.code == cli::kValidationError);
    CHECK(contains(r.err, "entry (2,1) is not the negation of entry (1,2)"));
}

TEST_CASE("utility on the three-alternative example") {
    const auto r = call({"utility", data("sample_fpr.json")});
    REQUIRE(r.code == cli::kOk);
    CHECK(contains(r.out, "model: PUnit\n"));
    CHECK(contains(r.out, "objective: 0.2000\n"));
    CHECK(contains(r.out, "ranking: A1 > A2 > A3\n"));

    const auto v = call({"utility", "--select", "vertex", data("sample_fpr.json")});
    CHECK(contains(v.out, "selection: vertex\n"));
    CHECK(contains(v.out, "objective: 0.2000\n"));

    const auto j = call({"--json", "utility", data("sample_fpr.json")});
    REQUIRE(j.code == cli::kOk);
    const auto doc = io::Json::parse(j.out);
    CHECK(doc["model"] == "PUnit");
    CHECK(std::abs(doc["objective"].get<double>() - 0.2) <= 1e-6);
    CHECK(doc["utilities"].size() == 3);
    CHECK(doc["order"] == io::Json::array({1, 2, 3}));
}

TEST_CASE("utility models on the multiplicative example") {
    auto r = call({"utility", "--model", "p", data("sample_mpr.json")});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "objective: 0.2000\n"));
    r = call({"utility", "--model", "psigma", data("sample_mpr.json")});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "model: QSigma\n"));
    CHECK(contains(r.out, "objective: 0.6000\n"));
    r = call({"utility", "--model", "p0", data("sample_fpr.json")});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "objective: 0.2000\n"));
}

TEST_CASE("consistency") {
    auto r = call({"consistency", data("sample_fpr.json")});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "verdict: inconsistent\n"));
    CHECK(contains(r.out, "max_violation: 0.1000\n"));
    r = call({"consistency", data("consistent_fpr.json")});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "verdict: consistent\n"));
    r = call({"consistency", "--tol", "0.2", data("sample_fpr.json")});
    CHECK(contains(r.out, "verdict: consistent\n"));
    r = call({"consistency", data("sample_mpr.json")});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "verdict: inconsistent\n"));
    CHECK(contains(r.out, "(1,2,3)"));
}

TEST_CASE("weights and baselines") {
    const auto r = call({"weights", "--method", "all", data("land_projects_y1.json")});
    REQUIRE(r.code == cli::kOk);
    CHECK(contains(r.out, "method: lad\n"));
    CHECK(contains(r.out, "  deviation: 0.9823\n"));
    CHECK(contains(r.out, "  deviation: 2.3955\n"));
    CHECK(contains(r.out, "  deviation: 2.6843\n"));
    CHECK(contains(r.out, "w2 = T(0.2390, 0.4850, 0.5845, 1.1136)"));

    const auto amm = call({"weights", "--method", "amm", data("land_projects_y1.json")});
    CHECK(amm.code == cli::kOk);
    CHECK_FALSE(contains(amm.out, "method: lad"));
}

TEST_CASE("ahp run") {
    const auto r = call({"ahp", data("land_projects.json")});
    REQUIRE(r.code == cli::kOk);
    CHECK(contains(r.out, "ranking: A1 > A2 > A4 > A3\n"));
    CHECK(contains(r.out, "criterion 1 (weight 0.5000): objective 0.9823\n"));
    CHECK_FALSE(contains(r.out, "comparison"));
    const auto c = call({"ahp", "--compare", data("land_projects.json")});
    CHECK(contains(c.out, "comparison, criterion 1:\n"));
}

TEST_CASE("one criterion equals the weights of its matrix") {
    const auto a = call({"--json", "ahp", data("single_criterion.json")});
    const auto w = call({"--json", "utility", "--model", "psigma", data("land_projects_y1.json")});
    REQUIRE(a.code == cli::kOk);
    REQUIRE(w.code == cli::kOk);
    const auto ja = io::Json::parse(a.out);
    const auto jw = io::Json::parse(w.out);
    CHECK(ja["global_weights"] == jw["utilities"]);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == cli::kParseError);
    CHECK(call({"frobnicate"}).code == cli::kParseError);
    CHECK(call({"utility"}).code == cli::kParseError);
    CHECK(call({"utility", "--model", "qsigma", data("sample_fpr.json")}).code == cli::kParseError);
    CHECK(call({"utility", "--model", "psigma", data("sample_fpr.json")}).code == cli::kParseError);
    CHECK(call({"utility", "--sigma", "0.8,0.9,1.1,1.2", data("sample_fpr.json")}).code == cli::kParseError);
    CHECK(call({"utility", data("land_projects.json")}).code == cli::kParseError);
    CHECK(call({"weights", "--method", "amm", data("sample_fpr.json")}).code == cli::kParseError);
    CHECK(call({"convert", "--to", "additive", data("sample_fpr.json")}).code == cli::kParseError);
    CHECK(call({"utility", "--select", "balanced", "--model", "p", data("sample_fpr.json")}).code ==
          cli::kValidationError);
    const auto missing = call({"utility", data("no_such_file.json")});
    CHECK(missing.code == cli::kParseError);
    CHECK_FALSE(missing.err.empty());
}

TEST_CASE("parse errors") {
    Scratch s;
    auto r = call({"validate", s.write("broken.json", "{\"kind\": \"additive\", ")});
    CHECK(r.code == cli::kParseError);
    CHECK(contains(r.err, "parse error: "));

    r = call({"validate", s.write("nomatrix.json", R"({"kind": "additive", "neutral": [0.4, 0.5, 0.5, 0.6]})")});
    CHECK(r.code == cli::kParseError);
    CHECK(contains(r.err, "matrix"));

    r = call({"validate", s.write("badnum.json", R"({"kind": "additive", "neutral": [0.4, 0.5, 0.5, 0.6],
        "matrix": [[[0.4, 0.5, 0.5, 0.6]]], "n": 1, "extra": 0})")});
    CHECK(r.code == cli::kOk);

    r = call({"validate", s.write("word.json", R"({"kind": "additive", "neutral": [0.4, "half", 0.5, 0.6],
        "matrix": [[[0.4, 0.5, 0.5, 0.6]]]})")});
    CHECK(r.code == cli::kParseError);
    CHECK(contains(r.err, "neutral"));

    r = call({"validate", s.write("scale.json", R"({"kind": "multiplicative", "neutral": [1, 1, 1, 1],
        "matrix": [[[1, 1, 1, 1]]]})")});
    CHECK(r.code == cli::kParseError);

    r = call({"validate", s.write("n.json", R"({"kind": "additive", "n": 2, "neutral": [0.4, 0.5, 0.5, 0.6],
        "matrix": [[[0.4, 0.5, 0.5, 0.6]]]})")});
    CHECK(r.code != cli::kOk);
}

TEST_CASE("convert round trip") {
    Scratch s;
    const std::string mult = (s.dir / "mult.json").string();
    const std::string back = (s.dir / "back.json").string();
    REQUIRE(call({"convert", "--to", "multiplicative", "--out", mult, data("sample_fpr.json")}).code == cli::kOk);
    REQUIRE(call({"convert", "--to", "additive", "--out", back, mult}).code == cli::kOk);

    const auto original = io::load_problem(data("sample_fpr.json"));
    const auto via = io::load_problem(mult);
    const auto again = io::load_problem(back);
    REQUIRE(via.is_multiplicative());
    REQUIRE(again.is_additive());
    const auto& x = std::get<TrFPR>(original.relation);
    const auto& z = std::get<TrFPR>(again.relation);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(x(i, j)[k] - z(i, j)[k]) <= 1e-12);
        }
    }

    const auto m2 = call({"convert", "--to", "multiplicative", "--scale", "2", data("sample_fpr.json")});
    REQUIRE(m2.code == cli::kOk);
    CHECK(io::Json::parse(m2.out)["scale"] == 2);
    CHECK(call({"convert", "--to", "additive", "--scale", "2", data("sample_mpr.json")}).code == cli::kParseError);

    const auto converted = io::Json::parse(call({"convert", "--to", "multiplicative", data("sample_fpr.json")}).out);
    const auto stored = io::load_problem(data("sample_mpr.json"));
    const auto& ym = std::get<TrMPR>(stored.relation);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t k = 0; k < 4; ++k) {
                CHECK(std::abs(converted["matrix"][i][j][k].get<double>() - ym(i, j)[k]) <= 1e-12 * ym(i, j)[k]);
            }
        }
    }
    CHECK(call({"convert", "--to", "multiplicative", "--out", "/nonexistent-dir/y.json", data("sample_fpr.json")})
              .code == cli::kParseError);

    const auto crisp = call({"convert", "--to", "multiplicative", data("crisp_fpr.json")});
    const auto doc = io::Json::parse(crisp.out);
    CHECK(std::abs(doc["matrix"][0][2][0].get<double>() - 9.0) <= 1e-12);
    CHECK(std::abs(doc["matrix"][1][0][3].get<double>() - 1.0 / 3.0) <= 1e-12);
}

TEST_CASE("output is deterministic") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"--json", "ahp", data("land_projects.json")},
          std::vector<std::string>{"utility", data("sample_fpr.json")},
          std::vector<std::string>{"weights", "--method", "all", data("land_projects_y1.json")}}) {
        const auto first = call(args);
        CHECK(first.code == cli::kOk);
        for (int rep = 0; rep < 3; ++rep) CHECK(call(args).out == first.out);
    }
}
