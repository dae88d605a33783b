#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "holo/cli/commands.hpp"
#include "holo/cli/model.hpp"
#include "holo/cli/report.hpp"

using namespace holo;
using namespace holo::cli;
using nlohmann::json;

namespace {

const std::string kModels = HOLO_MODELS_DIR;

struct Run
{
    int code = 0;
    std::string out;
    std::string err;
    json report() const { return json::parse(out); }
};

Run invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Run r;
    r.code = run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string model(const char* name)
{
    return kModels + "/" + name;
}

/// Writes `text` to a scratch file and returns its path.
std::string scratch(const std::string& name, const std::string& text)
{
    const std::string path = std::string(HOLO_SCRATCH_DIR) + "/" + name;
    std::ofstream(path) << text;
    return path;
}

} // namespace

TEST_CASE("fnv1a reference values")
{
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
}

TEST_CASE("schubert commands")
{
    const auto order = invoke({"schubert", "order", "--n", "3"});
    REQUIRE(order.code == kOk);
    CHECK(order.report()["results"]["edge_count"] == 8);
    CHECK(order.report()["results"]["incomparable_pairs"].size() == 2);

    const auto smooth = invoke({"schubert", "smooth", "--perm", "3412"});
    REQUIRE(smooth.code == kOk);
    CHECK(smooth.report()["results"]["singular"] == true);
    CHECK(smooth.report()["results"]["witness"]["positions"] == json({1, 2, 3, 4}));
    CHECK(invoke({"schubert", "smooth", "--perm", "4,2,3,1"}).report()["results"]["witness"]["pattern"] == "4231");
    CHECK(invoke({"schubert", "smooth", "--perm", "312"}).report()["results"]["singular"] == false);

    const auto strata = invoke({"schubert", "strata", "--flag3"});
    REQUIRE(strata.code == kOk);
    CHECK(strata.report()["results"]["generator_count"] == 6);
    CHECK(strata.report()["results"]["verdict"] == "at_most_one");

    CHECK(invoke({"schubert", "closure", "--perm", "312"}).report()["results"]["size"] == 4);

    const auto bad = invoke({"schubert", "smooth", "--perm", "3312"});
    CHECK(bad.code == kParseError);
    CHECK(bad.err.find("repeats") != std::string::npos);
    CHECK(invoke({"schubert", "order"}).code == kParseError);
    CHECK(invoke({"nonsense"}).code == kParseError);
}

TEST_CASE("user catalogs report failing hypotheses")
{
    auto cat = invoke({"schubert", "strata", "--flag3"}).report()["results"]["catalog"];
    cat["hodge"]["Z1"] = 1;
    const auto r = invoke({"schubert", "strata", "--catalog", scratch("catalog.json", cat.dump())});
    REQUIRE(r.code == kOk);
    CHECK(r.report()["results"]["verdict"] == "not_concluded");
    const auto failing = r.report()["results"]["failing"];
    CHECK(std::find(failing.begin(), failing.end(), "h10 vanishing") != failing.end());
    CHECK(std::find(failing.begin(), failing.end(), "Hom(L1, L1 (x) Omega^1) = 0") != failing.end());
}

TEST_CASE("model parse errors name the offending field")
{
    const std::string bad_poly = R"({"ring": {"n_vars": 1, "trunc_degree": 2},
        "modules": [{"index": 0, "rank": 1}, {"index": 1, "rank": 1}],
        "differentials": [{"from_index": 0, "matrix": [["x1 +* 2"]]}]})";
    const auto r = invoke({"complex", "cohomology", scratch("bad_poly.json", bad_poly)});
    CHECK(r.code == kParseError);
    CHECK(r.err.find("/differentials/0/matrix/0/0") != std::string::npos);

    const std::string bad_shape = R"({"ring": {"n_vars": 1, "trunc_degree": 2},
        "modules": [{"index": 0, "rank": 2}, {"index": 1, "rank": 1}],
        "differentials": [{"from_index": 0, "matrix": [["x1"]]}]})";
    const auto s = invoke({"complex", "cohomology", scratch("bad_shape.json", bad_shape)});
    CHECK(s.code == kParseError);
    CHECK(s.err.find("/differentials/0/matrix/0") != std::string::npos);

    CHECK(invoke({"complex", "cohomology", scratch("not_json.json", "{")}).code == kParseError);
    CHECK(invoke({"complex", "cohomology", kModels + "/missing.json"}).code == kParseError);
    CHECK_THROWS_AS(parse_model(json::parse(R"({"ring": {"n_vars": 1, "trunc_degree": 2}})")), ParseError);
}

TEST_CASE("model round trip")
{
    std::ifstream in(model("nilpotent.json"));
    std::stringstream ss;
    ss << in.rdbuf();
    const Model m = parse_model_text(ss.str());
    const Model back = parse_model(model_to_json(m));
    CHECK(back.ranks == m.ranks);
    CHECK(back.base == m.base);
    REQUIRE(back.variations.size() == 2);
    CHECK(back.variations[1].second == m.variations[1].second);
    CHECK(back.mode == m.mode);
}

TEST_CASE("complex commands")
{
    const auto acyclic = invoke({"complex", "cohomology", model("acyclic.json")});
    REQUIRE(acyclic.code == kOk);
    for (const auto& [k, v] : acyclic.report()["results"]["ranks"].items())
        CHECK(v == 0);

    // a single module carries the zero connection among its gauge fields
    const auto single = invoke({"complex", "gauge", "solve", model("curved_line.json")});
    REQUIRE(single.code == kOk);
    CHECK(single.report()["results"]["exists"] == true);
    CHECK(single.report()["results"]["field"]["B"]["0"] == json::parse(R"([[["0"]], [["0"]]])"));

    for (const char* name : {"acyclic.json", "curved_line.json", "nilpotent.json"}) {
        const auto g = invoke({"complex", "gauge", "solve", model(name)});
        const auto h = invoke({"complex", "hom", model(name)});
        REQUIRE(g.code == kOk);
        REQUIRE(h.code == kOk);
        CHECK(g.report()["results"]["affine_dimension"] == h.report()["results"]["h0_rank"]);
    }

    const auto koszul = invoke({"complex", "gauge", "solve", model("koszul.json")});
    CHECK(koszul.code == kObstruction);
    CHECK(koszul.report()["results"]["exists"] == false);
    CHECK_FALSE(koszul.report()["results"]["obstruction"].get<std::string>().empty());

    const auto jump = invoke({"complex", "cohomology", model("koszul.json")});
    CHECK(jump.code == kNumericalFailure);
    CHECK(jump.report()["results"]["diagnostic"]["error"] == "RankJump");
}

TEST_CASE("ym commands")
{
    const auto poly = invoke({"ym", "polynomial", model("nilpotent.json")});
    REQUIRE(poly.code == kOk);
    const auto terms = poly.report()["results"]["terms"];
    REQUIRE(terms.size() == 1);
    CHECK(terms[0]["exponent"] == json({2, 2}));
    CHECK(poly.report()["results"]["P"] == "2*l1^2*l2^2");

    const auto solve = invoke({"ym", "solve", model("nilpotent.json")});
    REQUIRE(solve.code == kOk);
    CHECK(solve.report()["results"]["nonisolated"] == true);
    CHECK(solve.report()["results"]["bezout_bound"] == 9);

    const auto flat = invoke({"ym", "value", model("flat_line.json")});
    REQUIRE(flat.code == kOk);
    CHECK(flat.report()["results"]["value"] == "0");

    const auto curved = invoke({"ym", "value", model("curved_line.json"), "--lambda", "1/2,(1+i)"});
    REQUIRE(curved.code == kOk);
    CHECK(curved.report()["results"]["consistent"] == true);
    CHECK(curved.report()["results"]["value"] == "5/4");
    CHECK(invoke({"ym", "value", model("curved_line.json"), "--lambda", "1/2"}).code == kParseError);

    const auto check = invoke({"ym", "check", model("flat_line.json")});
    REQUIRE(check.code == kOk);
    CHECK(check.report()["results"]["all_orthogonal"] == true);
    CHECK(check.report()["results"]["identities_hold"] == true);

    // the rank-one curvature dx1^dx2 pairs with d(x1 dx2)
    const auto curved_check = invoke({"ym", "check", model("curved_line.json")});
    REQUIRE(curved_check.code == kOk);
    CHECK(curved_check.report()["results"]["all_orthogonal"] == false);

    CHECK(invoke({"ym", "polynomial", model("koszul.json")}).code == kParseError);
}

TEST_CASE("degree overflow maps to exit code 3")
{
    const std::string text = R"({"ring": {"n_vars": 2, "trunc_degree": 1},
        "modules": [{"index": 0, "rank": 2}],
        "base_connections": [{"index": 0, "one_form_matrix":
            [[["x1", "0"], ["0", "0"]], [["0", "x2"], ["x1", "0"]]]}]})";
    const auto r = invoke({"ym", "value", scratch("overflow.json", text)});
    CHECK(r.code == kNumericalFailure);
    CHECK(r.err.find("DegreeOverflow") != std::string::npos);
}

TEST_CASE("identity suite")
{
    for (const char* name : {"acyclic.json", "curved_line.json", "flat_line.json", "nilpotent.json", "koszul.json"}) {
        const auto r = invoke({"check", model(name)});
        CHECK_MESSAGE(r.code == kOk, name);
        CHECK(r.report()["results"]["all_pass"] == true);
    }

    const std::string corrupted = R"({"ring": {"n_vars": 2, "trunc_degree": 3},
        "modules": [{"index": 0, "rank": 1}, {"index": 1, "rank": 2}, {"index": 2, "rank": 1}],
        "differentials": [
            {"from_index": 0, "matrix": [["x1"], ["x2"]]},
            {"from_index": 1, "matrix": [["-x2", "x2"]]}]})";
    const auto bad = invoke({"check", scratch("corrupted.json", corrupted)});
    CHECK(bad.code == kIdentityFailure);
    const auto first = bad.report()["results"]["checks"][0];
    CHECK(first["name"] == "delta^2 = 0");
    CHECK(first["status"] == "fail");
    const Ring ring{2, 3};
    CHECK(exact::TruncPoly::parse(first["detail"]["value"].get<std::string>(), ring) ==
          exact::TruncPoly::parse("x2^2 - x1*x2", ring));

    const auto fuzz = invoke({"check", "--fuzz", "10", "--seed", "5"});
    REQUIRE(fuzz.code == kOk);
    CHECK(fuzz.report()["results"]["fuzz"]["failures"] == 0);
}

TEST_CASE("reports are byte identical across runs and worker counts")
{
    const auto a = invoke({"ym", "solve", model("curved_line.json"), "--seed", "3"});
    const auto b = invoke({"ym", "solve", model("curved_line.json"), "--seed", "3", "--threads", "4"});
    const auto c = invoke({"--threads", "2", "ym", "solve", model("curved_line.json"), "--seed", "3"});
    REQUIRE(a.code == kOk);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.report()["inputs_digest"] != invoke({"ym", "solve", model("curved_line.json"), "--seed", "4"})
                                            .report()["inputs_digest"]);

    const auto table = invoke({"schubert", "strata", "--flag3", "--output", "table"});
    REQUIRE(table.code == kOk);
    CHECK(table.out.find("results.verdict") != std::string::npos);
    CHECK(table.out.find(invoke({"schubert", "strata", "--flag3"}).report()["inputs_digest"].get<std::string>()) !=
          std::string::npos);
}
