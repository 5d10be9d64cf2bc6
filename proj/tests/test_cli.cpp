#include <doctest.h>

#include "../tools/cli.hpp"
#include "hopfcyc/io.hpp"

#include <sstream>

using namespace hopfcyc;

namespace {

struct Run {
    int code = 0;
    std::string out, err;

    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    Run r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const char* name) { return std::string(HOPFCYC_TEST_DATA) + "/" + name; }

std::vector<Index> series(const Json& doc, const char* name) {
    return doc.at("results").at("homology").at(name).get<std::vector<Index>>();
}

}  // namespace

TEST_CASE("homology commands report the expected series") {
    Run hc = run({"hc", "kz2", "adjoint", "--max-degree", "5", "--method", "both"});
    REQUIRE(hc.code == cli::kOk);
    Json doc = hc.json();
    CHECK(series(doc, "HC_connes") == std::vector<Index>{2, 0, 2, 0, 2, 0});
    CHECK(series(doc, "HC_bicomplex") == std::vector<Index>{2, 0, 2, 0, 2, 0});
    CHECK(doc["results"]["homology"]["degree"].size() == 6);
    CHECK(doc["status"] == "pass");

    Run hh = run({"hh", "kz2", "trivial", "--max-degree", "3"});
    REQUIRE(hh.code == cli::kOk);
    CHECK(series(hh.json(), "HH") == std::vector<Index>{1, 0, 0, 0});

    Run f2 = run({"hh", "kz2", "trivial", "--max-degree", "3", "--field", "f2"});
    REQUIRE(f2.code == cli::kOk);
    CHECK(series(f2.json(), "HH") == std::vector<Index>{1, 1, 1, 1});
}

TEST_CASE("documents are self-describing") {
    Run r = run({"verify", "hopf", data("z2.json")});
    REQUIRE(r.code == cli::kOk);
    Json doc = r.json();
    CHECK(doc["schema"] == 1);
    CHECK(doc["command"]["name"] == "verify hopf");
    REQUIRE(doc["inputs"].size() == 1);
    std::string sha = doc["inputs"][0]["sha256"];
    CHECK(sha.size() == 64);
    CHECK(doc["checks"].size() == 8);
    // the timings block comes last
    CHECK(std::prev(doc.end()).key() == "timings");
}

TEST_CASE("output is deterministic apart from timings") {
    auto strip = [](Run r) {
        Json doc = r.json();
        doc.erase("timings");
        return doc.dump();
    };
    std::vector<std::string> args = {"hc", "ks3", "adjoint", "--max-degree", "3"};
    std::string a = strip(run(args));
    std::string b = strip(run(args));
    CHECK(a == b);
    // thread count does not change the results, only the recorded configuration
    std::vector<std::string> par = args;
    par.insert(par.end(), {"--jobs", "4"});
    Json pa = run(par).json(), se = Json::parse(a);
    CHECK(pa["results"] == se["results"]);
    CHECK(pa["checks"] == se["checks"]);
}

TEST_CASE("exit codes") {
    CHECK(run({"verify", "crossed", data("ad_s3.json")}).code == cli::kOk);
    CHECK(run({"verify", "cyclic", "ks3", "adjoint", "--max-degree", "3"}).code == cli::kOk);

    Run bad = run({"verify", "cyclic", data("z2_sign_grouplike.json")});
    CHECK(bad.code == cli::kCheckFailed);
    CHECK(bad.json()["status"] == "fail");
    CHECK(bad.err.find("check failed") != std::string::npos);

    // the trivial module over Sweedler's algebra is not crossed: construction is refused
    Run sw = run({"hc", data("sweedler.json"), "trivial", "--max-degree", "1"});
    CHECK(sw.code == cli::kCheckFailed);
    CHECK(sw.err.find("not a crossed module") != std::string::npos);
    CHECK(run({"hc", data("sweedler.json"), "adjoint", "--max-degree", "2"}).code == cli::kOk);

    CHECK(run({"hc", "kz2", "nonsense"}).code == cli::kInputError);
    CHECK(run({"hc", "kz2", "adjoint", "--field", "f5"}).code == cli::kInputError);
    CHECK(run({"hc", "kz2", "adjoint", "--max-degree", "0"}).code == cli::kInputError);
    CHECK(run({"hc", "kz2", "adjoint", "--format", "xml"}).code == cli::kInputError);
    CHECK(run({"verify", "hopf", "{\"dim\": 2,"}).code == cli::kInputError);
    CHECK(run({"verify", "hopf", data("missing.json")}).code == cli::kInputError);
    CHECK(run({"frobnicate"}).code == cli::kInputError);
    CHECK(run({"qtorus", R"({"r": 2, "a": [[0, 1], [1, 0]], "q_order": "infinite"})"}).code == cli::kInputError);
    CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("prime fields support Hochschild homology only") {
    Run r = run({"hc", "kz2", "adjoint", "--field", "f5"});
    CHECK(r.err.find("characteristic 0") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(run({"hh", "kz2", "adjoint", "--field", "f5", "--max-degree", "2"}).code == cli::kOk);
    CHECK(run({"hh", "kz2", "adjoint", "--field", "f4"}).code == cli::kInputError);
}

TEST_CASE("mutated structure constants give a witness") {
    Json doc = load_document(data("z2.json"));
    doc["antipode"][0][0] = 0;
    Run r = run({"verify", "hopf", doc.dump()});
    CHECK(r.code == cli::kCheckFailed);
    Json out = r.json();
    bool witnessed = false;
    for (const auto& c : out["checks"])
        if (c["name"] == "antipode" && c["passed"] == false) witnessed = !c["witness"].get<std::string>().empty();
    CHECK(witnessed);
}

TEST_CASE("table format") {
    Run r = run({"hc", "kz2", "adjoint", "--max-degree", "3", "--format", "table"});
    REQUIRE(r.code == cli::kOk);
    CHECK(r.out.find("HC") != std::string::npos);
    CHECK(r.out.find("[PASS]") != std::string::npos);
    CHECK_THROWS(Json::parse(r.out));
}

TEST_CASE("Galois, class formula and quantum torus commands") {
    Run g = run({"galois", data("s3_over_a3.json"), "--max-degree", "3"});
    REQUIRE(g.code == cli::kOk);
    Json gd = g.json();
    CHECK(series(gd, "HC_direct") == std::vector<Index>{3, 0, 3, 0});
    CHECK(series(gd, "HC_lambda") == std::vector<Index>{3, 0, 3, 0});

    Run b = run({"burghelea", "kd4", "adjoint", "--max-degree", "3"});
    REQUIRE(b.code == cli::kOk);

    Run q = run({"qtorus", data("torus_r2.json"), "--max-degree", "3"});
    REQUIRE(q.code == cli::kOk);
    CHECK_FALSE(q.json()["results"]["homology"].empty());

    CHECK(run({"verify", "galois", "twisted_z2xz2"}).code == cli::kOk);
    Run ng = run({"verify", "galois", R"({"algebra": {"group": "z2"}, "grading": {"group": "z2", "degree": [0, 0]}})"});
    CHECK(ng.code == cli::kCheckFailed);
}

TEST_CASE("export round trips through the parsers") {
    for (bool explicit_constants : {false, true}) {
        std::vector<std::string> args = {"export", "hopf", "ks3"};
        if (explicit_constants) args.push_back("--explicit");
        Run h = run(args);
        REQUIRE(h.code == cli::kOk);
        CHECK(run({"verify", "hopf", h.out}).code == cli::kOk);

        args = {"export", "crossed", "ks3", "adjoint"};
        if (explicit_constants) args.push_back("--explicit");
        Run c = run(args);
        REQUIRE(c.code == cli::kOk);
        CHECK(run({"verify", "crossed", c.out}).code == cli::kOk);

        args = {"export", "galois", "z4_over_z2"};
        if (explicit_constants) args.push_back("--explicit");
        Run e = run(args);
        REQUIRE(e.code == cli::kOk);
        CHECK(run({"verify", "galois", e.out}).code == cli::kOk);
    }
}
