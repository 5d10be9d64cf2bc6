#include <doctest.h>

#include "fixtures.hpp"

#include <functional>

using namespace hopfcyc;
using fixtures::group;

namespace {

std::string data(const char* name) { return std::string(HOPFCYC_TEST_DATA) + "/" + name; }

void same_hopf(const HopfAlgebraData& a, const HopfAlgebraData& b) {
    CHECK(a.dim() == b.dim());
    CHECK(a.mult == b.mult);
    CHECK(a.unit == b.unit);
    CHECK(a.counit == b.counit);
    CHECK(a.antipode == b.antipode);
    CHECK(verify_hopf(b).ok());
    for (std::uint32_t x = 0; x < a.dim(); ++x) {
        SparseVec u, v;
        for (const auto& t : a.comult[x]) u.push_back(Entry{t.left * a.dim() + t.right, t.coef});
        for (const auto& t : b.comult[x]) v.push_back(Entry{t.left * b.dim() + t.right, t.coef});
        normalize(u);
        normalize(v);
        CHECK(u == v);
    }
}

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("scalars") {
    CHECK(parse_scalar(Json(7), "") == 7);
    CHECK(parse_scalar(Json(-7), "") == -7);
    CHECK(parse_scalar(Json("-6/8"), "") == Rational(-3, 4));
    CHECK(scalar_json(Rational(5)) == Json(5));
    CHECK(scalar_json(Rational(-3, 4)) == Json("-3/4"));
    CHECK_THROWS_AS(parse_scalar(Json("1/0"), "/x"), InputError);
    CHECK(error_of([] { parse_scalar(Json(0.5), "/coef"); }).find("/coef") != std::string::npos);
}

TEST_CASE("group documents round trip") {
    for (const auto& name : builtin_group_names()) {
        FiniteGroupData g = *builtin_group(name);
        FiniteGroupData back = parse_group(group_json(g));
        CHECK(back.table == g.table);
        CHECK(back.names == g.names);
    }
    // a table that is not a group
    Json bad = group_json(*builtin_group("z3"));
    bad["table"][1][1] = bad["table"][0][0];
    CHECK_THROWS_AS(parse_group(bad), InputError);
}

TEST_CASE("Hopf documents round trip") {
    for (HopfPtr h : {group("s3"), group("z2xz2"), fixtures::sweedler(), op_cop(*fixtures::sweedler())}) {
        for (bool explicit_constants : {false, true}) {
            Json doc = hopf_json(*h, explicit_constants);
            if (explicit_constants || !h->group) CHECK(doc.contains("mult"));
            HopfPtr back = parse_hopf(Json::parse(doc.dump()));
            same_hopf(*h, *back);
        }
    }
    HopfPtr named = parse_hopf(Json("kS3"));
    same_hopf(*group("s3"), *named);
    same_hopf(*group("z2"), *resolve_hopf(data("z2.json")));
}

TEST_CASE("crossed module documents round trip") {
    std::vector<CrossedModuleData> ms = {adjoint_module(group("s3")), coadjoint_module(fixtures::sweedler()),
                                         sign_module(group("d4"))};
    for (const auto& m : ms)
        for (bool explicit_constants : {false, true}) {
            CrossedModuleData back = parse_crossed(Json::parse(crossed_json(m, explicit_constants).dump()));
            CHECK(back.dim == m.dim);
            CHECK(back.action == m.action);
            CHECK(back.coaction == m.coaction);
        }
    CrossedModuleData file = resolve_module(group("s3"), data("ad_s3.json"));
    CHECK_THROWS_AS(resolve_module(group("z2"), data("ad_s3.json")), InputError);
    CrossedModuleData ad = adjoint_module(group("s3"));
    CHECK(file.action == ad.action);
    CHECK(file.coaction == ad.coaction);
    CrossedModuleData by_name = resolve_module(group("z2"), "adjoint");
    CHECK(by_name.dim == 2);
    CHECK_THROWS_AS(resolve_module(group("z2"), "nonsense"), InputError);
}

TEST_CASE("extension documents round trip") {
    for (const auto& name : builtin_extension_names()) {
        ComoduleAlgebraData a = *builtin_extension(name);
        for (bool explicit_constants : {false, true}) {
            ComoduleAlgebraData back = parse_extension(Json::parse(extension_json(a, explicit_constants).dump()));
            CHECK(back.algebra.mult == a.algebra.mult);
            CHECK(back.algebra.unit == a.algebra.unit);
            CHECK(back.coaction == a.coaction);
            CHECK(back.base->dim() == a.base->dim());
        }
    }
    ComoduleAlgebraData file = resolve_extension(data("s3_over_a3.json"));
    CHECK(file.coaction == builtin_extension("s3_over_a3")->coaction);
    CHECK(resolve_extension(R"({"builtin": "z4_over_z2"})").algebra.dim() == 4);
    // a grading that products leave is an input error with a location
    std::string e = error_of([] {
        parse_extension(Json::parse(R"({"algebra": {"group": "z4"}, "grading": {"group": "z2", "degree": [0, 1, 1, 1]}})"));
    });
    CHECK(e.find("/grading") != std::string::npos);
    CHECK(e.find("leaves the grading") != std::string::npos);
    CHECK(resolve_extension(R"({"algebra": {"group": "z4"}, "grading": {"group": "z2", "degree": [0, 1, 0, 1]}})")
              .algebra.dim() == 4);
}

TEST_CASE("torus documents") {
    TorusCocycle t = parse_torus(load_document(data("torus_r2.json")));
    CHECK(t.r == 2);
    CHECK(validate_torus(t).empty());
    TorusCocycle f = parse_torus(Json::parse(R"({"r": 2, "a": [[0, 2], [-2, 0]], "q_order": 5})"));
    REQUIRE(f.q_order);
    CHECK(*f.q_order == 5);
    CHECK_FALSE(parse_torus(Json::parse(R"({"r": 1, "a": [[0]], "q_order": "infinite"})")).q_order);
    CHECK_THROWS_AS(parse_torus(Json::parse(R"({"r": 2, "a": [[0, 1], [1, 0]], "q_order": "infinite"})")), InputError);
}

TEST_CASE("errors carry the document location") {
    Json doc = Json::parse(fixtures::sweedler_json);
    SUBCASE("index out of range") {
        doc["mult"][3][2] = 9;
        std::string e = error_of([&] { parse_hopf(doc); });
        CHECK(e.find("/mult/3/2") != std::string::npos);
    }
    SUBCASE("missing field") {
        doc.erase("antipode");
        std::string e = error_of([&] { parse_hopf(doc); });
        CHECK(e.find("antipode") != std::string::npos);
    }
    SUBCASE("wrong length") {
        doc["counit"] = {1, 1, 0};
        std::string e = error_of([&] { parse_hopf(doc); });
        CHECK(e.find("/counit") != std::string::npos);
    }
    SUBCASE("malformed JSON") {
        std::string e = error_of([] { load_document("{\"dim\": 2,"); });
        CHECK(e.find("malformed JSON") != std::string::npos);
        CHECK(e.find("byte") != std::string::npos);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_document(data("no_such_file.json")), InputError);
    }
    SUBCASE("unknown builtin") {
        CHECK_THROWS_AS(resolve_hopf("a5"), InputError);
    }
}

TEST_CASE("structure errors are not input errors") {
    // well-formed but not a Hopf algebra: parsing succeeds, verification fails
    Json doc = Json::parse(fixtures::sweedler_json);
    doc["antipode"][2][2] = 1;
    HopfPtr h = parse_hopf(doc);
    CheckReport r = verify_hopf(*h);
    CHECK_FALSE(r.ok());
    CHECK(r.find("antipode"));
    CHECK_FALSE(r.find("antipode")->passed);
}
