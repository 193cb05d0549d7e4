// Exercises the extern-C surface through the shared library only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "spanpoly.h"

using Json = nlohmann::json;

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { spz_string_free(p); }
    Json json() const { return Json::parse(std::string(p)); }
};

struct G {
    spz_graph* g = nullptr;
    ~G() { spz_graph_free(g); }
};

struct A {
    spz_activities* a = nullptr;
    ~A() { spz_activities_free(a); }
};

}  // namespace

TEST_CASE("graph generate / parse / serialize") {
    G g;
    REQUIRE(spz_graph_generate("cycle:3", &g.g) == SPZ_OK);
    Str json;
    REQUIRE(spz_graph_to_json(g.g, &json.p) == SPZ_OK);
    Json j = json.json();
    CHECK(j.at("vertices").size() == 3);
    CHECK(j.at("edges").size() == 3);

    G g2;
    REQUIRE(spz_graph_parse(json.p, &g2.g) == SPZ_OK);
    Str json2;
    REQUIRE(spz_graph_to_json(g2.g, &json2.p) == SPZ_OK);
    CHECK(std::string(json.p) == std::string(json2.p));

    G bad;
    CHECK(spz_graph_parse("{\"vertices\":[0],\"edges\":[{\"u\":0,\"v\":7}]}", &bad.g) ==
          SPZ_ERR_ARGUMENT);
    CHECK(std::string(spz_last_error()).find("missing vertex") != std::string::npos);
    CHECK(spz_graph_generate("dodecahedron", &bad.g) == SPZ_ERR_PARSE);
}

TEST_CASE("poly verbs against k3") {
    G g;
    REQUIRE(spz_graph_generate("cycle:3", &g.g) == SPZ_OK);
    A a;
    REQUIRE(spz_activities_from_family(g.g, "reciprocal", &a.a) == SPZ_OK);

    Str uni;
    REQUIRE(spz_poly_z_univariate(g.g, a.a, &uni.p) == SPZ_OK);
    CHECK(uni.json().at("coeffs") == Json::array({"1", "3/4", "3/4", "1"}));

    Str omega;
    REQUIRE(spz_poly_omega(g.g, &omega.p) == SPZ_OK);
    CHECK(omega.json().at("terms").size() == 8);

    Str roots;
    REQUIRE(spz_unipoly_roots(uni.p, 0, &roots.p) == SPZ_OK);
    for (const auto& r : roots.json().at("roots")) {
        double re = r.at("re").get<double>();
        double im = r.at("im").get<double>();
        CHECK(std::abs(std::hypot(re, im) - 1.0) < 1e-9);
    }

    Str csv;
    REQUIRE(spz_unipoly_roots(uni.p, 1, &csv.p) == SPZ_OK);
    CHECK(std::string(csv.p).rfind("re,im,mult,modulus,arg", 0) == 0);
}

TEST_CASE("key analysis verb") {
    Str out;
    REQUIRE(spz_key_analysis("ruelle:1", 3, &out.p) == SPZ_OK);
    Json j = out.json();
    CHECK(j.at("sector_max").get<double>() == doctest::Approx(5.0 * M_PI / 6.0).epsilon(1e-9));
    CHECK(j.at("coeffs") == Json::array({"1", "3", "3"}));
}

TEST_CASE("certify: matching keys on k3 pass in S[pi]") {
    G g;
    REQUIRE(spz_graph_generate("cycle:3", &g.g) == SPZ_OK);
    A a;
    REQUIRE(spz_activities_from_family(g.g, "matching", &a.a) == SPZ_OK);
    Str report;
    int verdict = -1;
    REQUIRE(spz_certify(g.g, a.a, "{}", &report.p, &verdict) == SPZ_OK);
    CHECK(verdict == 0);
    Json j = report.json();
    CHECK(j.at("verdict") == "pass");
    const Json& result = j.at("results").at(0);
    CHECK(result.at("region").at("pretty") == "S[pi]");
    const Json& roots = result.at("roots").at("roots");
    REQUIRE(roots.size() == 1);
    CHECK(roots.at(0).at("re").get<double>() == doctest::Approx(-1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("certify: zero key row reports the degenerate pass") {
    G g;
    REQUIRE(spz_graph_generate("cycle:3", &g.g) == SPZ_OK);
    A a;
    REQUIRE(spz_activities_from_family(g.g, "explicit:[\"0\",\"0\",\"0\"]", &a.a) == SPZ_OK);
    Str report;
    int verdict = -1;
    REQUIRE(spz_certify(g.g, a.a, "{}", &report.p, &verdict) == SPZ_OK);
    CHECK(verdict == 0);
    CHECK(report.json().at("degenerate") == "identically zero");
}

TEST_CASE("falsify and scan run deterministically") {
    G g;
    REQUIRE(spz_graph_generate("cycle:3", &g.g) == SPZ_OK);
    A a;
    REQUIRE(spz_activities_from_family(g.g, "matching", &a.a) == SPZ_OK);
    Str r1, r2;
    int v1 = -1, v2 = -1;
    const char* opts = "{\"samples\":300,\"seed\":5}";
    REQUIRE(spz_falsify(g.g, a.a, opts, &r1.p, &v1) == SPZ_OK);
    REQUIRE(spz_falsify(g.g, a.a, opts, &r2.p, &v2) == SPZ_OK);
    CHECK(v1 == 0);
    CHECK(std::string(r1.p) == std::string(r2.p));

    Str scan;
    int sv = -1;
    REQUIRE(spz_scan("{\"trials\":25,\"seed\":3,\"max_edges\":8,\"width\":1}", &scan.p, &sv) ==
            SPZ_OK);
    CHECK(sv == 0);
    CHECK(scan.json().at("violations").empty());
}

TEST_CASE("logcc") {
    Str rep;
    int verdict = -1;
    REQUIRE(spz_logcc("[\"1\",\"6\",\"3\"]", &rep.p, &verdict) == SPZ_OK);
    CHECK(verdict == 0);
    REQUIRE(spz_logcc("[\"1\",\"0\",\"1\"]", &rep.p, &verdict) == SPZ_OK);
    CHECK(verdict == 1);
}

TEST_CASE("statmech on C3") {
    G g;
    REQUIRE(spz_graph_generate("cycle:3", &g.g) == SPZ_OK);
    Str rep;
    REQUIRE(spz_statmech(g.g, "{\"beta\":1,\"J\":0,\"mu\":[0,0,0],\"csv\":true}", &rep.p) ==
            SPZ_OK);
    Json j = rep.json();
    const Json& row = j.at("rows").at(0);
    CHECK(row.at("Z").get<double>() == doctest::Approx(8.0));
    CHECK(row.at("expected_edges").get<double>() == doctest::Approx(1.5));
    CHECK(j.at("csv").get<std::string>().rfind("beta,J,Z", 0) == 0);
    CHECK(j.at("analyticity").contains("clauses"));

    Str seq;
    REQUIRE(spz_statmech(nullptr,
                         "{\"beta\":1,\"mu\":[0,0,0],\"family\":\"cycle\",\"sizes\":[3,4,5]}",
                         &seq.p) == SPZ_OK);
    CHECK(seq.json().at("free_energy_sequence").at("points").size() == 3);
}
