#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhx/json_io.hpp"

using namespace qhx;
using jsonio::Json;

TEST_CASE("quaternion scalars travel as decimal strings") {
    Quat q{1.5, -2.0, 0.0, 0.25};
    Json j = jsonio::to_json(q);
    CHECK(j["x0"] == "1.5");
    CHECK(j["x1"] == "-2");
    CHECK(j["x3"] == "0.25");
    CHECK(jsonio::quat_from_json(j) == q);

    // exact mode serializes rationals
    QuatQ r{Rational(1, 3), Rational(-2), Rational(0), Rational(7, 2)};
    Json je = jsonio::to_json(r);
    CHECK(je["x0"] == "1/3");
    CHECK(je["x3"] == "7/2");

    // readers accept plain numbers and p/q strings
    CHECK(jsonio::quat_from_json(Json::parse(R"({"x0":1,"x1":"1/2","x2":"0.5","x3":0})")) ==
          Quat{1.0, 0.5, 0.5, 0.0});
    CHECK_THROWS(jsonio::quat_from_json(Json::parse(R"({"x0":1})")));
    CHECK_THROWS(jsonio::quat_from_json(Json::parse(R"(["not","an","object"])")));
}

TEST_CASE("matrix json shape") {
    matgroup::Mat3 m = matgroup::Mat3::identity();
    m.at(0, 2) = {3.0, -1.0};
    Json j = jsonio::to_json(m);
    REQUIRE(j.contains("rows"));
    CHECK(j["rows"].size() == 3);
    CHECK(j["rows"][0][2] == Json::array({3.0, -1.0}));
    CHECK(jsonio::mat3_from_json(j) == m);
    CHECK_THROWS(jsonio::mat3_from_json(Json::parse(R"({"rows":[[1,2],[3,4]]})")));
}

TEST_CASE("group element json carries the translation view") {
    auto g = matgroup::from_qht(Quat::i(), Quat{0, 0, 1, 2});
    Json j = jsonio::to_json(g);
    CHECK(j.contains("rows"));
    CHECK(j["t_z"] == Json::array({0.0, 0.0}));
    CHECK(j["t_zeta"] == Json::array({1.0, 2.0}));
}

TEST_CASE("classification flags") {
    auto flags = matgroup::classify(matgroup::Mat3::identity());
    Json j = jsonio::to_json(flags);
    CHECK(j["flags"] ==
          Json::array({"GeneralX", "Moebius", "Heisenberg", "HeisenbergTilde", "QHT",
                       "Unimodular"}));
}

TEST_CASE("transform json round trip") {
    QhtTransform<double> t{{0.5, 1, 0, -2}, {3, 0, 0.25, 0}};
    Json j = jsonio::to_json(t);
    CHECK(j.contains("u"));
    CHECK(j.contains("v"));
    CHECK(jsonio::transform_from_json(j) == t);
}

TEST_CASE("extended complex json uses inf tag") {
    CHECK(jsonio::to_json(mobius::ExtendedComplex::inf()) == Json("inf"));
    CHECK(jsonio::to_json(mobius::ExtendedComplex{std::complex<double>(1, -2)}) ==
          Json::array({1.0, -2.0}));
    CHECK(jsonio::extended_from_json(Json("inf")) == mobius::ExtendedComplex::inf());
    CHECK(jsonio::extended_from_json(Json::array({1.0, -2.0})) ==
          mobius::ExtendedComplex{std::complex<double>(1, -2)});
}

TEST_CASE("commutator table json lists pairs with coefficient maps") {
    Json j = jsonio::to_json(symop::commutator_table(symop::Catalog::X));
    CHECK(j["catalog"] == "x");
    REQUIRE(j["pairs"].is_array());
    CHECK(j["pairs"].size() == 15);
    bool found = false;
    for (const auto& p : j["pairs"])
        if (p["i"] == 3 && p["j"] == 6) {
            CHECK(p["result"] == Json{{"x2", "-1"}, {"x5", "1"}});
            found = true;
        }
    CHECK(found);
}

TEST_CASE("discrepancy report json") {
    Json j = jsonio::to_json(symop::verify_against_reference(symop::Catalog::G), symop::Catalog::G);
    CHECK(j["catalog"] == "g");
    CHECK(j["matches"] == 13);
    CHECK(j["total"] == 15);
    CHECK(j.contains("notes"));
}
