#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>

#include "qgw/hopf_json.hpp"

using namespace qgw;

TEST_CASE("FinHopf JSON round-trip") {
    for (const auto& [name, h] : instance_zoo()) {
        INFO(name);
        json j = hopf_to_json(h);
        CHECK(hopf_scalar_kind(j) == "rational");
        FinHopf<Rat> back = hopf_from_json<Rat>(j);
        CHECK(back == h);
        // serialization is deterministic
        CHECK(hopf_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("the shipped zoo documents match the built-in instances") {
    for (const auto& [name, h] : instance_zoo()) {
        INFO(name);
        std::ifstream in(std::string(QGW_DATA_DIR) + "/zoo/" + name + ".json");
        REQUIRE(in.good());
        json j = json::parse(in);
        FinHopf<Rat> loaded = hopf_from_json<Rat>(j);
        CHECK(loaded == h);
        CHECK(verify_hopf(loaded).ok());
    }
}

TEST_CASE("ScalarQ-valued documents") {
    FinHopf<ScalarQ> h;
    h.dim = 1;
    h.mult = Tensor3<ScalarQ>(1, 1, 1);
    h.comult = Tensor3<ScalarQ>(1, 1, 1);
    h.mult.at(0, 0, 0) = ScalarQ(1);
    h.comult.at(0, 0, 0) = ScalarQ(1);
    h.unit = {ScalarQ(1)};
    h.counit = {ScalarQ(1)};
    h.antipode = {{ScalarQ(1)}};
    json j = hopf_to_json(h);
    CHECK(hopf_scalar_kind(j) == "scalarq");
    CHECK(hopf_from_json<ScalarQ>(j) == h);
    CHECK_THROWS_AS(hopf_from_json<Rat>(j), DomainError);
}

TEST_CASE("scalar strings survive a round-trip") {
    LaurentPoly num(1);
    num -= LaurentPoly::monomial(1, 2);
    LaurentPoly den(1);
    den -= LaurentPoly::monomial(1, 6);
    ScalarQ s(num, den);
    CHECK(parse_scalar(s.to_string()) == s);
    CHECK(parse_rat(qgw::to_string(Rat(-7, 3))) == Rat(-7, 3));
}
