#include <flagbundle/errors.hpp>
#include <flagbundle/serialize.hpp>

#include <doctest.h>

using namespace flagbundle;

TEST_CASE("rationals") {
    CHECK(rational_json(Rational(4)) == json(4));
    CHECK(rational_json(Rational(-3, 4)) == json("-3/4"));
}

TEST_CASE("bundle round trip") {
    const BundleVector q(grassmannian(2, 4), {-1});
    const json j = to_json(q);
    CHECK(j.dump() == R"({"base":"A3/{1,3}","ell":[-1]})");
    CHECK(bundle_from_json(j) == q);
    CHECK(bundle_from_json(json::parse(R"({"base":"A2/{}","ell":[-1,-1]})")).ell() == std::vector<long>{-1, -1});
    CHECK_THROWS_AS(bundle_from_json(json::parse(R"({"ell":[1]})")), ParseError);
    CHECK_THROWS_AS(bundle_from_json(json::parse(R"({"base":"A2/{}","ell":[1]})")), DomainError);
}

TEST_CASE("flag invariants") {
    const ParabolicDatum p = grassmannian(2, 4);
    const json j = to_json(flag_invariants(p), p);
    CHECK(j["datum"] == "A3/{1,3}");
    CHECK(j["m_theta"] == 4);
    CHECK(j["fano_index"] == 4);
    CHECK(j["picard_rank"] == 1);
    CHECK(j["delta_p_root"] == json::array({2, 4, 2}));
    CHECK(j["delta_p_weight"] == json::array({0, 4, 0}));
}

TEST_CASE("reports") {
    const json c = to_json(cyt_datum(ParabolicDatum::parse("A2/{}"), 1));
    CHECK(c["lambda"] == "4/3");
    CHECK(c["omega0_scale"] == "3/4");
    CHECK(c["m"] == 3);
    const json l = to_json(astheno_locus(4, 3));
    CHECK(l["center_a"] == -2);
    CHECK(l["radius_sq"] == 2);
    const json d = to_json(astheno_locus(2, 1));
    CHECK(d["line_a"] == "-1/2");
    const json t = to_json(table1({LieType{Family::A, 2}}));
    CHECK(t["rows"].size() == 5);
    CHECK(t["rows"][3]["su_index"] == 5);
}
