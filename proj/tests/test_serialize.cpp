#include <gtest/gtest.h>

#include "tropid/checker.hpp"
#include "tropid/error.hpp"
#include "tropid/serialize.hpp"

using namespace tropid;

TEST(Serialize, ScalarsAndMatrices) {
    EXPECT_EQ(to_json(TropScalar::bottom()), "-inf");
    EXPECT_EQ(to_json(TropScalar(Rational(3, 2))), "3/2");
    EXPECT_EQ(scalar_from_json(Json(5)), TropScalar(5));
    EXPECT_EQ(scalar_from_json(Json("-inf")), TropScalar::bottom());
    EXPECT_THROW(scalar_from_json(Json(1.5)), ParseError);
    const auto m = TropMatrix::over_chain({{1, 0}, {TropScalar::bottom(), Rational(-1, 3)}});
    const Json j = to_json(m);
    EXPECT_EQ(j.dump(), R"([["1","0"],["-inf","-1/3"]])");
    EXPECT_EQ(matrix_from_json(j, m.index_ptr()), m);
    EXPECT_THROW(matrix_from_json(Json::parse("[[1]]"), m.index_ptr()), ParseError);
}

TEST(Serialize, PosetRoundTrip) {
    const Json j = Json::parse(R"({"elements":["1","2","3"],"leq":[["1","3"],["2","3"]]})");
    const Poset p = poset_from_json(j);
    EXPECT_EQ(p, fmim_poset());
    EXPECT_EQ(poset_from_json(to_json(p)), p);
    const Poset chain = poset_from_json(Json::parse(R"({"elements":["x","y","z"],"leq":[["x","y"],["y","z"]]})"));
    EXPECT_EQ(to_json(chain)["leq"].size(), 3u);  // closure adds x <= z
    EXPECT_THROW(poset_from_json(Json::parse(R"({"leq":[]})")), ParseError);
    EXPECT_THROW(poset_from_json(Json::parse(R"({"elements":["a","b"],"leq":[["a","b"],["b","a"]]})")), InvalidArgument);
    EXPECT_THROW(poset_from_json(Json::parse(R"({"elements":["a"],"leq":[["a"]]})")), ParseError);
}

TEST(Serialize, AssignmentShapes) {
    const auto c2 = make_poset(Poset::chain(2));
    const auto obj = matrix_assignment_from_json(Json::parse(R"({"a":[[1,0],["-inf",0]]})"), c2);
    const auto arr = matrix_assignment_from_json(Json::parse(R"([{"letter":"a","value":[[1,0],["-inf",0]]}])"), c2);
    EXPECT_EQ(obj, arr);
    const auto b = bicyclic_assignment_from_json(Json::parse(R"({"a":{"i":1,"j":2},"b":[0,"3"]})"));
    EXPECT_EQ(b.at('a'), (Bicyclic{1, 2}));
    EXPECT_EQ(b.at('b'), (Bicyclic{0, 3}));
    const auto f = fmim_assignment_from_json(Json::parse(R"({"assignment":{"x":[1,0,1]}})"));
    EXPECT_EQ(f.at('x'), Fmim::generator());
    EXPECT_THROW(bicyclic_assignment_from_json(Json::parse(R"({"ab":[0,0]})")), ParseError);
    EXPECT_THROW(bicyclic_assignment_from_json(Json::parse(R"({"a":[0,-1]})")), InvalidArgument);
    EXPECT_THROW(fmim_assignment_from_json(Json::parse(R"({"a":[0,0,3]})")), InvalidArgument);
    EXPECT_THROW(bicyclic_assignment_from_json(Json::parse(R"(7)")), ParseError);
}

TEST(Serialize, WitnessReadsBack) {
    const Identity id = parse_identity("ab = ba");
    const Witness w = bicyclic_witness(id);
    const Json j = to_json(w);
    EXPECT_EQ(j["model"], "bicyclic");
    const auto again = make_bicyclic_witness(id, bicyclic_assignment_from_json(j));
    EXPECT_TRUE(verify_witness(id, again));
    const Witness m = falsifying_witness(id, 2);
    const Json mj = to_json(m);
    EXPECT_EQ(mj["coordinate"], Json::parse("[1,2]"));
    const auto back = matrix_assignment_from_json(mj, make_poset(Poset::chain(2)));
    EXPECT_EQ(back, std::get<MatrixWitness>(m.data).assignment);
}

TEST(Serialize, BigBicyclicCoordinatesBecomeStrings) {
    const Bicyclic big{Integer("123456789012345678901234567890"), 1};
    const Json j = to_json(big);
    EXPECT_TRUE(j["i"].is_string());
    EXPECT_TRUE(j["j"].is_number_integer());
}

TEST(Serialize, VerdictFields) {
    const Identity id = parse_identity("ab = ba");
    const Verdict v = check_identity(id, 2);
    const Json j = to_json(v, falsifying_witness(id, 2));
    EXPECT_EQ(j["result"], "fails");
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["failing_u"], "a");
    EXPECT_TRUE(j["point"].contains("x(b,2)"));
    EXPECT_NE(j["left_value"], j["right_value"]);
    EXPECT_TRUE(j.contains("witness"));
    EXPECT_EQ(to_json(check_identity(adjan_identity(), 2))["result"], "holds");
}

TEST(Serialize, PolysAreCanonical) {
    const Identity id = adjan_identity();
    const Json a = polys_to_json(id, 2, true), b = polys_to_json(id, 2, true);
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(a["pairs"].size(), 3u);  // u = "", "a", "b"
    for (const auto& p : a["pairs"]) EXPECT_TRUE(p["equivalent"].get<bool>());
    const Json raw = polys_to_json(id, 2, false);
    EXPECT_GE(raw["pairs"][1]["left"]["terms"].size(), a["pairs"][1]["left"]["terms"].size());
}
