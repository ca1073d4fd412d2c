#include <doctest.h>

#include "svx/io.hpp"

using namespace svx;

TEST_CASE("rational parsing and printing")
{
    CHECK(rat_from_json(json(3)) == Rat(3));
    CHECK(rat_from_json(json("1/2")) == Rat(1, 2));
    CHECK(rat_from_json(json("-7/3")) == Rat(-7, 3));
    CHECK(rat_to_json(Rat(5)) == json(5));
    CHECK(rat_to_json(Rat(1, 2)) == json("1/2"));
    CHECK_THROWS_AS(rat_from_json(json(1.5)), std::invalid_argument);
    CHECK(rat_from_json(rat_to_json(Rat(-22, 7))) == Rat(-22, 7));
}

TEST_CASE("polytope round trip")
{
    json j = {{"dim", 2}, {"vertices", {{0, 0}, {2, 0}, {0, 2}, {"1/2", "1/2"}}}};
    auto p = polytope_from_json(j);
    CHECK(p.vertices.size() == 3);
    CHECK(volume(p) == 2);
    auto p2 = polytope_from_json(polytope_to_json(p));
    CHECK(p2 == p);
    CHECK_THROWS_AS(polytope_from_json(json{{"dim", 2}}), std::invalid_argument);
    CHECK_THROWS_AS(polytope_from_json(json{{"dim", 0}, {"vertices", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(polytope_from_json(json{{"dim", 2}, {"vertices", {{1, 2, 3}}}}),
                    std::invalid_argument);
}

TEST_CASE("max affine round trip")
{
    json j = {{"dim", 2},
              {"pieces",
               {{{"a", {1, 0}}, {"b", 0}},
                {{"a", {0, 1}}, {"b", "-1/2"}},
                {{"a", {0, 0}}, {"b", 0}}}}};
    auto f = max_affine_from_json(j);
    CHECK(f.pieces.size() == 3);
    RatVec x{Rat(2), Rat(0)};
    CHECK(f.eval(x) == 2);
    auto f2 = max_affine_from_json(max_affine_to_json(f));
    CHECK(f2.pieces == f.pieces);
    CHECK_THROWS_AS(max_affine_from_json(json{{"dim", 2}}), std::invalid_argument);
}

TEST_CASE("valuation round trip")
{
    json sq = {{"dim", 2}, {"vertices", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}}};
    json j = {{"terms",
               {{{"c", 1}, {"p", 2}, {"companions", json::array()}},
                {{"c", 1}, {"p", 1}, {"companions", {sq}}},
                {{"c", 1}, {"p", 0}, {"companions", {sq, sq}}}}}};
    auto v = valuation_from_json(j, 2);
    CHECK(v.terms.size() == 3);
    CHECK(valuation_eval(v, polytope_from_json(sq)) == 4);
    auto v2 = valuation_from_json(valuation_to_json(v), 2);
    CHECK(valuation_eval(v2, polytope_from_json(sq)) == 4);
}

TEST_CASE("measure serialization")
{
    AtomicMeasure mu;
    mu.add(RatVec{Rat(1, 2), Rat(0)}, Rat(3));
    json j = atomic_measure_to_json(mu);
    CHECK(j["total"] == json(3));
    CHECK(j["atoms"][0]["point"][0] == json("1/2"));
    json sq = {{"dim", 2}, {"vertices", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}}};
    json sm = surface_measure_to_json(surface_area_measure(polytope_from_json(sq)));
    CHECK(sm["atoms"].size() == 4);
    for (const auto& a : sm["atoms"]) CHECK(a["mass"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("load_json reports missing files")
{
    CHECK_THROWS_AS(load_json("/nonexistent/file.json"), std::invalid_argument);
}
