#include <doctest.h>

#include <map>
#include <random>

#include "svx/polytope.hpp"

using namespace svx;

namespace {

RatVec rv(std::initializer_list<int> xs)
{
    RatVec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

}  // namespace

TEST_CASE("hull drops interior and boundary non-vertices")
{
    auto p = convex_hull(2, {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1}),
                             RatVec{Rat(1, 2), Rat(1, 2)}});
    CHECK(p.vertices.size() == 4);
    CHECK(p.facets.size() == 4);
    CHECK(p.full_dim());
}

TEST_CASE("degenerate hulls")
{
    auto p = convex_hull(2, {rv({0, 0}), rv({1, 1}), rv({2, 2}), rv({3, 3})});
    CHECK(p.aff_dim == 1);
    CHECK(p.vertices.size() == 2);
    CHECK(p.vertices[0] == rv({0, 0}));
    CHECK(p.vertices[1] == rv({3, 3}));
    CHECK(volume(p) == 0);
}

TEST_CASE("volumes")
{
    auto c = unit_cube(3);
    CHECK(c.vertices.size() == 8);
    CHECK(c.facets.size() == 6);
    CHECK(volume(c) == 1);
    auto s = convex_hull(3, {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
    CHECK(volume(s) == Rat(1, 6));
    CHECK(s.facets.size() == 4);
}

TEST_CASE("minkowski sums")
{
    auto sq = unit_cube(2);
    CHECK(volume(minkowski_sum(sq, sq)) == 4);
    auto seg = convex_hull(2, {rv({0, 0}), rv({1, 0})});
    CHECK(volume(minkowski_sum(sq, seg)) == 2);
    auto pt = convex_hull(2, {rv({3, 4})});
    auto tr = minkowski_sum(sq, pt);
    CHECK(tr.vertices[0] == rv({3, 4}));
    CHECK(volume(tr) == 1);
}

TEST_CASE("support, gauge, polar")
{
    auto sq = box_polytope(rv({-1, -1}), rv({1, 1}));
    CHECK(support_eval(sq, rv({1, 1})) == 2);
    CHECK(gauge_eval(sq, rv({2, 1})) == 2);
    auto po = polar(sq);
    CHECK(po.vertices.size() == 4);
    CHECK(contains_point(po, rv({1, 0})));
    CHECK(volume(po) == 2);
    CHECK(polar(po) == sq);
}

TEST_CASE("mixed volume examples")
{
    auto sq = unit_cube(2);
    CHECK(mixed_volume({sq, sq}) == 1);
    auto seg = convex_hull(2, {rv({0, 0}), rv({1, 0})});
    CHECK(mixed_volume({sq, seg}) == Rat(1, 2));
    auto big = box_polytope(rv({0, 0}), rv({2, 2}));
    CHECK(mixed_volume({sq, big}) == 2);
}

TEST_CASE("surface measures and barycenters")
{
    auto sq = unit_cube(2);
    auto sm = surface_area_measure(sq);
    CHECK(sm.atoms.size() == 4);
    for (const auto& a : sm.atoms) CHECK(a.scale == 1);
    CHECK(surface_barycenter(sm) == rv({0, 0}));
    auto tri = convex_hull(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})});
    auto smt = surface_area_measure(tri);
    CHECK(smt.atoms.size() == 3);
    for (const auto& a : smt.atoms)
        if (a.dir == rv({1, 1})) CHECK(a.scale == 1);
    CHECK(surface_barycenter(smt) == rv({0, 0}));
}

TEST_CASE("minkowski identity")
{
    auto sq = unit_cube(2);
    auto [l1, r1] = minkowski_identity_check(sq, sq);
    CHECK(l1 == 1);
    CHECK(r1 == 1);
    auto pt = convex_hull(2, {rv({5, -2})});
    auto [l2, r2] = minkowski_identity_check(pt, sq);
    CHECK(l2 == 0);
    CHECK(r2 == 0);
    auto cube = unit_cube(3);
    auto simp = convex_hull(3, {rv({0, 0, 0}), rv({1, 0, 0}), rv({0, 1, 0}), rv({0, 0, 1})});
    auto [l3, r3] = minkowski_identity_check(cube, simp);
    CHECK(l3 == r3);
    auto [l4, r4] = minkowski_identity_check(simp, cube);
    CHECK(l4 == r4);
}

TEST_CASE("intersection, union convexity, Salee pairs")
{
    auto a = unit_cube(2);
    auto b = box_polytope(rv({1, 0}), rv({2, 1}));
    auto i = intersect(a, b);
    CHECK(i.aff_dim == 1);
    CHECK(i.vertices.size() == 2);
    CHECK(union_convexity_check(a, b));
    CHECK(salee_check(a, b));
    auto c = box_polytope(RatVec{Rat(1, 2), Rat(0)}, RatVec{Rat(3, 2), Rat(1)});
    CHECK(volume(intersect(a, c)) == Rat(1, 2));
    CHECK(salee_check(a, c));
    auto d = box_polytope(rv({2, 2}), rv({3, 3}));
    CHECK(!union_convexity_check(a, d));
    CHECK(intersect(a, d).empty());
    auto big = box_polytope(rv({-1, -1}), rv({2, 2}));
    CHECK(salee_check(a, big));
    CHECK(salee_check(a, a));
    auto t1 = convex_hull(2, {rv({0, 0}), rv({1, 0}), rv({1, 1})});
    auto t2 = convex_hull(2, {rv({0, 0}), rv({0, 1}), rv({1, 1})});
    CHECK(union_convexity_check(t1, t2));
    CHECK(salee_check(t1, t2));
}

TEST_CASE("containment")
{
    auto sq = unit_cube(2);
    CHECK(contains_point(sq, RatVec{Rat(1, 3), Rat(2, 3)}));
    CHECK(!contains_point(sq, rv({2, 0})));
    auto seg = convex_hull(2, {rv({0, 0}), rv({2, 2})});
    CHECK(contains_point(seg, rv({1, 1})));
    CHECK(!contains_point(seg, rv({1, 0})));
    CHECK(contains_body(sq, convex_hull(2, {rv({0, 0}), rv({1, 1})})));
}

TEST_CASE("mixed volume symmetry, multilinearity, monotonicity")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        int n = 2 + t % 2;
        std::vector<Polytope> ks;
        for (int i = 0; i < n; ++i) ks.push_back(random_lattice_polytope(n, n + 3, 3, rng));
        Rat v = mixed_volume(ks);
        auto perm = ks;
        std::reverse(perm.begin(), perm.end());
        CHECK(mixed_volume(perm) == v);
        auto a1 = ks, a2 = ks;
        a1[0] = minkowski_sum(ks[0], ks[1]);
        a2[0] = ks[1];
        CHECK(mixed_volume(a1) == v + mixed_volume(a2));
        std::vector<Polytope> diag(n, ks[0]);
        CHECK(mixed_volume(diag) == volume(ks[0]));
        auto g = ks;
        g[0] = minkowski_sum(ks[0], unit_cube(n));
        CHECK(mixed_volume(g) >= v);
    }
}

TEST_CASE("Alexandrov-Fenchel samples, n=2")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        auto k = random_lattice_polytope(2, 5, 4, rng);
        auto l = random_lattice_polytope(2, 5, 4, rng);
        Rat vkl = mixed_volume({k, l});
        CHECK(vkl * vkl >= volume(k) * volume(l));
    }
}

TEST_CASE("surface measure is additive under Minkowski sums, n=2")
{
    std::mt19937 rng(5);
    for (int t = 0; t < 5; ++t) {
        auto p = random_lattice_polytope(2, 5, 4, rng);
        auto q = random_lattice_polytope(2, 5, 4, rng);
        auto s = surface_area_measure(minkowski_sum(p, q));
        std::map<RatVec, Rat> acc, got;
        for (const auto& a : surface_area_measure(p).atoms) acc[a.dir] += a.scale;
        for (const auto& a : surface_area_measure(q).atoms) acc[a.dir] += a.scale;
        for (const auto& a : s.atoms) got[a.dir] += a.scale;
        CHECK(acc == got);
    }
}

TEST_CASE("triple sums stay fast in n=3")
{
    std::mt19937 rng(5);
    auto a = random_lattice_polytope(3, 6, 4, rng);
    auto b = random_lattice_polytope(3, 6, 4, rng);
    auto c = random_lattice_polytope(3, 6, 4, rng);
    CHECK(minkowski_sum(minkowski_sum(a, b), c).full_dim());
    CHECK(mixed_volume({a, b, c}) > 0);
}
