#include <doctest.h>

#include <cmath>
#include <random>

#include "svx/monge_ampere.hpp"

using namespace svx;

namespace {

RatVec rv(std::initializer_list<int> xs)
{
    RatVec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

MaxAffine random_max_affine(int n, int np, std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-4, 4);
    std::vector<std::pair<RatVec, Rat>> pieces;
    for (int i = 0; i < np; ++i) {
        RatVec a(n);
        for (auto& c : a) c = d(rng);
        pieces.emplace_back(a, Rat(d(rng)));
    }
    return make_max_affine(n, std::move(pieces));
}

}  // namespace

TEST_CASE("indicator")
{
    auto f = make_max_affine(1, {{rv({1}), Rat(-1)}, {rv({0}), Rat(0)}});
    auto ind = indicator(f);
    CHECK(ind.pieces.size() == 2);
    CHECK(ind.eval(rv({2})) == 2);
    CHECK(ind.eval(rv({-1})) == 0);
    auto g = make_max_affine(1, {{rv({1}), Rat(1)}, {rv({-1}), Rat(1)}});
    auto ig = indicator(g);
    CHECK(ig.eval(rv({3})) == 3);
    CHECK(ig.eval(rv({-3})) == 3);
    CHECK(indicator(ig).pieces == ig.pieces);
}

TEST_CASE("recession bodies")
{
    auto l1 = make_max_affine(2, {{rv({1, 1}), Rat(0)},
                                  {rv({1, -1}), Rat(0)},
                                  {rv({-1, 1}), Rat(0)},
                                  {rv({-1, -1}), Rat(0)}});
    auto k = recession_body(l1);
    CHECK(k.vertices.size() == 4);
    CHECK(volume(k) == 4);
    CHECK(support_eval(k, rv({3, 2})) == l1.eval(rv({3, 2})));
    auto simp = convex_hull(2, {rv({0, 0}), rv({1, 0}), rv({0, 1})});
    CHECK(recession_body(support_function(simp)) == simp);
    auto h1 = make_max_affine(1, {{rv({0}), Rat(0)}, {rv({1}), Rat(0)}});
    auto seg = recession_body(h1);
    CHECK(seg.vertices.size() == 2);
    CHECK(seg.vertices[1] == rv({1}));
}

TEST_CASE("atomic measure basics")
{
    auto cross = make_max_affine(2, {{rv({1, 1}), Rat(0)},
                                     {rv({1, -1}), Rat(0)},
                                     {rv({-1, 1}), Rat(0)},
                                     {rv({-1, -1}), Rat(0)}});
    auto mu = ma_measure(cross);
    CHECK(mu.atoms.size() == 1);
    CHECK(mu.atoms[0].first == rv({0, 0}));
    CHECK(mu.atoms[0].second == 4);
    auto f1 = make_max_affine(1, {{rv({0}), Rat(0)}, {rv({1}), Rat(-1)}});
    auto mu1 = ma_measure(f1);
    CHECK(mu1.atoms.size() == 1);
    CHECK(mu1.atoms[0].first == rv({1}));
    CHECK(mu1.atoms[0].second == 1);
    auto f2 =
        make_max_affine(2, {{rv({0, 0}), Rat(0)}, {rv({1, 0}), Rat(-1)}, {rv({0, 1}), Rat(-1)}});
    auto mu2 = ma_measure(f2);
    CHECK(mu2.total() == Rat(1, 2));
    bool has11 = false;
    for (auto& [x, m] : mu2.atoms)
        if (x == rv({1, 1})) has11 = true;
    CHECK(has11);
}

TEST_CASE("mass law, support-function atoms, translation equivariance")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 8; ++t) {
        int n = 2 + (t % 2);
        auto f = random_max_affine(n, 6 + t % 5, rng);
        auto mu = ma_measure(f);
        CHECK(mu.total() == volume(recession_body(f)));
        auto k = random_lattice_polytope(n, 5, 3, rng);
        auto muh = ma_measure(support_function(k));
        if (volume(k) != 0) {
            CHECK(muh.atoms.size() == 1);
            CHECK(muh.atoms[0].first == RatVec(n, Rat(0)));
            CHECK(muh.atoms[0].second == volume(k));
        }
        RatVec sh(n);
        std::uniform_int_distribution<int> ds(-2, 2);
        for (auto& c : sh) c = ds(rng);
        std::vector<std::pair<RatVec, Rat>> shifted;
        for (const auto& [a, b] : f.pieces) shifted.emplace_back(a, b - dot(a, sh));
        auto mus = ma_measure(make_max_affine(n, std::move(shifted)));
        AtomicMeasure expect;
        for (const auto& [x, m] : mu.atoms) expect.add(vadd(x, sh), m);
        std::sort(expect.atoms.begin(), expect.atoms.end());
        std::sort(mus.atoms.begin(), mus.atoms.end());
        CHECK(expect.atoms == mus.atoms);
    }
}

TEST_CASE("polarized masses match mixed volumes")
{
    std::mt19937 rng(11);
    for (int t = 0; t < 4; ++t) {
        int n = (t == 3) ? 3 : 2;
        std::vector<Polytope> ks;
        std::vector<MaxAffine> hs;
        for (int i = 0; i < n; ++i) {
            ks.push_back(random_lattice_polytope(n, n == 3 ? 4 : 5, 2, rng));
            hs.push_back(support_function(ks.back()));
        }
        Rat acc = 0;
        for (unsigned s = 1; s < (1u << n); ++s) {
            MaxAffine sum;
            bool first = true;
            for (int i = 0; i < n; ++i)
                if (s & (1u << i)) {
                    sum = first ? hs[i] : ma_sum(sum, hs[i]);
                    first = false;
                }
            Rat m = ma_measure(sum).total();
            if ((n - std::popcount(s)) % 2) m = -m;
            acc += m;
        }
        CHECK(acc == Rat(factorial(n)) * mixed_volume(ks));
    }
}

TEST_CASE("sampling oracle agrees with exact atoms")
{
    auto f2 =
        make_max_affine(2, {{rv({0, 0}), Rat(0)}, {rv({1, 0}), Rat(-1)}, {rv({0, 1}), Rat(-1)}});
    auto om = ma_oracle(f2, 60000, 7);
    CHECK(std::abs(om.total - 0.5) <= 3 * om.total_sigma + 1e-12);
    for (const auto& [x, m] : ma_measure(f2).atoms) {
        bool matched = false;
        for (const auto& atom : om.atoms) {
            double d = 0;
            for (int j = 0; j < 2; ++j) d = std::max(d, std::abs(atom.x[j] - to_double(x[j])));
            if (d < 1e-5) {
                matched = true;
                CHECK(std::abs(atom.mass - to_double(m)) <= 3 * atom.sigma + 1e-9);
            }
        }
        CHECK(matched);
    }
    auto cross = make_max_affine(2, {{rv({1, 1}), Rat(0)},
                                     {rv({1, -1}), Rat(0)},
                                     {rv({-1, 1}), Rat(0)},
                                     {rv({-1, -1}), Rat(0)}});
    for (const auto& atom : ma_oracle(cross, 20000, 3).atoms) {
        CHECK(std::abs(atom.x[0]) < 1e-6);
        CHECK(std::abs(atom.x[1]) < 1e-6);
    }
    CHECK(ma_oracle(make_max_affine(2, {{rv({2, 3}), Rat(1)}}), 1000, 1).total == 0.0);
}

TEST_CASE("boundary measure of a gauge")
{
    std::mt19937 rng(11);
    auto p = box_polytope(rv({-1, -1}), rv({1, 1}));
    auto mu = boundary_ma(p, p);
    CHECK(mu.atoms.size() == 4);
    Rat pair_h = pair_measure(mu, [&](const RatVec& x) { return support_eval(p, x); });
    CHECK(pair_h == Rat(2) * volume(p));
    auto q = convex_hull(2, {rv({2, 0}), rv({0, 2}), rv({-2, -1}), rv({1, -2})});
    for (int t = 0; t < 5; ++t) {
        auto l = random_lattice_polytope(2, 5, 3, rng);
        MaxAffine hf = support_function(random_lattice_polytope(2, 5, 3, rng));
        Rat a = pair_measure(boundary_ma(p, l), [&](const RatVec& x) { return hf.eval(x); });
        Rat b = pair_measure(boundary_ma(q, l), [&](const RatVec& x) { return hf.eval(x); });
        CHECK(a == b);
    }
    auto cp = convex_hull(2, {rv({1, 0}), rv({0, 1}), rv({-1, 0}), rv({0, -1})});
    auto l2 = convex_hull(2, {rv({0, 0}), rv({3, 1}), rv({1, 3}), rv({-1, -1})});
    for (const auto& [x, m] : boundary_ma(cp, l2).atoms) CHECK(gauge_eval(cp, x) == 1);
}

TEST_CASE("explicit boundary operator in the plane")
{
    auto tri = convex_hull(2, {rv({2, -1}), rv({-1, 2}), rv({-1, -1})});
    Poly lin = Rat(3) * Poly::variable(2, 0) + Rat(-2) * Poly::variable(2, 1);
    for (const auto& va : boundary_ma_explicit(tri, lin).vertices) CHECK(va.defect == 0);
    Poly sq = Poly::variable(2, 0) * Poly::variable(2, 0) +
              Poly::variable(2, 1) * Poly::variable(2, 1);
    for (const auto& va : boundary_ma_explicit(tri, sq).vertices)
        CHECK(va.defect == -dot(va.p, va.p));
    auto sqr = box_polytope(rv({-1, -1}), rv({1, 1}));
    auto eb3 = boundary_ma_explicit(sqr, Poly::constant(2, 1));
    Rat csum = 0;
    for (const auto& va : eb3.vertices) {
        CHECK(va.defect == 1);
        csum += va.c;
    }
    CHECK(csum == 4);
}

TEST_CASE("tropical singular parts")
{
    auto tri = convex_hull(2, {rv({2, -1}), rv({-1, 2}), rv({-1, -1})});
    auto mu = gauge_function(tri);
    for (std::size_t vid = 0; vid < tri.vertices.size(); ++vid)
        CHECK(boundary_ma_tropical_singular(tri, dir_deriv(mu), static_cast<int>(vid)) == 0);
    Poly lin = Rat(1) * Poly::variable(2, 0);
    auto eb = boundary_ma_explicit(tri, lin);
    bool some_nonzero = false;
    for (std::size_t vid = 0; vid < tri.vertices.size(); ++vid) {
        Rat strop = boundary_ma_tropical_singular(tri, dir_deriv(lin), static_cast<int>(vid));
        CHECK(explicit_singular_mass(eb, tri.vertices[vid]) == 0);
        if (strop != 0) some_nonzero = true;
    }
    CHECK(some_nonzero);
}

TEST_CASE("tropical smooth density matches the explicit edge density")
{
    auto tri = convex_hull(2, {rv({2, -1}), rv({-1, 2}), rv({-1, -1})});
    Poly f = Poly::variable(2, 0) * Poly::variable(2, 0) +
             Rat(3) * Poly::variable(2, 0) * Poly::variable(2, 1);
    auto eb = boundary_ma_explicit(tri, f);
    int vid = 0;
    const RatVec& v = tri.vertices[vid];
    for (const auto& e : eb.edges) {
        Rat t_v = dot(vsub(v, e.base), e.w) / dot(e.w, e.w);
        bool v_is_base = (t_v == 0);
        bool v_is_end = (t_v == e.t_max);
        if (!v_is_base && !v_is_end) continue;
        Rat tq = v_is_base ? e.t_max / 3 : e.t_max * Rat(2, 3);
        double rho_e = to_double(e.density.eval({tq}));
        double vn = std::sqrt(to_double(dot(v, v)));
        RatVec y = vadd(e.base, vscale(tq, e.w));
        double xp = to_double(Rat(v[0] * y[1] - v[1] * y[0])) / vn;
        double rho_t = boundary_ma_tropical_smooth(tri, f, vid, xp);
        double dxp_dt = to_double(Rat(v[0] * e.w[1] - v[1] * e.w[0])) / vn;
        CHECK(std::abs(rho_e - rho_t * dxp_dt) < 1e-9 * (1 + std::abs(rho_e)));
    }
}
