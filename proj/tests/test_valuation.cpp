#include <doctest.h>

#include <random>

#include "svx/valuation.hpp"

using namespace svx;

namespace {

RatVec rv(std::initializer_list<int> xs)
{
    RatVec v;
    for (int x : xs) v.push_back(Rat(x));
    return v;
}

}  // namespace

TEST_CASE("basic evals")
{
    std::mt19937 rng(9);
    CHECK(valuation_eval(lebesgue_valuation(2), unit_cube(2)) == 1);
    CHECK(valuation_eval(trivial_valuation(2), unit_cube(2)) == 1);
    CHECK(valuation_eval(trivial_valuation(2), random_lattice_polytope(2, 5, 4, rng)) == 1);
    CHECK(valuation_eval(lebesgue_valuation(3), unit_cube(3)) == 1);
    CHECK(valuation_eval(trivial_valuation(3), unit_cube(3)) == 1);
}

TEST_CASE("translate valuation evaluates vol(K+A)")
{
    std::mt19937 rng(9);
    for (int t = 0; t < 8; ++t) {
        int n = 2 + t % 2;
        auto a = random_lattice_polytope(n, 5, 3, rng);
        auto k = random_lattice_polytope(n, 5, 3, rng);
        CHECK(valuation_eval(steiner_valuation(a), k) == volume(minkowski_sum(k, a)));
    }
}

TEST_CASE("convolution composes translates; lebesgue is the identity")
{
    std::mt19937 rng(9);
    for (int t = 0; t < 10; ++t) {
        int n = 2 + t % 2;
        auto a = random_lattice_polytope(n, 4, 2, rng);
        auto b = random_lattice_polytope(n, 4, 2, rng);
        auto k = random_lattice_polytope(n, 5, 3, rng);
        auto conv = valuation_convolve(steiner_valuation(a), steiner_valuation(b));
        auto direct = steiner_valuation(minkowski_sum(a, b));
        CHECK(valuation_eval(conv, k) == valuation_eval(direct, k));
        CHECK(valuation_eval(valuation_convolve(steiner_valuation(a), lebesgue_valuation(n)), k) ==
              valuation_eval(steiner_valuation(a), k));
    }
}

TEST_CASE("degree decomposition")
{
    std::mt19937 rng(9);
    CHECK(mcmullen_decompose(lebesgue_valuation(2), unit_cube(2)) == RatVec(rv({0, 0, 1})));
    CHECK(mcmullen_decompose(steiner_valuation(unit_cube(2)), unit_cube(2)) ==
          RatVec(rv({1, 2, 1})));
    CHECK(mcmullen_decompose(trivial_valuation(2), unit_cube(2)) == RatVec(rv({1, 0, 0})));
    for (int t = 0; t < 4; ++t) {
        int n = 2 + t % 2;
        auto a = random_lattice_polytope(n, 4, 2, rng);
        auto k = random_lattice_polytope(n, 5, 3, rng);
        auto v = steiner_valuation(a);
        auto dk = mcmullen_decompose(v, k);
        auto d2k = mcmullen_decompose(v, scale_body(Rat(2), k));
        Rat pw = 1, sum = 0;
        for (int p = 0; p <= n; ++p) {
            CHECK(d2k[p] == pw * dk[p]);
            pw *= 2;
            sum += dk[p];
        }
        CHECK(sum == valuation_eval(v, k));
    }
}

TEST_CASE("additivity on union-convex pairs")
{
    std::mt19937 rng(9);
    auto a = unit_cube(2);
    auto b = box_polytope(rv({1, 0}), rv({2, 1}));
    CHECK(valuation_additivity_check(lebesgue_valuation(2), a, b));
    auto comp = random_lattice_polytope(2, 5, 3, rng);
    Valuation v1{2, {{Rat(1), 1, {comp}}}};
    CHECK(valuation_additivity_check(v1, a, b));
    auto c1 = unit_cube(3);
    auto c2 = box_polytope(rv({0, 0, 1}), rv({1, 1, 2}));
    for (int p = 1; p <= 2; ++p) {
        std::vector<Polytope> comps(static_cast<std::size_t>(3 - p),
                                    random_lattice_polytope(3, 5, 2, rng));
        Valuation vp{3, {{Rat(1), p, comps}}};
        CHECK(valuation_additivity_check(vp, c1, c2));
    }
    CHECK(valuation_additivity_check(steiner_valuation(comp), a, b));
}

TEST_CASE("monotonicity of nonnegative combinations")
{
    std::mt19937 rng(9);
    auto small = unit_cube(2);
    auto big = box_polytope(rv({-1, -1}), rv({2, 2}));
    std::vector<std::pair<Polytope, Polytope>> pairs{{small, big}};
    CHECK(monotonicity_check(lebesgue_valuation(2), pairs));
    auto comp = random_lattice_polytope(2, 5, 3, rng);
    Valuation v1{2, {{Rat(1), 1, {comp}}}};
    CHECK(monotonicity_check(v1, pairs));
}
