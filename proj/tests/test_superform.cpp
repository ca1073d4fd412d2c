#include <doctest.h>

#include <random>

#include "svx/superform.hpp"

using namespace svx;

namespace {

SuperForm random_form(int n, std::mt19937& rng, int maxdeg = 2)
{
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, maxdeg);
    SuperForm f(n);
    std::uniform_int_distribution<unsigned> mask(0, full_mask(n));
    for (int t = 0; t < 5; ++t) {
        std::vector<int> e(n);
        for (int i = 0; i < n; ++i) e[i] = deg(rng) ? deg(rng) % 2 + (t % 2) : 0;
        f.add_term(mask(rng), mask(rng), Poly::monomial(n, e, coef(rng)));
    }
    return f;
}

}  // namespace

TEST_CASE("wedge basics")
{
    for (int n : {2, 3}) {
        auto a = SuperForm::dx(n, 0), b = SuperForm::dxi(n, 0);
        CHECK(wedge(a, b) == SuperForm::monomial(n, 1, 1, 1));
        CHECK(wedge(wedge(a, b), wedge(a, SuperForm::dxi(n, 1))).is_zero());
    }
}

TEST_CASE("beta^2/2 storage sign")
{
    int n = 2;
    SuperForm beta(n);
    for (int i = 0; i < n; ++i) beta.add_term(1u << i, 1u << i, Poly::constant(n, 1));
    SuperForm b2 = Rat(1, 2) * wedge(beta, beta);
    const Poly* c = b2.coeff(3, 3);
    REQUIRE(c != nullptr);
    CHECK(c->eval({Rat(0), Rat(0)}) == Rat(-1));
}

TEST_CASE("J operator")
{
    int n = 2;
    CHECK(apply_J(SuperForm::dx(n, 0)) == Rat(-1) * SuperForm::dxi(n, 0));
    auto m = SuperForm::monomial(n, 1, 1, 1);
    CHECK(apply_J(m) == m);
    std::mt19937 rng(42);
    for (int t = 0; t < 5; ++t) {
        auto f = random_form(3, rng);
        CHECK(apply_J_inverse(apply_J(f)) == f);
    }
}

TEST_CASE("dd# of quadratics")
{
    int n = 2;
    Poly psi(n);
    psi.add_term({2, 0}, Rat(1, 2));
    psi.add_term({0, 2}, Rat(1, 2));
    SuperForm ddsharp = exterior_d(exterior_dsharp(SuperForm::from_poly(psi)));
    SuperForm beta(n);
    for (int i = 0; i < n; ++i) beta.add_term(1u << i, 1u << i, Poly::constant(n, 1));
    CHECK(ddsharp == beta);
    Poly x1x2 = Poly::variable(n, 0) * Poly::variable(n, 1);
    SuperForm dd = exterior_d(exterior_dsharp(SuperForm::from_poly(x1x2)));
    SuperForm expect(n);
    expect.add_term(1, 2, Poly::constant(n, 1));
    expect.add_term(2, 1, Poly::constant(n, 1));
    CHECK(dd == expect);
    CHECK(apply_J(dd) == dd);
}

TEST_CASE("differential identities on random forms")
{
    std::mt19937 rng(42);
    for (int t = 0; t < 20; ++t) {
        int n = 2 + t % 2;
        auto f = random_form(n, rng);
        CHECK(exterior_d(exterior_d(f)).is_zero());
        CHECK(exterior_dsharp(exterior_dsharp(f)).is_zero());
        auto lhs = contract(lie_T(f), EulerField::E) - lie_T(contract(f, EulerField::E));
        CHECK(lhs == contract(f, EulerField::Esharp));
        auto rhs = exterior_d(contract(f, EulerField::Esharp)) +
                   contract(exterior_d(f), EulerField::Esharp);
        CHECK(lie_T(f) == rhs);
    }
}

TEST_CASE("Euler contraction homogeneity")
{
    int n = 2;
    Poly c(n);
    c.add_term({3, 0}, 1);
    auto v = contract(exterior_d(SuperForm::from_poly(c)), EulerField::E);
    CHECK(v == SuperForm::from_poly(Rat(3) * c));
}

TEST_CASE("T operator examples")
{
    int n = 2;
    CHECK(lie_T(SuperForm::dxi(n, 0)) == SuperForm::dx(n, 0));
    CHECK(lie_T(SuperForm::monomial(n, 1, 1, 1)).is_zero());
    SuperForm t12 = lie_T(wedge(SuperForm::dxi(n, 0), SuperForm::dxi(n, 1)));
    SuperForm expect = wedge(SuperForm::dx(n, 0), SuperForm::dxi(n, 1)) -
                       wedge(SuperForm::dx(n, 1), SuperForm::dxi(n, 0));
    CHECK(t12 == expect);
}

TEST_CASE("integration normalization")
{
    for (int n : {1, 2, 3, 4}) CHECK(super_integrate(volume_form(n), Box::unit(n)) == 1);
    int n = 2;
    Poly psi(n);
    psi.add_term({2, 0}, Rat(1, 2));
    psi.add_term({0, 2}, Rat(1, 2));
    SuperForm dd = exterior_d(exterior_dsharp(SuperForm::from_poly(psi)));
    Rat v = super_integrate(Rat(1, 2) * wedge(dd, dd), Box(RatVec{-1, -1}, RatVec{1, 1}));
    CHECK(v == 4);
}

TEST_CASE("Stokes on random boxes")
{
    std::mt19937 rng(42);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + t % 2;
        std::uniform_int_distribution<int> bnd(-2, 2);
        RatVec lo(n), hi(n);
        for (int i = 0; i < n; ++i) {
            int a = bnd(rng), b = bnd(rng);
            lo[i] = std::min(a, b);
            hi[i] = std::max(a, b);
        }
        Box box(lo, hi);
        SuperForm a(n);
        std::uniform_int_distribution<int> coef(-3, 3);
        for (int j = 0; j < n; ++j) {
            std::vector<int> e(n);
            for (int i = 0; i < n; ++i) e[i] = (coef(rng) + 3) % 4;
            a.add_term(full_mask(n) & ~(1u << j), full_mask(n), Poly::monomial(n, e, coef(rng)));
        }
        if (a.is_zero()) continue;
        CHECK(boundary_integrate(a, box) == super_integrate(exterior_d(a), box));
    }
}

TEST_CASE("hodge star pairing")
{
    CHECK(hodge_star(SuperForm::scalar(2, 1)) == volume_form(2));
    std::mt19937 rng(42);
    for (int t = 0; t < 10; ++t) {
        int n = 2 + t % 2;
        auto f = random_form(n, rng, 0);
        SuperForm cf(n);
        for (auto& [k, p] : f.terms) {
            auto e0 = p.terms.find(std::vector<int>(n, 0));
            if (e0 != p.terms.end()) cf.add_term(k.first, k.second, Poly::constant(n, e0->second));
        }
        Rat norm2 = const_inner(cf, cf);
        CHECK(super_integrate(wedge(cf, hodge_star(cf)), Box::unit(n)) == norm2);
    }
}
