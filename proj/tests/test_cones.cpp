#include <doctest.h>

#include <random>

#include "svx/cones.hpp"

using namespace svx;

TEST_CASE("elementary forms")
{
    int n = 2;
    auto e1 = elementary(n, {{Rat(1), Rat(0)}});
    CHECK(e1.form == SuperForm::monomial(n, 1, 1, 1));
    auto e12 = elementary(n, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    CHECK(e12.raw_coeff(3, 3) == -1);
    CHECK(elementary(n, {{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}).form.is_zero());
    CHECK(e12.is_symmetric());
    CHECK(is_positive(e12));
    CHECK(is_strong(e12));
    CHECK(trace(e12) == 1);
}

TEST_CASE("trace of beta powers")
{
    for (int n = 2; n <= 4; ++n)
        for (int q = 1; q <= n; ++q) {
            SuperForm b = Rat(1, factorial(q)) * wedge_power(beta_form(n), q);
            CHECK(trace(ConstForm(n, q, b)) == Rat(binomial(n, q)));
        }
}

TEST_CASE("positivity of (1,1) matrices")
{
    int n = 2;
    CHECK(is_positive(ConstForm(n, 1, beta_form(n))));
    SuperForm f = SuperForm::monomial(n, 1, 1, 1) - SuperForm::monomial(n, 2, 2, 1);
    CHECK(!is_positive(ConstForm(n, 1, f)));
}

TEST_CASE("a symmetric (2,2) form outside the strong cone")
{
    int n = 4;
    SuperForm f =
        wedge(SuperForm::monomial(n, 0b0011, 0, 1), SuperForm::monomial(n, 0, 0b1100, 1)) +
        wedge(SuperForm::monomial(n, 0b1100, 0, 1), SuperForm::monomial(n, 0, 0b0011, 1));
    CHECK(!is_strong(ConstForm::from_form(f)));
}

TEST_CASE("beta powers are elementary on coordinate subspaces")
{
    for (int n : {3, 4})
        for (int p = 1; p <= 2; ++p) {
            SuperForm q(n);
            for (int i = 0; i < p; ++i) q.add_term(1u << i, 1u << i, Poly::constant(n, 1));
            SuperForm lhs = Rat(1, factorial(p)) * wedge_power(q, p);
            std::vector<RatVec> es;
            for (int i = 0; i < p; ++i) {
                RatVec e(n, Rat(0));
                e[i] = 1;
                es.push_back(e);
            }
            CHECK(lhs == elementary(n, es).form);
        }
}

TEST_CASE("Ker(T) dimension equals sampled elementary rank")
{
    std::mt19937 rng(7);
    for (int n = 2; n <= 4; ++n)
        for (int p = 1; p < n; ++p) {
            auto ker = kernel_T_symmetric(n, p);
            int dim = static_cast<int>(ker.size());
            CHECK(dim == elementary_sample_rank(n, p, 10 * dim, rng));
        }
}

TEST_CASE("weakly null forms pair trivially with the strong cone")
{
    int n = 4, p = 2;
    FormSpace sp(n, p, p);
    auto ker = kernel_T_symmetric(n, p);
    RatMat jm = sp.operator_matrix(sp, [](const SuperForm& f) { return apply_J(f); });
    RatMat symeq(sp.dim() + static_cast<int>(ker.size()), sp.dim());
    for (int i = 0; i < sp.dim(); ++i)
        for (int j = 0; j < sp.dim(); ++j) symeq(i, j) = jm(i, j) - (i == j ? Rat(1) : Rat(0));
    for (std::size_t k = 0; k < ker.size(); ++k)
        for (int j = 0; j < sp.dim(); ++j)
            symeq(sp.dim() + static_cast<int>(k), j) = ker[k][j];
    auto w0 = nullspace(symeq);
    REQUIRE(!w0.empty());
    ConstForm g(n, p, sp.devectorize(w0[0]));
    CHECK(is_weakly_null(g));
    CHECK(!is_weakly_null(ConstForm(n, p, Rat(1, 2) * wedge_power(beta_form(n), 2))));
    auto dec = decompose_strong(ConstForm(n, p, Rat(1, 2) * wedge_power(beta_form(n), 2)), 80, 11);
    CHECK(dec.residual_norm2 == 0);
    CHECK(super_integrate(wedge(g.form, Rat(1, 2) * wedge_power(beta_form(n), 2)), Box::unit(n)) ==
          0);
    CHECK(!weak_positivity_search(g, 6, 1e-7, 5).violation_found);
    CHECK(!weak_positivity_search(ConstForm(n, p, Rat(-1) * g.form), 6, 1e-7, 5).violation_found);
}

TEST_CASE("weak positivity in extreme bidegrees")
{
    int n = 3;
    auto ep = elementary(n, {{Rat(1), Rat(2), Rat(0)}, {Rat(0), Rat(1), Rat(1)}});
    CHECK(!weak_positivity_search(ep, 4, 1e-9, 3).violation_found);
    CHECK(weak_positivity_search(ConstForm(n, 2, Rat(-1) * ep.form), 4, 1e-9, 3).violation_found);
    SuperForm neg = Rat(-1) * SuperForm::monomial(n, 1, 1, 1);
    CHECK(weak_positivity_search(ConstForm(n, 1, neg), 4, 1e-9, 3).violation_found);
    CHECK(!weak_positivity_search(ConstForm(n, 1, beta_form(n)), 4, 1e-9, 3).violation_found);
}

TEST_CASE("hodge star preserves the strong positive cone on elementaries")
{
    int n = 3;
    auto ep = elementary(n, {{Rat(1), Rat(1), Rat(0)}, {Rat(0), Rat(1), Rat(2)}});
    ConstForm cs = ConstForm::from_form(hodge_star(ep.form));
    CHECK(is_strong(cs));
    CHECK(is_positive(cs));
}

TEST_CASE("primitive forms match decomposable rank")
{
    std::mt19937 rng(7);
    auto [k, d] = primitive_vs_decomposable(2, 2, 200, rng);
    CHECK(k == 5);
    CHECK(d == 5);
    auto [k3, d3] = primitive_vs_decomposable(2, 3, 300, rng);
    CHECK(k3 == d3);
    CHECK(k3 == 0);
    auto [k4, d4] = primitive_vs_decomposable(3, 2, 400, rng);
    CHECK(k4 == d4);
}
