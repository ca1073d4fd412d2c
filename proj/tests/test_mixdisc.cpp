#include <doctest.h>

#include <random>

#include "svx/mixdisc.hpp"

using namespace svx;

TEST_CASE("mixed discriminant closed forms")
{
    CHECK(mixed_discriminant(std::vector<SymMatrix<Rat>>{SymMatrix<Rat>::identity(3),
                                                         SymMatrix<Rat>::identity(3),
                                                         SymMatrix<Rat>::identity(3)}) == 1);
    SymMatrix<Rat> a(2), b(2);
    a.at(0, 0) = 1;
    a.at(1, 1) = 2;
    b.at(0, 0) = 3;
    b.at(1, 1) = 4;
    CHECK(mixed_discriminant(std::vector<SymMatrix<Rat>>{a, b}) == 5);
    std::mt19937 rng(7);
    auto m = random_rat_sym(3, rng);
    CHECK(mixed_discriminant(std::vector<SymMatrix<Rat>>{m, m, m}) == det_generic<Rat>(m));
}

TEST_CASE("wedge products of (1,1)-forms compute mixed discriminants")
{
    std::mt19937 rng(7);
    for (int n = 2; n <= 4; ++n) {
        std::vector<SymMatrix<Rat>> ms;
        SuperForm w = SuperForm::scalar(n, 1);
        for (int i = 0; i < n; ++i) {
            auto m = random_rat_sym(n, rng);
            ms.push_back(m);
            w = wedge(w, matrix_to_form(m));
        }
        CHECK(super_integrate(w, Box::unit(n)) == Rat(factorial(n)) * mixed_discriminant(ms));
    }
}

TEST_CASE("Lorentz signature of the mixed-discriminant form")
{
    auto g = md_quadratic_form({SymMatrix<double>::identity(3)});
    auto s = lorentz_signature_check(g, 1e-9);
    CHECK(s.n_positive == 1);
    CHECK(s.n_zero == 0);
    CHECK(s.n_negative == 5);
    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
        int n = 3 + t % 3;
        std::vector<SymMatrix<double>> ms;
        for (int i = 0; i < n - 2; ++i) ms.push_back(random_psd(n, rng));
        auto s2 = lorentz_signature_check(md_quadratic_form(ms), 1e-9);
        CHECK(s2.n_positive == 1);
        CHECK(s2.n_zero == 0);
    }
}

TEST_CASE("projected second form is negative")
{
    std::mt19937 rng(7);
    SymMatrix<double> b0(2);
    b0.at(0, 0) = 1;
    b0.at(1, 1) = -1;
    auto r = alexandrov_lemma_check(b0, {SymMatrix<double>::identity(2)});
    CHECK(std::abs(r.value + 1.0) < 1e-12);
    std::normal_distribution<double> gauss(0, 1);
    for (int t = 0; t < 50; ++t) {
        int n = 4;
        SymMatrix<double> b(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) b.set(i, j, gauss(rng));
        std::vector<SymMatrix<double>> ms;
        for (int i = 0; i < n - 1; ++i) ms.push_back(random_psd(n, rng));
        auto rr = alexandrov_lemma_check(b, ms, 1e-9);
        CHECK(rr.nonpositive);
        if (rr.b_norm > 1e-6) CHECK(rr.strictly_negative);
    }
}

TEST_CASE("Cauchy inequality for PSD triples")
{
    std::mt19937 rng(7);
    for (int t = 0; t < 20; ++t) {
        int n = 3;
        auto a = random_psd(n, rng), b = random_psd(n, rng), m = random_psd(n, rng);
        double qab = mixed_discriminant(std::vector<SymMatrix<double>>{a, b, m});
        double qaa = mixed_discriminant(std::vector<SymMatrix<double>>{a, a, m});
        double qbb = mixed_discriminant(std::vector<SymMatrix<double>>{b, b, m});
        CHECK(qab * qab >= qaa * qbb * (1 - 1e-9));
    }
}
