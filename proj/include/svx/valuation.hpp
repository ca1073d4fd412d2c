#pragma once

#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "polytope.hpp"
#include "rational.hpp"

namespace svx {

// One mixed-volume functional: K -> c * binom(n,p) * V(K[p], A_1..A_{n-p}).
// The binomial normalization makes the Lebesgue term (c=1, p=n) the identity
// element of the convolution below and gives translate(Lebesgue, A) = vol(.+A).
struct ValTerm {
    Rat c;
    int p = 0;
    std::vector<Polytope> companions;
};

struct Valuation {
    int n = 0;
    std::vector<ValTerm> terms;
};

inline Valuation lebesgue_valuation(int n)
{
    return {n, {{Rat(1), n, {}}}};
}

// Degree-0 valuation that evaluates to 1 on every body.
inline Valuation trivial_valuation(int n)
{
    std::vector<Polytope> cubes(static_cast<std::size_t>(n), unit_cube(n));
    return {n, {{Rat(1), 0, std::move(cubes)}}};
}

inline void validate(const Valuation& v)
{
    for (const auto& t : v.terms) {
        if (t.p < 0 || t.p > v.n || static_cast<int>(t.companions.size()) != v.n - t.p)
            throw std::invalid_argument("valuation: companion count mismatch");
        for (const auto& a : t.companions)
            if (a.n != v.n) throw std::invalid_argument("valuation: companion dimension");
    }
}

inline Rat valuation_eval(const Valuation& v, const Polytope& k)
{
    validate(v);
    Rat total = 0;
    for (const auto& t : v.terms) {
        if (t.c == 0) continue;
        std::vector<Polytope> args(static_cast<std::size_t>(t.p), k);
        for (const auto& a : t.companions) args.push_back(a);
        total += t.c * Rat(binomial(v.n, t.p)) * mixed_volume(args);
    }
    return total;
}

// Convolution of mixed-volume functionals: companions concatenate, degrees
// add in codegree q = n - p, and the coefficient picks up C(q1+q2, q1).
// Products past total codegree n correspond to vanishing top-degree wedge
// products and are dropped.
inline Valuation valuation_convolve(const Valuation& v1, const Valuation& v2)
{
    if (v1.n != v2.n) throw std::invalid_argument("valuation_convolve: dimension mismatch");
    Valuation r{v1.n, {}};
    for (const auto& t1 : v1.terms)
        for (const auto& t2 : v2.terms) {
            int q1 = v1.n - t1.p, q2 = v2.n - t2.p;
            if (q1 + q2 > v1.n) continue;
            ValTerm t;
            t.c = t1.c * t2.c * Rat(binomial(q1 + q2, q1));
            t.p = v1.n - q1 - q2;
            t.companions = t1.companions;
            t.companions.insert(t.companions.end(), t2.companions.begin(), t2.companions.end());
            r.terms.push_back(std::move(t));
        }
    return r;
}

// translate(v, A)(K) = v(K + A), realized by convolving with
// sum_k (codegree-k term with k copies of A), the expansion of e^{omega_A}.
inline Valuation valuation_translate(const Valuation& v, const Polytope& a)
{
    Valuation ea{v.n, {}};
    for (int k = 0; k <= v.n; ++k) {
        ValTerm t;
        t.c = 1;
        t.p = v.n - k;
        t.companions.assign(static_cast<std::size_t>(k), a);
        ea.terms.push_back(std::move(t));
    }
    return valuation_convolve(v, ea);
}

// mu_A(K) = vol(K + A) as a valuation.
inline Valuation steiner_valuation(const Polytope& a)
{
    return valuation_translate(lebesgue_valuation(a.n), a);
}

// Homogeneous decomposition: evaluates v(tK) for t = 0..n and solves the
// exact Vandermonde system for the coefficients of sum theta_p t^p.
inline RatVec mcmullen_decompose(const Valuation& v, const Polytope& k)
{
    int n = v.n;
    RatVec vals(static_cast<std::size_t>(n) + 1);
    for (int t = 0; t <= n; ++t)
        vals[t] = valuation_eval(v, scale_body(Rat(t), k));
    RatMat m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
        Rat pw = 1;
        for (int j = 0; j <= n; ++j) {
            m(i, j) = pw;
            pw *= i;
        }
    }
    return *solve(m, vals);
}

inline bool valuation_additivity_check(const Valuation& v, const Polytope& p, const Polytope& q)
{
    if (!union_convexity_check(p, q))
        throw std::invalid_argument("valuation_additivity_check: union not convex");
    Polytope u = hull_of_union(p, q);
    Polytope i = intersect(p, q);
    Rat vi = i.empty() ? Rat(0) : valuation_eval(v, i);
    return valuation_eval(v, u) + vi == valuation_eval(v, p) + valuation_eval(v, q);
}

inline bool monotonicity_check(const Valuation& v,
                               const std::vector<std::pair<Polytope, Polytope>>& nested)
{
    for (const auto& t : v.terms)
        if (t.c < 0) throw std::invalid_argument("monotonicity_check: negative coefficient");
    for (const auto& [inner, outer] : nested) {
        if (!contains_body(outer, inner))
            throw std::invalid_argument("monotonicity_check: pair not nested");
        if (valuation_eval(v, inner) > valuation_eval(v, outer)) return false;
    }
    return true;
}

}  // namespace svx
