#pragma once

#include <bit>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "poly.hpp"

namespace svx {

using Mask = unsigned;

inline int popcount(Mask m) { return std::popcount(m); }

// Parity sign of interleaving two increasing blocks: the word (A, B) sorted to
// A|B costs one transposition per pair a > b.
inline int merge_sign(Mask a, Mask b)
{
    int inv = 0;
    for (int i = 0; i < 31; ++i)
        if (b & (1u << i)) inv += popcount(a >> (i + 1));
    return (inv % 2 == 0) ? 1 : -1;
}

inline Mask full_mask(int n) { return (1u << n) - 1u; }

inline std::vector<int> mask_indices(Mask m)
{
    std::vector<int> v;
    for (int i = 0; i < 31; ++i)
        if (m & (1u << i)) v.push_back(i);
    return v;
}

// Exterior form on R^n_x + R^n_xi with Poly coefficients in x. A term keyed by
// (I, K) stores the raw coefficient of dx_I ^ dxi_K, both index sets
// increasing, dx block first.
struct SuperForm {
    int n = 0;
    std::map<std::pair<Mask, Mask>, Poly> terms;

    SuperForm() = default;
    explicit SuperForm(int dim) : n(dim) {}

    static SuperForm zero(int dim) { return SuperForm(dim); }

    static SuperForm from_poly(const Poly& p)
    {
        SuperForm f(p.n);
        f.add_term(0, 0, p);
        return f;
    }

    static SuperForm scalar(int dim, const Rat& c)
    {
        return from_poly(Poly::constant(dim, c));
    }

    static SuperForm dx(int dim, int j)  // dx_{j+1}
    {
        SuperForm f(dim);
        f.add_term(1u << j, 0, Poly::constant(dim, 1));
        return f;
    }

    static SuperForm dxi(int dim, int j)  // dxi_{j+1}
    {
        SuperForm f(dim);
        f.add_term(0, 1u << j, Poly::constant(dim, 1));
        return f;
    }

    static SuperForm monomial(int dim, Mask I, Mask K, const Rat& c)
    {
        SuperForm f(dim);
        f.add_term(I, K, Poly::constant(dim, c));
        return f;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(Mask I, Mask K, const Poly& p)
    {
        if (p.is_zero()) return;
        auto key = std::make_pair(I, K);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms[key] = p;
        } else {
            it->second += p;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    const Poly* coeff(Mask I, Mask K) const
    {
        auto it = terms.find(std::make_pair(I, K));
        return it == terms.end() ? nullptr : &it->second;
    }

    std::set<std::pair<int, int>> bidegrees() const
    {
        std::set<std::pair<int, int>> s;
        for (const auto& [k, p] : terms) s.insert({popcount(k.first), popcount(k.second)});
        return s;
    }

    bool is_pure(int p, int q) const
    {
        auto b = bidegrees();
        return b.empty() || (b.size() == 1 && *b.begin() == std::make_pair(p, q));
    }

    SuperForm& operator+=(const SuperForm& o)
    {
        assert(n == o.n);
        for (const auto& [k, p] : o.terms) add_term(k.first, k.second, p);
        return *this;
    }

    friend SuperForm operator+(SuperForm a, const SuperForm& b) { a += b; return a; }

    SuperForm operator-() const
    {
        SuperForm r(n);
        for (const auto& [k, p] : terms) r.terms[k] = -p;
        return r;
    }

    friend SuperForm operator-(const SuperForm& a, const SuperForm& b) { return a + (-b); }

    friend SuperForm operator*(const Rat& c, const SuperForm& f)
    {
        SuperForm r(f.n);
        if (c == 0) return r;
        for (const auto& [k, p] : f.terms) r.terms[k] = c * p;
        return r;
    }

    friend SuperForm operator*(const Poly& g, const SuperForm& f)
    {
        SuperForm r(f.n);
        for (const auto& [k, p] : f.terms) r.add_term(k.first, k.second, g * p);
        return r;
    }

    bool operator==(const SuperForm& o) const { return n == o.n && terms == o.terms; }

    std::string str() const;
};

inline SuperForm wedge(const SuperForm& a, const SuperForm& b)
{
    if (a.n != b.n) throw std::invalid_argument("wedge: dimension mismatch");
    SuperForm r(a.n);
    for (const auto& [ka, pa] : a.terms)
        for (const auto& [kb, pb] : b.terms) {
            Mask I1 = ka.first, K1 = ka.second, I2 = kb.first, K2 = kb.second;
            if ((I1 & I2) || (K1 & K2)) continue;
            int s = merge_sign(I1, I2) * merge_sign(K1, K2);
            if ((popcount(I2) * popcount(K1)) % 2) s = -s;
            r.add_term(I1 | I2, K1 | K2, Rat(s) * (pa * pb));
        }
    return r;
}

inline SuperForm wedge_power(const SuperForm& a, int k)
{
    SuperForm r = SuperForm::scalar(a.n, 1);
    for (int i = 0; i < k; ++i) r = wedge(r, a);
    return r;
}

// Multiplicative extension of a generator substitution dx_j -> gx(j),
// dxi_j -> gxi(j); the images are wedged in storage order.
template <class Fx, class Fxi>
SuperForm map_generators(const SuperForm& a, Fx gx, Fxi gxi)
{
    SuperForm r(a.n);
    for (const auto& [k, p] : a.terms) {
        SuperForm img = SuperForm::from_poly(p);
        for (int j : mask_indices(k.first)) img = wedge(img, gx(j));
        for (int j : mask_indices(k.second)) img = wedge(img, gxi(j));
        r += img;
    }
    return r;
}

// J(dxi_j) = dx_j, J(dx_j) = -dxi_j, extended multiplicatively.
inline SuperForm apply_J(const SuperForm& a)
{
    return map_generators(
        a, [&](int j) { return Rat(-1) * SuperForm::dxi(a.n, j); },
        [&](int j) { return SuperForm::dx(a.n, j); });
}

inline SuperForm apply_J_inverse(const SuperForm& a)
{
    return map_generators(
        a, [&](int j) { return SuperForm::dxi(a.n, j); },
        [&](int j) { return Rat(-1) * SuperForm::dx(a.n, j); });
}

// alpha -> alpha^#: dx_j -> dxi_j on (1,0)-forms.
inline SuperForm sharp(const SuperForm& a)
{
    if (!a.is_pure(1, 0)) throw std::invalid_argument("sharp: requires bidegree (1,0)");
    SuperForm r(a.n);
    for (const auto& [k, p] : a.terms) r.add_term(0, k.first, p);
    return r;
}

inline SuperForm exterior_d(const SuperForm& a)
{
    SuperForm r(a.n);
    for (const auto& [k, p] : a.terms)
        for (int i = 0; i < a.n; ++i) {
            if (k.first & (1u << i)) continue;
            Poly di = p.derivative(i);
            if (di.is_zero()) continue;
            int s = merge_sign(1u << i, k.first);
            r.add_term(k.first | (1u << i), k.second, Rat(s) * di);
        }
    return r;
}

inline SuperForm exterior_dsharp(const SuperForm& a)
{
    return apply_J_inverse(exterior_d(apply_J(a)));
}

enum class EulerField { E, Esharp };

// Contraction with E = sum x_j d/dx_j or E# = sum x_j d/dxi_j.
inline SuperForm contract(const SuperForm& a, EulerField field)
{
    SuperForm r(a.n);
    for (const auto& [k, p] : a.terms) {
        auto xs = mask_indices(k.first);
        auto xis = mask_indices(k.second);
        int nx = static_cast<int>(xs.size());
        if (field == EulerField::E) {
            for (int pos = 0; pos < nx; ++pos) {
                int j = xs[pos];
                int s = (pos % 2 == 0) ? 1 : -1;
                r.add_term(k.first & ~(1u << j), k.second,
                           Rat(s) * (Poly::variable(a.n, j) * p));
            }
        } else {
            for (int pos = 0; pos < static_cast<int>(xis.size()); ++pos) {
                int j = xis[pos];
                int s = ((nx + pos) % 2 == 0) ? 1 : -1;
                r.add_term(k.first, k.second & ~(1u << j),
                           Rat(s) * (Poly::variable(a.n, j) * p));
            }
        }
    }
    return r;
}

// T u = sum_i dx_i ^ (d/dxi_i contracted into u).
inline SuperForm lie_T(const SuperForm& a)
{
    SuperForm r(a.n);
    for (const auto& [k, p] : a.terms) {
        int nx = popcount(k.first);
        auto xis = mask_indices(k.second);
        for (int pos = 0; pos < static_cast<int>(xis.size()); ++pos) {
            int i = xis[pos];
            if (k.first & (1u << i)) continue;
            int s = ((nx + pos) % 2 == 0) ? 1 : -1;
            s *= merge_sign(1u << i, k.first);
            r.add_term(k.first | (1u << i), k.second & ~(1u << i), Rat(s) * p);
        }
    }
    return r;
}

// Sign reordering the storage word dx_1..dx_n dxi_1..dxi_n into the
// orientation word dx_1 dxi_1 ... dx_n dxi_n.
inline int interleave_sign(int n)
{
    return (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
}

inline SuperForm volume_form(int n)
{
    return SuperForm::monomial(n, full_mask(n), full_mask(n), Rat(interleave_sign(n)));
}

// Euclidean Hodge star with orientation dV = dx_1^dxi_1^...^dx_n^dxi_n;
// constant coefficients only.
inline SuperForm hodge_star(const SuperForm& a)
{
    SuperForm r(a.n);
    Mask full = full_mask(a.n);
    for (const auto& [k, p] : a.terms) {
        if (p.total_degree() > 0)
            throw std::invalid_argument("hodge_star: non-constant coefficients");
        Mask Ic = full & ~k.first, Kc = full & ~k.second;
        int s = merge_sign(k.first, Ic) * merge_sign(k.second, Kc);
        if ((popcount(Ic) * popcount(k.second)) % 2) s = -s;
        s *= interleave_sign(a.n);
        r.add_term(Ic, Kc, Rat(s) * p);
    }
    return r;
}

// Euclidean inner product of constant forms (monomials orthonormal in the
// storage basis; consistent with a ^ *b = (a,b) dV).
inline Rat const_inner(const SuperForm& a, const SuperForm& b)
{
    Rat s = 0;
    std::vector<int> zero;
    for (const auto& [k, p] : a.terms) {
        const Poly* q = b.coeff(k.first, k.second);
        if (!q) continue;
        std::vector<int> e(a.n, 0);
        auto ita = p.terms.find(e);
        auto itb = q->terms.find(e);
        if (ita != p.terms.end() && itb != q->terms.end()) s += ita->second * itb->second;
    }
    return s;
}

struct Box {
    RatVec lower, upper;

    Box(RatVec lo, RatVec hi) : lower(std::move(lo)), upper(std::move(hi))
    {
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (lower[i] > upper[i]) throw std::invalid_argument("box: lower > upper");
    }

    static Box unit(int n) { return Box(RatVec(n, Rat(0)), RatVec(n, Rat(1))); }
    int dim() const { return static_cast<int>(lower.size()); }
};

// Integral over box x [dxi], normalized so the integral of
// dx_1^dxi_1^...^dx_n^dxi_n over the unit box is +1. Components of bidegree
// other than (n,n) contribute zero.
inline Rat super_integrate(const SuperForm& a, const Box& box)
{
    const Poly* p = a.coeff(full_mask(a.n), full_mask(a.n));
    if (!p) return 0;
    return Rat(interleave_sign(a.n)) * p->integrate_box(box.lower, box.upper);
}

// Oriented facet-by-facet boundary integral of an (n-1, n)-form over the box
// boundary; exactly equal to super_integrate(exterior_d(a), box).
inline Rat boundary_integrate(const SuperForm& a, const Box& box)
{
    int n = a.n;
    if (!a.is_pure(n - 1, n))
        throw std::invalid_argument("boundary_integrate: requires bidegree (n-1,n)");
    Rat total = 0;
    for (int j = 0; j < n; ++j) {
        const Poly* p = a.coeff(full_mask(n) & ~(1u << j), full_mask(n));
        if (!p) continue;
        RatVec lo = box.lower, hi = box.upper;
        lo[j] = 0; hi[j] = 1;  // dead coordinate after substitution
        Rat face = p->substitute(j, box.upper[j]).integrate_box(lo, hi)
                 - p->substitute(j, box.lower[j]).integrate_box(lo, hi);
        if (j % 2) face = -face;
        total += face;
    }
    return Rat(interleave_sign(n)) * total;
}

inline std::string SuperForm::str() const
{
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, p] : terms) {
        if (!first) s += " + ";
        first = false;
        s += "(" + p.str() + ")";
        for (int i : mask_indices(k.first)) s += "^dx" + std::to_string(i + 1);
        for (int i : mask_indices(k.second)) s += "^dxi" + std::to_string(i + 1);
    }
    return s;
}

}  // namespace svx
