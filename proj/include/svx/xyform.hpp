#pragma once

#include <stdexcept>
#include <vector>

#include "superform.hpp"

namespace svx {

// Translation-invariant form in dx_I ^ dy_J on R^n_x x R^n_y with Poly
// coefficients in x. Storage piggybacks on SuperForm with dy in the second
// slot; the wedge/derivative sign rules coincide.
struct XYForm {
    SuperForm raw;

    XYForm() = default;
    explicit XYForm(int dim) : raw(dim) {}
    explicit XYForm(SuperForm f) : raw(std::move(f)) {}

    int n() const { return raw.n; }
    bool is_zero() const { return raw.is_zero(); }
    void add_term(Mask I, Mask J, const Poly& p) { raw.add_term(I, J, p); }

    static XYForm dx(int dim, int j) { return XYForm(SuperForm::dx(dim, j)); }
    static XYForm dy(int dim, int j) { return XYForm(SuperForm::dxi(dim, j)); }
    static XYForm monomial(int dim, Mask I, Mask J, const Rat& c)
    {
        return XYForm(SuperForm::monomial(dim, I, J, c));
    }

    XYForm& operator+=(const XYForm& o) { raw += o.raw; return *this; }
    friend XYForm operator+(XYForm a, const XYForm& b) { a += b; return a; }
    friend XYForm operator-(const XYForm& a, const XYForm& b) { return XYForm(a.raw - b.raw); }
    friend XYForm operator*(const Rat& c, const XYForm& f) { return XYForm(c * f.raw); }
    bool operator==(const XYForm& o) const { return raw == o.raw; }
};

inline XYForm wedge(const XYForm& a, const XYForm& b) { return XYForm(wedge(a.raw, b.raw)); }
inline XYForm exterior_d(const XYForm& a) { return XYForm(exterior_d(a.raw)); }

// L = beta(x,y) ^ . with beta(x,y) = sum dx_i ^ dy_i.
inline XYForm kahler_L(const XYForm& w)
{
    SuperForm beta(w.n());
    for (int i = 0; i < w.n(); ++i)
        beta.add_term(1u << i, 1u << i, Poly::constant(w.n(), 1));
    return XYForm(wedge(beta, w.raw));
}

// Lambda = sum dy_i-hook dx_i-hook, the metric adjoint of L.
inline XYForm kahler_Lambda(const XYForm& w)
{
    SuperForm r(w.n());
    for (const auto& [k, p] : w.raw.terms) {
        auto xs = mask_indices(k.first);
        auto ys = mask_indices(k.second);
        for (int i = 0; i < w.n(); ++i) {
            if (!(k.first & (1u << i)) || !(k.second & (1u << i))) continue;
            int posx = 0;
            while (xs[posx] != i) ++posx;
            int posy = 0;
            while (ys[posy] != i) ++posy;
            int s = (posx % 2 == 0) ? 1 : -1;
            if ((static_cast<int>(xs.size()) - 1 + posy) % 2) s = -s;
            r.add_term(k.first & ~(1u << i), k.second & ~(1u << i), Rat(s) * p);
        }
    }
    return XYForm(r);
}

inline Rat const_inner(const XYForm& a, const XYForm& b) { return const_inner(a.raw, b.raw); }

namespace detail {

// Sign of sorting a word of distinct generators into increasing order; 0 on a
// repeated generator. Generator ids order the three families dx < dxi < dy.
inline int word_sign(std::vector<int> w)
{
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) return 0;
            if (w[i] > w[j]) { std::swap(w[i], w[j]); sign = -sign; }
        }
    return sign;
}

inline int phi_sigma(int n) { return (n * (n + 1) / 2) % 2 == 0 ? 1 : -1; }

// Basis sign data shared by the two transform directions: for source block
// dx_I with integrated-family mask J (complement L), the source-side word
// [dx_I][fam_J][int_full] versus the target-side word
// [dx_I][other_L][(int_j, fam_j) for j in J].
//
// Families are encoded dx_i = i, first partner = n + i, second partner =
// 2n + i; which partner is "dxi" vs "dy" is fixed by the caller's encoding and
// only relative order matters, so one routine serves both directions.
inline int transform_sign(int n, Mask I, Mask J, int fam_src, int fam_dst)
{
    Mask L = full_mask(n) & ~J;
    std::vector<int> rhs, lhs;
    for (int i : mask_indices(I)) { rhs.push_back(i); lhs.push_back(i); }
    for (int j : mask_indices(J)) rhs.push_back(fam_src * n + j);
    for (int j = 0; j < n; ++j) rhs.push_back(fam_dst * n + j);
    for (int l : mask_indices(L)) lhs.push_back(fam_dst * n + l);
    for (int j : mask_indices(J)) {
        lhs.push_back(fam_src * n + j);
        lhs.push_back(fam_dst * n + j);
    }
    int r = word_sign(rhs), l = word_sign(lhs);
    if (r == 0 || l == 0) throw std::logic_error("transform_sign: repeated generator");
    return phi_sigma(n) * r * l;
}

}  // namespace detail

// Berezin transform (p,k) -> (p,n-k): the unique superform s with
// s ^ beta(y,xi)^k / k! = w ^ dxi_full * (-1)^{n(n+1)/2}.
inline SuperForm phi_transform(const XYForm& w)
{
    int n = w.n();
    SuperForm r(n);
    for (const auto& [k, p] : w.raw.terms) {
        Mask I = k.first, J = k.second;
        // source family dy (encoded 2), target family dxi (encoded 1)
        int s = detail::transform_sign(n, I, J, 2, 1);
        r.add_term(I, full_mask(n) & ~J, Rat(s) * p);
    }
    return r;
}

// The symmetric transform back: the unique w with
// w ^ beta(xi,y)^q / q! = s ^ dy_full * (-1)^{n(n-1)/2}, the Berezin
// orientation sign for the dy integral. Composing with phi_transform gives
// (-1)^{n(n+1)/2} times the identity.
inline XYForm phi_again(const SuperForm& s)
{
    int n = s.n;
    XYForm r(n);
    for (const auto& [k, p] : s.terms) {
        Mask I = k.first, Q = k.second;
        // source family dxi (encoded 1), target family dy (encoded 2)
        int sg = detail::transform_sign(n, I, Q, 1, 2);
        if (n % 2) sg = -sg;
        r.add_term(I, full_mask(n) & ~Q, Rat(sg) * p);
    }
    return r;
}

inline XYForm phi_inverse(const SuperForm& s)
{
    return Rat(detail::phi_sigma(s.n)) * phi_again(s);
}

// alpha ^ w with alpha = sum x_i dy_i; w is vertical when this vanishes.
inline XYForm vertical_obstruction(const XYForm& w)
{
    int n = w.n();
    SuperForm alpha(n);
    for (int i = 0; i < n; ++i) alpha.add_term(0, 1u << i, Poly::variable(n, i));
    return XYForm(wedge(alpha, w.raw));
}

}  // namespace svx
