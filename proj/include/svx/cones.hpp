#pragma once

#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "superform.hpp"
#include "xyform.hpp"

namespace svx {

inline std::vector<Mask> masks_of_size(int n, int p)
{
    std::vector<Mask> v;
    for (Mask m = 0; m <= full_mask(n); ++m)
        if (popcount(m) == p) v.push_back(m);
    return v;
}

inline int display_sign(int p) { return (p * (p - 1) / 2) % 2 == 0 ? 1 : -1; }

// Constant-coefficient pure (p,p) superform with its coefficient matrix
// Omega_{IJ} in display normalization.
struct ConstForm {
    int n = 0, p = 0;
    SuperForm form;

    ConstForm() = default;
    ConstForm(int dim, int deg, SuperForm f) : n(dim), p(deg), form(std::move(f))
    {
        if (!form.is_pure(p, p)) throw std::invalid_argument("ConstForm: not pure (p,p)");
    }

    static ConstForm from_form(const SuperForm& f)
    {
        auto b = f.bidegrees();
        if (b.size() > 1) throw std::invalid_argument("ConstForm: mixed bidegree");
        int p = b.empty() ? 0 : b.begin()->first;
        if (!b.empty() && b.begin()->second != p)
            throw std::invalid_argument("ConstForm: not (p,p)");
        return ConstForm(f.n, p, f);
    }

    Rat raw_coeff(Mask I, Mask K) const
    {
        const Poly* q = form.coeff(I, K);
        if (!q) return 0;
        auto it = q->terms.find(std::vector<int>(n, 0));
        return it == q->terms.end() ? Rat(0) : it->second;
    }

    // Omega_{IJ} = (-1)^{p(p-1)/2} * raw coefficient of dx_I ^ dxi_J.
    RatMat matrix() const
    {
        auto ms = masks_of_size(n, p);
        int d = static_cast<int>(ms.size());
        RatMat m(d, d);
        int s = display_sign(p);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) m(i, j) = Rat(s) * raw_coeff(ms[i], ms[j]);
        return m;
    }

    bool is_symmetric() const { return apply_J(form) == form; }
};

inline SuperForm beta_form(int n)
{
    SuperForm b(n);
    for (int i = 0; i < n; ++i) b.add_term(1u << i, 1u << i, Poly::constant(n, 1));
    return b;
}

struct ElementaryFactorization {
    std::vector<RatVec> vectors;
    Rat weight = 1;
};

// alpha_1 ^ alpha_1# ^ ... ^ alpha_p ^ alpha_p# for alpha_i = sum v_i[k] dx_k.
inline ConstForm elementary(int n, const std::vector<RatVec>& vectors)
{
    SuperForm f = SuperForm::scalar(n, 1);
    for (const auto& v : vectors) {
        SuperForm a(n);
        for (int k = 0; k < n; ++k)
            if (v[k] != 0) a.add_term(1u << k, 0, Poly::constant(n, v[k]));
        f = wedge(wedge(f, a), sharp(a));
    }
    return ConstForm(n, static_cast<int>(vectors.size()), f);
}

// tau_Omega = sum Omega_{II}, cross-checked against Omega ^ beta^{n-p}/(n-p)!.
inline Rat trace(const ConstForm& f)
{
    Rat t = 0;
    auto ms = masks_of_size(f.n, f.p);
    int s = display_sign(f.p);
    for (Mask I : ms) t += Rat(s) * f.raw_coeff(I, I);
    SuperForm w = wedge(f.form, wedge_power(beta_form(f.n), f.n - f.p));
    Rat cross = Rat(1, factorial(f.n - f.p).convert_to<long long>())
              * super_integrate(w, Box::unit(f.n));
    if (cross != t) throw std::logic_error("trace: wedge cross-check failed");
    return t;
}

inline std::vector<std::vector<double>> to_double_matrix(const RatMat& m)
{
    std::vector<std::vector<double>> d(m.rows, std::vector<double>(m.cols));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) d[i][j] = to_double(m(i, j));
    return d;
}

inline bool is_positive(const ConstForm& f, double tol = 1e-10)
{
    RatMat m = f.matrix();
    for (int i = 0; i < m.rows; ++i)
        for (int j = i + 1; j < m.cols; ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument("is_positive: not symmetric");
    auto eig = sym_eigenvalues(to_double_matrix(m));
    return eig.empty() || eig.front() >= -tol;
}

inline bool is_strong(const ConstForm& f)
{
    return f.is_symmetric() && lie_T(f.form).is_zero();
}

// ---- vectorization of constant pure-bidegree forms --------------------------

struct FormSpace {
    int n, p, q;
    std::vector<std::pair<Mask, Mask>> basis;  // (I, K) pairs

    FormSpace(int dim, int dp, int dq) : n(dim), p(dp), q(dq)
    {
        for (Mask I : masks_of_size(n, p))
            for (Mask K : masks_of_size(n, q)) basis.emplace_back(I, K);
    }

    int dim() const { return static_cast<int>(basis.size()); }

    RatVec vectorize(const SuperForm& f) const
    {
        RatVec v(basis.size(), Rat(0));
        std::vector<int> zero(n, 0);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const Poly* c = f.coeff(basis[i].first, basis[i].second);
            if (!c) continue;
            auto it = c->terms.find(zero);
            if (it != c->terms.end()) v[i] = it->second;
        }
        return v;
    }

    SuperForm devectorize(const RatVec& v) const
    {
        SuperForm f(n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (v[i] != 0) f.add_term(basis[i].first, basis[i].second, Poly::constant(n, v[i]));
        return f;
    }

    // Matrix of a linear operator on constant forms, rows indexed by the
    // target space.
    RatMat operator_matrix(const FormSpace& target,
                           const std::function<SuperForm(const SuperForm&)>& op) const
    {
        RatMat m(target.dim(), dim());
        for (int j = 0; j < dim(); ++j) {
            SuperForm img = op(devectorize(unit(j)));
            RatVec col = target.vectorize(img);
            for (int i = 0; i < target.dim(); ++i) m(i, j) = col[i];
        }
        return m;
    }

    RatVec unit(int j) const
    {
        RatVec v(basis.size(), Rat(0));
        v[j] = 1;
        return v;
    }
};

// Basis (as coefficient vectors over FormSpace(n,p,p)) of the symmetric
// constant (p,p)-forms killed by T, i.e. the strong forms S.
inline std::vector<RatVec> kernel_T_symmetric(int n, int p)
{
    FormSpace sp(n, p, p);
    FormSpace tgt(n, p + 1, p - 1);
    RatMat jm = sp.operator_matrix(sp, [](const SuperForm& f) { return apply_J(f); });
    RatMat tm = sp.operator_matrix(tgt, [](const SuperForm& f) { return lie_T(f); });
    RatMat stacked(sp.dim() + tgt.dim(), sp.dim());
    for (int i = 0; i < sp.dim(); ++i)
        for (int j = 0; j < sp.dim(); ++j)
            stacked(i, j) = jm(i, j) - (i == j ? Rat(1) : Rat(0));
    for (int i = 0; i < tgt.dim(); ++i)
        for (int j = 0; j < sp.dim(); ++j) stacked(sp.dim() + i, j) = tm(i, j);
    return nullspace(stacked);
}

// Orthogonality to the strong space, exact.
inline bool is_weakly_null(const ConstForm& f)
{
    if (!f.is_symmetric()) throw std::invalid_argument("is_weakly_null: not symmetric");
    FormSpace sp(f.n, f.p, f.p);
    RatVec v = sp.vectorize(f.form);
    for (const auto& b : kernel_T_symmetric(f.n, f.p))
        if (dot(v, b) != 0) return false;
    return true;
}

inline std::vector<RatVec> random_int_vectors(int count, int n, std::mt19937& rng, int lo = -2,
                                              int hi = 2)
{
    std::uniform_int_distribution<int> d(lo, hi);
    std::vector<RatVec> vs;
    for (int i = 0; i < count; ++i) {
        RatVec v(n);
        bool nz = false;
        for (int k = 0; k < n; ++k) { int x = d(rng); v[k] = x; nz |= x != 0; }
        if (!nz) { --i; continue; }
        vs.push_back(std::move(v));
    }
    return vs;
}

// Rank of a sampled set of elementary (p,p)-forms.
inline int elementary_sample_rank(int n, int p, int samples, std::mt19937& rng)
{
    FormSpace sp(n, p, p);
    std::vector<RatVec> rows;
    for (int t = 0; t < samples; ++t) {
        auto vs = random_int_vectors(p, n, rng);
        rows.push_back(sp.vectorize(elementary(n, vs).form));
    }
    return rank_of_rows(rows);
}

struct WeakPositivityReport {
    bool violation_found = false;
    double min_value = 0.0;
    std::vector<std::vector<double>> witness;  // unit vectors of the violating E
};

namespace detail {

inline double eval_wedge_elementary(const ConstForm& f,
                                    const std::vector<std::vector<double>>& vs)
{
    // f ^ E(v_1..v_{n-p}) = value * dV; expand E's coefficient per mask pair.
    // Work in doubles: coefficient of E at (I, K) equals
    // display/merge bookkeeping of wedging the alpha_i ^ alpha_i#; reuse the
    // exact machinery on rationalized inputs would be slow, so compute via the
    // Gram-style formula: f ^ E = sum_{I,K} raw_f(I,K) * rawE(Ic,Kc) * sign.
    int n = f.n, p = f.p;
    int m = n - p;
    // rawE over masks: E = wedge of (sum v dx)(sum v dxi): raw coefficient of
    // dx_A ^ dxi_B with |A|=|B|=m: det-like sums. Build E numerically via the
    // same wedge recursion in doubles.
    std::map<std::pair<Mask, Mask>, double> e;
    e[{0u, 0u}] = 1.0;
    for (const auto& v : vs) {
        std::map<std::pair<Mask, Mask>, double> nx;
        for (const auto& [k, c] : e)
            for (int i = 0; i < n; ++i) {
                if (v[i] == 0.0 || (k.first & (1u << i))) continue;
                int s1 = merge_sign(k.first, 1u << i);
                if (popcount(k.second) % 2) s1 = -s1;
                for (int j = 0; j < n; ++j) {
                    if (v[j] == 0.0 || (k.second & (1u << j))) continue;
                    int s = s1 * merge_sign(k.second, 1u << j);
                    nx[{k.first | (1u << i), k.second | (1u << j)}] +=
                        s * c * v[i] * v[j];
                }
            }
        e.swap(nx);
    }
    double total = 0.0;
    for (const auto& [k, pol] : f.form.terms) {
        std::vector<int> zero(n, 0);
        auto it = pol.terms.find(zero);
        if (it == pol.terms.end()) continue;
        double cf = to_double(it->second);
        Mask Ic = full_mask(n) & ~k.first, Kc = full_mask(n) & ~k.second;
        auto itE = e.find({Ic, Kc});
        if (itE == e.end()) continue;
        int s = merge_sign(k.first, Ic) * merge_sign(k.second, Kc);
        if ((popcount(Ic) * popcount(k.second)) % 2) s = -s;
        s *= interleave_sign(n);
        total += cf * itE->second * s;
    }
    return total;
}

}  // namespace detail

// Minimizes f ^ E over elementary E of complementary degree via random
// restarts with projected gradient descent; exact PSD test in bidegrees (1,1)
// and (n-1,n-1).
inline WeakPositivityReport weak_positivity_search(const ConstForm& f, int trials,
                                                   double tol, unsigned seed)
{
    WeakPositivityReport rep;
    int n = f.n, p = f.p, m = n - p;
    if (p == 1 || p == n - 1) {
        // all cones coincide: exact eigenvalue test of the matrix
        ConstForm g = f;
        if (p == n - 1) {
            g = ConstForm::from_form(hodge_star(f.form));
            // weak positivity of f in (n-1,n-1) equals positivity of the dual
            // (1,1) matrix obtained via the star
        }
        bool pos = is_positive(g, tol);
        rep.violation_found = !pos;
        auto eig = sym_eigenvalues(to_double_matrix(g.matrix()));
        rep.min_value = eig.empty() ? 0.0 : eig.front();
        return rep;
    }
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double best = 0.0;
    std::vector<std::vector<double>> best_vs;
    for (int t = 0; t < trials; ++t) {
        std::vector<std::vector<double>> vs(m, std::vector<double>(n));
        for (auto& v : vs) {
            double norm = 0;
            for (auto& x : v) { x = gauss(rng); norm += x * x; }
            norm = std::sqrt(norm);
            for (auto& x : v) x /= norm;
        }
        double val = detail::eval_wedge_elementary(f, vs);
        double step = 0.2;
        for (int it = 0; it < 200 && step > 1e-12; ++it) {
            bool improved = false;
            for (int vi = 0; vi < m; ++vi)
                for (int k = 0; k < n; ++k) {
                    for (double s : {step, -step}) {
                        auto vs2 = vs;
                        vs2[vi][k] += s;
                        double norm = 0;
                        for (double x : vs2[vi]) norm += x * x;
                        norm = std::sqrt(norm);
                        for (auto& x : vs2[vi]) x /= norm;
                        double v2 = detail::eval_wedge_elementary(f, vs2);
                        if (v2 < val - 1e-15) { val = v2; vs = vs2; improved = true; }
                    }
                }
            if (!improved) step /= 2;
        }
        if (t == 0 || val < best) { best = val; best_vs = vs; }
    }
    rep.min_value = best;
    if (best < -tol) { rep.violation_found = true; rep.witness = best_vs; }
    return rep;
}

struct StrongDecomposition {
    std::vector<ElementaryFactorization> parts;
    Rat residual_norm2 = 0;  // exact squared residual
};

// Expresses a strong form over a sampled elementary spanning set by exact
// least squares (normal equations over the rationals).
inline StrongDecomposition decompose_strong(const ConstForm& f, int sample_size,
                                            unsigned seed)
{
    if (!is_strong(f)) throw std::invalid_argument("decompose_strong: not strong");
    std::mt19937 rng(seed);
    FormSpace sp(f.n, f.p, f.p);
    std::vector<RatVec> cols;
    std::vector<std::vector<RatVec>> gens;
    for (int t = 0; t < sample_size; ++t) {
        auto vs = random_int_vectors(f.p, f.n, rng);
        ConstForm e = elementary(f.n, vs);
        if (e.form.is_zero()) { --t; continue; }
        cols.push_back(sp.vectorize(e.form));
        gens.push_back(vs);
    }
    int d = sp.dim(), s = static_cast<int>(cols.size());
    RatVec target = sp.vectorize(f.form);
    RatMat ata(s, s);
    RatVec atb(s, Rat(0));
    for (int i = 0; i < s; ++i) {
        atb[i] = dot(cols[i], target);
        for (int j = i; j < s; ++j) {
            ata(i, j) = dot(cols[i], cols[j]);
            ata(j, i) = ata(i, j);
        }
    }
    auto w = solve(ata, atb);
    StrongDecomposition out;
    RatVec resid = target;
    if (w) {
        for (int i = 0; i < s; ++i) {
            if ((*w)[i] == 0) continue;
            ElementaryFactorization ef;
            ef.vectors = gens[i];
            ef.weight = (*w)[i];
            out.parts.push_back(std::move(ef));
            for (int k = 0; k < d; ++k) resid[k] -= (*w)[i] * cols[i][k];
        }
    }
    out.residual_norm2 = dot(resid, resid);
    return out;
}

// dim Ker(Lambda) on constant degree-N forms in (x,y)
// versus the rank of sampled decomposable forms with the orthogonality
// constraint.
inline std::pair<int, int> primitive_vs_decomposable(int n, int N, int samples,
                                                     std::mt19937& rng)
{
    // full degree-N space over all bidegrees
    std::vector<std::pair<Mask, Mask>> basis;
    for (Mask I = 0; I <= full_mask(n); ++I)
        for (Mask J = 0; J <= full_mask(n); ++J)
            if (popcount(I) + popcount(J) == N) basis.emplace_back(I, J);
    int dim = static_cast<int>(basis.size());
    auto vectorize = [&](const XYForm& w) {
        RatVec v(dim, Rat(0));
        std::vector<int> zero(n, 0);
        for (int i = 0; i < dim; ++i) {
            const Poly* c = w.raw.coeff(basis[i].first, basis[i].second);
            if (!c) continue;
            auto it = c->terms.find(zero);
            if (it != c->terms.end()) v[i] = it->second;
        }
        return v;
    };
    // Lambda kernel
    std::vector<RatVec> rows;
    for (int j = 0; j < dim; ++j) {
        XYForm u(n);
        u.add_term(basis[j].first, basis[j].second, Poly::constant(n, 1));
        XYForm lu = kahler_Lambda(u);
        // vectorize over the degree N-2 space
        RatVec col;
        for (Mask I = 0; I <= full_mask(n); ++I)
            for (Mask J = 0; J <= full_mask(n); ++J) {
                if (popcount(I) + popcount(J) != N - 2) continue;
                const Poly* c = lu.raw.coeff(I, J);
                Rat val = 0;
                if (c) {
                    auto it = c->terms.find(std::vector<int>(n, 0));
                    if (it != c->terms.end()) val = it->second;
                }
                col.push_back(val);
            }
        rows.push_back(std::move(col));
    }
    // rows currently holds images as columns-by-j; transpose logic: rank of
    // the operator equals rank of the row list
    int rank_lambda = rank_of_rows(rows);
    int dim_ker = dim - rank_lambda;

    // sampled decomposable span: alpha_1^..^alpha_q ^ beta_1#^..^beta_{N-q}#
    // with the beta's orthogonal to the alpha's
    std::vector<RatVec> dec;
    for (int t = 0; t < samples; ++t) {
        std::uniform_int_distribution<int> qd(0, N);
        int q = qd(rng);
        if (q > n || N - q > n) continue;
        auto alphas = random_int_vectors(q, n, rng);
        std::vector<RatVec> betas;
        if (N - q > 0) {
            std::vector<RatVec> comp;
            if (q == 0) {
                for (int i = 0; i < n; ++i) {
                    RatVec e(n, Rat(0));
                    e[i] = 1;
                    comp.push_back(e);
                }
            } else {
                comp = nullspace(RatMat::from_rows(alphas));
            }
            if (comp.empty()) continue;
            std::uniform_int_distribution<int> cd(-2, 2);
            for (int b = 0; b < N - q; ++b) {
                RatVec v(n, Rat(0));
                for (const auto& c : comp) {
                    int w = cd(rng);
                    if (w) v = vadd(v, vscale(Rat(w), c));
                }
                betas.push_back(v);
            }
        }
        XYForm w(n);
        w.add_term(0, 0, Poly::constant(n, 1));
        for (const auto& a : alphas) {
            XYForm da(n);
            for (int k = 0; k < n; ++k)
                if (a[k] != 0) da.add_term(1u << k, 0, Poly::constant(n, a[k]));
            w = wedge(w, da);
        }
        for (const auto& b : betas) {
            XYForm db(n);
            for (int k = 0; k < n; ++k)
                if (b[k] != 0) db.add_term(0, 1u << k, Poly::constant(n, b[k]));
            w = wedge(w, db);
        }
        if (w.is_zero()) continue;
        dec.push_back(vectorize(w));
    }
    int rank_dec = rank_of_rows(dec);
    return {dim_ker, rank_dec};
}

}  // namespace svx
