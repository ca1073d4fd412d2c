#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lp.hpp"
#include "poly.hpp"
#include "polytope.hpp"

namespace svx {

// Piecewise-linear convex function psi(x) = max_i (a_i.x + b_i). Construction
// prunes pieces that never win on a full-dimensional region, so the piece list
// is irredundant.
struct MaxAffine {
    int n = 0;
    std::vector<std::pair<RatVec, Rat>> pieces;

    Rat eval(const RatVec& x) const
    {
        Rat best = dot(pieces[0].first, x) + pieces[0].second;
        for (const auto& [a, b] : pieces) best = std::max(best, dot(a, x) + b);
        return best;
    }

    std::vector<int> active_set(const RatVec& x) const
    {
        Rat v = eval(x);
        std::vector<int> act;
        for (std::size_t i = 0; i < pieces.size(); ++i)
            if (dot(pieces[i].first, x) + pieces[i].second == v)
                act.push_back(static_cast<int>(i));
        return act;
    }

    bool one_homogeneous() const
    {
        for (const auto& [a, b] : pieces)
            if (b != 0) return false;
        return true;
    }
};

// Strict-feasibility LP: piece i is essential iff some x gives it a strict win
// over every other piece.
inline bool piece_essential(const std::vector<std::pair<RatVec, Rat>>& pieces, std::size_t i,
                            int n)
{
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b, c(static_cast<std::size_t>(n) + 1, Rat(0));
    c[n] = 1;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (j == i) continue;
        std::vector<Rat> row(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k < n; ++k) row[k] = pieces[j].first[k] - pieces[i].first[k];
        row[n] = 1;
        A.push_back(std::move(row));
        b.push_back(pieces[i].second - pieces[j].second);
    }
    std::vector<Rat> cap(static_cast<std::size_t>(n) + 1, Rat(0));
    cap[n] = 1;
    A.push_back(std::move(cap));
    b.push_back(Rat(1));
    auto r = lp_maximize(A, b, c);
    return r.status == LpStatus::Optimal && r.value > 0;
}

inline MaxAffine make_max_affine(int n, std::vector<std::pair<RatVec, Rat>> pieces)
{
    if (pieces.empty()) throw std::invalid_argument("make_max_affine: no pieces");
    std::sort(pieces.begin(), pieces.end());
    pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());
    MaxAffine f;
    f.n = n;
    if (pieces.size() == 1) {
        f.pieces = std::move(pieces);
        return f;
    }
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (piece_essential(pieces, i, n)) f.pieces.push_back(pieces[i]);
    return f;
}

inline MaxAffine support_function(const Polytope& k)
{
    std::vector<std::pair<RatVec, Rat>> pieces;
    for (const auto& v : k.vertices) pieces.emplace_back(v, Rat(0));
    return make_max_affine(k.n, std::move(pieces));
}

inline MaxAffine gauge_function(const Polytope& p)
{
    if (!origin_interior(p)) throw std::invalid_argument("gauge_function: origin not interior");
    std::vector<std::pair<RatVec, Rat>> pieces;
    for (const auto& f : p.facets) pieces.emplace_back(vscale(Rat(1) / f.offset, f.normal), Rat(0));
    return make_max_affine(p.n, std::move(pieces));
}

// Pointwise sum of two max-affine functions.
inline MaxAffine ma_sum(const MaxAffine& f, const MaxAffine& g)
{
    if (f.n != g.n) throw std::invalid_argument("ma_sum: dimension mismatch");
    std::vector<std::pair<RatVec, Rat>> pieces;
    for (const auto& [af, bf] : f.pieces)
        for (const auto& [ag, bg] : g.pieces) pieces.emplace_back(vadd(af, ag), bf + bg);
    return make_max_affine(f.n, std::move(pieces));
}

// psi°(x) = lim psi(tx)/t: the same slopes with the offsets dropped.
inline MaxAffine indicator(const MaxAffine& f)
{
    std::vector<std::pair<RatVec, Rat>> pieces;
    for (const auto& [a, b] : f.pieces) pieces.emplace_back(a, Rat(0));
    return make_max_affine(f.n, std::move(pieces));
}

inline Polytope recession_body(const MaxAffine& f)
{
    std::vector<RatVec> pts;
    for (const auto& [a, b] : f.pieces) pts.push_back(a);
    return convex_hull(f.n, pts);
}

// Alexandrov MA measure: one atom per vertex of the induced subdivision,
// with mass the volume of the convex hull of the active slopes there.
// Vertices are found by solving the equality system of each (n+1)-subset of
// pieces and keeping active-maximal solutions.
inline AtomicMeasure ma_measure(const MaxAffine& f)
{
    int n = f.n;
    AtomicMeasure mu;
    int m = static_cast<int>(f.pieces.size());
    if (m < n + 1) return mu;
    std::vector<int> comb(n + 1);
    for (int i = 0; i <= n; ++i) comb[i] = i;
    auto advance = [&]() {
        int i = n;
        while (i >= 0 && comb[i] == m - n - 1 + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j <= n; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    std::vector<RatVec> seen;
    do {
        RatMat a(n, n);
        RatVec rhs(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = 0; j < n; ++j)
                a(i - 1, j) = f.pieces[comb[i]].first[j] - f.pieces[comb[0]].first[j];
            rhs[i - 1] = f.pieces[comb[0]].second - f.pieces[comb[i]].second;
        }
        if (det(a) == 0) continue;
        RatVec x = *solve(a, rhs);
        if (dot(f.pieces[comb[0]].first, x) + f.pieces[comb[0]].second != f.eval(x)) continue;
        if (std::find(seen.begin(), seen.end(), x) != seen.end()) continue;
        seen.push_back(x);
        std::vector<RatVec> slopes;
        for (int i : f.active_set(x)) slopes.push_back(f.pieces[i].first);
        Rat mass = volume(convex_hull(n, slopes));
        if (mass != 0) mu.add(x, mass);
    } while (advance());
    return mu;
}

// Monte-Carlo oracle: sample gradients g uniformly in the bounding box of the
// slopes and pull each back to argmin_x psi(x) - g.x via a float LP; samples
// cluster into atoms of the gradient-image measure.
struct OracleAtom {
    std::vector<double> x;
    long count = 0;
    double mass = 0.0;
    double sigma = 0.0;
};

struct OracleMeasure {
    std::vector<OracleAtom> atoms;
    double total = 0.0;
    double total_sigma = 0.0;
    long samples = 0;
};

inline OracleMeasure ma_oracle(const MaxAffine& f, long samples, unsigned seed)
{
    int n = f.n;
    std::vector<double> lo(n, 1e300), hi(n, -1e300);
    for (const auto& [a, b] : f.pieces)
        for (int j = 0; j < n; ++j) {
            double v = to_double(a[j]);
            lo[j] = std::min(lo[j], v);
            hi[j] = std::max(hi[j], v);
        }
    double box = 1.0;
    for (int j = 0; j < n; ++j) box *= std::max(hi[j] - lo[j], 0.0);
    OracleMeasure om;
    om.samples = samples;
    if (box == 0.0) return om;  // affine psi: zero measure
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    int m = static_cast<int>(f.pieces.size());
    std::vector<std::vector<double>> ad(m, std::vector<double>(n));
    std::vector<double> bd(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) ad[i][j] = to_double(f.pieces[i].first[j]);
        bd[i] = to_double(f.pieces[i].second);
    }
    // LP per sample: max -t subject to (a_i - g).x - t <= -b_i
    std::vector<std::vector<double>> A(m, std::vector<double>(n + 1));
    std::vector<double> bb(m), c(n + 1, 0.0);
    c[n] = -1.0;
    long inside = 0;
    for (long s = 0; s < samples; ++s) {
        std::vector<double> g(n);
        for (int j = 0; j < n; ++j) g[j] = lo[j] + (hi[j] - lo[j]) * unif(rng);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) A[i][j] = ad[i][j] - g[j];
            A[i][n] = -1.0;
            bb[i] = -bd[i];
        }
        auto r = lp_maximize(A, bb, c);
        if (r.status != LpStatus::Optimal) continue;  // g outside the gradient image
        ++inside;
        bool found = false;
        for (auto& atom : om.atoms) {
            double d = 0.0;
            for (int j = 0; j < n; ++j) d = std::max(d, std::abs(atom.x[j] - r.x[j]));
            if (d < 1e-6) {
                ++atom.count;
                found = true;
                break;
            }
        }
        if (!found) {
            OracleAtom atom;
            atom.x.assign(r.x.begin(), r.x.begin() + n);
            atom.count = 1;
            om.atoms.push_back(std::move(atom));
        }
    }
    for (auto& atom : om.atoms) {
        double p = static_cast<double>(atom.count) / samples;
        atom.mass = box * p;
        atom.sigma = box * std::sqrt(p * (1.0 - p) / samples);
    }
    double p = static_cast<double>(inside) / samples;
    om.total = box * p;
    om.total_sigma = box * std::sqrt(p * (1.0 - p) / samples);
    return om;
}

// Boundary MA of h_L against the gauge of P: each surface atom (u, q) of L is
// pushed radially onto the unit set of the gauge, landing at u/mu_P(u) with
// the Jacobian factor mu_P picked up by the mass. Pairings with 1-homogeneous
// test functions are then gauge-independent by construction.
inline AtomicMeasure boundary_ma(const Polytope& p, const Polytope& l)
{
    if (!origin_interior(p)) throw std::invalid_argument("boundary_ma: origin not interior");
    if (!l.full_dim()) throw std::invalid_argument("boundary_ma: L must be full-dimensional");
    AtomicMeasure mu;
    for (const auto& a : surface_area_measure(l).atoms) {
        Rat g = gauge_eval(p, a.dir);
        mu.add(vscale(Rat(1) / g, a.dir), a.scale * g);
    }
    return mu;
}

template <class F>
Rat pair_measure(const AtomicMeasure& mu, F&& f)
{
    Rat s = 0;
    for (const auto& [x, m] : mu.atoms) s += f(x) * m;
    return s;
}

// --- explicit boundary operator, polygons only -----------------------------

// Edge pieces are parameterized as x(t) = base + t * w with w the 90-degree
// rotation of the offset-scaled normal u/offset; with that speed the density
// is plainly the second derivative of f along the edge, matching the radial
// pushforward normalization of boundary_ma.
struct EdgeDensity {
    RatVec base;
    RatVec w;
    Rat t_max;
    Poly density;  // univariate in the edge parameter
};

// Vertex atom weight = c * (f - Ef)(p) with E the Euler operator; c is the
// gauge's own vertex mass |u_plus - u_minus| / |p|, rational because the polar
// edge through the two scaled normals is perpendicular to p.
struct VertexAtom {
    RatVec p;
    Rat c;
    Rat defect;  // (f - Ef)(p)
};

struct ExplicitBoundary {
    std::vector<EdgeDensity> edges;
    std::vector<VertexAtom> vertices;
};

namespace detail {

inline RatVec rot90(const RatVec& v) { return {-v[1], v[0]}; }

// The two facets incident to a polygon vertex.
inline std::vector<int> incident_facets(const Polytope& p, int vid)
{
    std::vector<int> out;
    for (std::size_t f = 0; f < p.facets.size(); ++f)
        for (int v : p.facets[f].vertex_ids)
            if (v == vid) out.push_back(static_cast<int>(f));
    return out;
}

}  // namespace detail

inline Poly euler_defect(const Poly& f)
{
    Poly e = Poly::constant(f.n, Rat(0));
    for (int i = 0; i < f.n; ++i)
        e = e + Poly::variable(f.n, i) * f.derivative(i);
    return f + Rat(-1) * e;
}

inline ExplicitBoundary boundary_ma_explicit(const Polytope& p, const Poly& f)
{
    if (p.n != 2 || f.n != 2)
        throw std::invalid_argument("boundary_ma_explicit: polygons only");
    if (!origin_interior(p))
        throw std::invalid_argument("boundary_ma_explicit: origin not interior");
    ExplicitBoundary out;
    for (const auto& fc : p.facets) {
        RatVec u = vscale(Rat(1) / fc.offset, fc.normal);
        RatVec w = detail::rot90(u);
        const RatVec& v0 = p.vertices[fc.vertex_ids[0]];
        const RatVec& v1 = p.vertices[fc.vertex_ids[1]];
        Rat t1 = dot(vsub(v1, v0), w) / dot(w, w);
        EdgeDensity e;
        e.base = t1 > 0 ? v0 : v1;
        e.w = w;
        e.t_max = rat_abs(t1);
        // restrict f to the edge and differentiate twice
        std::vector<RatVec> m(2, RatVec(1));
        m[0][0] = w[0];
        m[1][0] = w[1];
        Poly rest = f.compose_affine(m, e.base);
        e.density = rest.derivative(0).derivative(0);
        out.edges.push_back(std::move(e));
    }
    Poly defect = euler_defect(f);
    for (std::size_t vid = 0; vid < p.vertices.size(); ++vid) {
        auto inc = detail::incident_facets(p, static_cast<int>(vid));
        const RatVec& v = p.vertices[vid];
        RatVec up = vscale(Rat(1) / p.facets[inc[0]].offset, p.facets[inc[0]].normal);
        RatVec um = vscale(Rat(1) / p.facets[inc[1]].offset, p.facets[inc[1]].normal);
        RatVec d = vsub(up, um);
        Rat cj = rat_abs(d[0] * v[1] - d[1] * v[0]) / dot(v, v);
        out.vertices.push_back({v, cj, defect.eval(v)});
    }
    return out;
}

inline Rat explicit_singular_mass(const ExplicitBoundary& eb, const RatVec& vertex)
{
    for (const auto& va : eb.vertices)
        if (va.p == vertex) return va.c * va.defect;
    throw std::invalid_argument("explicit_singular_mass: not a vertex");
}

// --- tropical chart operator, polygons only --------------------------------

// One-sided directional derivative t -> d/dt f(v + t d) at t = 0+.
using DirDeriv = std::function<Rat(const RatVec&, const RatVec&)>;

inline DirDeriv dir_deriv(const Poly& f)
{
    return [f](const RatVec& v, const RatVec& d) {
        Rat s = 0;
        for (int i = 0; i < f.n; ++i) s += f.derivative(i).eval(v) * d[i];
        return s;
    };
}

inline DirDeriv dir_deriv(const MaxAffine& f)
{
    return [f](const RatVec& v, const RatVec& d) {
        auto act = f.active_set(v);
        Rat best = dot(f.pieces[act[0]].first, d);
        for (int i : act) best = std::max(best, dot(f.pieces[i].first, d));
        return best;
    };
}

// Singular mass of the chart-based boundary operator at a polygon vertex: in
// the rotated graph chart the kink of f along the boundary contributes
// jump(F')/|v|, which reduces to the rational expression below.
inline Rat boundary_ma_tropical_singular(const Polytope& p, const DirDeriv& df, int vid)
{
    if (p.n != 2) throw std::invalid_argument("boundary_ma_tropical: polygons only");
    if (!origin_interior(p))
        throw std::invalid_argument("boundary_ma_tropical: origin not interior");
    auto inc = detail::incident_facets(p, vid);
    const RatVec& v = p.vertices[vid];
    Rat plus_term = 0, minus_term = 0;
    bool have_plus = false, have_minus = false;
    for (int fi : inc) {
        const auto& fc = p.facets[fi];
        int other = fc.vertex_ids[0] == vid ? fc.vertex_ids[1] : fc.vertex_ids[0];
        RatVec dir = vsub(p.vertices[other], v);
        Rat cr = v[0] * dir[1] - v[1] * dir[0];
        if (cr == 0)
            throw std::invalid_argument("boundary_ma_tropical: radial edge at vertex");
        Rat term = df(v, dir) / cr;
        if (cr > 0) { plus_term = term; have_plus = true; }
        else { minus_term = term; have_minus = true; }
    }
    if (!have_plus || !have_minus)
        throw std::invalid_argument("boundary_ma_tropical: degenerate vertex");
    return plus_term - minus_term;
}

// Smooth density of the tropical operator in its x' chart, for polynomial f,
// evaluated just off the vertex on the branch of the given sign.
inline double boundary_ma_tropical_smooth(const Polytope& p, const Poly& f, int vid,
                                          double xprime)
{
    auto inc = detail::incident_facets(p, vid);
    const RatVec& v = p.vertices[vid];
    double vn = std::sqrt(to_double(dot(v, v)));
    for (int fi : inc) {
        const auto& fc = p.facets[fi];
        int other = fc.vertex_ids[0] == vid ? fc.vertex_ids[1] : fc.vertex_ids[0];
        RatVec dir = vsub(p.vertices[other], v);
        double cr = to_double(Rat(v[0] * dir[1] - v[1] * dir[0]));
        double d2 = cr / vn;  // rotated second component of dir
        if ((xprime > 0) != (d2 > 0)) continue;
        double s = xprime / d2;
        std::vector<double> x{to_double(v[0]) + s * to_double(dir[0]),
                              to_double(v[1]) + s * to_double(dir[1])};
        // F''(x') = dir^T Hf dir / d2^2; density = F''/a
        double h = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                h += to_double(f.derivative(i).derivative(j).eval_d(x)) * to_double(dir[i]) *
                     to_double(dir[j]);
        return h / (d2 * d2 * vn);
    }
    throw std::invalid_argument("boundary_ma_tropical_smooth: no branch for this sign");
}

}  // namespace svx
