#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "lp.hpp"
#include "rational.hpp"

namespace svx {

// Facet {x : normal.x <= offset} with a primitive integer outward normal.
struct Facet {
    RatVec normal;
    Rat offset;
    std::vector<int> vertex_ids;
};

// Rational V-representation convex body. Vertices are exactly the extreme
// points; facets are cached for full-dimensional bodies only (lower-dimensional
// bodies carry an empty facet list). aff_dim is -1 for the empty body.
struct Polytope {
    int n = 0;
    std::vector<RatVec> vertices;
    std::vector<Facet> facets;
    int aff_dim = -1;

    bool empty() const { return vertices.empty(); }
    bool full_dim() const { return !vertices.empty() && aff_dim == n; }
};

inline bool operator==(const Polytope& p, const Polytope& q)
{
    return p.n == q.n && p.vertices == q.vertices;
}

// Atomic measure with exact rational atom locations and masses.
struct AtomicMeasure {
    std::vector<std::pair<RatVec, Rat>> atoms;

    void add(const RatVec& pt, const Rat& mass)
    {
        if (mass == 0) return;
        for (auto& [p, m] : atoms)
            if (p == pt) { m += mass; return; }
        atoms.emplace_back(pt, mass);
    }

    Rat total() const
    {
        Rat s = 0;
        for (const auto& [p, m] : atoms) s += m;
        return s;
    }
};

// Surface-measure atom: primitive integer direction u with rational scale q.
// The geometric atom sits at u/|u| with mass q*|u|, so q*u is exact and the
// zero-barycenter identity sum q*u = 0 holds in rational arithmetic.
struct DirAtom {
    RatVec dir;
    Rat scale;
};

struct SurfaceMeasure {
    int n = 0;
    std::vector<DirAtom> atoms;
};

namespace detail {

inline std::vector<RatVec> dedupe_points(std::vector<RatVec> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Pre-filter: drops points that a float LP places inside the hull of the
// others (sup-norm distance to that hull below threshold). A point is a vertex
// exactly when that distance is positive, and for the small-integer data
// handled here vertex separations stay far above the float noise floor.
// Doubtful LP outcomes keep the point; the exact sieve below discards
// non-vertices anyway, so this only affects speed.
inline std::vector<RatVec> prune_interior(const std::vector<RatVec>& pts, int n)
{
    if (pts.size() <= 24) return pts;
    std::size_t m = pts.size();
    std::vector<std::vector<double>> d(m, std::vector<double>(n));
    double scale = 1.0;
    for (std::size_t i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            d[i][j] = to_double(pts[i][j]);
            scale = std::max(scale, std::abs(d[i][j]));
        }
    // Seed the reference set with directional maxima (certain hull points),
    // then test the remaining candidates against the growing reference set.
    std::vector<bool> seed(m, false);
    std::mt19937 rng(12345);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> dir(n);
    for (int t = 0; t < 2 * n + 100; ++t) {
        if (t < 2 * n) {
            std::fill(dir.begin(), dir.end(), 0.0);
            dir[t / 2] = t % 2 ? -1.0 : 1.0;
        } else {
            for (auto& x : dir) x = gauss(rng);
        }
        std::size_t best = 0;
        double bv = -1e300;
        for (std::size_t i = 0; i < m; ++i) {
            double v = 0.0;
            for (int j = 0; j < n; ++j) v += dir[j] * d[i][j];
            if (v > bv) { bv = v; best = i; }
        }
        seed[best] = true;
    }
    std::vector<std::size_t> ref;
    for (std::size_t i = 0; i < m; ++i)
        if (seed[i]) ref.push_back(i);
    std::vector<RatVec> kept;
    for (std::size_t i = 0; i < m; ++i)
        if (seed[i]) kept.push_back(pts[i]);
    for (std::size_t k = 0; k < m; ++k) {
        if (seed[k]) continue;
        // variables: lambda over ref, then r; minimize the sup-norm gap r
        std::size_t nv = ref.size() + 1;
        std::vector<std::vector<double>> A;
        std::vector<double> b, c(nv, 0.0);
        c[nv - 1] = -1.0;
        for (int j = 0; j < n; ++j) {
            std::vector<double> r1(nv, 0.0), r2(nv, 0.0);
            for (std::size_t s = 0; s < ref.size(); ++s) {
                r1[s] = d[ref[s]][j];
                r2[s] = -d[ref[s]][j];
            }
            r1[nv - 1] = -1.0;
            r2[nv - 1] = -1.0;
            A.push_back(std::move(r1));
            b.push_back(d[k][j]);
            A.push_back(std::move(r2));
            b.push_back(-d[k][j]);
        }
        std::vector<double> e1(nv, 1.0), e2(nv, -1.0);
        e1[nv - 1] = 0.0;
        e2[nv - 1] = 0.0;
        A.push_back(std::move(e1));
        b.push_back(1.0);
        A.push_back(std::move(e2));
        b.push_back(-1.0);
        for (std::size_t s = 0; s < ref.size(); ++s) {
            std::vector<double> row(nv, 0.0);
            row[s] = -1.0;
            A.push_back(std::move(row));
            b.push_back(0.0);
        }
        auto r = lp_maximize(A, b, c);
        if (r.status == LpStatus::Optimal && -r.value < 1e-8 * scale) continue;
        ref.push_back(k);
        kept.push_back(pts[k]);
    }
    return kept;
}

inline double small_det(const double* a, int n)
{
    if (n == 1) return a[0];
    if (n == 2) return a[0] * a[3] - a[1] * a[2];
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
}

// Greedy maximal affinely independent subset: indices i with p_i - p_0
// spanning the affine hull direction space.
inline std::vector<int> affine_basis(const std::vector<RatVec>& pts)
{
    std::vector<int> idx{0};
    std::vector<RatVec> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        rows.push_back(vsub(pts[i], pts[0]));
        if (rank_of_rows(rows) == static_cast<int>(rows.size()))
            idx.push_back(static_cast<int>(i));
        else
            rows.pop_back();
    }
    return idx;
}

Polytope full_dim_hull(int n, std::vector<RatVec> pts);

}  // namespace detail

Polytope convex_hull(int n, const std::vector<RatVec>& points);

namespace detail {

// Hyperplane-sieve hull for affinely full-dimensional point sets: every facet
// hyperplane passes through n affinely independent input points, so
// enumerating those, deduplicating, and side-checking finds all facets; the
// vertices are the points whose incident facet normals span the space.
inline Polytope full_dim_hull(int n, std::vector<RatVec> pts)
{
    Polytope p;
    p.n = n;
    p.aff_dim = n;
    if (n == 1) {
        RatVec lo = pts.front(), hi = pts.back();
        p.vertices = {lo, hi};
        p.facets.push_back({{Rat(-1)}, -lo[0], {0}});
        p.facets.push_back({{Rat(1)}, hi[0], {1}});
        return p;
    }
    pts = prune_interior(pts, n);
    int m = static_cast<int>(pts.size());
    std::vector<std::vector<double>> dp(m, std::vector<double>(n));
    double scale = 1.0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            dp[i][j] = to_double(pts[i][j]);
            scale = std::max(scale, std::abs(dp[i][j]));
        }
    std::map<std::pair<RatVec, Rat>, std::vector<int>> planes;
    std::vector<int> comb(n);
    for (int i = 0; i < n; ++i) comb[i] = i;
    auto advance = [&]() {
        int i = n - 1;
        while (i >= 0 && comb[i] == m - n + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    // Float prescreen: the span hyperplane of a subset is computed in doubles
    // (normal by cofactor expansion) and subsets that clearly cut the point set
    // on both sides are skipped; doubtful subsets fall through to the exact
    // rational path.
    auto float_reject = [&]() {
        double normal[4];
        double nrm = 0.0;
        for (int j = 0; j < n; ++j) {
            double minor[9];
            for (int i = 1; i < n; ++i) {
                int col = 0;
                for (int k = 0; k < n; ++k) {
                    if (k == j) continue;
                    minor[(i - 1) * (n - 1) + col] = dp[comb[i]][k] - dp[comb[0]][k];
                    ++col;
                }
            }
            normal[j] = (j % 2 ? -1.0 : 1.0) * small_det(minor, n - 1);
            nrm = std::max(nrm, std::abs(normal[j]));
        }
        if (nrm < 1e-7 * scale) return false;  // possibly degenerate: go exact
        double a = 0.0;
        for (int j = 0; j < n; ++j) a += normal[j] * dp[comb[0]][j];
        double thresh = 1e-7 * scale * nrm;
        bool above = false, below = false;
        for (int i = 0; i < m && !(above && below); ++i) {
            double v = 0.0;
            for (int j = 0; j < n; ++j) v += normal[j] * dp[i][j];
            if (v > a + thresh) above = true;
            if (v < a - thresh) below = true;
        }
        return above && below;
    };
    do {
        if (n > 1 && float_reject()) continue;
        std::vector<RatVec> rows;
        for (int i = 1; i < n; ++i) rows.push_back(vsub(pts[comb[i]], pts[comb[0]]));
        auto ns = nullspace(RatMat::from_rows(rows));
        if (ns.size() != 1) continue;
        RatVec u = primitive_direction(ns[0]);
        Rat a = dot(u, pts[comb[0]]);
        for (int sgn = 0; sgn < 2; ++sgn) {
            if (sgn) {
                for (auto& x : u) x = -x;
                a = -a;
            }
            auto key = std::make_pair(u, a);
            if (planes.count(key)) continue;
            bool supporting = true;
            std::vector<int> contact;
            for (int i = 0; i < m; ++i) {
                Rat d = dot(u, pts[i]);
                if (d > a) { supporting = false; break; }
                if (d == a) contact.push_back(i);
            }
            if (supporting) planes.emplace(key, std::move(contact));
        }
    } while (advance());
    // facets = supporting hyperplanes whose contact set is (n-1)-dimensional
    std::vector<std::pair<std::pair<RatVec, Rat>, std::vector<int>>> facets;
    std::vector<std::vector<int>> incident(m);
    for (auto& [key, contact] : planes) {
        std::vector<RatVec> rows;
        for (std::size_t i = 1; i < contact.size(); ++i)
            rows.push_back(vsub(pts[contact[i]], pts[contact[0]]));
        if (rank_of_rows(rows) != n - 1) continue;
        int fid = static_cast<int>(facets.size());
        for (int i : contact) incident[i].push_back(fid);
        facets.emplace_back(key, contact);
    }
    // vertices = contact points whose incident normals span R^n
    std::vector<int> vid(m, -1);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(incident[i].size()) < n) continue;
        std::vector<RatVec> normals;
        for (int f : incident[i]) normals.push_back(facets[f].first.first);
        if (rank_of_rows(normals) == n) {
            vid[i] = static_cast<int>(p.vertices.size());
            p.vertices.push_back(pts[i]);
        }
    }
    for (auto& [key, contact] : facets) {
        Facet f;
        f.normal = key.first;
        f.offset = key.second;
        for (int i : contact)
            if (vid[i] >= 0) f.vertex_ids.push_back(vid[i]);
        p.facets.push_back(std::move(f));
    }
    return p;
}

}  // namespace detail

inline Polytope convex_hull(int n, const std::vector<RatVec>& points)
{
    if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
    for (const auto& pt : points)
        if (static_cast<int>(pt.size()) != n)
            throw std::invalid_argument("convex_hull: dimension mismatch");
    auto pts = detail::dedupe_points(points);
    std::vector<RatVec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vsub(pts[i], pts[0]));
    int d = rank_of_rows(diffs);
    if (d == 0) {
        Polytope p;
        p.n = n;
        p.aff_dim = 0;
        p.vertices = {pts[0]};
        return p;
    }
    if (d == n) return detail::full_dim_hull(n, std::move(pts));
    // Lower-dimensional: hull in affine coordinates, mapped back exactly.
    auto bidx = detail::affine_basis(pts);
    std::vector<RatVec> basis;
    for (std::size_t i = 1; i < bidx.size(); ++i) basis.push_back(vsub(pts[bidx[i]], pts[0]));
    RatMat bt(n, d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) bt(i, j) = basis[j][i];
    std::vector<RatVec> coords;
    for (const auto& pt : pts) {
        auto c = solve(bt, vsub(pt, pts[0]));
        coords.push_back(*c);
    }
    Polytope inner = detail::full_dim_hull(d, detail::dedupe_points(coords));
    Polytope p;
    p.n = n;
    p.aff_dim = d;
    for (const auto& c : inner.vertices) {
        RatVec v = pts[0];
        for (int j = 0; j < d; ++j) v = vadd(v, vscale(c[j], basis[j]));
        p.vertices.push_back(std::move(v));
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    return p;
}

// Exact n-volume by the divergence theorem: each facet contributes
// offset * vol_{n-1}(projection dropping coordinate j) / (n * |u_j|), where j
// is any coordinate with u_j != 0. Lower-dimensional bodies have volume 0.
inline Rat volume(const Polytope& p)
{
    if (p.aff_dim < p.n) return 0;
    if (p.n == 1) return p.vertices.back()[0] - p.vertices.front()[0];
    Rat total = 0;
    for (const auto& f : p.facets) {
        int j = 0;
        for (int k = 1; k < p.n; ++k)
            if (rat_abs(f.normal[k]) > rat_abs(f.normal[j])) j = k;
        std::vector<RatVec> proj;
        for (int v : f.vertex_ids) {
            RatVec q;
            for (int k = 0; k < p.n; ++k)
                if (k != j) q.push_back(p.vertices[v][k]);
            proj.push_back(std::move(q));
        }
        Rat fv = volume(convex_hull(p.n - 1, proj));
        total += f.offset * fv / rat_abs(f.normal[j]);
    }
    return total / p.n;
}

inline Polytope minkowski_sum(const Polytope& p, const Polytope& q)
{
    if (p.n != q.n) throw std::invalid_argument("minkowski_sum: dimension mismatch");
    if (p.empty() || q.empty()) throw std::invalid_argument("minkowski_sum: empty body");
    std::vector<RatVec> sums;
    sums.reserve(p.vertices.size() * q.vertices.size());
    for (const auto& a : p.vertices)
        for (const auto& b : q.vertices) sums.push_back(vadd(a, b));
    return convex_hull(p.n, sums);
}

inline Polytope scale_body(const Rat& t, const Polytope& p)
{
    std::vector<RatVec> pts;
    for (const auto& v : p.vertices) pts.push_back(vscale(t, v));
    return convex_hull(p.n, pts);
}

inline Rat support_eval(const Polytope& p, const RatVec& x)
{
    if (p.empty()) throw std::invalid_argument("support_eval: empty body");
    Rat best = dot(p.vertices[0], x);
    for (const auto& v : p.vertices) best = std::max(best, dot(v, x));
    return best;
}

inline bool origin_interior(const Polytope& p)
{
    if (!p.full_dim()) return false;
    for (const auto& f : p.facets)
        if (f.offset <= 0) return false;
    return true;
}

// Gauge mu_P(x) = inf{t > 0 : x in tP} = max over facets of (u.x)/offset.
inline Rat gauge_eval(const Polytope& p, const RatVec& x)
{
    if (!origin_interior(p)) throw std::invalid_argument("gauge_eval: origin not interior");
    Rat best = 0;
    for (const auto& f : p.facets) best = std::max(best, dot(f.normal, x) / f.offset);
    return best;
}

inline Polytope polar(const Polytope& p)
{
    if (!origin_interior(p)) throw std::invalid_argument("polar: origin not interior");
    std::vector<RatVec> pts;
    for (const auto& f : p.facets) pts.push_back(vscale(Rat(1) / f.offset, f.normal));
    return convex_hull(p.n, pts);
}

inline bool contains_point(const Polytope& p, const RatVec& x)
{
    if (p.empty()) return false;
    if (p.full_dim()) {
        for (const auto& f : p.facets)
            if (dot(f.normal, x) > f.offset) return false;
        return true;
    }
    // Lower-dimensional: exact feasibility of x in conv(vertices).
    int m = static_cast<int>(p.vertices.size());
    std::vector<std::vector<Rat>> A;
    std::vector<Rat> b;
    for (int i = 0; i <= p.n; ++i) {
        std::vector<Rat> r1(m), r2(m);
        for (int k = 0; k < m; ++k) {
            Rat v = i < p.n ? p.vertices[k][i] : Rat(1);
            r1[k] = v;
            r2[k] = -v;
        }
        Rat rhs = i < p.n ? x[i] : Rat(1);
        A.push_back(std::move(r1));
        b.push_back(rhs);
        A.push_back(std::move(r2));
        b.push_back(-rhs);
    }
    for (int k = 0; k < m; ++k) {
        std::vector<Rat> row(m, Rat(0));
        row[k] = -1;
        A.push_back(std::move(row));
        b.push_back(Rat(0));
    }
    return lp_maximize(A, b, std::vector<Rat>(m, Rat(0))).status == LpStatus::Optimal;
}

inline bool contains_body(const Polytope& outer, const Polytope& inner)
{
    for (const auto& v : inner.vertices)
        if (!contains_point(outer, v)) return false;
    return true;
}

// Polarization: V(K_1..K_n) = (1/n!) sum_{S nonempty} (-1)^{n-|S|} vol(sum_S K_i).
inline Rat mixed_volume(const std::vector<Polytope>& ks)
{
    int n = static_cast<int>(ks.size());
    if (n == 0) return 1;
    for (const auto& k : ks)
        if (k.n != n) throw std::invalid_argument("mixed_volume: need n bodies in R^n");
    std::vector<Polytope> sums(std::size_t(1) << n);
    Rat total = 0;
    for (unsigned s = 1; s < (1u << n); ++s) {
        unsigned low = s & (0u - s);
        int i = 0;
        while (!((low >> i) & 1u)) ++i;
        sums[s] = (s == low) ? ks[i] : minkowski_sum(sums[s ^ low], ks[i]);
        Rat v = volume(sums[s]);
        if ((n - std::popcount(s)) % 2) v = -v;
        total += v;
    }
    return total / Rat(factorial(n));
}

inline SurfaceMeasure surface_area_measure(const Polytope& p)
{
    if (!p.full_dim()) throw std::invalid_argument("surface_area_measure: degenerate body");
    SurfaceMeasure sm;
    sm.n = p.n;
    if (p.n == 1) {
        sm.atoms.push_back({{Rat(1)}, Rat(1)});
        sm.atoms.push_back({{Rat(-1)}, Rat(1)});
        return sm;
    }
    for (const auto& f : p.facets) {
        int j = 0;
        for (int k = 1; k < p.n; ++k)
            if (rat_abs(f.normal[k]) > rat_abs(f.normal[j])) j = k;
        std::vector<RatVec> proj;
        for (int v : f.vertex_ids) {
            RatVec q;
            for (int k = 0; k < p.n; ++k)
                if (k != j) q.push_back(p.vertices[v][k]);
            proj.push_back(std::move(q));
        }
        Rat q = volume(convex_hull(p.n - 1, proj)) / rat_abs(f.normal[j]);
        sm.atoms.push_back({f.normal, q});
    }
    return sm;
}

inline RatVec surface_barycenter(const SurfaceMeasure& sm)
{
    RatVec b(sm.n, Rat(0));
    for (const auto& a : sm.atoms) b = vadd(b, vscale(a.scale, a.dir));
    return b;
}

// lhs = V(L, K[n-1]); rhs = (1/n) sum h_L(u) * scale over surface atoms of K.
// The two sides agree exactly.
inline std::pair<Rat, Rat> minkowski_identity_check(const Polytope& l, const Polytope& k)
{
    std::vector<Polytope> args{l};
    for (int i = 1; i < k.n; ++i) args.push_back(k);
    Rat lhs = mixed_volume(args);
    Rat rhs = 0;
    for (const auto& a : surface_area_measure(k).atoms) rhs += support_eval(l, a.dir) * a.scale;
    rhs /= k.n;
    return {lhs, rhs};
}

// H-representation intersection by vertex enumeration over n-subsets of the
// merged constraint lists. Returns the empty body when infeasible.
inline Polytope intersect(const Polytope& p, const Polytope& q)
{
    if (p.n != q.n) throw std::invalid_argument("intersect: dimension mismatch");
    if (!p.full_dim() || !q.full_dim())
        throw std::invalid_argument("intersect: needs full-dimensional bodies");
    int n = p.n;
    std::vector<std::pair<RatVec, Rat>> cons;
    for (const auto& f : p.facets) cons.emplace_back(f.normal, f.offset);
    for (const auto& f : q.facets) cons.emplace_back(f.normal, f.offset);
    int m = static_cast<int>(cons.size());
    std::vector<RatVec> cands;
    std::vector<int> comb(n);
    for (int i = 0; i < n; ++i) comb[i] = i;
    auto advance = [&]() {
        int i = n - 1;
        while (i >= 0 && comb[i] == m - n + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < n; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    do {
        RatMat a(n, n);
        RatVec b(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) a(i, j) = cons[comb[i]].first[j];
            b[i] = cons[comb[i]].second;
        }
        if (det(a) == 0) continue;
        auto x = solve(a, b);
        bool ok = true;
        for (const auto& [u, off] : cons)
            if (dot(u, *x) > off) { ok = false; break; }
        if (ok) cands.push_back(*x);
    } while (advance());
    if (cands.empty()) {
        Polytope e;
        e.n = n;
        return e;
    }
    return convex_hull(n, cands);
}

inline Polytope hull_of_union(const Polytope& p, const Polytope& q)
{
    std::vector<RatVec> pts = p.vertices;
    pts.insert(pts.end(), q.vertices.begin(), q.vertices.end());
    return convex_hull(p.n, pts);
}

inline bool union_convexity_check(const Polytope& p, const Polytope& q)
{
    return volume(hull_of_union(p, q)) == volume(p) + volume(q) - volume(intersect(p, q));
}

// Exact check of conv(P u Q) + (P n Q) = P + Q, plus the support-function
// identity h_union + h_inter = h_P + h_Q at random integer directions.
inline bool salee_check(const Polytope& p, const Polytope& q, unsigned seed = 1)
{
    if (!union_convexity_check(p, q))
        throw std::invalid_argument("salee_check: union is not convex");
    Polytope u = hull_of_union(p, q);
    Polytope i = intersect(p, q);
    if (i.empty()) throw std::invalid_argument("salee_check: empty intersection");
    if (!(minkowski_sum(u, i) == minkowski_sum(p, q))) return false;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 100; ++t) {
        RatVec x(p.n);
        for (auto& c : x) c = d(rng);
        if (support_eval(u, x) + support_eval(i, x) != support_eval(p, x) + support_eval(q, x))
            return false;
    }
    return true;
}

inline Polytope box_polytope(const RatVec& lo, const RatVec& hi)
{
    int n = static_cast<int>(lo.size());
    std::vector<RatVec> pts;
    for (unsigned s = 0; s < (1u << n); ++s) {
        RatVec v(n);
        for (int i = 0; i < n; ++i) v[i] = (s >> i) & 1u ? hi[i] : lo[i];
        pts.push_back(std::move(v));
    }
    return convex_hull(n, pts);
}

inline Polytope unit_cube(int n)
{
    return box_polytope(RatVec(n, Rat(0)), RatVec(n, Rat(1)));
}

inline Polytope random_lattice_polytope(int n, int npts, int range, std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(-range, range);
    for (;;) {
        std::vector<RatVec> pts;
        for (int i = 0; i < npts; ++i) {
            RatVec v(n);
            for (auto& c : v) c = d(rng);
            pts.push_back(std::move(v));
        }
        Polytope p = convex_hull(n, pts);
        if (p.full_dim()) return p;
    }
}

}  // namespace svx
