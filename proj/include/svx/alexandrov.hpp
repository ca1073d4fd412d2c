#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "mixdisc.hpp"
#include "poly.hpp"

namespace svx {

// 1-homogeneous function on R^n with analytic first and second derivatives,
// evaluated at unit vectors.
struct HomFun {
    std::function<double(const Eigen::VectorXd&)> val;
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> grad;
    std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hess;
};

// h(x) = sum_i c_i sqrt(x^T Q_i x), c_i > 0, Q_i strictly PSD.
struct SmoothSupport {
    int n = 0;
    std::vector<std::pair<double, Eigen::MatrixXd>> terms;

    double value(const Eigen::VectorXd& x) const
    {
        double s = 0;
        for (const auto& [c, q] : terms) s += c * std::sqrt(x.dot(q * x));
        return s;
    }

    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const
    {
        Eigen::VectorXd g = Eigen::VectorXd::Zero(n);
        for (const auto& [c, q] : terms) {
            Eigen::VectorXd qx = q * x;
            g += (c / std::sqrt(x.dot(qx))) * qx;
        }
        return g;
    }

    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const
    {
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
        for (const auto& [c, q] : terms) {
            Eigen::VectorXd qx = q * x;
            double r = std::sqrt(x.dot(qx));
            h += (c / r) * q - (c / (r * r * r)) * (qx * qx.transpose());
        }
        return h;
    }

    HomFun fn() const
    {
        return {[s = *this](const Eigen::VectorXd& x) { return s.value(x); },
                [s = *this](const Eigen::VectorXd& x) { return s.gradient(x); },
                [s = *this](const Eigen::VectorXd& x) { return s.hessian(x); }};
    }
};

inline SmoothSupport ellipsoid_support(const Eigen::MatrixXd& q, double scale = 1.0)
{
    int n = static_cast<int>(q.rows());
    if (scale <= 0) throw std::invalid_argument("ellipsoid_support: scale must be positive");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(q);
    if (es.eigenvalues()(0) <= 0)
        throw std::invalid_argument("ellipsoid_support: Q not strictly PSD");
    return {n, {{scale, q}}};
}

inline SmoothSupport round_support(int n, double radius = 1.0)
{
    return ellipsoid_support(Eigen::MatrixXd::Identity(n, n), radius);
}

inline SmoothSupport support_combination(const std::vector<std::pair<double, SmoothSupport>>& parts)
{
    if (parts.empty()) throw std::invalid_argument("support_combination: empty");
    SmoothSupport s{parts[0].second.n, {}};
    for (const auto& [c, p] : parts) {
        if (c <= 0) throw std::invalid_argument("support_combination: coefficients must be positive");
        if (p.n != s.n) throw std::invalid_argument("support_combination: dimension mismatch");
        for (const auto& [ci, qi] : p.terms) s.terms.emplace_back(c * ci, qi);
    }
    return s;
}

inline Eigen::MatrixXd to_eigen(const SymMatrix<double>& m)
{
    Eigen::MatrixXd e(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) e(i, j) = m.at(i, j);
    return e;
}

// u(x) = |x|^{1-l} p(x) with p a harmonic homogeneous polynomial of degree l.
// Derivatives below are the closed forms at |x| = 1.
struct BasisFunction {
    int n = 0;
    int degree = 0;
    Poly p;
    std::vector<Poly> dp;
    std::vector<std::vector<Poly>> d2p;

    double value(const Eigen::VectorXd& x) const { return p.eval_d(std::vector<double>(x.data(), x.data() + n)); }

    Eigen::VectorXd gradient(const Eigen::VectorXd& x) const
    {
        std::vector<double> xs(x.data(), x.data() + n);
        double a = 1.0 - degree;
        Eigen::VectorXd g = (a * p.eval_d(xs)) * x;
        for (int i = 0; i < n; ++i) g(i) += dp[i].eval_d(xs);
        return g;
    }

    Eigen::MatrixXd hessian(const Eigen::VectorXd& x) const
    {
        std::vector<double> xs(x.data(), x.data() + n);
        double a = 1.0 - degree;
        double pv = p.eval_d(xs);
        Eigen::VectorXd gp(n);
        for (int i = 0; i < n; ++i) gp(i) = dp[i].eval_d(xs);
        Eigen::MatrixXd h = (a * (a - 2) * pv) * (x * x.transpose());
        h += a * (x * gp.transpose() + gp * x.transpose());
        h += (a * pv) * Eigen::MatrixXd::Identity(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) h(i, j) += d2p[i][j].eval_d(xs);
        return h;
    }

    HomFun fn() const
    {
        return {[s = *this](const Eigen::VectorXd& x) { return s.value(x); },
                [s = *this](const Eigen::VectorXd& x) { return s.gradient(x); },
                [s = *this](const Eigen::VectorXd& x) { return s.hessian(x); }};
    }
};

struct FunctionBasis {
    int n = 0;
    std::vector<BasisFunction> funs;
};

namespace detail {

inline std::vector<std::vector<int>> monomials_of_degree(int n, int d)
{
    std::vector<std::vector<int>> out;
    std::vector<int> e(n, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == n - 1) {
            e[i] = rem;
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            e[i] = k;
            rec(i + 1, rem - k);
        }
    };
    rec(0, d);
    return out;
}

}  // namespace detail

// Harmonic homogeneous polynomials of degree l: exact nullspace of the
// Laplacian on the monomial space.
inline std::vector<Poly> harmonic_polynomials(int n, int l)
{
    auto mons = detail::monomials_of_degree(n, l);
    if (l < 2) {
        std::vector<Poly> out;
        for (const auto& e : mons) out.push_back(Poly::monomial(n, e, Rat(1)));
        return out;
    }
    auto lower = detail::monomials_of_degree(n, l - 2);
    auto index_of = [&](const std::vector<int>& e) {
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (lower[i] == e) return static_cast<int>(i);
        throw std::logic_error("harmonic_polynomials: monomial index");
    };
    RatMat lap(static_cast<int>(lower.size()), static_cast<int>(mons.size()));
    for (std::size_t j = 0; j < mons.size(); ++j)
        for (int i = 0; i < n; ++i) {
            int a = mons[j][i];
            if (a < 2) continue;
            auto e = mons[j];
            e[i] -= 2;
            lap(index_of(e), static_cast<int>(j)) += Rat(Int(a) * (a - 1));
        }
    std::vector<Poly> out;
    for (const auto& v : nullspace(lap)) {
        Poly p = Poly::constant(n, 0);
        for (std::size_t j = 0; j < mons.size(); ++j)
            if (v[j] != 0) p = p + Poly::monomial(n, mons[j], v[j]);
        out.push_back(p);
    }
    return out;
}

inline FunctionBasis harmonic_basis(int n, int max_degree)
{
    FunctionBasis b{n, {}};
    for (int l = 0; l <= max_degree; ++l)
        for (const auto& p : harmonic_polynomials(n, l)) {
            BasisFunction f;
            f.n = n;
            f.degree = l;
            f.p = p;
            for (int i = 0; i < n; ++i) f.dp.push_back(p.derivative(i));
            for (int i = 0; i < n; ++i) {
                f.d2p.emplace_back();
                for (int j = 0; j < n; ++j) f.d2p.back().push_back(f.dp[i].derivative(j));
            }
            b.funs.push_back(std::move(f));
        }
    return b;
}

// Quadrature grid on S^{n-1}: subdivided icosahedron with per-triangle
// centroid nodes and spherical-excess weights (n = 3), uniform trapezoid
// rule (n = 2). h is the largest triangle edge arc (resp. circle step).
struct SphereGrid {
    int n = 0;
    int level = 0;
    double h = 0;
    std::vector<Eigen::VectorXd> nodes;
    std::vector<double> weights;
    std::vector<Eigen::MatrixXd> frames;  // orthonormal bases of node^perp

    double total_weight() const
    {
        double s = 0;
        for (double w : weights) s += w;
        return s;
    }
};

inline Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& x)
{
    int n = static_cast<int>(x.size());
    if (n == 2) {
        Eigen::MatrixXd f(2, 1);
        f(0, 0) = -x(1);
        f(1, 0) = x(0);
        return f;
    }
    if (n != 3) throw std::invalid_argument("tangent_frame: n must be 2 or 3");
    int k = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(x(i)) < std::abs(x(k))) k = i;
    Eigen::Vector3d e = Eigen::Vector3d::Zero();
    e(k) = 1;
    Eigen::Vector3d x3 = x;
    Eigen::Vector3d t1 = (e - e.dot(x3) * x3).normalized();
    Eigen::Vector3d t2 = x3.cross(t1);
    Eigen::MatrixXd f(3, 2);
    f.col(0) = t1;
    f.col(1) = t2;
    return f;
}

inline SphereGrid circle_grid(int m)
{
    if (m < 3) throw std::invalid_argument("circle_grid: need at least 3 nodes");
    SphereGrid g;
    g.n = 2;
    g.level = m;
    g.h = 2 * M_PI / m;
    for (int k = 0; k < m; ++k) {
        double t = 2 * M_PI * k / m;
        Eigen::VectorXd x(2);
        x << std::cos(t), std::sin(t);
        g.nodes.push_back(x);
        g.weights.push_back(g.h);
        g.frames.push_back(tangent_frame(x));
    }
    return g;
}

inline SphereGrid sphere_grid(int level)
{
    std::vector<Eigen::Vector3d> verts;
    double phi = (1 + std::sqrt(5.0)) / 2;
    for (double s1 : {-1.0, 1.0})
        for (double s2 : {-1.0, 1.0}) {
            verts.emplace_back(Eigen::Vector3d(s1, s2 * phi, 0).normalized());
            verts.emplace_back(Eigen::Vector3d(0, s1, s2 * phi).normalized());
            verts.emplace_back(Eigen::Vector3d(s2 * phi, 0, s1).normalized());
        }
    double edge2 = 1e30;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            edge2 = std::min(edge2, (verts[i] - verts[j]).squaredNorm());
    std::vector<std::array<Eigen::Vector3d, 3>> tris;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            for (std::size_t k = j + 1; k < verts.size(); ++k)
                if ((verts[i] - verts[j]).squaredNorm() < 1.5 * edge2 &&
                    (verts[j] - verts[k]).squaredNorm() < 1.5 * edge2 &&
                    (verts[i] - verts[k]).squaredNorm() < 1.5 * edge2)
                    tris.push_back({verts[i], verts[j], verts[k]});
    for (int r = 0; r < level; ++r) {
        std::vector<std::array<Eigen::Vector3d, 3>> next;
        for (const auto& [a, b, c] : tris) {
            Eigen::Vector3d ab = (a + b).normalized();
            Eigen::Vector3d bc = (b + c).normalized();
            Eigen::Vector3d ca = (c + a).normalized();
            next.push_back({a, ab, ca});
            next.push_back({b, bc, ab});
            next.push_back({c, ca, bc});
            next.push_back({ab, bc, ca});
        }
        tris = std::move(next);
    }
    SphereGrid g;
    g.n = 3;
    g.level = level;
    for (const auto& [a, b, c] : tris) {
        g.nodes.push_back(((a + b + c) / 3).normalized());
        double excess = 2 * std::atan2(std::abs(a.dot(b.cross(c))),
                                       1 + a.dot(b) + b.dot(c) + c.dot(a));
        g.weights.push_back(excess);
        g.frames.push_back(tangent_frame(g.nodes.back()));
        for (auto [u, v] : {std::pair{a, b}, {b, c}, {c, a}})
            g.h = std::max(g.h, std::acos(std::min(1.0, u.dot(v))));
    }
    return g;
}

inline Eigen::MatrixXd tangential_hessian(const HomFun& f, const Eigen::VectorXd& x)
{
    Eigen::MatrixXd fr = tangent_frame(x);
    return fr.transpose() * f.hess(x) * fr;
}

namespace detail {

inline SymMatrix<double> to_sym(const Eigen::MatrixXd& m)
{
    int k = static_cast<int>(m.rows());
    SymMatrix<double> s(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) s.at(i, j) = 0.5 * (m(i, j) + m(j, i));
    return s;
}

inline double apply_tangential(const Eigen::MatrixXd& hv,
                               const std::vector<Eigen::MatrixXd>& hphis, int n)
{
    std::vector<SymMatrix<double>> args{to_sym(hv)};
    for (const auto& h : hphis) args.push_back(to_sym(h));
    return to_double(Rat(factorial(n - 1))) * mixed_discriminant(args);
}

}  // namespace detail

// A(v)(x) = (n-1)! * D(H_v(x), H_{phi_3}(x), .., H_{phi_n}(x)) on tangential
// Hessians. The constant is calibrated from the round case: with all inputs
// |x| this gives Q(|x|,|x|) = (n-1)! * area(S^{n-1}) = n! * vol(B_1).
inline double alexandrov_apply(const HomFun& v, const std::vector<HomFun>& phis,
                               const Eigen::VectorXd& x)
{
    int n = static_cast<int>(x.size());
    if (static_cast<int>(phis.size()) != n - 2)
        throw std::invalid_argument("alexandrov_apply: need n-2 reference supports");
    std::vector<Eigen::MatrixXd> hp;
    for (const auto& p : phis) hp.push_back(tangential_hessian(p, x));
    return detail::apply_tangential(tangential_hessian(v, x), hp, n);
}

// Q(u,v) = <u, A(v)> by quadrature, assembled symmetrically: the continuum
// form is symmetric, and the symmetrized rule preserves that exactly while
// the one-sided quadrature differs by O(h^2) (see qform_asymmetry).
inline double qform(const HomFun& u, const HomFun& v, const std::vector<HomFun>& phis,
                    const SphereGrid& g)
{
    double s = 0;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const auto& x = g.nodes[k];
        double av = alexandrov_apply(v, phis, x);
        double au = alexandrov_apply(u, phis, x);
        s += 0.5 * g.weights[k] * (u.val(x) * av + v.val(x) * au);
    }
    return s;
}

inline double qform_asymmetry(const HomFun& u, const HomFun& v,
                              const std::vector<HomFun>& phis, const SphereGrid& g)
{
    double s = 0;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const auto& x = g.nodes[k];
        s += g.weights[k] * (u.val(x) * alexandrov_apply(v, phis, x) -
                             v.val(x) * alexandrov_apply(u, phis, x));
    }
    return std::abs(s);
}

struct QGram {
    Eigen::MatrixXd q;        // symmetrized Gram
    double asymmetry = 0;     // max |one-sided(i,j) - one-sided(j,i)|
};

// Caches basis values and tangential Hessians on a grid so that Gram
// matrices for many reference supports reuse the expensive part.
struct GramAssembler {
    const SphereGrid& grid;
    std::vector<double> vals;                 // [fun * N + node]
    std::vector<Eigen::MatrixXd> thess;       // [fun * N + node]
    int nfuns = 0;

    GramAssembler(const FunctionBasis& basis, const SphereGrid& g) : grid(g)
    {
        if (basis.n != g.n) throw std::invalid_argument("GramAssembler: dimension mismatch");
        nfuns = static_cast<int>(basis.funs.size());
        std::size_t nn = g.nodes.size();
        vals.resize(nfuns * nn);
        thess.resize(nfuns * nn);
        for (int i = 0; i < nfuns; ++i) {
            auto f = basis.funs[i].fn();
            for (std::size_t k = 0; k < nn; ++k) {
                vals[i * nn + k] = f.val(g.nodes[k]);
                thess[i * nn + k] =
                    grid.frames[k].transpose() * f.hess(g.nodes[k]) * grid.frames[k];
            }
        }
    }

    QGram assemble(const std::vector<HomFun>& phis) const
    {
        int n = grid.n;
        if (static_cast<int>(phis.size()) != n - 2)
            throw std::invalid_argument("GramAssembler: need n-2 reference supports");
        std::size_t nn = grid.nodes.size();
        std::vector<std::vector<Eigen::MatrixXd>> hp(nn);
        for (std::size_t k = 0; k < nn; ++k)
            for (const auto& p : phis)
                hp[k].push_back(grid.frames[k].transpose() * p.hess(grid.nodes[k]) *
                                grid.frames[k]);
        Eigen::MatrixXd a(nn, nfuns);
        for (int j = 0; j < nfuns; ++j)
            for (std::size_t k = 0; k < nn; ++k)
                a(k, j) = detail::apply_tangential(thess[j * nn + k], hp[k], n);
        Eigen::MatrixXd uw(nfuns, nn);
        for (int i = 0; i < nfuns; ++i)
            for (std::size_t k = 0; k < nn; ++k) uw(i, k) = vals[i * nn + k] * grid.weights[k];
        Eigen::MatrixXd one_sided = uw * a;
        QGram r;
        r.q = 0.5 * (one_sided + one_sided.transpose());
        r.asymmetry = (one_sided - one_sided.transpose()).cwiseAbs().maxCoeff();
        return r;
    }
};

inline QGram qform_gram(const FunctionBasis& basis, const std::vector<HomFun>& phis,
                        const SphereGrid& g)
{
    return GramAssembler(basis, g).assemble(phis);
}

inline SignatureCounts gram_signature(const QGram& gram, double tol)
{
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram.q);
    std::vector<double> eigs(es.eigenvalues().data(),
                             es.eigenvalues().data() + es.eigenvalues().size());
    return signature_counts(eigs, tol);
}

inline bool af_check(const SmoothSupport& phi, const SmoothSupport& psi,
                     const std::vector<HomFun>& phis, const SphereGrid& g, double tol)
{
    double qps = qform(phi.fn(), psi.fn(), phis, g);
    double qpp = qform(phi.fn(), phi.fn(), phis, g);
    double qss = qform(psi.fn(), psi.fn(), phis, g);
    double scale = std::max({qps * qps, std::abs(qpp * qss), 1.0});
    if (qps * qps < qpp * qss - tol * scale) return false;
    // for convex pairs the stronger direction Q(phi,psi) >= sqrt(Q(phi,phi)Q(psi,psi))
    double root = std::sqrt(std::max(qpp, 0.0) * std::max(qss, 0.0));
    return qps >= root - tol * std::max(std::abs(root), 1.0);
}

enum class MuKind { smooth };

// Q(u,u) = int u^2 d#mu ^ dd#mu ^ Omega  -  int du ^ d#u ^ d#mu ^ Omega
// over {mu = 1} with mu = |x|: the first density is D(I, H_phis) and the
// second is D(g g^T, H_phis) with g the tangential gradient of u.
inline std::pair<double, double> poincare_check(const HomFun& u, const std::vector<HomFun>& phis,
                                                const SphereGrid& g, MuKind kind,
                                                double tol = 1e-6)
{
    if (kind != MuKind::smooth) throw std::invalid_argument("poincare_check: unsupported mu");
    int n = g.n;
    double lhs = 0, rhs = 0;
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n - 1, n - 1);
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const auto& x = g.nodes[k];
        std::vector<Eigen::MatrixXd> hp;
        for (const auto& p : phis)
            hp.push_back(g.frames[k].transpose() * p.hess(x) * g.frames[k]);
        double uv = u.val(x);
        lhs += g.weights[k] * uv * uv * detail::apply_tangential(id, hp, n);
        Eigen::VectorXd gt = g.frames[k].transpose() * u.grad(x);
        rhs += g.weights[k] * detail::apply_tangential(gt * gt.transpose(), hp, n);
    }
    double q = qform(u, u, phis, g);
    if (std::abs(q - (lhs - rhs)) > tol * std::max({std::abs(q), std::abs(lhs), 1.0}))
        throw std::runtime_error("poincare_check: identity violated");
    return {lhs, rhs};
}

// Periodic second-difference Rayleigh quotient on the circle grid.
inline double fd_rayleigh(const std::vector<double>& u)
{
    int m = static_cast<int>(u.size());
    double h = 2 * M_PI / m;
    double num = 0, den = 0;
    for (int k = 0; k < m; ++k) {
        double d = (u[(k + 1) % m] - u[k]) / h;
        num += d * d * h;
        den += u[k] * u[k] * h;
    }
    return num / den;
}

// Smallest Rayleigh quotient of -u'' over mean-zero functions on the circle;
// the continuum value is 1 (u = cos theta).
inline std::pair<double, double> wirtinger_check(int m)
{
    double h = 2 * M_PI / m;
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(m, m);
    for (int k = 0; k < m; ++k) {
        lap(k, k) = 2 / (h * h);
        lap(k, (k + 1) % m) -= 1 / (h * h);
        lap(k, (k + m - 1) % m) -= 1 / (h * h);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
    return {es.eigenvalues()(1), 1.0};
}

}  // namespace svx
