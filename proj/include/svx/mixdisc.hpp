#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "linalg.hpp"
#include "superform.hpp"

namespace svx {

// Symmetric matrix with entries of scalar type T (Rat or double).
template <class T>
struct SymMatrix {
    int n = 0;
    std::vector<T> a;  // row-major, symmetry enforced on set()

    SymMatrix() = default;
    explicit SymMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, T(0)) {}

    T& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

    void set(int i, int j, const T& v) { at(i, j) = v; at(j, i) = v; }

    static SymMatrix identity(int dim)
    {
        SymMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.at(i, i) = T(1);
        return m;
    }

    SymMatrix& operator+=(const SymMatrix& o)
    {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
        return *this;
    }

    friend SymMatrix operator*(const T& c, SymMatrix m)
    {
        for (auto& x : m.a) x *= c;
        return m;
    }
};

template <class T>
T det_generic(const SymMatrix<T>& m);

template <>
inline Rat det_generic<Rat>(const SymMatrix<Rat>& m)
{
    RatMat a(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) a(i, j) = m.at(i, j);
    return det(a);
}

template <>
inline double det_generic<double>(const SymMatrix<double>& m)
{
    Eigen::MatrixXd e(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) e(i, j) = m.at(i, j);
    return e.determinant();
}

// Polarization of the determinant:
// D = (1/n!) sum_{S nonempty} (-1)^{n-|S|} det(sum_{i in S} M_i).
template <class T>
T mixed_discriminant(const std::vector<SymMatrix<T>>& ms)
{
    int n = static_cast<int>(ms.size());
    if (n == 0) return T(1);
    for (const auto& m : ms)
        if (m.n != n) throw std::invalid_argument("mixed_discriminant: size mismatch");
    T total(0);
    for (unsigned s = 1; s < (1u << n); ++s) {
        SymMatrix<T> sum(n);
        for (int i = 0; i < n; ++i)
            if (s & (1u << i)) sum += ms[static_cast<std::size_t>(i)];
        T d = det_generic<T>(sum);
        if ((n - popcount(s)) % 2) d = -d;
        total += d;
    }
    Rat f(1, factorial(n));
    if constexpr (std::is_same_v<T, Rat>) return f * total;
    else return to_double(f) * total;
}

// (1,1)-superform sum a_{jk} dx_j ^ dxi_k of a symmetric rational matrix.
inline SuperForm matrix_to_form(const SymMatrix<Rat>& m)
{
    SuperForm f(m.n);
    for (int j = 0; j < m.n; ++j)
        for (int k = 0; k < m.n; ++k)
            if (m.at(j, k) != 0) f.add_term(1u << j, 1u << k, Poly::constant(m.n, m.at(j, k)));
    return f;
}

// Orthonormal basis of Sym(n) over doubles: E_ii and (E_ij + E_ji)/sqrt(2).
inline std::vector<SymMatrix<double>> sym_basis(int n)
{
    std::vector<SymMatrix<double>> b;
    for (int i = 0; i < n; ++i) {
        SymMatrix<double> m(n);
        m.at(i, i) = 1.0;
        b.push_back(m);
    }
    double r = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SymMatrix<double> m(n);
            m.set(i, j, r);
            b.push_back(m);
        }
    return b;
}

inline bool is_psd(const SymMatrix<double>& m, double tol = 1e-10)
{
    std::vector<std::vector<double>> d(m.n, std::vector<double>(m.n));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) d[i][j] = m.at(i, j);
    auto e = sym_eigenvalues(d);
    return e.empty() || e.front() >= -tol;
}

// Gram matrix of Q(B, B') = D(B, B', M_3..M_n) over the sym_basis.
inline std::vector<std::vector<double>> md_quadratic_form(
    const std::vector<SymMatrix<double>>& ms)
{
    int n = static_cast<int>(ms.size()) + 2;
    for (const auto& m : ms) {
        if (m.n != n) throw std::invalid_argument("md_quadratic_form: need n-2 matrices");
        if (!is_psd(m)) throw std::invalid_argument("md_quadratic_form: matrix not PSD");
    }
    auto basis = sym_basis(n);
    int d = static_cast<int>(basis.size());
    std::vector<std::vector<double>> g(d, std::vector<double>(d, 0.0));
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            std::vector<SymMatrix<double>> args;
            args.push_back(basis[i]);
            args.push_back(basis[j]);
            for (const auto& m : ms) args.push_back(m);
            double v = mixed_discriminant(args);
            g[i][j] = g[j][i] = v;
        }
    return g;
}

inline SignatureCounts lorentz_signature_check(const std::vector<std::vector<double>>& gram,
                                               double tol)
{
    return signature_counts(sym_eigenvalues(gram), tol);
}

struct AlexandrovLemmaResult {
    double value = 0.0;     // D(B, B, M_3..M_n) after projection
    double b_norm = 0.0;    // Frobenius norm of the projected B
    bool nonpositive = false;
    bool strictly_negative = false;
};

// Projects b onto {B : D(B, M_2, .., M_n) = 0} and evaluates
// D(B, B, M_3, .., M_n), which must be <= 0 with equality only at B = 0.
inline AlexandrovLemmaResult alexandrov_lemma_check(const SymMatrix<double>& b,
                                                    const std::vector<SymMatrix<double>>& ms,
                                                    double tol = 1e-9)
{
    int n = b.n;
    if (static_cast<int>(ms.size()) != n - 1)
        throw std::invalid_argument("alexandrov_lemma_check: need n-1 matrices");
    std::vector<SymMatrix<double>> tail(ms.begin() + 1, ms.end());
    auto lin = [&](const SymMatrix<double>& x) {
        std::vector<SymMatrix<double>> args{x};
        for (const auto& m : ms) args.push_back(m);
        return mixed_discriminant(args);
    };
    double lb = lin(b);
    double lm = lin(ms[0]);  // > 0 for strictly PSD inputs
    SymMatrix<double> proj = b;
    proj += (-lb / lm) * ms[0];
    std::vector<SymMatrix<double>> args{proj, proj};
    for (const auto& m : tail) args.push_back(m);
    AlexandrovLemmaResult r;
    r.value = mixed_discriminant(args);
    double norm = 0;
    for (double x : proj.a) norm += x * x;
    r.b_norm = std::sqrt(norm);
    r.nonpositive = r.value <= tol;
    r.strictly_negative = r.value < -tol;
    return r;
}

inline SymMatrix<double> random_psd(int n, std::mt19937& rng, double shift = 0.5)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> g(n, std::vector<double>(n));
    for (auto& row : g)
        for (auto& x : row) x = gauss(rng);
    SymMatrix<double> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int k = 0; k < n; ++k) s += g[k][i] * g[k][j];
            m.at(i, j) = s;
        }
    for (int i = 0; i < n; ++i) m.at(i, i) += shift;
    return m;
}

inline SymMatrix<Rat> random_rat_sym(int n, std::mt19937& rng, int lo = -3, int hi = 3)
{
    std::uniform_int_distribution<int> d(lo, hi);
    SymMatrix<Rat> m(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) m.set(i, j, d(rng));
    return m;
}

}  // namespace svx
