#pragma once

#include <Eigen/Dense>
#include <cassert>
#include <optional>
#include <vector>

#include "rational.hpp"

namespace svx {

// Dense row-major rational matrix, just enough exact linear algebra for the
// rank/nullspace/solve needs of the algebra modules.
struct RatMat {
    int rows = 0, cols = 0;
    std::vector<Rat> a;

    RatMat() = default;
    RatMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, Rat(0)) {}

    Rat& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rat& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static RatMat from_rows(const std::vector<RatVec>& rs)
    {
        RatMat m(static_cast<int>(rs.size()), rs.empty() ? 0 : static_cast<int>(rs[0].size()));
        for (int i = 0; i < m.rows; ++i)
            for (int j = 0; j < m.cols; ++j) m(i, j) = rs[i][j];
        return m;
    }
};

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(RatMat& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        Rat inv = m(r, c);
        for (int j = 0; j < m.cols; ++j) m(r, j) /= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (int j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

inline int rank_of_rows(const std::vector<RatVec>& rows)
{
    if (rows.empty()) return 0;
    return rank(RatMat::from_rows(rows));
}

// Basis of the right nullspace {x : Mx = 0}.
inline std::vector<RatVec> nullspace(RatMat m)
{
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        RatVec v(m.cols, Rat(0));
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves Mx = b; returns nullopt when inconsistent. For underdetermined
// systems an arbitrary particular solution is returned.
inline std::optional<RatVec> solve(RatMat m, RatVec b)
{
    assert(static_cast<int>(b.size()) == m.rows);
    RatMat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = b[static_cast<std::size_t>(i)];
    }
    auto pivots = rref(aug);
    for (int c : pivots)
        if (c == m.cols) return std::nullopt;
    RatVec x(m.cols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(static_cast<int>(r), m.cols);
    return x;
}

inline Rat det(RatMat m)
{
    assert(m.rows == m.cols);
    Rat d = 1;
    for (int c = 0; c < m.cols; ++c) {
        int p = -1;
        for (int i = c; i < m.rows; ++i)
            if (m(i, c) != 0) { p = i; break; }
        if (p < 0) return 0;
        if (p != c) {
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (int i = c + 1; i < m.rows; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(c, c);
            for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}

// Eigenvalues of a symmetric double matrix, ascending.
inline std::vector<double> sym_eigenvalues(const std::vector<std::vector<double>>& m)
{
    int n = static_cast<int>(m.size());
    Eigen::MatrixXd e(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e(i, j) = m[i][j];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(e);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = es.eigenvalues()(i);
    return v;
}

struct SignatureCounts {
    int n_positive = 0, n_zero = 0, n_negative = 0;
    double min_pos = 0.0, max_zero_abs = 0.0;
};

inline SignatureCounts signature_counts(const std::vector<double>& eigs, double tol)
{
    SignatureCounts s;
    for (double l : eigs) {
        if (l > tol) {
            ++s.n_positive;
            if (s.min_pos == 0.0 || l < s.min_pos) s.min_pos = l;
        } else if (l < -tol) {
            ++s.n_negative;
        } else {
            ++s.n_zero;
            if (std::abs(l) > s.max_zero_abs) s.max_zero_abs = std::abs(l);
        }
    }
    return s;
}

}  // namespace svx
