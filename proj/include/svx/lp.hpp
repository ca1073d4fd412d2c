#pragma once

#include <cmath>
#include <vector>

#include "rational.hpp"

namespace svx {

enum class LpStatus { Optimal, Unbounded, Infeasible, Stalled };

template <class T>
struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    T value = T(0);
    std::vector<T> x;  // solution in the original (free) variables
};

namespace detail {

template <class T>
struct LpTraits;

template <>
struct LpTraits<Rat> {
    static bool pos(const Rat& v) { return v > 0; }
    static bool neg(const Rat& v) { return v < 0; }
    static bool nonzero(const Rat& v) { return v != 0; }
    static constexpr int max_iter = 1 << 20;
};

template <>
struct LpTraits<double> {
    static bool pos(double v) { return v > 1e-9; }
    static bool neg(double v) { return v < -1e-9; }
    static bool nonzero(double v) { return std::abs(v) > 1e-7; }
    static constexpr int max_iter = 2000;
};

// Dense tableau simplex with Bland's rule on the standard form
// max c.y  s.t.  D y = b, y >= 0.
template <class T>
struct Tableau {
    using Tr = LpTraits<T>;
    int m, n;                          // constraints, variables
    int enterable;                     // columns >= enterable may not enter the basis
    std::vector<std::vector<T>> rows;  // m rows of length n+1, last = rhs
    std::vector<T> obj;                // reduced costs; obj[n] = -objective
    std::vector<int> basis;

    void pivot(int r, int c)
    {
        T inv = rows[r][c];
        for (auto& v : rows[r]) v /= inv;
        for (int i = 0; i < m; ++i) {
            if (i == r || !Tr::nonzero(rows[i][c])) continue;
            T f = rows[i][c];
            for (int j = 0; j <= n; ++j) rows[i][j] -= f * rows[r][j];
            rows[i][c] = T(0);
        }
        if (Tr::nonzero(obj[c])) {
            T f = obj[c];
            for (int j = 0; j <= n; ++j) obj[j] -= f * rows[r][j];
            obj[c] = T(0);
        }
        basis[r] = c;
    }

    LpStatus run()
    {
        for (int iter = 0; iter < Tr::max_iter; ++iter) {
            int c = -1;
            for (int j = 0; j < enterable; ++j)
                if (Tr::pos(obj[j])) { c = j; break; }  // Bland: smallest index
            if (c < 0) return LpStatus::Optimal;
            int r = -1;
            for (int i = 0; i < m; ++i) {
                if (!Tr::pos(rows[i][c])) continue;
                if (r < 0) { r = i; continue; }
                T cur = rows[i][n] / rows[i][c];
                T best = rows[r][n] / rows[r][c];
                if (cur < best || (cur == best && basis[i] < basis[r])) r = i;
            }
            if (r < 0) return LpStatus::Unbounded;
            pivot(r, c);
        }
        return LpStatus::Stalled;
    }
};

}  // namespace detail

// Solves max c.x subject to A x <= b with x free.
template <class T>
LpResult<T> lp_maximize(const std::vector<std::vector<T>>& A, const std::vector<T>& b,
                        const std::vector<T>& c)
{
    using Tr = detail::LpTraits<T>;
    int m = static_cast<int>(A.size());
    int n = m == 0 ? static_cast<int>(c.size()) : static_cast<int>(A[0].size());
    int nv = 2 * n + m;  // x+, x-, slacks
    detail::Tableau<T> t;
    t.m = m;
    t.n = nv + m;  // artificials appended
    t.enterable = t.n;
    t.rows.assign(m, std::vector<T>(t.n + 1, T(0)));
    t.basis.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        T s = b[i] < T(0) ? T(-1) : T(1);
        for (int j = 0; j < n; ++j) {
            t.rows[i][j] = s * A[i][j];
            t.rows[i][n + j] = -s * A[i][j];
        }
        t.rows[i][2 * n + i] = s;
        t.rows[i][nv + i] = T(1);
        t.rows[i][t.n] = s * b[i];
        t.basis[i] = nv + i;
    }
    // Phase 1: maximize -sum(artificials).
    t.obj.assign(t.n + 1, T(0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= t.n; ++j)
            if (j < nv || j == t.n) t.obj[j] += t.rows[i][j];
    LpResult<T> res;
    LpStatus st = t.run();
    if (st == LpStatus::Stalled) { res.status = st; return res; }
    if (Tr::nonzero(t.obj[t.n])) { res.status = LpStatus::Infeasible; return res; }
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < nv) continue;
        for (int j = 0; j < nv; ++j)
            if (Tr::nonzero(t.rows[i][j])) { t.pivot(i, j); break; }
    }
    // Phase 2: artificial columns may no longer enter the basis.
    t.enterable = nv;
    t.obj.assign(t.n + 1, T(0));
    for (int j = 0; j < n; ++j) { t.obj[j] = c[j]; t.obj[n + j] = -c[j]; }
    for (int i = 0; i < m; ++i) {
        int bvar = t.basis[i];
        if (bvar < t.n && Tr::nonzero(t.obj[bvar])) {
            T f = t.obj[bvar];
            for (int j = 0; j <= t.n; ++j) t.obj[j] -= f * t.rows[i][j];
        }
    }
    st = t.run();
    if (st != LpStatus::Optimal) { res.status = st; return res; }
    res.status = LpStatus::Optimal;
    res.value = -t.obj[t.n];
    res.x.assign(n, T(0));
    for (int i = 0; i < m; ++i) {
        int bvar = t.basis[i];
        if (bvar < n) res.x[bvar] += t.rows[i][t.n];
        else if (bvar < 2 * n) res.x[bvar - n] -= t.rows[i][t.n];
    }
    return res;
}

}  // namespace svx
