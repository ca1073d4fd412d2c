#pragma once

#include <map>
#include <string>
#include <vector>

#include "rational.hpp"

namespace svx {

// Polynomial in x_1..x_n with rational coefficients, stored sparsely as
// exponent-vector -> coefficient. Zero coefficients are never kept.
struct Poly {
    int n = 0;
    std::map<std::vector<int>, Rat> terms;

    Poly() = default;
    explicit Poly(int dim) : n(dim) {}

    static Poly constant(int dim, const Rat& c)
    {
        Poly p(dim);
        if (c != 0) p.terms[std::vector<int>(dim, 0)] = c;
        return p;
    }

    static Poly variable(int dim, int j)  // x_{j+1}, 0-based j
    {
        Poly p(dim);
        std::vector<int> e(dim, 0);
        e[j] = 1;
        p.terms[e] = 1;
        return p;
    }

    static Poly monomial(int dim, const std::vector<int>& e, const Rat& c)
    {
        Poly p(dim);
        if (c != 0) p.terms[e] = c;
        return p;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(const std::vector<int>& e, const Rat& c)
    {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    Poly& operator+=(const Poly& o)
    {
        for (const auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }

    Poly operator-() const
    {
        Poly r(n);
        for (const auto& [e, c] : terms) r.terms[e] = -c;
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        Poly r(a.n);
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                std::vector<int> e(ea);
                for (int i = 0; i < r.n; ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend Poly operator*(const Rat& c, const Poly& p)
    {
        Poly r(p.n);
        if (c == 0) return r;
        for (const auto& [e, pc] : p.terms) r.terms[e] = c * pc;
        return r;
    }

    Poly derivative(int j) const
    {
        Poly r(n);
        for (const auto& [e, c] : terms) {
            if (e[j] == 0) continue;
            std::vector<int> e2(e);
            --e2[j];
            r.add_term(e2, c * e[j]);
        }
        return r;
    }

    Rat eval(const RatVec& x) const
    {
        Rat s = 0;
        for (const auto& [e, c] : terms) {
            Rat t = c;
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            s += t;
        }
        return s;
    }

    double eval_d(const std::vector<double>& x) const
    {
        double s = 0;
        for (const auto& [e, c] : terms) {
            double t = to_double(c);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < e[i]; ++k) t *= x[i];
            s += t;
        }
        return s;
    }

    // Integral over the axis box [lo, hi].
    Rat integrate_box(const RatVec& lo, const RatVec& hi) const
    {
        Rat s = 0;
        for (const auto& [e, c] : terms) {
            Rat t = c;
            for (int i = 0; i < n; ++i) {
                int d = e[i] + 1;
                Rat hp = 1, lp = 1;
                for (int k = 0; k < d; ++k) { hp *= hi[i]; lp *= lo[i]; }
                t *= (hp - lp) / d;
            }
            s += t;
        }
        return s;
    }

    // Substitutes x_j = value, producing a polynomial constant in x_j.
    Poly substitute(int j, const Rat& value) const
    {
        Poly r(n);
        for (const auto& [e, c] : terms) {
            Rat t = c;
            for (int k = 0; k < e[j]; ++k) t *= value;
            std::vector<int> e2(e);
            e2[j] = 0;
            r.add_term(e2, t);
        }
        return r;
    }

    // Substitutes x_i = sum_j m[i][j] t_j + off[i] (affine change of variables
    // into new variables t of dimension m[i].size()).
    Poly compose_affine(const std::vector<RatVec>& m, const RatVec& off) const
    {
        int nt = m.empty() ? 0 : static_cast<int>(m[0].size());
        std::vector<Poly> xs;
        xs.reserve(n);
        for (int i = 0; i < n; ++i) {
            Poly xi = Poly::constant(nt, off[i]);
            for (int j = 0; j < nt; ++j) xi += m[i][j] * Poly::variable(nt, j);
            xs.push_back(xi);
        }
        Poly r(nt);
        for (const auto& [e, c] : terms) {
            Poly t = Poly::constant(nt, c);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < e[i]; ++k) t = t * xs[i];
            r += t;
        }
        return r;
    }

    int total_degree() const
    {
        int d = 0;
        for (const auto& [e, c] : terms) {
            int s = 0;
            for (int x : e) s += x;
            if (s > d) d = s;
        }
        return d;
    }

    bool operator==(const Poly& o) const { return n == o.n && terms == o.terms; }

    std::string str() const
    {
        if (terms.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [e, c] : terms) {
            if (!first) s += " + ";
            first = false;
            s += rat_str(c);
            for (int i = 0; i < n; ++i) {
                if (e[i] == 0) continue;
                s += "*x" + std::to_string(i + 1);
                if (e[i] > 1) s += "^" + std::to_string(e[i]);
            }
        }
        return s;
    }
};

}  // namespace svx
