#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace svx {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Parses "p/q", "p", or a plain integer string.
inline Rat parse_rat(const std::string& s)
{
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
    return Rat(num, den);
}

inline std::string rat_str(const Rat& r)
{
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat dot(const RatVec& a, const RatVec& b)
{
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RatVec vsub(const RatVec& a, const RatVec& b)
{
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline RatVec vadd(const RatVec& a, const RatVec& b)
{
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline RatVec vscale(const Rat& c, const RatVec& a)
{
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline Int binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    Int v = 1;
    for (int i = 0; i < k; ++i) { v *= n - i; v /= i + 1; }
    return v;
}

inline Int factorial(int n)
{
    Int v = 1;
    for (int i = 2; i <= n; ++i) v *= i;
    return v;
}

// Scales a rational vector to a primitive integer vector with the same direction.
// Zero vectors are returned unchanged.
inline RatVec primitive_direction(const RatVec& v)
{
    Int l = 1;
    for (const auto& x : v) l = lcm(l, denominator(x));
    std::vector<Int> w;
    w.reserve(v.size());
    for (const auto& x : v) w.push_back(numerator(x) * (l / denominator(x)));
    Int g = 0;
    for (const auto& x : w) g = gcd(g, x);
    RatVec r(v.size());
    if (g == 0) return v;
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(w[i], g);
    return r;
}

}  // namespace svx
