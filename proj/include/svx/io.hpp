#pragma once

#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "monge_ampere.hpp"
#include "polytope.hpp"
#include "valuation.hpp"

namespace svx {

using json = nlohmann::json;

inline Rat rat_from_json(const json& j)
{
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw std::invalid_argument("expected integer or \"p/q\" string");
}

inline json rat_to_json(const Rat& r)
{
    if (denominator(r) == 1 && numerator(r) >= std::numeric_limits<long long>::min() &&
        numerator(r) <= std::numeric_limits<long long>::max())
        return json(static_cast<long long>(numerator(r)));
    return json(rat_str(r));
}

inline RatVec ratvec_from_json(const json& j)
{
    if (!j.is_array()) throw std::invalid_argument("expected array of rationals");
    RatVec v;
    for (const auto& e : j) v.push_back(rat_from_json(e));
    return v;
}

inline json ratvec_to_json(const RatVec& v)
{
    json a = json::array();
    for (const auto& r : v) a.push_back(rat_to_json(r));
    return a;
}

// {"dim": n, "vertices": [[...], ...]}
inline Polytope polytope_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
        throw std::invalid_argument("polytope: need {\"dim\", \"vertices\"}");
    int n = j["dim"].get<int>();
    if (n < 1) throw std::invalid_argument("polytope: dim must be positive");
    std::vector<RatVec> pts;
    for (const auto& row : j["vertices"]) {
        RatVec p = ratvec_from_json(row);
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("polytope: vertex length != dim");
        pts.push_back(std::move(p));
    }
    return convex_hull(n, pts);
}

inline json polytope_to_json(const Polytope& p)
{
    json verts = json::array();
    for (const auto& v : p.vertices) verts.push_back(ratvec_to_json(v));
    return json{{"dim", p.n}, {"vertices", verts}};
}

// {"dim": n, "pieces": [{"a": [...], "b": rational}]}
inline MaxAffine max_affine_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("pieces"))
        throw std::invalid_argument("max_affine: need {\"dim\", \"pieces\"}");
    int n = j["dim"].get<int>();
    if (n < 1) throw std::invalid_argument("max_affine: dim must be positive");
    std::vector<std::pair<RatVec, Rat>> pieces;
    for (const auto& pc : j["pieces"]) {
        RatVec a = ratvec_from_json(pc.at("a"));
        if (static_cast<int>(a.size()) != n)
            throw std::invalid_argument("max_affine: slope length != dim");
        pieces.emplace_back(std::move(a), rat_from_json(pc.at("b")));
    }
    return make_max_affine(n, std::move(pieces));
}

inline json max_affine_to_json(const MaxAffine& f)
{
    json pieces = json::array();
    for (const auto& [a, b] : f.pieces)
        pieces.push_back(json{{"a", ratvec_to_json(a)}, {"b", rat_to_json(b)}});
    return json{{"dim", f.n}, {"pieces", pieces}};
}

// {"terms": [{"c": rational, "p": int, "companions": [polytope, ...]}]}
inline Valuation valuation_from_json(const json& j, int n)
{
    if (!j.is_object() || !j.contains("terms"))
        throw std::invalid_argument("valuation: need {\"terms\"}");
    Valuation v{n, {}};
    for (const auto& t : j["terms"]) {
        ValTerm term;
        term.c = rat_from_json(t.at("c"));
        term.p = t.at("p").get<int>();
        if (t.contains("companions"))
            for (const auto& c : t["companions"]) term.companions.push_back(polytope_from_json(c));
        v.terms.push_back(std::move(term));
    }
    validate(v);
    return v;
}

inline json valuation_to_json(const Valuation& v)
{
    json terms = json::array();
    for (const auto& t : v.terms) {
        json comps = json::array();
        for (const auto& c : t.companions) comps.push_back(polytope_to_json(c));
        terms.push_back(json{{"c", rat_to_json(t.c)}, {"p", t.p}, {"companions", comps}});
    }
    return json{{"terms", terms}};
}

inline json atomic_measure_to_json(const AtomicMeasure& mu)
{
    json atoms = json::array();
    for (const auto& [x, m] : mu.atoms)
        atoms.push_back(json{{"point", ratvec_to_json(x)}, {"mass", rat_to_json(m)}});
    return json{{"atoms", atoms}, {"total", rat_to_json(mu.total())}};
}

// Atom masses q*|u| are irrational in general; they are reported as doubles
// next to the exact (direction, scale) pair.
inline json surface_measure_to_json(const SurfaceMeasure& mu)
{
    json atoms = json::array();
    for (const auto& a : mu.atoms) {
        double len = 0;
        for (const auto& c : a.dir) len += to_double(c) * to_double(c);
        atoms.push_back(json{{"direction", ratvec_to_json(a.dir)},
                             {"scale", rat_to_json(a.scale)},
                             {"mass", to_double(a.scale) * std::sqrt(len)}});
    }
    return json{{"atoms", atoms}};
}

inline json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace svx
