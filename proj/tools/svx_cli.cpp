#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svx/alexandrov.hpp"
#include "svx/cones.hpp"
#include "svx/io.hpp"
#include "svx/mixdisc.hpp"
#include "svx/monge_ampere.hpp"
#include "svx/valuation.hpp"
#include "svx/xyform.hpp"

namespace {

using svx::json;

struct Report {
    std::string command;
    std::vector<std::string> inputs;
    json results = json::object();
    json checks = json::array();

    void check(const std::string& name, bool pass, const json& lhs, const json& rhs,
               double tol = 0.0)
    {
        checks.push_back(json{{"name", name}, {"pass", pass}, {"lhs", lhs}, {"rhs", rhs},
                              {"tol", tol}});
    }

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c["pass"].get<bool>()) return false;
        return true;
    }

    json to_json() const
    {
        return json{{"command", command}, {"inputs", inputs}, {"results", results},
                    {"checks", checks}};
    }

    std::string render(const std::string& format) const
    {
        if (format == "json") return to_json().dump(2) + "\n";
        std::string out;
        if (format == "csv") {
            if (results.contains("csv")) return results["csv"].get<std::string>();
            out = "name,pass,lhs,rhs,tol\n";
            for (const auto& c : checks)
                out += c["name"].get<std::string>() + "," +
                       (c["pass"].get<bool>() ? "1" : "0") + "," + c["lhs"].dump() + "," +
                       c["rhs"].dump() + "," + std::to_string(c["tol"].get<double>()) + "\n";
            return out;
        }
        out = "command: " + command + "\n";
        for (const auto& i : inputs) out += "input: " + i + "\n";
        for (const auto& [k, v] : results.items())
            if (k != "csv") out += k + " = " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
        for (const auto& c : checks)
            out += std::string(c["pass"].get<bool>() ? "[pass] " : "[FAIL] ") +
                   c["name"].get<std::string>() + "  lhs=" + c["lhs"].dump() +
                   " rhs=" + c["rhs"].dump() + "\n";
        return out;
    }
};

struct Options {
    unsigned seed = 12345;
    double tol = 1e-9;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, Options& opt)
{
    cmd->add_option("--seed", opt.seed, "random seed");
    cmd->add_option("--tol", opt.tol, "tolerance override");
    cmd->add_option("--format", opt.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", opt.out, "output file (default stdout)");
}

int emit(const Report& rep, const Options& opt)
{
    std::string text = rep.render(opt.format);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(opt.out);
        if (!f) {
            std::cerr << "cannot write " << opt.out << "\n";
            return 1;
        }
        f << text;
    }
    return rep.all_pass() ? 0 : 3;
}

// Input-stage failures exit with code 1; domain precondition violations
// raised later exit with code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
auto parsing(const std::string& path, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(path + ": " + e.what());
    }
}

svx::Polytope load_polytope(const std::string& path)
{
    return parsing(path, [&] { return svx::polytope_from_json(svx::load_json(path)); });
}

svx::MaxAffine load_max_affine(const std::string& path)
{
    return parsing(path, [&] { return svx::max_affine_from_json(svx::load_json(path)); });
}

svx::Valuation load_valuation(const std::string& path, int n)
{
    return parsing(path, [&] { return svx::valuation_from_json(svx::load_json(path), n); });
}

// {"n": dim, "terms": [{"dx": [0-based indices], "dxi": [...], "c": rational}]}
svx::ConstForm load_form(const std::string& path)
{
    return parsing(path, [&] {
        json j = svx::load_json(path);
        int n = j.at("n").get<int>();
        svx::SuperForm f(n);
        for (const auto& t : j.at("terms")) {
            svx::Mask i = 0, k = 0;
            for (int b : t.at("dx").get<std::vector<int>>()) i |= 1u << b;
            for (int b : t.at("dxi").get<std::vector<int>>()) k |= 1u << b;
            f.add_term(i, k, svx::Poly::constant(n, svx::rat_from_json(t.at("c"))));
        }
        return svx::ConstForm::from_form(f);
    });
}

void run_selftest(Report& rep)
{
    using namespace svx;
    for (int n = 1; n <= 4; ++n)
        rep.check("volume_form_integral_n" + std::to_string(n),
                  super_integrate(volume_form(n), Box::unit(n)) == 1, 1, 1);
    {
        SuperForm f(3);
        f.add_term(0b011u, 0b100u, Poly::variable(3, 0) * Poly::variable(3, 1));
        f.add_term(0b100u, 0b000u, Poly::variable(3, 2) * Poly::variable(3, 2));
        rep.check("d_squared_zero", exterior_d(exterior_d(f)).is_zero(), 0, 0);
        rep.check("dsharp_squared_zero",
                  exterior_dsharp(exterior_dsharp(f)).is_zero(), 0, 0);
        rep.check("J_inverse", apply_J_inverse(apply_J(f)) == f, 1, 1);
    }
    for (int n = 1; n <= 3; ++n) {
        XYForm w(n);
        w.add_term(n > 1 ? 0b01u : 0u, n > 2 ? 0b110u : full_mask(n), Poly::constant(n, 2));
        w.add_term(0u, 0u, Poly::constant(n, 1));
        rep.check("phi_involution_n" + std::to_string(n),
                  phi_inverse(phi_transform(w)) == w, 1, 1);
    }
    for (int n = 2; n <= 3; ++n)
        rep.check("trace_beta_n" + std::to_string(n),
                  trace(ConstForm::from_form(beta_form(n))) == n, n, n);
    {
        auto sq = unit_cube(2);
        auto seg = convex_hull(2, {RatVec{Rat(0), Rat(0)}, RatVec{Rat(1), Rat(0)}});
        Rat mv = mixed_volume({sq, seg});
        rep.check("mixed_volume_square_segment", mv == Rat(1, 2), rat_str(mv), "1/2");
        auto simplex = convex_hull(2, {RatVec{Rat(0), Rat(0)}, RatVec{Rat(1), Rat(0)},
                                       RatVec{Rat(0), Rat(1)}});
        auto [lhs, rhs] = minkowski_identity_check(sq, simplex);
        rep.check("minkowski_identity", lhs == rhs, rat_str(lhs), rat_str(rhs));
    }
    {
        auto cross = make_max_affine(
            2, {{RatVec{Rat(1), Rat(1)}, Rat(0)}, {RatVec{Rat(1), Rat(-1)}, Rat(0)},
                {RatVec{Rat(-1), Rat(1)}, Rat(0)}, {RatVec{Rat(-1), Rat(-1)}, Rat(0)}});
        auto mu = ma_measure(cross);
        rep.check("ma_cross_gauge_mass",
                  mu.atoms.size() == 1 && mu.atoms[0].second == 4, rat_str(mu.total()), "4");
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"superform convex-geometry toolkit"};
    app.require_subcommand(1);

    Options opt;
    std::vector<std::string> files;
    std::string file_a, file_b;
    int level = 4;
    int trials = 20;
    int max_degree = 4;
    bool round_case = false;
    bool ellipsoid_case = false;
    long long oracle_samples = 0;

    auto* c_volume = app.add_subcommand("volume", "volume of a polytope");
    c_volume->add_option("file", file_a)->required();
    add_common(c_volume, opt);

    auto* c_mixed = app.add_subcommand("mixed-volume", "mixed volume of n polytopes");
    c_mixed->add_option("files", files)->required();
    add_common(c_mixed, opt);

    auto* c_surface = app.add_subcommand("surface-measure", "surface area measure");
    c_surface->add_option("file", file_a)->required();
    add_common(c_surface, opt);

    auto* c_ma = app.add_subcommand("ma", "Monge-Ampere measure of a max-affine function");
    c_ma->add_option("file", file_a)->required();
    c_ma->add_option("--oracle-samples", oracle_samples,
                     "also run the Monte Carlo gradient-image oracle");
    add_common(c_ma, opt);

    auto* c_bma = app.add_subcommand("boundary-ma", "boundary Monge-Ampere measure");
    c_bma->add_option("polytope", file_a)->required();
    c_bma->add_option("body", file_b)->required();
    add_common(c_bma, opt);

    auto* c_afp = app.add_subcommand("af-polytope",
                                     "Alexandrov-Fenchel check on n polytopes K,L,M3..Mn");
    c_afp->add_option("files", files)->required();
    add_common(c_afp, opt);

    auto* c_afs = app.add_subcommand("af-smooth",
                                     "Alexandrov-Fenchel trials on random ellipsoids");
    c_afs->add_option("--trials", trials);
    c_afs->add_option("--level", level);
    add_common(c_afs, opt);

    auto* c_spec = app.add_subcommand("alexandrov-spectrum", "Gram spectrum signature");
    c_spec->add_flag("--round", round_case, "round reference support");
    c_spec->add_flag("--ellipsoid", ellipsoid_case, "random ellipsoid reference support");
    c_spec->add_option("--level", level);
    c_spec->add_option("--degree", max_degree, "max harmonic degree of the test basis");
    add_common(c_spec, opt);

    auto* c_cones = app.add_subcommand("cones", "positivity cones");
    auto* c_classify = c_cones->add_subcommand("classify", "classify a constant (p,p)-form");
    c_classify->add_option("file", file_a)->required();
    c_classify->add_option("--trials", trials);
    add_common(c_classify, opt);

    auto* c_val = app.add_subcommand("valuation", "mixed-volume valuations");
    auto* c_veval = c_val->add_subcommand("eval", "evaluate a valuation on a body");
    c_veval->add_option("valuation", file_a)->required();
    c_veval->add_option("body", file_b)->required();
    add_common(c_veval, opt);
    auto* c_vdec = c_val->add_subcommand("decompose", "homogeneous decomposition");
    c_vdec->add_option("valuation", file_a)->required();
    c_vdec->add_option("body", file_b)->required();
    add_common(c_vdec, opt);
    auto* c_vchk = c_val->add_subcommand("check", "additivity on a union-convex pair");
    c_vchk->add_option("valuation", file_a)->required();
    c_vchk->add_option("bodies", files)->required()->expected(2);
    add_common(c_vchk, opt);

    auto* c_self = app.add_subcommand("selftest", "exact identity suite");
    add_common(c_self, opt);

    CLI11_PARSE(app, argc, argv);

    Report rep;
    try {
        if (*c_volume) {
            rep.command = "volume";
            rep.inputs = {file_a};
            auto p = load_polytope(file_a);
            rep.results["volume"] = svx::rat_str(svx::volume(p));
            rep.results["affine_dim"] = p.aff_dim;
            rep.results["n_vertices"] = p.vertices.size();
        } else if (*c_mixed) {
            rep.command = "mixed-volume";
            rep.inputs = files;
            std::vector<svx::Polytope> bodies;
            for (const auto& f : files) bodies.push_back(load_polytope(f));
            rep.results["mixed_volume"] = svx::rat_str(svx::mixed_volume(bodies));
        } else if (*c_surface) {
            rep.command = "surface-measure";
            rep.inputs = {file_a};
            auto p = load_polytope(file_a);
            auto mu = svx::surface_area_measure(p);
            rep.results["measure"] = svx::surface_measure_to_json(mu);
            auto bary = svx::surface_barycenter(mu);
            bool zero = true;
            for (const auto& c : bary) zero = zero && c == 0;
            rep.check("barycenter_zero", zero, svx::ratvec_to_json(bary),
                      svx::ratvec_to_json(svx::RatVec(p.n, svx::Rat(0))));
        } else if (*c_ma) {
            rep.command = "ma";
            rep.inputs = {file_a};
            auto f = load_max_affine(file_a);
            auto mu = svx::ma_measure(f);
            rep.results["measure"] = svx::atomic_measure_to_json(mu);
            svx::Rat rv = svx::volume(svx::recession_body(f));
            rep.check("total_mass_is_recession_volume", mu.total() == rv,
                      svx::rat_str(mu.total()), svx::rat_str(rv));
            if (oracle_samples > 0) {
                auto om = svx::ma_oracle(f, oracle_samples, opt.seed);
                rep.results["oracle_total"] = om.total;
                rep.results["oracle_sigma"] = om.total_sigma;
                rep.check("oracle_total_3sigma",
                          std::abs(om.total - svx::to_double(mu.total())) <=
                              3 * om.total_sigma + 1e-12,
                          om.total, svx::to_double(mu.total()), 3 * om.total_sigma);
            }
        } else if (*c_bma) {
            rep.command = "boundary-ma";
            rep.inputs = {file_a, file_b};
            auto p = load_polytope(file_a);
            auto l = load_polytope(file_b);
            auto mu = svx::boundary_ma(p, l);
            rep.results["measure"] = svx::atomic_measure_to_json(mu);
            svx::Rat pairing = svx::pair_measure(
                mu, [&](const svx::RatVec& x) { return svx::support_eval(l, x); });
            svx::Rat expect = svx::Rat(l.n) * svx::volume(l);
            rep.check("support_pairing_n_vol", pairing == expect, svx::rat_str(pairing),
                      svx::rat_str(expect));
        } else if (*c_afp) {
            rep.command = "af-polytope";
            rep.inputs = files;
            std::vector<svx::Polytope> bodies;
            for (const auto& f : files) bodies.push_back(load_polytope(f));
            if (bodies.size() < 2 || static_cast<int>(bodies.size()) != bodies[0].n)
                throw std::invalid_argument("af-polytope: need n bodies in R^n");
            auto args = bodies;
            svx::Rat vkl = svx::mixed_volume(args);
            args[1] = args[0];
            svx::Rat vkk = svx::mixed_volume(args);
            args[0] = args[1] = bodies[1];
            svx::Rat vll = svx::mixed_volume(args);
            rep.results["V_KL"] = svx::rat_str(vkl);
            rep.results["V_KK"] = svx::rat_str(vkk);
            rep.results["V_LL"] = svx::rat_str(vll);
            rep.check("alexandrov_fenchel", vkl * vkl >= vkk * vll,
                      svx::rat_str(vkl * vkl), svx::rat_str(vkk * vll));
        } else if (*c_afs) {
            rep.command = "af-smooth";
            double tol = c_afs->count("--tol") ? opt.tol : 1e-6;
            auto grid = svx::sphere_grid(level);
            std::vector<svx::HomFun> phis{svx::round_support(3).fn()};
            std::mt19937 rng(opt.seed);
            bool all = true;
            for (int t = 0; t < trials; ++t) {
                auto qa = svx::to_eigen(svx::random_psd(3, rng, 1.0));
                auto qb = svx::to_eigen(svx::random_psd(3, rng, 1.0));
                bool ok = svx::af_check(svx::ellipsoid_support(qa), svx::ellipsoid_support(qb),
                                        phis, grid, tol);
                all = all && ok;
            }
            rep.results["trials"] = trials;
            rep.results["level"] = level;
            rep.check("af_ellipsoid_trials", all, trials, trials, tol);
        } else if (*c_spec) {
            rep.command = "alexandrov-spectrum";
            if (round_case == ellipsoid_case)
                throw std::invalid_argument("alexandrov-spectrum: pick one of --round, --ellipsoid");
            auto grid = svx::sphere_grid(level);
            auto basis = svx::harmonic_basis(3, max_degree);
            std::vector<svx::HomFun> phis;
            if (round_case) {
                phis.push_back(svx::round_support(3).fn());
            } else {
                std::mt19937 rng(opt.seed);
                phis.push_back(
                    svx::ellipsoid_support(svx::to_eigen(svx::random_psd(3, rng, 1.0))).fn());
            }
            auto gram = svx::qform_gram(basis, phis, grid);
            double tol = 10 * grid.h * grid.h;
            auto sig = svx::gram_signature(gram, tol);
            rep.results["level"] = level;
            rep.results["n_positive"] = sig.n_positive;
            rep.results["n_zero"] = sig.n_zero;
            rep.results["n_negative"] = sig.n_negative;
            rep.results["min_pos"] = sig.min_pos;
            rep.results["max_zero_abs"] = sig.max_zero_abs;
            rep.results["zero_tol"] = tol;
            rep.results["q_asymmetry"] = gram.asymmetry;
            char buf[256];
            std::snprintf(buf, sizeof buf,
                          "level,n_positive,n_zero,n_negative,min_pos,max_zero_abs\n"
                          "%d,%d,%d,%d,%.12g,%.12g\n",
                          level, sig.n_positive, sig.n_zero, sig.n_negative, sig.min_pos,
                          sig.max_zero_abs);
            rep.results["csv"] = std::string(buf);
            rep.check("one_positive", sig.n_positive == 1, sig.n_positive, 1, tol);
            rep.check("kernel_at_least_n", sig.n_zero >= 3, sig.n_zero, 3, tol);
        } else if (*c_classify) {
            rep.command = "cones classify";
            rep.inputs = {file_a};
            auto f = load_form(file_a);
            rep.results["n"] = f.n;
            rep.results["p"] = f.p;
            rep.results["symmetric"] = f.is_symmetric();
            bool strong = svx::is_strong(f);
            rep.results["strong"] = strong;
            auto wrep = svx::weak_positivity_search(f, trials, opt.tol, opt.seed);
            rep.results["weakly_positive"] = !wrep.violation_found;
            rep.results["min_wedge_value"] = wrep.min_value;
            if (strong) {
                int d = f.matrix().rows;
                auto dec = svx::decompose_strong(f, 3 * d * d + 8, opt.seed);
                rep.results["decomposition_parts"] = dec.parts.size();
                rep.check("strong_decomposition_exact", dec.residual_norm2 == 0,
                          svx::rat_str(dec.residual_norm2), "0");
            }
        } else if (*c_veval || *c_vdec) {
            rep.command = *c_veval ? "valuation eval" : "valuation decompose";
            rep.inputs = {file_a, file_b};
            auto k = load_polytope(file_b);
            auto v = load_valuation(file_a, k.n);
            if (*c_veval) {
                rep.results["value"] = svx::rat_str(svx::valuation_eval(v, k));
            } else {
                auto theta = svx::mcmullen_decompose(v, k);
                json parts = json::array();
                for (const auto& c : theta) parts.push_back(svx::rat_str(c));
                rep.results["theta"] = parts;
                svx::Rat sum = 0;
                for (const auto& c : theta) sum += c;
                svx::Rat direct = svx::valuation_eval(v, k);
                rep.check("theta_sums_to_value", sum == direct, svx::rat_str(sum),
                          svx::rat_str(direct));
            }
        } else if (*c_vchk) {
            rep.command = "valuation check";
            rep.inputs = {file_a, files[0], files[1]};
            auto p = load_polytope(files[0]);
            auto q = load_polytope(files[1]);
            auto v = load_valuation(file_a, p.n);
            bool ok = svx::valuation_additivity_check(v, p, q);
            rep.check("additivity", ok, ok, true);
        } else if (*c_self) {
            rep.command = "selftest";
            run_selftest(rep);
        }
    } catch (const ParseError& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "malformed input: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    }
    return emit(rep, opt);
}
