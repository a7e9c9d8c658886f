// Command-line front end: Mahler measures, Weil and G-orbit heights, orbit
// classification, lower-bound certification, table verification and search.
//
// Exit codes: 0 success / all checks pass, 1 check failure, 2 usage or
// input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gorbit/certify.hpp"
#include "gorbit/heights.hpp"
#include "gorbit/orbits.hpp"
#include "gorbit/parse.hpp"
#include "gorbit/report_json.hpp"
#include "gorbit/search.hpp"
#include "gorbit/tablerows.hpp"

using namespace gorbit;
using nlohmann::json;

namespace {

struct Options {
    long precision = 128;
    int samples = 16384;
    int grid = 600;
    double tol = 1e-4;
    std::string format = "text";
};

SamplingConfig sampling(const Options& o) {
    SamplingConfig cfg;
    cfg.circle_samples = o.samples;
    cfg.grid = o.grid;
    cfg.tol = o.tol;
    cfg.precision_bits = o.precision;
    return cfg;
}

void emit(const Options& o, const std::string& text, const json& j) {
    if (o.format == "structured")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

std::string orbit_str(const Orbit& o) {
    std::string s = "{";
    for (size_t i = 0; i < o.points.size(); ++i) {
        if (i) s += ", ";
        s += format_point(o.points[i]);
    }
    return s + "}";
}

std::vector<mpq_class> parse_weights(const std::vector<std::string>& raw) {
    std::vector<mpq_class> w;
    for (const auto& s : raw) w.push_back(parse_weight(s));
    return w;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mahler measures, Weil heights and G-orbit heights under finite subgroups of "
                 "PGL2(Q)"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("GORBIT_PRECISION")) opt.precision = std::atol(env);
    app.add_option("--precision", opt.precision, "working precision in bits")
        ->capture_default_str();
    app.add_option("--samples", opt.samples, "samples per circle")->capture_default_str();
    app.add_option("--grid", opt.grid, "safety grid resolution")->capture_default_str();
    app.add_option("--tol", opt.tol, "certification tolerance")->capture_default_str();
    app.add_option("--format", opt.format, "output format: text | structured")
        ->check(CLI::IsMember({"text", "structured"}))
        ->capture_default_str();

    std::string poly_arg, group_arg, file_arg, row_arg;
    std::vector<std::string> gens_args, weight_args;
    double claimed_D = 0;
    std::optional<long> p_opt, q_opt;
    long p_val = 0, q_val = 0;
    int deg = 2, height_bound = 1, witness_bound = 60;
    bool skip_cyclo = false;

    auto* c_mahler = app.add_subcommand("mahler", "Mahler measure of an integer polynomial");
    c_mahler->add_option("poly", poly_arg)->required();

    auto* c_height = app.add_subcommand("height", "Weil height of the root of an irreducible polynomial");
    c_height->add_option("poly", poly_arg)->required();

    auto* c_oh = app.add_subcommand("orbit-height", "G-orbit height of the root of a polynomial");
    c_oh->add_option("group", group_arg)->required();
    c_oh->add_option("poly", poly_arg)->required();

    auto* c_group = app.add_subcommand("group", "generate the group closure of Mobius maps");
    c_group->add_option("generators", gens_args)->required()->expected(-1);

    auto* c_orbits = app.add_subcommand("orbits", "orbits of the nine special points");
    c_orbits->add_option("group", group_arg)->required();

    auto* c_classify = app.add_subcommand("classify-O", "classify the orbit set O");
    c_classify->add_option("group", group_arg)->required();

    auto* c_zeros = app.add_subcommand("zeros", "exact zero set of the G-orbit height");
    c_zeros->add_option("group", group_arg)->required();

    auto* c_witness = app.add_subcommand("witness", "smallest root-of-unity order with positive orbit height");
    c_witness->add_option("group", group_arg)->required();
    c_witness->add_option("--bound", witness_bound, "largest order tried")->capture_default_str();

    auto* c_phi = app.add_subcommand("phi", "invariant rational function of each orbit in O");
    c_phi->add_option("group", group_arg)->required();

    auto* c_certify = app.add_subcommand("certify", "certify a claimed lower bound D");
    c_certify->add_option("group", group_arg)->required();
    c_certify->add_option("--B", weight_args, "weights, one per used orbit")->required();
    c_certify->add_option("--D", claimed_D, "claimed lower bound")->required();

    auto* c_optd = app.add_subcommand("optimal-D", "estimate the optimal lower bound");
    c_optd->add_option("group", group_arg)->required();
    c_optd->add_option("--B", weight_args, "weights; omit to optimize numerically");

    auto* c_table = app.add_subcommand("table", "verify bundled classification-table rows");
    c_table->add_option("rowfile", file_arg)->required()->check(CLI::ExistingFile);
    c_table->add_option("--row", row_arg, "verify only the named row");
    auto* popt = c_table->add_option("--p", p_val, "numerator of p/q");
    auto* qopt = c_table->add_option("--q", q_val, "denominator of p/q");

    auto* c_search = app.add_subcommand("search", "minimum orbit height over bounded polynomials");
    c_search->add_option("group", group_arg)->required();
    c_search->add_option("--deg", deg, "maximum degree")->required();
    c_search->add_option("--height", height_bound, "coefficient bound")->required();
    c_search->add_flag("--skip-cyclotomic", skip_cyclo, "skip cyclotomic products");

    // global flags remain usable after the subcommand name
    for (auto* sc : app.get_subcommands([](const CLI::App*) { return true; })) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        SamplingConfig cfg = sampling(opt);
        mpfr_prec_t prec = opt.precision;

        if (*c_mahler) {
            RealInterval m = mahler_measure(parse_poly(poly_arg), prec);
            emit(opt, m.to_string(20),
                 json{{"mahler", m.mid_double()}, {"width", m.width_double()},
                      {"value", m.to_string(25)}});
        } else if (*c_height) {
            RealInterval h = weil_height(AlgebraicNumber(parse_poly(poly_arg)), prec);
            emit(opt, h.to_string(20),
                 json{{"height", h.mid_double()}, {"width", h.width_double()},
                      {"value", h.to_string(25)}});
        } else if (*c_oh) {
            FiniteGroup G = parse_group(group_arg);
            RealInterval h = orbit_height(G, AlgebraicNumber(parse_poly(poly_arg)), prec);
            emit(opt, h.to_string(20),
                 json{{"orbit_height", h.mid_double()}, {"width", h.width_double()},
                      {"value", h.to_string(25)}, {"group_size", G.size()}});
        } else if (*c_group) {
            std::vector<MobiusMap> gens;
            for (const auto& g : gens_args) gens.push_back(parse_mobius(g));
            FiniteGroup G = FiniteGroup::generate(gens);
            std::string text = "order " + std::to_string(G.size());
            json elems = json::array();
            for (const auto& s : G.elements()) {
                text += "\n" + format_mobius(s);
                elems.push_back(format_mobius(s));
            }
            emit(opt, text, json{{"order", G.size()}, {"elements", elems}});
        } else if (*c_orbits) {
            FiniteGroup G = parse_group(group_arg);
            std::string text;
            json arr = json::array();
            for (const auto& pt : special_points()) {
                Orbit o = orbit_of(G, ExtendedPoint(pt));
                text += format_point(ExtendedPoint(pt)) + " -> " + orbit_str(o) + "\n";
                json pts = json::array();
                for (const auto& q : o.points) pts.push_back(format_point(q));
                arr.push_back({{"point", format_point(ExtendedPoint(pt))}, {"orbit", pts}});
            }
            if (!text.empty()) text.pop_back();
            emit(opt, text, json{{"orbits", arr}});
        } else if (*c_classify) {
            FiniteGroup G = parse_group(group_arg);
            OrbitSetO O = compute_O(G);
            if (O.infinite) {
                emit(opt, "INFINITE", json{{"O", "infinite"}});
            } else {
                std::string text = "FINITE: " + std::to_string(O.orbits.size()) + " orbit(s)";
                json arr = json::array();
                for (const auto& o : O.orbits) {
                    text += "\n" + orbit_str(o);
                    json pts = json::array();
                    for (const auto& q : o.points) pts.push_back(format_point(q));
                    arr.push_back(pts);
                }
                emit(opt, text, json{{"O", "finite"}, {"orbits", arr}});
            }
        } else if (*c_zeros) {
            FiniteGroup G = parse_group(group_arg);
            auto zs = height_zeros(G);
            std::string text;
            json arr = json::array();
            for (const auto& z : zs) {
                if (!text.empty()) text += ", ";
                text += format_point(ExtendedPoint(z));
                arr.push_back(format_point(ExtendedPoint(z)));
            }
            emit(opt, text, json{{"zeros", arr}});
        } else if (*c_witness) {
            FiniteGroup G = parse_group(group_arg);
            UnityWitness w = unity_witness(G, witness_bound, prec);
            emit(opt,
                 "n = " + std::to_string(w.order) + ", h_G = " + w.height.to_string(20),
                 json{{"order", w.order}, {"height", w.height.mid_double()},
                      {"value", w.height.to_string(25)}});
        } else if (*c_phi) {
            FiniteGroup G = parse_group(group_arg);
            OrbitSetO O = compute_O(G);
            if (O.infinite) throw std::domain_error("O is infinite: no phi functions");
            std::string text;
            json arr = json::array();
            for (const auto& o : O.orbits) {
                RationalFunction phi = build_phi(G, o);
                std::string line = orbit_str(o) + ": (" + format_poly(phi.num, 'z') + ") / (" +
                                   format_poly(phi.den, 'z') + ")";
                text += line + "\n";
                arr.push_back({{"orbit", orbit_str(o)},
                               {"num", format_poly(phi.num, 'z')},
                               {"den", format_poly(phi.den, 'z')}});
            }
            if (!text.empty()) text.pop_back();
            emit(opt, text, json{{"phi", arr}});
        } else if (*c_certify || *c_optd) {
            FiniteGroup G = parse_group(group_arg);
            OrbitSetO O = compute_O(G);
            if (O.infinite) throw std::domain_error("O is infinite: nothing to certify");
            PhiSet ps;
            if (!weight_args.empty()) {
                ps = make_phi_set(G, O, parse_weights(weight_args));
            } else {
                std::vector<RationalFunction> phis;
                size_t take = std::min<size_t>(2, O.orbits.size());
                for (size_t i = 0; i < take; ++i) phis.push_back(build_phi(G, O.orbits[i]));
                ps.phis = phis;
                ps.weights = optimize_weights(G, phis, cfg);
            }
            if (*c_certify) {
                CertReport rep = certify_lower_bound(G, ps, claimed_D, cfg);
                std::ostringstream os;
                os << (rep.pass ? "PASS" : "FAIL") << ": observed min " << rep.observed_min
                   << " vs claimed " << rep.claimed_D << " (margin " << rep.margin << ", "
                   << rep.samples << " samples)";
                emit(opt, os.str(), to_json(rep));
                return rep.pass ? 0 : 1;
            }
            OptimalD est = estimate_optimal_D(G, ps, cfg);
            std::ostringstream os;
            os << "D ~ " << est.value << " at z ~ " << est.argmin.real();
            os << (est.argmin.imag() < 0 ? " - " : " + ")
               << std::fabs(est.argmin.imag()) << "i";
            json jw = json::array();
            for (const auto& b : ps.weights) jw.push_back(b.get_d());
            emit(opt, os.str(),
                 json{{"D", est.value},
                      {"argmin_re", est.argmin.real()},
                      {"argmin_im", est.argmin.imag()},
                      {"weights", jw}});
        } else if (*c_table) {
            std::ifstream in(file_arg);
            auto rows = parse_row_records(in);
            if (popt->count() > 0) p_opt = p_val;
            if (qopt->count() > 0) q_opt = q_val;
            bool all_pass = true;
            json arr = json::array();
            std::string text;
            for (const auto& row : rows) {
                if (!row_arg.empty() && row.name != row_arg) continue;
                RowReport rep = verify_table_row(row, cfg, p_opt, q_opt);
                all_pass = all_pass && rep.pass;
                std::ostringstream os;
                os << (rep.pass ? "PASS " : "FAIL ") << rep.row;
                if (!row.expD.empty())
                    os << "  D=" << rep.D_formula << " est=" << rep.D_estimate;
                else if (rep.D_estimate != 0)
                    os << "  D_est=" << rep.D_estimate << " (informational)";
                for (const auto& c : rep.checks)
                    if (c.applicable && !c.pass) os << "  [" << c.name << ": " << c.detail << "]";
                text += os.str() + "\n";
                arr.push_back(to_json(rep));
            }
            if (!text.empty()) text.pop_back();
            if (text.empty()) throw std::invalid_argument("no matching rows in " + file_arg);
            emit(opt, text, json{{"rows", arr}, {"pass", all_pass}});
            return all_pass ? 0 : 1;
        } else if (*c_search) {
            FiniteGroup G = parse_group(group_arg);
            SearchSpace space{deg, height_bound, skip_cyclo};
            SearchResult r = min_orbit_height(G, space, prec);
            std::ostringstream os;
            os << "min = " << r.min_value.to_string(20) << " at " << format_poly(r.witness)
               << " (" << r.scanned << " polynomials scanned, " << r.skipped_zero
               << " height-zero)";
            emit(opt, os.str(),
                 json{{"min", r.min_value.mid_double()},
                      {"value", r.min_value.to_string(25)},
                      {"witness", format_poly(r.witness)},
                      {"scanned", r.scanned},
                      {"height_zero", r.skipped_zero}});
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
