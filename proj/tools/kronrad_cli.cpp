// Command-line surface: report commands for single instances plus the seeded
// randomized verification harness.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kronrad/bounds.hpp"
#include "kronrad/io.hpp"
#include "kronrad/pnorm.hpp"
#include "kronrad/polyroots.hpp"
#include "kronrad/radius.hpp"
#include "kronrad/schurpower.hpp"
#include "kronrad/semihilbert.hpp"
#include "kronrad/verify.hpp"

namespace {

using namespace kronrad;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CMatrix load_matrix(const std::string& path) { return parse_matrix(slurp(path)); }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void print_report(const BoundReport& rep) {
    std::cout << "report " << rep.instance() << "\n";
    for (const auto& e : rep.entries())
        std::cout << "  entry name=" << e.name << " value=" << fmt(e.value)
                  << " anchor=" << e.anchor << "\n";
    for (const auto& r : rep.relations())
        std::cout << "  relation " << r.lhs << "<=" << r.rhs << " slack=" << fmt(r.slack)
                  << "\n";
}

PExp parse_p(const std::string& text) {
    if (text == "inf" || text == "infinity") return PExp::infinity();
    return PExp(std::stod(text));
}

int checked(const BoundReport& rep, double tol) {
    print_report(rep);
    return rep.ok(tol) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical radius / operator norm bound toolkit"};
    app.require_subcommand(1);
    double tol = 1e-8;
    app.add_option("--tol", tol, "slack tolerance for pass/fail verdicts");

    // radius
    auto* sc_radius = app.add_subcommand("radius", "numerical radius of a matrix");
    std::string radius_file = "-";
    sc_radius->add_option("matrix", radius_file, "matrix file (JSON or shorthand), - for stdin");

    // pnorm
    auto* sc_pnorm = app.add_subcommand("pnorm", "lp operator norm (exact or bracket)");
    std::string pnorm_file = "-", pnorm_p = "2";
    sc_pnorm->add_option("matrix", pnorm_file, "matrix file");
    sc_pnorm->add_option("--p", pnorm_p, "exponent (value or 'inf')")->required();

    // kron-bounds
    auto* sc_kron = app.add_subcommand("kron-bounds", "Kronecker-product bound chains");
    std::string kron_a, kron_b;
    sc_kron->add_option("--a", kron_a, "left factor file")->required();
    sc_kron->add_option("--b", kron_b, "right factor file")->required();

    // schur-chain
    auto* sc_schur = app.add_subcommand("schur-chain", "entrywise power bound chain");
    std::string schur_file = "-";
    std::size_t schur_m = 2;
    sc_schur->add_option("matrix", schur_file, "matrix file");
    sc_schur->add_option("--m", schur_m, "entrywise power")->required();

    // tref
    auto* sc_tref = app.add_subcommand("tref", "power-equality witness test");
    std::string tref_file = "-";
    std::size_t tref_m = 2;
    sc_tref->add_option("matrix", tref_file, "matrix file");
    sc_tref->add_option("--m", tref_m, "entrywise power")->required();

    // semihilbert
    auto* sc_semi = app.add_subcommand("semihilbert", "seminorm radius/norm via a PSD weight");
    std::string semi_p, semi_b = "-";
    sc_semi->add_option("--P", semi_p, "PSD weight matrix file")->required();
    sc_semi->add_option("matrix", semi_b, "operator file");

    // poly-bounds
    auto* sc_poly = app.add_subcommand("poly-bounds", "root-modulus bounds for a monic polynomial");
    std::string poly_file;
    sc_poly->add_option("--coeffs", poly_file, "coefficient file (a_0 .. a_{n-1})")->required();

    // verify
    auto* sc_verify = app.add_subcommand("verify", "seeded randomized inequality verification");
    VerifyConfig cfg;
    std::string suites_csv;
    sc_verify->add_option("--seed", cfg.seed, "RNG seed");
    sc_verify->add_option("--trials", cfg.trials, "trials per suite");
    sc_verify->add_option("--suites", suites_csv, "comma-separated suite list (default all)");
    sc_verify->add_option("--tol", cfg.tol, "slack tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sc_radius) {
            const RadiusResult r = numerical_radius(load_matrix(radius_file));
            std::cout << "radius " << fmt(r.value) << " theta " << fmt(r.theta_star)
                      << " radial=" << r.is_radial << " spectral=" << r.is_spectral << "\n";
            return 0;
        }
        if (*sc_pnorm) {
            const CMatrix a = load_matrix(pnorm_file);
            const PExp p = parse_p(pnorm_p);
            if (p.is(1.0) || p.is(2.0) || p.is_inf()) {
                std::cout << "pnorm p=" << p.str() << " exact " << fmt(opnorm_exact(a, p))
                          << "\n";
            } else {
                const double lo = opnorm_lower(a, p).value;
                const double hi = opnorm_upper_interp(a, p);
                std::cout << "pnorm p=" << p.str() << " lower " << fmt(lo) << " upper "
                          << fmt(hi) << "\n";
            }
            return 0;
        }
        if (*sc_kron) {
            const CMatrix a = load_matrix(kron_a);
            const CMatrix b = load_matrix(kron_b);
            int rc = 0;
            rc |= checked(p3_chain(a, b).report, tol);
            rc |= checked(th4_chain(a, b), tol);
            rc |= checked(e14_chain(a, b), tol);
            return rc;
        }
        if (*sc_schur) {
            return checked(th10_chain(load_matrix(schur_file), schur_m), tol);
        }
        if (*sc_tref) {
            const TrefVerdict v = tref_check(load_matrix(tref_file), tref_m, tol);
            std::cout << "tref m=" << v.m << " applicable=" << v.applicable
                      << " power_radius=" << fmt(v.power_radius) << " target=" << fmt(v.target)
                      << " equality=" << v.equality << " witness=" << v.witness.has_value()
                      << " partial_diag=" << v.partial_diag << "\n";
            return 0;
        }
        if (*sc_semi) {
            const PSpace ps(load_matrix(semi_p));
            const CMatrix b = load_matrix(semi_b);
            if (!is_p_adjointable(ps, b)) {
                std::cerr << "error: operator is not adjointable for this weight\n";
                return 1;
            }
            const PRadiusNorm pr = p_radius_and_norm(ps, b);
            std::cout << "semihilbert radius " << fmt(pr.w_p) << " norm " << fmt(pr.norm_p)
                      << " support_rank " << ps.support_rank() << "\n";
            return 0;
        }
        if (*sc_poly) {
            const RootBoundReport rep = root_bound_report(parse_poly(slurp(poly_file)));
            std::cout << "poly degree=" << rep.poly.degree() << " fujii_kubo "
                      << fmt(rep.fujii_kubo) << " est_poly " << fmt(rep.est_poly)
                      << " max_root " << fmt(rep.max_root_modulus) << " winner " << rep.winner
                      << "\n";
            return 0;
        }
        if (*sc_verify) {
            if (!suites_csv.empty()) {
                std::stringstream ss(suites_csv);
                std::string item;
                while (std::getline(ss, item, ','))
                    if (!item.empty()) cfg.suites.push_back(item);
            }
            const VerifySummary sum = run_verify(cfg, std::cout);
            return sum.failures() == 0 ? 0 : 1;
        }
    } catch (const kronrad::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const kronrad::budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const kronrad::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
