#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>
#include <vector>

#include "kronrad/bounds.hpp"
#include "kronrad/complex_matrix.hpp"
#include "kronrad/generate.hpp"
#include "kronrad/io.hpp"
#include "kronrad/pnorm.hpp"
#include "kronrad/polyroots.hpp"
#include "kronrad/radius.hpp"
#include "kronrad/rng.hpp"
#include "kronrad/schurpower.hpp"
#include "kronrad/semihilbert.hpp"
#include "kronrad/spectral.hpp"

namespace kronrad {

struct VerifyConfig {
    std::uint64_t seed = 42;
    std::size_t trials = 25;
    std::size_t n_max = 4;
    std::size_t m_max = 3;
    std::vector<PExp> p_set{PExp(1.0), PExp(1.5), PExp(2.0), PExp(3.0), PExp::infinity()};
    double tol = 1e-8;
    std::vector<std::string> suites; ///< empty = all
};

struct SuiteSummary {
    std::string name;
    std::size_t trials = 0;
    std::size_t failures = 0;
    double min_slack = 0.0;
};

struct VerifySummary {
    std::vector<SuiteSummary> suites;
    std::size_t failures() const {
        std::size_t f = 0;
        for (const auto& s : suites) f += s.failures;
        return f;
    }
};

namespace detail {

inline std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// Per-trial reporting helper: streams one line-delimited record per check
/// and keeps the running failure count / worst slack.
class SuiteRun {
public:
    SuiteRun(std::string name, std::string anchor, std::ostream& os, double tol)
        : os_(os), tol_(tol) {
        sum_.name = std::move(name);
        os_ << "# suite " << sum_.name << " anchor=" << anchor << "\n";
    }

    /// slack-style check: ok iff slack >= -tol.
    void slack(std::size_t trial, const std::string& what, double s) {
        const bool ok = s >= -tol_;
        record(trial, what, s, ok);
    }

    /// predicate check; slack column carries an informative value.
    void require(std::size_t trial, const std::string& what, bool ok, double value = 0.0) {
        record(trial, what, value, ok);
    }

    SuiteSummary finish() {
        os_ << "suite " << sum_.name << " trials=" << sum_.trials
            << " failures=" << sum_.failures << " min_slack=" << fmt(sum_.min_slack) << "\n";
        return sum_;
    }

private:
    void record(std::size_t trial, const std::string& what, double value, bool ok) {
        sum_.trials = std::max(sum_.trials, trial + 1);
        if (!ok) ++sum_.failures;
        if (value < sum_.min_slack) sum_.min_slack = value;
        os_ << sum_.name << " trial=" << trial << " check=" << what
            << " slack=" << fmt(value) << " ok=" << (ok ? 1 : 0) << "\n";
    }

    std::ostream& os_;
    double tol_;
    SuiteSummary sum_;
};

inline void report_slacks(SuiteRun& run, std::size_t trial, const BoundReport& rep) {
    for (const auto& rel : rep.relations())
        run.slack(trial, rep.instance() + ":" + rel.lhs + "<=" + rel.rhs, rel.slack);
}

inline Rng trial_rng(const VerifyConfig& cfg, std::uint64_t suite_id, std::size_t trial) {
    return Rng(cfg.seed, suite_id * 1000003u + trial);
}

// ---- individual suites -----------------------------------------------------

inline SuiteSummary suite_p3(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("p3", "p3", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 1, t);
        const std::size_t n = 2 + rng.uniform_index(cfg.n_max - 1);
        const std::size_t m = 2 + rng.uniform_index(cfg.m_max - 1);
        const CMatrix a = random_matrix(rng, n, n);
        const CMatrix b = random_matrix(rng, m, m);
        report_slacks(run, t, p3_chain(a, b).report);
    }
    return run.finish();
}

inline SuiteSummary suite_th4(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("th4", "th4", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 2, t);
        const std::size_t n = 2 + rng.uniform_index(std::min<std::size_t>(cfg.n_max, 4) - 1);
        const std::size_t m = 2 + rng.uniform_index(std::min<std::size_t>(cfg.m_max, 3) - 1);
        const CMatrix a = random_nonneg_matrix(rng, n, n);
        const CMatrix b = random_matrix(rng, m, m);
        report_slacks(run, t, th4_chain(a, b));
        report_slacks(run, t, refined_bounds(a, b));
    }
    // strictness witness: A = diag(1,2), B the 2x2 shift
    {
        CMatrix a(2, 2), b(2, 2);
        a(0, 0) = 1.0;
        a(1, 1) = 2.0;
        b(0, 1) = 1.0;
        const double wk = radius_value(kron(a, b));
        run.require(cfg.trials, "diag_shift_radius", std::abs(wk - 1.0) <= 1e-10, wk - 1.0);
        run.slack(cfg.trials, "strict_gap", 2.0 - wk - 0.5); // w(A (x) B) = 1 < 2 = w(A)||B||
    }
    return run.finish();
}

inline SuiteSummary suite_cor1(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("cor1", "cor1", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 3, t);
        const std::size_t n = 2 + rng.uniform_index(cfg.n_max - 1);
        const std::size_t m = 2 + rng.uniform_index(cfg.m_max - 1);

        // forward: Hermitian B has w(B) = ||B||, so equality must follow
        const CMatrix a = random_matrix(rng, n, n);
        const CMatrix bh = random_hermitian(rng, m);
        const EqualityCheck fwd = cor1_equality_check(a, bh);
        run.require(t, "forward_applicable", fwd.forward_applicable);
        run.require(t, "forward_equality", fwd.forward_ok,
                    fwd.w_kron - fwd.w_a * fwd.norm_b);

        // converse: non-negative A with nonzero diagonal and forced equality
        CMatrix anc = random_nonneg_matrix(rng, n, n);
        for (std::size_t i = 0; i < n; ++i) anc(i, i) += 0.2;
        const EqualityCheck conv = cor1_equality_check(anc, bh);
        run.require(t, "converse", !conv.converse_applicable || !conv.equality ||
                                        conv.converse_ok);

        // contrapositive: w(B) well below ||B|| must break equality
        CMatrix gap(m, m);
        for (std::size_t i = 0; i + 1 < m; ++i) gap(i, i + 1) = 1.0;
        const double scale = rng.uniform(1.0, 2.0);
        const CMatrix u = random_unitary(rng, m);
        CMatrix bgap = u * gap * u.adjoint();
        bgap = bgap * cplx{scale, 0.0};
        const EqualityCheck cp = cor1_equality_check(anc, bgap);
        run.require(t, "gap_premise", cp.w_b < cp.norm_b - 0.1, cp.norm_b - cp.w_b - 0.1);
        run.require(t, "no_equality",
                    cp.w_a * cp.norm_b - cp.w_kron > 1e-6,
                    cp.w_a * cp.norm_b - cp.w_kron);
    }
    return run.finish();
}

inline SuiteSummary suite_thm4_1(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("thm4_1", "thm4_1", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 4, t);
        const std::size_t n = 2 + rng.uniform_index(cfg.n_max - 1);
        const std::size_t m = 2 + rng.uniform_index(cfg.m_max - 1);
        const CMatrix a = random_matrix(rng, n, n);
        const CMatrix b = random_matrix(rng, m, m);
        report_slacks(run, t, e14_chain(a, b));
        for (const PExp& p : cfg.p_set) {
            const PNormBounds pb = kron_pnorm_bounds(a, b, p);
            run.slack(t, "pnorm_bracket_p" + p.str(), pb.upper - pb.lower);
            if (pb.exact) {
                run.slack(t, "exact_above_lower_p" + p.str(), *pb.exact - pb.lower);
                run.slack(t, "exact_below_upper_p" + p.str(), pb.upper - *pb.exact);
            }
        }
    }
    return run.finish();
}

inline SuiteSummary suite_copnorm(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("copnorm", "copnorm", os, cfg.tol);
    const double ks[] = {0.5, 1.0, 3.0};
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 5, t);
        const std::size_t n = 2 + rng.uniform_index(cfg.n_max - 1);
        const std::size_t m = 2 + rng.uniform_index(cfg.m_max - 1);
        const double k = ks[t % 3];
        const CMatrix a = random_birkhoff(rng, n, k);
        const CMatrix b = random_matrix(rng, m, m);
        const double nb = spectral_norm(b);
        for (const PExp& p : cfg.p_set) {
            const PNormBounds pb = kron_pnorm_bounds(a, b, p);
            run.require(t, "exact_reported_p" + p.str(), pb.exact.has_value());
            if (pb.exact)
                run.require(t, "exact_value_p" + p.str(),
                            std::abs(*pb.exact - k * nb) <= cfg.tol * std::max(1.0, k * nb),
                            *pb.exact - k * nb);
            run.require(t, "lower_tight_p" + p.str(),
                        std::abs(pb.lower - k * nb) <= cfg.tol * std::max(1.0, k * nb),
                        pb.lower - k * nb);
            run.require(t, "upper_tight_p" + p.str(),
                        std::abs(pb.upper - k * nb) <= cfg.tol * std::max(1.0, k * nb),
                        pb.upper - k * nb);
        }
        const double wk = radius_value(kron(a, b));
        const double wb = radius_value(b);
        run.require(t, "kron_radius_scales",
                    std::abs(wk - k * wb) <= cfg.tol * std::max(1.0, k * wb), wk - k * wb);
    }
    return run.finish();
}

inline SuiteSummary suite_thm4_2(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("thm4_2", "thm4_2", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 6, t);
        const std::size_t n = 2 + rng.uniform_index(7);
        const std::size_t m = 1 + rng.uniform_index(2);
        const cplx a = random_cplx(rng), b = random_cplx(rng);
        const CMatrix bb = random_matrix(rng, m, m);
        std::vector<cplx> first(n, b);
        first[0] = -a;
        const CMatrix circ = circulant(first);
        const auto [norm2, wrad] = circ_norm2_closed(a, b, n, bb);
        const double direct = spectral_norm(kron(circ, bb));
        const double wdirect = radius_value(kron(circ, bb));
        run.require(t, "norm2_closed", std::abs(norm2 - direct) <= 1e-9 * std::max(1.0, direct),
                    norm2 - direct);
        run.require(t, "radius_closed",
                    std::abs(wrad - wdirect) <= 1e-9 * std::max(1.0, wdirect), wrad - wdirect);

        // real case split of the closed form
        const double ar = std::abs(a.real()), br = std::abs(b.real());
        const double split = (static_cast<double>(n) - 2.0) * br <= 2.0 * ar
                                 ? ar + br
                                 : (static_cast<double>(n) - 1.0) * br - ar;
        const auto [rnorm, rw] = circ_norm2_closed(ar, br, n, 1.0, 1.0);
        (void)rw;
        run.require(t, "real_split", std::abs(rnorm - split) <= 1e-12 * std::max(1.0, split),
                    rnorm - split);

        // 3x3 real circulants have equicorrelated Gram columns
        CMatrix c3(3, 3);
        std::vector<cplx> reals{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        c3 = circulant(reals);
        const double gram = gram_equicorrelated_norm(c3, bb);
        const double gdirect = spectral_norm(kron(c3, bb));
        run.require(t, "gram_closed", std::abs(gram - gdirect) <= 1e-9 * std::max(1.0, gdirect),
                    gram - gdirect);
    }
    run.require(cfg.trials, "kappa_2",
                std::abs(kappa(2) - 4.0 / std::numbers::pi) <= 1e-6,
                kappa(2) - 4.0 / std::numbers::pi);
    for (std::size_t n = 2; n <= 8; ++n)
        run.slack(cfg.trials, "kappa_gt_1_n" + std::to_string(n), kappa(n) - 1.0);
    return run.finish();
}

inline SuiteSummary suite_tfinal(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("tfinal", "tfinal", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 7, t);
        const std::size_t n = 2 + rng.uniform_index(5);
        const std::size_t m = 1 + rng.uniform_index(2);
        const cplx a = random_cplx(rng), b = random_cplx(rng);
        const CMatrix bb = random_matrix(rng, m, m);
        const double nb = spectral_norm(bb);
        std::vector<cplx> first(n, b);
        first[0] = -a;
        const CMatrix circ = circulant(first);
        const double lo_t =
            std::max(std::abs(a + b),
                     std::abs(static_cast<double>(n - 1) * b - a)) * nb;
        const double hi_t = std::min(std::abs(a + b) + static_cast<double>(n) * std::abs(b),
                                     std::abs(a) + static_cast<double>(n - 1) * std::abs(b)) * nb;
        run.slack(t, "closed_bracket", hi_t - lo_t);
        for (const PExp& p : cfg.p_set) {
            const PNormBounds pb = kron_pnorm_bounds(circ, bb, p);
            run.slack(t, "lower_below_theory_p" + p.str(), hi_t - pb.lower);
            run.slack(t, "theory_below_upper_p" + p.str(), pb.upper - lo_t);
        }
        // improvement over the naive row-sum bound, nonnegative case
        const double ap = rng.uniform(0.0, 2.0), bp = rng.uniform(0.0, 2.0);
        const double naive = std::min(ap + bp + static_cast<double>(n) * bp,
                                      ap + static_cast<double>(n - 1) * bp);
        run.slack(t, "kappa_improvement",
                  ap + bp + static_cast<double>(n) * bp * kappa(n) - naive);
    }
    return run.finish();
}

inline SuiteSummary suite_semihilbert(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("semihilbert", "semihilbert", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 8, t);
        const std::size_t dim = 3 + rng.uniform_index(2);
        const std::size_t deficiency = 1 + (t % 2);
        const std::size_t r = dim - deficiency;
        const CMatrix u = random_unitary(rng, dim);

        CMatrix diag(dim, dim);
        for (std::size_t i = 0; i < r; ++i) diag(i, i) = rng.uniform(0.2, 3.0);
        const CMatrix p = u * diag * u.adjoint();

        auto adjointable = [&](Rng& g) {
            // block lower-triangular in the eigenbasis keeps the support invariant
            CMatrix core(dim, dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    if (j < r || i >= r) core(i, j) = random_cplx(g);
            return u * core * u.adjoint();
        };
        const CMatrix b = adjointable(rng);
        const CMatrix b2 = adjointable(rng);

        PSpace ps(p);
        run.require(t, "support_rank", ps.support_rank() == r);
        run.require(t, "adjointable", is_p_adjointable(ps, b));

        const CMatrix mm = reduced_matrix(ps, b);
        const double scale = std::max(1.0, spectral_norm(b) * spectral_norm(p));
        const double intertwine = spectral_norm(p * b - lift_reduced(ps, mm) * p);
        run.require(t, "intertwining", intertwine <= cfg.tol * scale, intertwine);

        const CMatrix m12 = reduced_matrix(ps, b * b2);
        const double hom = spectral_norm(m12 - mm * reduced_matrix(ps, b2));
        const double hom_scale = std::max(1.0, spectral_norm(b) * spectral_norm(b2));
        run.require(t, "homomorphism", hom <= 1e-6 * hom_scale, hom);

        const std::size_t n = 2 + rng.uniform_index(2);
        const CMatrix a = random_matrix(rng, n, n);
        const PKronSuite suite = p_kron_suite(ps, a, b);
        report_slacks(run, t, suite.report);

        // generic dense B fails adjointability for rank-deficient P
        run.require(t, "dense_not_adjointable",
                    !is_p_adjointable(ps, random_matrix(rng, dim, dim)));

        // P = I reduces to the plain chain
        PSpace full(CMatrix::identity(dim));
        const PRadiusNorm pr = p_radius_and_norm(full, b);
        run.require(t, "identity_radius",
                    std::abs(pr.w_p - radius_value(b)) <= 1e-12 * std::max(1.0, pr.w_p));
        run.require(t, "identity_norm",
                    std::abs(pr.norm_p - spectral_norm(b)) <= 1e-12 * std::max(1.0, pr.norm_p));
    }
    return run.finish();
}

inline SuiteSummary suite_schur(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("schur", "schur", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 9, t);
        const std::size_t n = 2 + rng.uniform_index(2);
        const CMatrix a = random_matrix(rng, n, n);
        const CMatrix b = random_matrix(rng, n, n);
        report_slacks(run, t, schur_radius_chain(a, b));
        const std::size_t m = 1 + rng.uniform_index(cfg.m_max);
        report_slacks(run, t, th10_chain(a, m));

        // sharpness case: the scaled 2x2 shift attains 2^{m-1} w^m
        const cplx lam = random_cplx(rng);
        CMatrix shift(2, 2);
        shift(0, 1) = lam;
        const double wm = radius_value(schur_power(shift, m));
        const double expect = 0.5 * std::pow(std::abs(lam), static_cast<double>(m));
        run.require(t, "shift_sharpness", std::abs(wm - expect) <= 1e-10 * std::max(1.0, expect),
                    wm - expect);

        // symmetric circulant case: w([[a,b],[b,a]]^om) = a^m + b^m
        const double av = rng.uniform(0.1, 2.0), bv = rng.uniform(0.1, 2.0);
        CMatrix sym(2, 2);
        sym(0, 0) = av;
        sym(1, 1) = av;
        sym(0, 1) = bv;
        sym(1, 0) = bv;
        const double wsym = radius_value(schur_power(sym, m));
        const double esym = std::pow(av, static_cast<double>(m)) +
                            std::pow(bv, static_cast<double>(m));
        run.require(t, "symmetric_power", std::abs(wsym - esym) <= 1e-10 * std::max(1.0, esym),
                    wsym - esym);

        // Ando-Okubo style corollary: PSD A gives w(A o B) <= max diag * w(B)
        const CMatrix psd = random_psd(rng, n, n);
        double dmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) dmax = std::max(dmax, psd(i, i).real());
        run.slack(t, "psd_diag_bound",
                  dmax * radius_value(b) - radius_value(schur_product(psd, b)));
    }
    return run.finish();
}

inline SuiteSummary suite_tref(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("tref", "tref", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 10, t);
        const std::size_t n = 2 + rng.uniform_index(2);
        const RadialProfile prof =
            t % 3 == 0 ? RadialProfile::normal
                       : (t % 3 == 1 ? RadialProfile::jordan_tail : RadialProfile::random_tail);
        const std::size_t k = 1 + rng.uniform_index(n);
        const CMatrix a = radial_generator(rng, n, prof, k);
        run.require(t, "generator_radial",
                    std::abs(radius_value(a) - spectral_norm(a)) <=
                        1e-8 * std::max(1.0, spectral_norm(a)));
        for (std::size_t m = 1; m <= std::min<std::size_t>(cfg.m_max, 3); ++m) {
            const TrefVerdict v = tref_check(a, m);
            run.require(t, "witness_iff_equality_m" + std::to_string(m),
                        v.equality == v.witness.has_value());
            run.require(t, "cref_agrees_m" + std::to_string(m), cref_check(a, m));
        }
        // the structural probe sees semisimple top eigenvalues on radial input
        run.require(t, "partial_diag", max_modulus_structure(a).partially_diagonalizable);

        // negative control: radial symmetric matrix without power equality
        const double av = rng.uniform(0.2, 1.5), bv = rng.uniform(0.2, 1.5);
        CMatrix sym(2, 2);
        sym(0, 0) = av;
        sym(1, 1) = av;
        sym(0, 1) = bv;
        sym(1, 0) = bv;
        const TrefVerdict neg = tref_check(sym, 2);
        run.require(t, "negative_no_witness", !neg.equality && !neg.witness.has_value());
    }
    // defectiveness control: nilpotent Jordan block
    {
        CMatrix j(2, 2);
        j(0, 1) = 1.0;
        run.require(cfg.trials, "jordan_defective",
                    !max_modulus_structure(j).partially_diagonalizable);
    }
    return run.finish();
}

inline SuiteSummary suite_tforallm(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("tforallm", "tforallm", os, cfg.tol);
    const std::size_t m_max = std::min<std::size_t>(cfg.m_max, 3);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 11, t);

        // unimodular-diagonal-times-permutation plus a contraction tail
        const std::size_t n1 = 1 + rng.uniform_index(2);
        const std::size_t n2 = 1 + rng.uniform_index(2);
        CMatrix dp = random_permutation(rng, n1);
        for (std::size_t i = 0; i < n1; ++i) {
            const cplx ph = random_unit_phase(rng);
            for (std::size_t j = 0; j < n1; ++j) dp(i, j) *= ph;
        }
        CMatrix tail = random_matrix(rng, n2, n2);
        const double tn = spectral_norm(tail);
        if (tn > 0.0) tail = tail * cplx{rng.uniform(0.2, 0.9) / tn, 0.0};
        CMatrix member(n1 + n2, n1 + n2);
        for (std::size_t i = 0; i < n1; ++i)
            for (std::size_t j = 0; j < n1; ++j) member(i, j) = dp(i, j);
        for (std::size_t i = 0; i < n2; ++i)
            for (std::size_t j = 0; j < n2; ++j) member(n1 + i, n1 + j) = tail(i, j);
        const MembershipVerdict mv = tforallm_scan(member, m_max);
        run.require(t, "dp_plus_tail_member", mv.member);

        // rank-one structural characterization, brute force comparison
        const std::size_t rn = 2 + rng.uniform_index(3);
        CMatrix rank1(rn, rn);
        if (t % 2 == 0) {
            const std::size_t jj = rng.uniform_index(rn);
            rank1(jj, jj) = random_cplx(rng);
        } else {
            const auto uvec = random_vector(rng, rn);
            const auto vvec = random_vector(rng, rn);
            for (std::size_t i = 0; i < rn; ++i)
                for (std::size_t j = 0; j < rn; ++j) rank1(i, j) = uvec[i] * std::conj(vvec[j]);
        }
        const MembershipVerdict rv = tforallm_scan(rank1, m_max);
        run.require(t, "rank_one_flagged", rv.rank_one_diagonal.has_value());
        if (rv.rank_one_diagonal)
            run.require(t, "rank_one_characterization", rv.member == *rv.rank_one_diagonal);

        // closure under Kronecker products
        CMatrix small(1, 1);
        small(0, 0) = random_unit_phase(rng);
        const MembershipVerdict kv = tforallm_scan(kron(member, small), m_max);
        run.require(t, "kron_closure", kv.member);
    }
    return run.finish();
}

inline SuiteSummary suite_polyroots(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("polyroots", "polyroots", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 12, t);
        const std::size_t deg = 2 + rng.uniform_index(11);
        std::vector<cplx> coeffs(deg);
        for (cplx& c : coeffs) c = random_cplx(rng);
        const RootBoundReport rep = root_bound_report(Poly(coeffs));
        run.slack(t, "fujii_kubo_sound", rep.fujii_kubo - rep.max_root_modulus);
        run.slack(t, "est_poly_sound", rep.est_poly - rep.max_root_modulus);
    }
    // worked examples with known values
    {
        const std::size_t t = cfg.trials;
        const RootBoundReport r1 = root_bound_report(Poly({cplx{-2.0, 0.0}, cplx{}}));
        run.require(t, "zsq_minus2_fk", std::abs(r1.fujii_kubo - 1.5) <= 1e-10);
        run.require(t, "zsq_minus2_est", std::abs(r1.est_poly - 1.5) <= 1e-10);
        const RootBoundReport r2 = root_bound_report(Poly({cplx{2.0, 0.0}, cplx{}}));
        run.require(t, "zsq_plus2_fk", std::abs(r2.fujii_kubo - 1.5) <= 1e-10);
        run.require(t, "zsq_plus2_est", std::abs(r2.est_poly - 2.5) <= 1e-10);
        run.require(t, "zsq_plus2_winner", r2.winner == "fujii_kubo");
        const RootBoundReport r3 =
            root_bound_report(Poly({cplx{-10.0, 0.0}, cplx{}, cplx{}}));
        const double fk3 = std::cos(std::numbers::pi / 4.0) + 5.0;
        run.require(t, "zcube_minus10_fk", std::abs(r3.fujii_kubo - fk3) <= 1e-10);
        run.require(t, "zcube_minus10_est", std::abs(r3.est_poly - 5.5) <= 1e-10);
        run.require(t, "zcube_minus10_winner", r3.winner == "est_poly");
        run.require(t, "rank_one_row", std::abs(rank_one_row_radius({cplx{3.0, 0.0},
                                                                     cplx{4.0, 0.0}}) - 4.0) <=
                                           1e-12);
    }
    return run.finish();
}

inline SuiteSummary suite_hou_du(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("hou_du", "hou_du", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 13, t);
        const std::size_t n = 2 + rng.uniform_index(2);
        const std::size_t br = 1 + rng.uniform_index(2);
        std::vector<std::vector<CMatrix>> blocks(n);
        for (auto& row : blocks)
            for (std::size_t j = 0; j < n; ++j) row.push_back(random_matrix(rng, br, br));
        const auto [lhs, rhs] = hou_du_gap(blocks);
        run.slack(t, "block_norm_dominates", rhs - lhs);
    }
    return run.finish();
}

inline SuiteSummary suite_p2x2(const VerifyConfig& cfg, std::ostream& os) {
    SuiteRun run("p2x2", "p2x2", os, cfg.tol);
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng = trial_rng(cfg, 14, t);
        const std::size_t n = 1 + rng.uniform_index(7);
        std::vector<cplx> lams(n);
        for (cplx& c : lams) c = random_cplx(rng);
        const double closed = radius_antidiagonal(lams);
        const double sweep = radius_value(anti_diagonal(lams));
        run.require(t, "antidiagonal_closed_form",
                    std::abs(closed - sweep) <= 1e-9 * std::max(1.0, closed), closed - sweep);
    }
    return run.finish();
}

} // namespace detail

inline const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names{
        "p3",   "th4",        "cor1",  "thm4_1", "copnorm",  "thm4_2",   "tfinal",
        "semihilbert", "schur", "tref",   "tforallm", "polyroots", "hou_du", "p2x2"};
    return names;
}

/// Run the selected suites (all when the list is empty), streaming
/// line-delimited records; deterministic for a fixed config.
inline VerifySummary run_verify(const VerifyConfig& cfg, std::ostream& os) {
    auto selected = [&](const std::string& name) {
        return cfg.suites.empty() ||
               std::find(cfg.suites.begin(), cfg.suites.end(), name) != cfg.suites.end();
    };
    for (const std::string& s : cfg.suites)
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
            throw std::invalid_argument("unknown suite '" + s + "'");

    VerifySummary out;
    using Fn = SuiteSummary (*)(const VerifyConfig&, std::ostream&);
    const std::pair<const char*, Fn> table[] = {
        {"p3", detail::suite_p3},
        {"th4", detail::suite_th4},
        {"cor1", detail::suite_cor1},
        {"thm4_1", detail::suite_thm4_1},
        {"copnorm", detail::suite_copnorm},
        {"thm4_2", detail::suite_thm4_2},
        {"tfinal", detail::suite_tfinal},
        {"semihilbert", detail::suite_semihilbert},
        {"schur", detail::suite_schur},
        {"tref", detail::suite_tref},
        {"tforallm", detail::suite_tforallm},
        {"polyroots", detail::suite_polyroots},
        {"hou_du", detail::suite_hou_du},
        {"p2x2", detail::suite_p2x2},
    };
    for (const auto& [name, fn] : table)
        if (selected(name)) out.suites.push_back(fn(cfg, os));
    std::size_t f = out.failures();
    os << "verify seed=" << cfg.seed << " trials=" << cfg.trials << " failures=" << f
       << " status=" << (f == 0 ? "pass" : "fail") << "\n";
    return out;
}

} // namespace kronrad
