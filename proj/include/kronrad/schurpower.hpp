#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "kronrad/bounds.hpp"
#include "kronrad/complex_matrix.hpp"
#include "kronrad/generate.hpp"
#include "kronrad/radius.hpp"
#include "kronrad/report.hpp"
#include "kronrad/rng.hpp"
#include "kronrad/spectral.hpp"

namespace kronrad {

/// Chain for entrywise products: since A o B is a principal submatrix of
/// A (x) B, its radius sits below every Kronecker bound.
inline BoundReport schur_radius_chain(const CMatrix& a, const CMatrix& b,
                                      const RadiusOptions& opt = {}) {
    a.require_square("schur_radius_chain");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("schur_radius_chain: shape mismatch");
    BoundReport rep("schur");
    const double ws = radius_value(schur_product(a, b), opt);
    const double wk = radius_value(kron(a, b), opt);
    const CMatrices cm = c_matrices(a, b, opt);
    const std::size_t n = a.rows();
    const double wb = radius_value(b, opt);
    CMatrix aprime(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        aprime(i, i) = std::abs(a(i, i));
        for (std::size_t j = i + 1; j < n; ++j) {
            const double mx = std::max(std::abs(a(i, j)), std::abs(a(j, i)));
            aprime(i, j) = mx;
            aprime(j, i) = mx;
        }
    }
    rep.add("schur_radius", ws, "schur");
    rep.add("kron_radius", wk, "schur");
    rep.add("c_radius", radius_value(cm.c, opt), "th4");
    rep.add("c_circ_radius", radius_value(cm.c_circ, opt), "th4");
    rep.add("aprime_bound", radius_value(aprime, opt) * wb, "th2");
    rep.add("min_mixed_upper",
            std::min(radius_value(a, opt) * spectral_norm(b), wb * spectral_norm(a)), "schur");
    rep.link("schur_radius", "kron_radius");
    rep.link("kron_radius", "c_radius");
    rep.link("c_radius", "c_circ_radius");
    rep.link("kron_radius", "aprime_bound");
    rep.link("schur_radius", "min_mixed_upper");
    return rep;
}

/// Power chain w(A^om) <= w(A) ||A||^{m-1} <= 2^{m-1} w(A)^m, with the
/// radial refinements when w(A) = ||A||.
inline BoundReport th10_chain(const CMatrix& a, std::size_t m, const RadiusOptions& opt = {},
                              double tol = 1e-8) {
    a.require_square("th10_chain");
    if (m < 1) throw std::invalid_argument("th10_chain: m must be >= 1");
    BoundReport rep("th10");
    const double wa = radius_value(a, opt);
    const double na = spectral_norm(a);
    const CMatrix am = schur_power(a, m);
    const double wm = radius_value(am, opt);
    rep.add("power_radius", wm, "th10");
    rep.add("norm_mixed_upper", wa * std::pow(na, static_cast<double>(m) - 1.0), "th10");
    rep.add("doubling_upper", std::pow(2.0, static_cast<double>(m) - 1.0) *
                                  std::pow(wa, static_cast<double>(m)), "th10");
    rep.link("power_radius", "norm_mixed_upper");
    rep.link("norm_mixed_upper", "doubling_upper");
    if (std::abs(wa - na) <= tol * std::max(1.0, na)) {
        const double target = std::pow(wa, static_cast<double>(m));
        rep.add("radial_upper", target, "th10");
        rep.link("power_radius", "radial_upper");
        if (std::abs(wm - target) <= tol * std::max(1.0, target)) {
            // equality forces the power norm to saturate as well
            const double npow = spectral_norm(am);
            rep.add("power_norm", npow, "th10");
            rep.add("norm_target", std::pow(na, static_cast<double>(m)), "th10");
            rep.link("power_norm", "norm_target");
            if (std::abs(npow - std::pow(na, static_cast<double>(m))) >
                tol * std::max(1.0, std::pow(na, static_cast<double>(m))))
                throw numerical_error("th10_chain: saturated radius without saturated norm");
        }
    }
    return rep;
}

struct TrefWitness {
    std::vector<cplx> x; ///< unit vector in C^n; the tensor eigenvector is sum x_j e_j^{(x)m}
    cplx lambda;
};

struct TrefVerdict {
    std::size_t m = 1;
    bool applicable = false; ///< requires w(A) = ||A||
    bool radial = false;
    double power_radius = 0.0;
    double target = 0.0; ///< w(A)^m
    bool equality = false;
    std::optional<TrefWitness> witness;
    bool partial_diag = false; ///< max-modulus eigenvalues all semisimple
};

namespace detail {

/// K: n^m x n matrix with columns (A e_j)^{(x)m}; E: same shape with columns
/// e_j^{(x)m} (orthonormal, and E* K = A^om entrywise).
inline std::pair<CMatrix, CMatrix> tensor_column_pair(const CMatrix& a, std::size_t m) {
    const std::size_t n = a.rows();
    std::size_t dim = 1;
    for (std::size_t t = 0; t < m; ++t) {
        if (dim > element_budget() / n) throw budget_error("tensor_column_pair: n^m too large");
        dim *= n;
    }
    if (dim > element_budget() / n) throw budget_error("tensor_column_pair: n^m x n too large");
    CMatrix k(dim, n), e(dim, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<cplx> col(1, cplx{1.0, 0.0});
        for (std::size_t t = 0; t < m; ++t) {
            std::vector<cplx> next(col.size() * n);
            for (std::size_t u = 0; u < col.size(); ++u)
                for (std::size_t i = 0; i < n; ++i) next[u * n + i] = col[u] * a(i, j);
            col.swap(next);
        }
        for (std::size_t r = 0; r < dim; ++r) k(r, j) = col[r];
        // e_j^{(x)m} has a single 1 at stride (n^m - 1)/(n - 1) * j for n > 1
        std::size_t pos = 0;
        for (std::size_t t = 0; t < m; ++t) pos = pos * n + j;
        e(pos, j) = 1.0;
    }
    return {k, e};
}

/// Orthonormal basis of the null space of the tall matrix K - lambda E,
/// via the n x n Gram matrix; returns vectors with residual below tol.
inline std::vector<std::vector<cplx>> span_eigenvectors(const CMatrix& k, const CMatrix& e,
                                                        cplx lambda, double tol) {
    CMatrix d = k;
    for (std::size_t r = 0; r < e.rows(); ++r)
        for (std::size_t j = 0; j < e.cols(); ++j) d(r, j) -= lambda * e(r, j);
    return null_space_basis(d, tol);
}

} // namespace detail

/// Equality characterization for w(A^om) = w(A)^m on radial matrices: the
/// tensor power must have a max-modulus eigenvector inside span{e_j^{(x)m}},
/// searched through the reduced n-dimensional test K x = lambda E x.
inline TrefVerdict tref_check(const CMatrix& a, std::size_t m, double tol = 1e-8,
                              const RadiusOptions& opt = {}) {
    a.require_square("tref_check");
    if (m < 1) throw std::invalid_argument("tref_check: m must be >= 1");
    TrefVerdict v;
    v.m = m;
    const double na = spectral_norm(a);
    const double wa = radius_value(a, opt);
    v.radial = std::abs(wa - na) <= tol * std::max(1.0, na);
    v.applicable = v.radial;
    v.target = std::pow(wa, static_cast<double>(m));
    const CMatrix am = schur_power(a, m);
    v.power_radius = radius_value(am, opt);
    v.equality = std::abs(v.power_radius - v.target) <= tol * std::max(1.0, v.target);
    if (!v.applicable) return v;

    v.partial_diag = max_modulus_structure(a).partially_diagonalizable;

    const auto [k, e] = detail::tensor_column_pair(a, m);
    const double mod_target = std::pow(na, static_cast<double>(m));
    const double band = tol * std::max(1.0, mod_target);
    for (const cplx lam : eigenvalues(am)) {
        if (std::abs(std::abs(lam) - mod_target) > band) continue;
        const auto basis = detail::span_eigenvectors(k, e, lam, 1e-7 * std::max(1.0, mod_target));
        if (!basis.empty()) {
            v.witness = TrefWitness{basis.front(), lam};
            break;
        }
    }

    if (v.equality) {
        // equality is inherited downward: every lower power must match too
        for (std::size_t mp = 1; mp < m; ++mp) {
            const double wp = radius_value(schur_power(a, mp), opt);
            const double tp = std::pow(wa, static_cast<double>(mp));
            if (std::abs(wp - tp) > tol * std::max(1.0, tp))
                throw numerical_error("tref_check: downward closure violated");
        }
    }
    return v;
}

/// Unitary whose first k columns span the max-modulus eigenspaces, so that
/// U* A U = diag(a_1..a_k) (+) A' when A is radial. Returns (U, k).
inline std::pair<CMatrix, std::size_t> radial_block_unitary(const CMatrix& a,
                                                            double cluster_tol = 1e-6) {
    a.require_square("radial_block_unitary");
    const std::size_t n = a.rows();
    const SpectralData sd = max_modulus_structure(a, cluster_tol);
    const double scale = std::max(1.0, spectral_norm(a));
    std::vector<std::vector<cplx>> cols;
    for (const auto& mem : sd.members) {
        CMatrix shifted = a;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= mem.value;
        for (auto& vec : null_space_basis(shifted, 1e-8 * scale)) cols.push_back(std::move(vec));
    }
    // Gram-Schmidt over the eigenvector columns, then complete with e_i
    std::vector<std::vector<cplx>> basis;
    auto push = [&](std::vector<cplx> v) {
        for (const auto& u : basis) {
            cplx dot{};
            for (std::size_t i = 0; i < n; ++i) dot += std::conj(u[i]) * v[i];
            for (std::size_t i = 0; i < n; ++i) v[i] -= dot * u[i];
        }
        double nrm = 0.0;
        for (const cplx& z : v) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-10) return false;
        for (cplx& z : v) z /= nrm;
        basis.push_back(std::move(v));
        return true;
    };
    for (auto& v : cols) push(std::move(v));
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < n && basis.size() < n; ++i) {
        std::vector<cplx> ei(n);
        ei[i] = 1.0;
        push(std::move(ei));
    }
    if (basis.size() != n) throw numerical_error("radial_block_unitary: basis completion failed");
    CMatrix u(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) u(i, j) = basis[j][i];
    return {u, k};
}

/// Cross-check of the equality test in block-diagonalized coordinates:
/// the candidate eigenvalues are exactly the m-fold products of the
/// max-modulus diagonal entries of D = U* A U. Returns true when the two
/// formulations reach the same verdict.
inline bool cref_check(const CMatrix& a, std::size_t m, double tol = 1e-8,
                       const RadiusOptions& opt = {}) {
    const TrefVerdict direct = tref_check(a, m, tol, opt);
    if (!direct.applicable)
        throw std::invalid_argument("cref_check: matrix is not radial");
    const auto [u, k] = radial_block_unitary(a);
    const CMatrix d = u.adjoint() * a * u;
    const double mod_target = std::pow(spectral_norm(a), static_cast<double>(m));

    // enumerate the k-fold product family from the leading diagonal
    std::vector<cplx> family{cplx{1.0, 0.0}};
    for (std::size_t t = 0; t < m; ++t) {
        std::vector<cplx> next;
        next.reserve(family.size() * k);
        for (const cplx f : family)
            for (std::size_t j = 0; j < k; ++j) next.push_back(f * d(j, j));
        family.swap(next);
    }
    std::vector<cplx> distinct;
    for (const cplx lam : family) {
        bool seen = false;
        for (const cplx got : distinct)
            if (std::abs(lam - got) <= 1e-10 * std::max(1.0, mod_target)) { seen = true; break; }
        if (!seen) distinct.push_back(lam);
    }

    // the candidate family comes from the block coordinates, but the witness
    // equation stays in the original basis: entrywise powers do not commute
    // with unitary conjugation
    const auto [ka, ea] = detail::tensor_column_pair(a, m);
    bool d_witness = false;
    for (const cplx lam : distinct) {
        if (std::abs(std::abs(lam) - mod_target) > tol * std::max(1.0, mod_target)) continue;
        if (!detail::span_eigenvectors(ka, ea, lam, 1e-7 * std::max(1.0, mod_target)).empty()) {
            d_witness = true;
            break;
        }
    }
    return d_witness == direct.equality;
}

struct MembershipVerdict {
    bool radial = false;
    std::vector<bool> equalities; ///< m = 1 .. m_max
    bool member = false;          ///< radial and equality at every tested power
    std::optional<bool> rank_one_diagonal; ///< set when A has rank one
};

/// Scan for membership in the power-multiplicative class: w(A^om) = w(A)^m
/// for m up to m_max. Rank-one matrices carry an exact structural test:
/// membership iff A is diagonal with a single nonzero entry.
inline MembershipVerdict tforallm_scan(const CMatrix& a, std::size_t m_max, double tol = 1e-8,
                                       const RadiusOptions& opt = {}) {
    a.require_square("tforallm_scan");
    if (m_max < 1) throw std::invalid_argument("tforallm_scan: m_max must be >= 1");
    MembershipVerdict v;
    const double na = spectral_norm(a);
    const double wa = radius_value(a, opt);
    v.radial = std::abs(wa - na) <= tol * std::max(1.0, na);
    v.member = v.radial;
    for (std::size_t m = 1; m <= m_max; ++m) {
        const double wm = radius_value(schur_power(a, m), opt);
        const double target = std::pow(wa, static_cast<double>(m));
        const bool eq = std::abs(wm - target) <= tol * std::max(1.0, target);
        v.equalities.push_back(eq);
        v.member = v.member && eq;
    }
    // rank cutoff sized for singular values computed through the Gram matrix,
    // which only resolve zeros to about sqrt(machine eps) times the norm
    if (numerical_rank(a, 1e-7 * std::max(1.0, na)) == 1) {
        const double ent_tol = 1e-10 * std::max(1.0, a.max_abs());
        std::size_t nonzero = 0;
        bool diagonal = true;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                if (std::abs(a(i, j)) <= ent_tol) continue;
                if (i != j) diagonal = false;
                else ++nonzero;
            }
        v.rank_one_diagonal = diagonal && nonzero == 1;
    }
    return v;
}

enum class RadialProfile {
    normal,        ///< k = n, no contraction block
    jordan_tail,   ///< nilpotent Jordan contraction, non-normal for n >= 3
    random_tail,   ///< dense random contraction
};

/// Matrices with w = ||.|| by construction: U (diag(unimodular * r) (+) T) U*
/// with ||T|| <= r.
inline CMatrix radial_generator(Rng& rng, std::size_t n, RadialProfile profile,
                                std::size_t k = 0) {
    if (n == 0) throw std::invalid_argument("radial_generator: n must be positive");
    if (profile == RadialProfile::normal || k == 0 || k > n) k = n;
    if (profile == RadialProfile::normal) k = n;
    const double r = rng.uniform(0.5, 2.0);
    CMatrix core(n, n);
    for (std::size_t i = 0; i < k; ++i) core(i, i) = r * random_unit_phase(rng);
    const std::size_t t = n - k;
    if (t > 0) {
        CMatrix tail(t, t);
        if (profile == RadialProfile::jordan_tail) {
            for (std::size_t i = 0; i + 1 < t; ++i) tail(i, i + 1) = 1.0;
        } else {
            tail = random_matrix(rng, t, t);
        }
        const double tn = spectral_norm(tail);
        if (tn > 0.0) {
            const double shrink = rng.uniform(0.3, 0.95) * r / tn;
            for (std::size_t i = 0; i < t; ++i)
                for (std::size_t j = 0; j < t; ++j) core(k + i, k + j) = shrink * tail(i, j);
        }
    }
    const CMatrix u = random_unitary(rng, n);
    return u * core * u.adjoint();
}

} // namespace kronrad
