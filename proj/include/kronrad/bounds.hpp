#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "kronrad/complex_matrix.hpp"
#include "kronrad/radius.hpp"
#include "kronrad/report.hpp"
#include "kronrad/spectral.hpp"

namespace kronrad {

/// Classical upper bound w(A (x) B) <= w(A) ||B||.
inline double holbrook(const CMatrix& a, const CMatrix& b) {
    return radius_value(a) * spectral_norm(b);
}

/// w([[0, x], [y, 0]] (x) B) by the exact rotation sweep on the 2m x 2m matrix.
inline double two_by_two_kron_radius(cplx x, cplx y, const CMatrix& b,
                                     const RadiusOptions& opt = {}) {
    CMatrix cell(2, 2);
    cell(0, 1) = x;
    cell(1, 0) = y;
    return radius_value(kron(cell, b), opt);
}

struct P3Chain {
    BoundReport report;
    bool sandwich_equality = false; ///< w(A (x) B) = w(A) w(B) within tolerance
};

/// Chain w(A) w(B) <= w(A (x) B) <= min{ w(A) ||B||, w(B) ||A|| }.
inline P3Chain p3_chain(const CMatrix& a, const CMatrix& b, const RadiusOptions& opt = {}) {
    P3Chain out;
    out.report = BoundReport("p3");
    const double wa = radius_value(a, opt);
    const double wb = radius_value(b, opt);
    const double na = spectral_norm(a);
    const double nb = spectral_norm(b);
    const double wk = radius_value(kron(a, b), opt);
    out.report.add("product_lower", wa * wb, "p3");
    out.report.add("kron_radius", wk, "p3");
    out.report.add("min_mixed_upper", std::min(wa * nb, wb * na), "p3");
    out.report.link("product_lower", "kron_radius");
    out.report.link("kron_radius", "min_mixed_upper");
    out.sandwich_equality = std::abs(wk - wa * wb) <= 1e-8 * std::max(1.0, wa * wb);
    return out;
}

struct CMatrices {
    CMatrix c;      ///< off-diagonal entries are exact 2x2-block radii
    CMatrix c_circ; ///< off-diagonal entries |a_ij| ||B||
};

/// The two refining comparison matrices: diagonal |a_ii| w(B) in both;
/// C uses the true radius of each [[0, a_ij], [a_ji, 0]] (x) B block, while
/// C_circ relaxes the off-diagonal to |a_ij| ||B||.
inline CMatrices c_matrices(const CMatrix& a, const CMatrix& b, const RadiusOptions& opt = {}) {
    a.require_square("c_matrices");
    const std::size_t n = a.rows();
    const double wb = radius_value(b, opt);
    const double nb = spectral_norm(b);
    CMatrices out{CMatrix(n, n), CMatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i) {
        out.c(i, i) = std::abs(a(i, i)) * wb;
        out.c_circ(i, i) = std::abs(a(i, i)) * wb;
        for (std::size_t j = i + 1; j < n; ++j) {
            // swapping (a_ij, a_ji) is a permutation similarity, so the block
            // radius is shared between the (i,j) and (j,i) entries
            const double cij = two_by_two_kron_radius(a(i, j), a(j, i), b, opt);
            out.c(i, j) = cij;
            out.c(j, i) = cij;
            out.c_circ(i, j) = std::abs(a(i, j)) * nb;
            out.c_circ(j, i) = std::abs(a(j, i)) * nb;
        }
    }
    return out;
}

/// Refinement chain of the Holbrook bound:
/// w(A (x) B) <= w(C) <= w(C_circ), plus Holbrook itself for context.
inline BoundReport th4_chain(const CMatrix& a, const CMatrix& b, const RadiusOptions& opt = {}) {
    BoundReport rep("th4");
    const CMatrices cm = c_matrices(a, b, opt);
    const double wk = radius_value(kron(a, b), opt);
    rep.add("kron_radius", wk, "th4");
    rep.add("c_radius", radius_value(cm.c, opt), "th4");
    rep.add("c_circ_radius", radius_value(cm.c_circ, opt), "th4");
    rep.add("holbrook", holbrook(a, b), "holbrook");
    rep.link("kron_radius", "c_radius");
    rep.link("c_radius", "c_circ_radius");
    if (a.entrywise_real_nonneg())
        rep.link("c_circ_radius", "holbrook"); // needs entrywise monotonicity
    return rep;
}

/// Corollary-level refinements: w(A') w(B) with a'_ij = max(|a_ij|, |a_ji|),
/// and w(C_hat) built from operator absolute values of B.
inline BoundReport refined_bounds(const CMatrix& a, const CMatrix& b,
                                  const RadiusOptions& opt = {}) {
    a.require_square("refined_bounds");
    const std::size_t n = a.rows();
    const double wb = radius_value(b, opt);
    const CMatrix abs_b = matrix_abs(b);
    const CMatrix abs_bstar = matrix_abs(b.adjoint());

    CMatrix aprime(n, n);
    CMatrix chat(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        aprime(i, i) = std::abs(a(i, i));
        chat(i, i) = std::abs(a(i, i)) * wb;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double mx = std::max(std::abs(a(i, j)), std::abs(a(j, i)));
            aprime(i, j) = mx;
            aprime(j, i) = mx;
            const double aij = std::abs(a(i, j)), aji = std::abs(a(j, i));
            const double n1 = spectral_norm(aij * abs_b + aji * abs_bstar);
            const double n2 = spectral_norm(aji * abs_b + aij * abs_bstar);
            const double hat = 0.5 * std::sqrt(n1) * std::sqrt(n2);
            chat(i, j) = hat;
            chat(j, i) = hat;
        }
    }
    BoundReport rep("th2");
    rep.add("kron_radius", radius_value(kron(a, b), opt), "th2");
    rep.add("aprime_bound", radius_value(aprime, opt) * wb, "th2");
    rep.add("chat_radius", radius_value(chat, opt), "th2");
    rep.link("kron_radius", "aprime_bound");
    rep.link("kron_radius", "chat_radius");
    return rep;
}

struct EqualityCheck {
    double w_a = 0.0, w_b = 0.0, norm_b = 0.0, w_kron = 0.0;
    bool forward_applicable = false; ///< w(B) = ||B|| within tol
    bool forward_ok = true;          ///< equality then follows
    bool converse_applicable = false; ///< all a_ij >= 0 and a_ii != 0
    bool equality = false;            ///< w(A (x) B) = w(A) ||B|| within tol
    bool converse_ok = true;          ///< equality then forces w(B) = ||B||
};

/// Equality characterization for w(A (x) B) = w(A) ||B||.
inline EqualityCheck cor1_equality_check(const CMatrix& a, const CMatrix& b, double tol = 1e-8,
                                         const RadiusOptions& opt = {}) {
    EqualityCheck out;
    out.w_a = radius_value(a, opt);
    out.w_b = radius_value(b, opt);
    out.norm_b = spectral_norm(b);
    out.w_kron = radius_value(kron(a, b), opt);

    const double scale_b = std::max(1.0, out.norm_b);
    const double scale_k = std::max(1.0, out.w_a * out.norm_b);
    out.forward_applicable = std::abs(out.w_b - out.norm_b) <= tol * scale_b;
    if (out.forward_applicable)
        out.forward_ok = std::abs(out.w_kron - out.w_a * out.norm_b) <= tol * scale_k;

    bool nonneg_diag = a.is_square() && a.entrywise_real_nonneg();
    if (nonneg_diag)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (a(i, i) == cplx{}) nonneg_diag = false;
    out.converse_applicable = nonneg_diag;
    out.equality = std::abs(out.w_kron - out.w_a * out.norm_b) <= tol * scale_k;
    if (out.converse_applicable && out.equality)
        out.converse_ok = std::abs(out.w_b - out.norm_b) <= tol * scale_b;
    return out;
}

/// Four-term chain
/// w(A) w(B) <= w(A (x) B) <= ||A|| w(B) <= sqrt(max row sum * max col sum) w(B).
inline BoundReport e14_chain(const CMatrix& a, const CMatrix& b, const RadiusOptions& opt = {}) {
    BoundReport rep("thm4_1");
    const double wa = radius_value(a, opt);
    const double wb = radius_value(b, opt);
    const double na = spectral_norm(a);
    double row = 0.0, col = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double rs = 0.0, cs = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            rs += std::abs(a(i, j));
            cs += std::abs(a(j, i));
        }
        row = std::max(row, rs);
        col = std::max(col, cs);
    }
    rep.add("product_lower", wa * wb, "thm4_1");
    rep.add("kron_radius", radius_value(kron(a, b), opt), "thm4_1");
    rep.add("norm_upper", na * wb, "thm4_1");
    rep.add("rowcol_upper", std::sqrt(row * col) * wb, "thm4_1");
    rep.link("product_lower", "kron_radius");
    rep.link("kron_radius", "norm_upper");
    rep.link("norm_upper", "rowcol_upper");
    return rep;
}

/// Block-matrix norm comparison: ||[P_ij]|| <= || [ ||P_ij|| ] ||.
inline std::pair<double, double> hou_du_gap(const std::vector<std::vector<CMatrix>>& blocks) {
    const std::size_t n = blocks.size();
    if (n == 0 || blocks.front().size() != n)
        throw std::invalid_argument("hou_du_gap: blocks must form a square grid");
    const std::size_t br = blocks[0][0].rows(), bc = blocks[0][0].cols();
    for (const auto& row : blocks) {
        if (row.size() != n) throw std::invalid_argument("hou_du_gap: ragged grid");
        for (const auto& blk : row)
            if (blk.rows() != br || blk.cols() != bc)
                throw std::invalid_argument("hou_du_gap: block shape mismatch");
    }
    CMatrix assembled(n * br, n * bc);
    CMatrix norms(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t p = 0; p < br; ++p)
                for (std::size_t q = 0; q < bc; ++q)
                    assembled(i * br + p, j * bc + q) = blocks[i][j](p, q);
            norms(i, j) = spectral_norm(blocks[i][j]);
        }
    return {spectral_norm(assembled), spectral_norm(norms)};
}

} // namespace kronrad
