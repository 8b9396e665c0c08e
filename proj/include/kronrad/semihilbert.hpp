#pragma once

#include <cmath>
#include <vector>

#include "kronrad/bounds.hpp"
#include "kronrad/complex_matrix.hpp"
#include "kronrad/radius.hpp"
#include "kronrad/report.hpp"
#include "kronrad/spectral.hpp"

namespace kronrad {

/// Positive semidefinite P with cached eigendecomposition and the
/// pseudo-inverse square-root factors on its support.
class PSpace {
public:
    explicit PSpace(const CMatrix& p, double psd_tol = 1e-9) : p_(p) {
        p.require_square("PSpace");
        if (p.hermitian_defect() > psd_tol * std::max(1.0, p.max_abs()))
            throw std::invalid_argument("PSpace: P must be Hermitian");
        HermitianEigen eg = hermitian_eigs(p);
        const double top = eg.values.empty() ? 0.0 : eg.values.back();
        if (top <= 0.0) throw std::invalid_argument("PSpace: P must be nonzero PSD");
        for (double v : eg.values)
            if (v < -psd_tol * std::max(1.0, top))
                throw std::invalid_argument("PSpace: P has a negative eigenvalue");
        const double cutoff = 1e-12 * top;
        // support columns, descending eigenvalue order
        for (std::size_t k = eg.values.size(); k-- > 0;) {
            if (eg.values[k] <= cutoff) continue;
            support_values_.push_back(eg.values[k]);
            support_cols_.push_back(k);
        }
        basis_ = eg.vectors;
    }

    const CMatrix& matrix() const { return p_; }
    std::size_t dim() const { return p_.rows(); }
    std::size_t support_rank() const { return support_values_.size(); }
    const std::vector<double>& support_values() const { return support_values_; }

    /// n x r matrix of support eigenvectors.
    CMatrix support_basis() const {
        CMatrix u(dim(), support_rank());
        for (std::size_t j = 0; j < support_rank(); ++j)
            for (std::size_t i = 0; i < dim(); ++i)
                u(i, j) = basis_(i, support_cols_[j]);
        return u;
    }

    /// Orthogonal projection onto the support.
    CMatrix support_projector() const {
        const CMatrix u = support_basis();
        return u * u.adjoint();
    }

    /// Moore-Penrose pseudo-inverse (diagonalized form).
    CMatrix pseudo_inverse() const {
        const CMatrix u = support_basis();
        CMatrix d = CMatrix(support_rank(), support_rank());
        for (std::size_t k = 0; k < support_rank(); ++k) d(k, k) = 1.0 / support_values_[k];
        return u * d * u.adjoint();
    }

private:
    CMatrix p_;
    CMatrix basis_;
    std::vector<double> support_values_; ///< descending
    std::vector<std::size_t> support_cols_;
};

/// B admits the reduced operator iff B* maps the support of P into itself,
/// i.e. Pi B Pi_perp = 0 within tolerance.
inline bool is_p_adjointable(const PSpace& ps, const CMatrix& b, double tol = 1e-9) {
    if (b.rows() != ps.dim() || b.cols() != ps.dim())
        throw std::invalid_argument("is_p_adjointable: shape mismatch");
    const CMatrix pi = ps.support_projector();
    CMatrix pi_perp = CMatrix::identity(ps.dim());
    pi_perp -= pi;
    const double defect = spectral_norm(pi * b * pi_perp);
    return defect <= tol * std::max(1.0, spectral_norm(b));
}

/// The reduced matrix on the support of P:
/// M = S^{1/2} (U_S* B U_S) S^{-1/2}, realizing the intertwining P B = L P
/// with L the lift of M.
inline CMatrix reduced_matrix(const PSpace& ps, const CMatrix& b, double tol = 1e-9) {
    if (!is_p_adjointable(ps, b, tol))
        throw std::invalid_argument("reduced_matrix: B is not adjointable for this P");
    const CMatrix u = ps.support_basis();
    const CMatrix compressed = u.adjoint() * b * u;
    const std::size_t r = ps.support_rank();
    CMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        const double si = std::sqrt(ps.support_values()[i]);
        for (std::size_t j = 0; j < r; ++j)
            m(i, j) = si * compressed(i, j) / std::sqrt(ps.support_values()[j]);
    }
    return m;
}

/// Embed a reduced matrix back into the ambient space: L = U_S S^{1/2} M S^{-1/2} U_S*.
inline CMatrix lift_reduced(const PSpace& ps, const CMatrix& m) {
    const CMatrix u = ps.support_basis();
    const std::size_t r = ps.support_rank();
    CMatrix scaled(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            scaled(i, j) = std::sqrt(ps.support_values()[i]) * m(i, j) /
                           std::sqrt(ps.support_values()[j]);
    return u * scaled * u.adjoint();
}

struct PRadiusNorm {
    double w_p = 0.0;
    double norm_p = 0.0;
};

/// Seminorm quantities via the reduction: w_P(B) = w(M), ||B||_P = ||M||.
inline PRadiusNorm p_radius_and_norm(const PSpace& ps, const CMatrix& b,
                                     const RadiusOptions& opt = {}) {
    const CMatrix m = reduced_matrix(ps, b);
    return {radius_value(m, opt), spectral_norm(m)};
}

struct PKronSuite {
    BoundReport report;
    EqualityCheck equality; ///< w_{I (x) P}(A (x) B) = w(A) ||B||_P characterization
};

/// Full seminormed Kronecker suite. The radius in the seminorm is computed
/// through the block reduction identity: the reduced matrix of A (x) B under
/// I_n (x) P is A (x) M.
inline PKronSuite p_kron_suite(const PSpace& ps, const CMatrix& a, const CMatrix& b,
                               const RadiusOptions& opt = {}) {
    a.require_square("p_kron_suite");
    const std::size_t n = a.rows();
    const CMatrix m = reduced_matrix(ps, b);
    const double w_p = radius_value(m, opt);
    const double norm_p = spectral_norm(m);
    const double wa = radius_value(a, opt);
    const double na = spectral_norm(a);
    const double w_kron_p = radius_value(kron(a, m), opt);

    PKronSuite out{BoundReport("semihilbert"), {}};
    BoundReport& rep = out.report;
    rep.add("product_lower", wa * w_p, "p3_4");
    rep.add("kron_p_radius", w_kron_p, "p3_4");
    rep.add("min_mixed_upper", std::min(wa * norm_p, w_p * na), "p3_4");
    rep.link("product_lower", "kron_p_radius");
    rep.link("kron_p_radius", "min_mixed_upper");

    // refined comparison matrices, with blocks measured in the seminorm
    CMatrix c(n, n);
    CMatrix c_bold(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        c(i, i) = std::abs(a(i, i)) * w_p;
        c_bold(i, i) = std::abs(a(i, i)) * w_p;
        for (std::size_t j = i + 1; j < n; ++j) {
            const double cij = two_by_two_kron_radius(a(i, j), a(j, i), m, opt);
            c(i, j) = cij;
            c(j, i) = cij;
            c_bold(i, j) = std::abs(a(i, j)) * norm_p;
            c_bold(j, i) = std::abs(a(j, i)) * norm_p;
        }
    }
    rep.add("c_radius", radius_value(c, opt), "th4_4");
    rep.add("c_bold_radius", radius_value(c_bold, opt), "th1_");
    rep.link("kron_p_radius", "c_radius");
    rep.link("c_radius", "c_bold_radius");
    if (a.entrywise_real_nonneg()) {
        rep.add("holbrook_p", wa * norm_p, "final");
        rep.link("c_bold_radius", "holbrook_p");
    }

    // equality characterization in the seminorm reduces to the plain one on M
    out.equality = cor1_equality_check(a, m, 1e-8, opt);
    return out;
}

} // namespace kronrad
