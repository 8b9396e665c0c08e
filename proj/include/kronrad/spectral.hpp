#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "kronrad/complex_matrix.hpp"

namespace kronrad {

struct HermitianEigen {
    std::vector<double> values; ///< ascending
    CMatrix vectors;            ///< unitary, columns match values
};

/// Cyclic-Jacobi eigensolver for Hermitian matrices.
///
/// Each sweep annihilates every off-diagonal pair with a unitary 2x2
/// rotation; convergence is quadratic once the off-diagonal mass is small.
inline HermitianEigen hermitian_eigs(const CMatrix& h_in, double herm_tol = 1e-9) {
    h_in.require_square("hermitian_eigs");
    const std::size_t n = h_in.rows();
    const double scale = h_in.max_abs();
    if (h_in.hermitian_defect() > herm_tol * std::max(1.0, scale))
        throw std::invalid_argument("hermitian_eigs: input is not Hermitian within tolerance");

    // Work on the exactly-Hermitian part so roundoff in the input cannot
    // leak complex values onto the diagonal.
    CMatrix h = 0.5 * (h_in + h_in.adjoint());
    CMatrix v = CMatrix::identity(n);

    const int max_sweeps = 100;
    const double stop = 1e-15 * std::max(1.0, scale);
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off = std::max(off, std::abs(h(p, q)));
        if (off <= stop) break;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx hpq = h(p, q);
                const double r = std::abs(hpq);
                if (r <= stop * 1e-2) continue;
                const cplx phase = hpq / r; // e^{i phi}
                const double app = h(p, p).real();
                const double aqq = h(q, q).real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // Column rotation V = D*J with D = diag(1, e^{-i phi}),
                // J = [[c, s], [-s, c]]; update H <- V* H V, vectors <- vectors*V.
                const cplx vpp = c, vpq = s;
                const cplx vqp = -s * std::conj(phase), vqq = c * std::conj(phase);
                for (std::size_t i = 0; i < n; ++i) { // right-multiply rows
                    const cplx hip = h(i, p), hiq = h(i, q);
                    h(i, p) = hip * vpp + hiq * vqp;
                    h(i, q) = hip * vpq + hiq * vqq;
                }
                for (std::size_t j = 0; j < n; ++j) { // left-multiply by V*
                    const cplx hpj = h(p, j), hqj = h(q, j);
                    h(p, j) = std::conj(vpp) * hpj + std::conj(vqp) * hqj;
                    h(q, j) = std::conj(vpq) * hpj + std::conj(vqq) * hqj;
                }
                h(p, q) = 0.0;
                h(q, p) = 0.0;
                h(p, p) = h(p, p).real();
                h(q, q) = h(q, q).real();
                for (std::size_t i = 0; i < n; ++i) {
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = vip * vpp + viq * vqp;
                    v(i, q) = vip * vpq + viq * vqq;
                }
            }
        }
    }
    if (sweep == max_sweeps)
        throw numerical_error("hermitian_eigs: no convergence after 100 sweeps");

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return h(a, a).real() < h(b, b).real();
    });
    HermitianEigen out;
    out.values.resize(n);
    out.vectors = CMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = h(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

namespace detail {

/// Householder reduction to upper Hessenberg form (in place).
inline void hessenberg(CMatrix& h) {
    const std::size_t n = h.rows();
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double colnorm = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) colnorm += std::norm(h(i, k));
        colnorm = std::sqrt(colnorm);
        if (colnorm < 1e-300) continue;
        cplx alpha = h(k + 1, k);
        const double aa = std::abs(alpha);
        const cplx phase = aa > 0.0 ? alpha / aa : cplx{1.0, 0.0};
        const cplx beta = -phase * colnorm;
        std::vector<cplx> u(n, cplx{});
        u[k + 1] = alpha - beta;
        for (std::size_t i = k + 2; i < n; ++i) u[i] = h(i, k);
        double unorm2 = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) unorm2 += std::norm(u[i]);
        if (unorm2 < 1e-300) continue;
        // H <- (I - 2uu*/|u|^2) H (I - 2uu*/|u|^2)
        for (std::size_t j = 0; j < n; ++j) {
            cplx dot = 0.0;
            for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(u[i]) * h(i, j);
            dot *= 2.0 / unorm2;
            for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= dot * u[i];
        }
        for (std::size_t i = 0; i < n; ++i) {
            cplx dot = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * u[j];
            dot *= 2.0 / unorm2;
            for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= dot * std::conj(u[j]);
        }
        h(k + 1, k) = beta;
        for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

/// Roots of the 2x2 block [[a, b], [c, d]].
inline std::pair<cplx, cplx> eig2x2(cplx a, cplx b, cplx c, cplx d) {
    const cplx tr = a + d;
    const cplx disc = std::sqrt((a - d) * (a - d) + 4.0 * b * c);
    cplx l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
    // pick the larger root first, then recover the other from the determinant
    if (std::abs(l1) < std::abs(l2)) std::swap(l1, l2);
    if (std::abs(l1) > 0.0) l2 = (a * d - b * c) / l1;
    return {l1, l2};
}

} // namespace detail

/// Deterministic eigenvalue order: descending modulus, then descending
/// real part, then descending imaginary part.
inline void sort_eigenvalues(std::vector<cplx>& ev) {
    std::sort(ev.begin(), ev.end(), [](const cplx& x, const cplx& y) {
        const double mx = std::abs(x), my = std::abs(y);
        if (mx != my) return mx > my;
        if (x.real() != y.real()) return x.real() > y.real();
        return x.imag() > y.imag();
    });
}

/// All eigenvalues of a square complex matrix, via Hessenberg reduction and
/// Wilkinson-shifted QR with deflation.
inline std::vector<cplx> eigenvalues(const CMatrix& a) {
    a.require_square("eigenvalues");
    const std::size_t n = a.rows();
    if (n > 256) throw std::invalid_argument("eigenvalues: dimension capped at 256");
    const double scale = std::max(1.0, a.max_abs());

    CMatrix h = a;
    detail::hessenberg(h);
    std::vector<cplx> ev;
    ev.reserve(n);

    const double eps = 1e-15;
    std::size_t hi = n; // active block is [lo, hi)
    std::size_t iters = 0;
    const std::size_t max_iters = 30 * n + 30;
    std::size_t stagnation = 0;

    while (hi > 0) {
        if (hi == 1) { ev.push_back(h(0, 0)); hi = 0; break; }
        // deflate tiny subdiagonals
        std::size_t lo = hi - 1;
        while (lo > 0) {
            const double sub = std::abs(h(lo, lo - 1));
            if (sub <= eps * (std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo)) + scale * 1e-3)) {
                h(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi - 1) { ev.push_back(h(lo, lo)); --hi; stagnation = 0; continue; }
        if (lo == hi - 2) {
            auto [l1, l2] = detail::eig2x2(h(lo, lo), h(lo, lo + 1), h(lo + 1, lo), h(lo + 1, lo + 1));
            ev.push_back(l1);
            ev.push_back(l2);
            hi -= 2;
            stagnation = 0;
            continue;
        }
        if (++iters > max_iters)
            throw numerical_error("eigenvalues: QR iteration did not converge");

        // Wilkinson shift: trailing 2x2 eigenvalue closest to the corner entry.
        auto [w1, w2] = detail::eig2x2(h(hi - 2, hi - 2), h(hi - 2, hi - 1),
                                       h(hi - 1, hi - 2), h(hi - 1, hi - 1));
        cplx sigma = (std::abs(w1 - h(hi - 1, hi - 1)) < std::abs(w2 - h(hi - 1, hi - 1))) ? w1 : w2;
        if (++stagnation % 12 == 0) // occasional exceptional shift
            sigma = h(hi - 1, hi - 1) + cplx{std::abs(h(hi - 1, hi - 2)), 0.0};

        for (std::size_t i = lo; i < hi; ++i) h(i, i) -= sigma;
        // QR by Givens rotations G_k = (1/r)[[conj(a), conj(b)], [-b, a]]
        std::vector<std::array<cplx, 2>> rot(hi - lo - 1); // store (a/r, b/r)
        for (std::size_t k = lo; k + 1 < hi; ++k) {
            const cplx ak = h(k, k), bk = h(k + 1, k);
            const double r = std::sqrt(std::norm(ak) + std::norm(bk));
            if (r < 1e-300) { rot[k - lo] = {cplx{1.0, 0.0}, cplx{0.0, 0.0}}; continue; }
            const cplx ca = ak / r, cb = bk / r;
            rot[k - lo] = {ca, cb};
            for (std::size_t j = k; j < hi; ++j) {
                const cplx t1 = h(k, j), t2 = h(k + 1, j);
                h(k, j) = std::conj(ca) * t1 + std::conj(cb) * t2;
                h(k + 1, j) = -cb * t1 + ca * t2;
            }
        }
        // right-multiply by the adjoints in the same order: H <- R Q
        for (std::size_t k = lo; k + 1 < hi; ++k) {
            const cplx ca = rot[k - lo][0], cb = rot[k - lo][1];
            for (std::size_t i = lo; i <= std::min(k + 1, hi - 1); ++i) {
                const cplx t1 = h(i, k), t2 = h(i, k + 1);
                h(i, k) = ca * t1 + cb * t2;
                h(i, k + 1) = -std::conj(cb) * t1 + std::conj(ca) * t2;
            }
        }
        for (std::size_t i = lo; i < hi; ++i) h(i, i) += sigma;
    }

    sort_eigenvalues(ev);
    return ev;
}

/// Descending singular values.
inline std::vector<double> singular_values(const CMatrix& a) {
    const CMatrix gram = a.adjoint() * a;
    HermitianEigen eg = hermitian_eigs(gram);
    std::vector<double> sv;
    sv.reserve(eg.values.size());
    for (auto it = eg.values.rbegin(); it != eg.values.rend(); ++it)
        sv.push_back(std::sqrt(std::max(0.0, *it)));
    if (sv.size() > std::min(a.rows(), a.cols())) sv.resize(std::min(a.rows(), a.cols()));
    return sv;
}

inline double spectral_norm(const CMatrix& a) {
    const CMatrix gram = a.adjoint() * a;
    HermitianEigen eg = hermitian_eigs(gram);
    return std::sqrt(std::max(0.0, eg.values.back()));
}

inline double spectral_radius(const CMatrix& a) {
    double r = 0.0;
    for (const cplx& ev : eigenvalues(a)) r = std::max(r, std::abs(ev));
    return r;
}

/// Number of singular values above tol.
inline std::size_t numerical_rank(const CMatrix& a, double tol) {
    std::size_t rank = 0;
    for (double s : singular_values(a))
        if (s > tol) ++rank;
    return rank;
}

/// Orthonormal basis of the numerical null space of A, one vector per entry.
inline std::vector<std::vector<cplx>> null_space_basis(const CMatrix& a, double tol) {
    const CMatrix gram = a.adjoint() * a;
    HermitianEigen eg = hermitian_eigs(gram);
    std::vector<std::vector<cplx>> basis;
    for (std::size_t j = 0; j < eg.values.size(); ++j) {
        if (std::sqrt(std::max(0.0, eg.values[j])) > tol) continue;
        std::vector<cplx> v(a.cols());
        for (std::size_t i = 0; i < a.cols(); ++i) v[i] = eg.vectors(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Hermitian PSD square root with eigenvalue clamping at zero.
inline CMatrix hermitian_sqrt(const CMatrix& p) {
    HermitianEigen eg = hermitian_eigs(p);
    const std::size_t n = p.rows();
    CMatrix s(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(0.0, eg.values[k]));
        if (root == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                s(i, j) += root * eg.vectors(i, k) * std::conj(eg.vectors(j, k));
    }
    return s;
}

/// Operator absolute value |A| = (A*A)^{1/2}.
inline CMatrix matrix_abs(const CMatrix& a) { return hermitian_sqrt(a.adjoint() * a); }

struct MaxModulusMember {
    cplx value;
    std::size_t algebraic = 0;
    std::size_t geometric = 0;
};

struct SpectralData {
    std::vector<cplx> eigenvalues; ///< deterministic descending order
    std::vector<double> singular_vals;
    double radius = 0.0; ///< spectral radius r(A)
    std::vector<std::size_t> member_indices;
    std::vector<MaxModulusMember> members; ///< one per distinct max-modulus eigenvalue
    bool partially_diagonalizable = false; ///< geometric == algebraic for every member
};

/// Cluster the eigenvalues of maximum modulus and report their algebraic and
/// geometric multiplicities.
inline SpectralData max_modulus_structure(const CMatrix& a, double cluster_tol = 1e-6) {
    a.require_square("max_modulus_structure");
    if (a.rows() > 64)
        throw std::invalid_argument("max_modulus_structure: dimension capped at 64");
    SpectralData out;
    out.eigenvalues = eigenvalues(a);
    out.singular_vals = singular_values(a);
    const std::size_t n = a.rows();
    for (const cplx& ev : out.eigenvalues) out.radius = std::max(out.radius, std::abs(ev));
    const double band = cluster_tol * std::max(1.0, out.radius);
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(out.eigenvalues[i]) >= out.radius - band) out.member_indices.push_back(i);

    const double norm = out.singular_vals.empty() ? 0.0 : out.singular_vals.front();
    // sized for singular values obtained through the Gram matrix, which only
    // resolve zeros to about sqrt(machine eps) times the norm of A - lambda I
    const double rank_tol = 1e-7 * std::max(1.0, norm);
    for (std::size_t idx : out.member_indices) {
        const cplx lam = out.eigenvalues[idx];
        bool seen = false;
        for (const auto& m : out.members)
            if (std::abs(m.value - lam) <= band) { seen = true; break; }
        if (seen) continue;
        MaxModulusMember m;
        m.value = lam;
        for (std::size_t j : out.member_indices)
            if (std::abs(out.eigenvalues[j] - lam) <= band) ++m.algebraic;
        CMatrix shifted = a;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lam;
        m.geometric = n - numerical_rank(shifted, rank_tol);
        out.members.push_back(m);
    }
    out.partially_diagonalizable = true;
    for (const auto& m : out.members)
        if (m.geometric < m.algebraic) out.partially_diagonalizable = false;
    return out;
}

} // namespace kronrad
