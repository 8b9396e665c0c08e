#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "kronrad/complex_matrix.hpp"
#include "kronrad/rng.hpp"

namespace kronrad {

inline cplx random_cplx(Rng& rng) { return {rng.gaussian(), rng.gaussian()}; }

inline cplx random_unit_phase(Rng& rng) {
    const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return {std::cos(t), std::sin(t)};
}

inline CMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c) {
    CMatrix m(r, c);
    for (cplx& z : m.data()) z = random_cplx(rng);
    return m;
}

inline CMatrix random_nonneg_matrix(Rng& rng, std::size_t r, std::size_t c) {
    CMatrix m(r, c);
    for (cplx& z : m.data()) z = rng.uniform();
    return m;
}

inline CMatrix random_hermitian(Rng& rng, std::size_t n) {
    CMatrix g = random_matrix(rng, n, n);
    CMatrix h = g + g.adjoint();
    return 0.5 * h;
}

inline std::vector<cplx> random_vector(Rng& rng, std::size_t n) {
    std::vector<cplx> v(n);
    for (cplx& z : v) z = random_cplx(rng);
    return v;
}

/// Random unitary by modified Gram-Schmidt on a Gaussian matrix.
inline CMatrix random_unitary(Rng& rng, std::size_t n) {
    for (;;) {
        CMatrix g = random_matrix(rng, n, n);
        bool ok = true;
        for (std::size_t j = 0; j < n && ok; ++j) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(g(i, k)) * g(i, j);
                for (std::size_t i = 0; i < n; ++i) g(i, j) -= dot * g(i, k);
            }
            double nrm = 0.0;
            for (std::size_t i = 0; i < n; ++i) nrm += std::norm(g(i, j));
            nrm = std::sqrt(nrm);
            if (nrm < 1e-8) { ok = false; break; }
            for (std::size_t i = 0; i < n; ++i) g(i, j) /= nrm;
        }
        if (ok) return g;
    }
}

inline CMatrix random_permutation(Rng& rng, std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.uniform_index(i)]);
    CMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p(i, perm[i]) = 1.0;
    return p;
}

/// k times a random convex combination of permutation matrices.
inline CMatrix random_birkhoff(Rng& rng, std::size_t n, double k, std::size_t terms = 4) {
    std::vector<double> w(terms);
    double sum = 0.0;
    for (double& x : w) { x = rng.uniform() + 1e-3; sum += x; }
    CMatrix a(n, n);
    for (double x : w) a += (k * x / sum) * random_permutation(rng, n);
    return a;
}

/// Random Hermitian PSD matrix with the given rank.
inline CMatrix random_psd(Rng& rng, std::size_t n, std::size_t rank) {
    CMatrix p(n, n);
    for (std::size_t k = 0; k < rank; ++k) {
        std::vector<cplx> v = random_vector(rng, n);
        const double scale = rng.uniform(0.2, 2.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                p(i, j) += scale * v[i] * std::conj(v[j]);
    }
    // symmetrize away roundoff
    CMatrix h = 0.5 * (p + p.adjoint());
    return h;
}

} // namespace kronrad
