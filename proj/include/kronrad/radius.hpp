#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "kronrad/complex_matrix.hpp"
#include "kronrad/spectral.hpp"

namespace kronrad {

struct RadiusOptions {
    std::size_t grid = 1024;
    double theta_tol = 1e-12;
    bool verify = false; ///< double the grid and assert agreement, cross-check shortcut
};

struct RadiusResult {
    double value = 0.0;
    double theta_star = 0.0;
    std::vector<cplx> attaining_vector;
    bool is_radial = false;   ///< w(A) = ||A|| within tolerance
    bool is_spectral = false; ///< w(A) = r(A) within tolerance
};

namespace detail {

/// lambda_max of Re(e^{i theta} A).
inline double real_part_top_eig(const CMatrix& a, double theta) {
    const std::size_t n = a.rows();
    const cplx phase{std::cos(theta), std::sin(theta)};
    CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (phase * a(i, j) + std::conj(phase * a(j, i)));
    return hermitian_eigs(h).values.back();
}

inline double golden_max(const CMatrix& a, double lo, double hi, double tol) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = real_part_top_eig(a, x1);
    double f2 = real_part_top_eig(a, x2);
    while (hi - lo > tol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = real_part_top_eig(a, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = real_part_top_eig(a, x1);
        }
    }
    return real_part_top_eig(a, 0.5 * (lo + hi));
}

/// Rotation sweep w(A) = max_theta lambda_max(Re(e^{i theta} A)), returning
/// the winning angle as well.
inline std::pair<double, double> radius_sweep(const CMatrix& a, const RadiusOptions& opt) {
    const double two_pi = 2.0 * std::numbers::pi;
    const std::size_t grid = std::max<std::size_t>(opt.grid, 8);
    std::vector<double> f(grid);
    for (std::size_t g = 0; g < grid; ++g)
        f[g] = real_part_top_eig(a, two_pi * static_cast<double>(g) / grid);

    // three best non-adjacent cells, refined over the cell and its neighbors
    std::vector<std::size_t> best;
    std::vector<bool> blocked(grid, false);
    for (int pick = 0; pick < 3; ++pick) {
        std::size_t arg = grid;
        double top = -1e300;
        for (std::size_t g = 0; g < grid; ++g)
            if (!blocked[g] && f[g] > top) { top = f[g]; arg = g; }
        if (arg == grid) break;
        best.push_back(arg);
        blocked[arg] = true;
        blocked[(arg + 1) % grid] = true;
        blocked[(arg + grid - 1) % grid] = true;
    }

    const double step = two_pi / grid;
    double value = -1e300, theta_star = 0.0;
    for (std::size_t g : best) {
        const double center = step * static_cast<double>(g);
        const double refined = golden_max(a, center - step, center + step, opt.theta_tol);
        if (refined > value) { value = refined; theta_star = center; }
        // smallest theta wins on exact ties
        if (refined == value && center < theta_star) theta_star = center;
    }
    // re-locate the winning angle inside the refined cell
    {
        constexpr double inv_phi = 0.6180339887498949;
        double lo = theta_star - step, hi = theta_star + step;
        while (hi - lo > opt.theta_tol) {
            const double x1 = hi - inv_phi * (hi - lo);
            const double x2 = lo + inv_phi * (hi - lo);
            if (real_part_top_eig(a, x1) < real_part_top_eig(a, x2)) lo = x1; else hi = x2;
        }
        theta_star = 0.5 * (lo + hi);
    }
    theta_star = std::fmod(theta_star + two_pi, two_pi);
    return {value, theta_star};
}

} // namespace detail

/// Shortcut for entrywise non-negative matrices: w(A) = r(A + A*)/2.
inline double numerical_radius_nonneg(const CMatrix& a) {
    a.require_square("numerical_radius_nonneg");
    if (!a.entrywise_real_nonneg())
        throw std::invalid_argument("numerical_radius_nonneg: entries must be real and >= 0");
    const CMatrix h = a + a.adjoint();
    const HermitianEigen eg = hermitian_eigs(h);
    // Perron: for a non-negative Hermitian matrix the top eigenvalue
    // dominates in modulus
    return 0.5 * std::max(std::abs(eg.values.front()), std::abs(eg.values.back()));
}

/// Numerical radius value only (no attaining data). Applies the non-negative
/// shortcut when it is exact.
inline double radius_value(const CMatrix& a, const RadiusOptions& opt = {}) {
    a.require_square("numerical_radius");
    if (a.rows() > 256) throw std::invalid_argument("numerical_radius: dimension capped at 256");
    if (a.entrywise_real_nonneg() && !opt.verify) return numerical_radius_nonneg(a);
    auto [value, theta] = detail::radius_sweep(a, opt);
    if (opt.verify) {
        RadiusOptions doubled = opt;
        doubled.grid = opt.grid * 2;
        doubled.verify = false;
        const auto [v2, t2] = detail::radius_sweep(a, doubled);
        if (std::abs(v2 - value) > 1e-9 * std::max(1.0, value))
            throw numerical_error("numerical_radius: grid-doubling check failed");
        if (a.entrywise_real_nonneg() &&
            std::abs(numerical_radius_nonneg(a) - value) > 1e-9 * std::max(1.0, value))
            throw numerical_error("numerical_radius: non-negative shortcut disagrees with sweep");
    }
    return value;
}

/// Full numerical radius computation with attaining vector and the
/// radial/spectral predicates.
inline RadiusResult numerical_radius(const CMatrix& a, const RadiusOptions& opt = {}) {
    a.require_square("numerical_radius");
    if (a.rows() > 256) throw std::invalid_argument("numerical_radius: dimension capped at 256");
    RadiusResult res;
    auto [value, theta] = detail::radius_sweep(a, opt);
    if (a.entrywise_real_nonneg()) {
        const double shortcut = numerical_radius_nonneg(a);
        if (opt.verify && std::abs(shortcut - value) > 1e-9 * std::max(1.0, value))
            throw numerical_error("numerical_radius: non-negative shortcut disagrees with sweep");
        value = std::max(value, shortcut);
    }
    res.value = value;
    res.theta_star = theta;

    const std::size_t n = a.rows();
    const cplx phase{std::cos(theta), std::sin(theta)};
    CMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = 0.5 * (phase * a(i, j) + std::conj(phase * a(j, i)));
    const HermitianEigen eg = hermitian_eigs(h);
    res.attaining_vector.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.attaining_vector[i] = eg.vectors(i, n - 1);

    const double norm = spectral_norm(a);
    const double tol = 1e-8 * std::max(1.0, norm);
    res.is_radial = std::abs(res.value - norm) <= tol;
    res.is_spectral = std::abs(res.value - spectral_radius(a)) <= tol;
    return res;
}

/// Closed form for anti-diagonal matrices:
/// w = (1/2) max_j (|lam_j| + |lam_{n+1-j}|).
inline double radius_antidiagonal(const std::vector<cplx>& lams) {
    const std::size_t n = lams.size();
    if (n == 0) throw std::invalid_argument("radius_antidiagonal: empty entry list");
    double best = 0.0;
    for (std::size_t j = 0; j < (n + 1) / 2; ++j)
        best = std::max(best, 0.5 * (std::abs(lams[j]) + std::abs(lams[n - 1 - j])));
    return best;
}

} // namespace kronrad
