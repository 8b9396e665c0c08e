#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "kronrad/complex_matrix.hpp"
#include "kronrad/spectral.hpp"

namespace kronrad {

/// Trigonometric root bound: cos(pi/(n+1)) + (|a_{n-1}| + sqrt(sum |a_k|^2)) / 2.
inline double fujii_kubo_bound(const Poly& p) {
    const std::size_t n = p.degree();
    double sq = 0.0;
    for (const cplx& c : p.coeffs) sq += std::norm(c);
    return std::cos(std::numbers::pi / static_cast<double>(n + 1)) +
           0.5 * (std::abs(p.coeffs.back()) + std::sqrt(sq));
}

/// Circulant-shift bound: 1 + (|a_{n-1}| + sqrt(|a_0 + 1|^2 + |a_1|^2 + ...)) / 2.
/// The leading 1 is the radius of the cyclic shift; the rest is the
/// rank-one-row radius of the perturbation.
inline double est_poly_bound(const Poly& p) {
    const auto& a = p.coeffs;
    double sq = std::norm(a.front() + cplx{1.0, 0.0});
    for (std::size_t k = 1; k < a.size(); ++k) sq += std::norm(a[k]);
    return 1.0 + 0.5 * (std::abs(a.back()) + std::sqrt(sq));
}

/// w of the matrix with first row (a_1, ..., a_n) and zeros elsewhere:
/// (|a_1| + sqrt(sum |a_k|^2)) / 2.
inline double rank_one_row_radius(const std::vector<cplx>& a) {
    if (a.empty()) throw std::invalid_argument("rank_one_row_radius: empty row");
    double sq = 0.0;
    for (const cplx& c : a) sq += std::norm(c);
    return 0.5 * (std::abs(a.front()) + std::sqrt(sq));
}

struct RootBoundReport {
    Poly poly;
    std::vector<cplx> roots;
    double fujii_kubo = 0.0;
    double est_poly = 0.0;
    double max_root_modulus = 0.0;
    std::string winner; ///< "fujii_kubo", "est_poly", or "tie"
};

inline RootBoundReport root_bound_report(const Poly& p) {
    if (p.degree() > 64)
        throw std::invalid_argument("root_bound_report: degree capped at 64");
    RootBoundReport rep{p, eigenvalues(companion(p)), fujii_kubo_bound(p), est_poly_bound(p),
                        0.0, {}};
    for (const cplx& r : rep.roots)
        rep.max_root_modulus = std::max(rep.max_root_modulus, std::abs(r));
    const double gap = rep.fujii_kubo - rep.est_poly;
    if (std::abs(gap) <= 1e-12 * std::max(1.0, rep.fujii_kubo)) rep.winner = "tie";
    else rep.winner = gap < 0.0 ? "fujii_kubo" : "est_poly";
    if (rep.max_root_modulus > std::min(rep.fujii_kubo, rep.est_poly) + 1e-8)
        throw numerical_error("root_bound_report: a root escaped the bounds");
    return rep;
}

} // namespace kronrad
