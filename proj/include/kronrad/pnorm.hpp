#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "kronrad/complex_matrix.hpp"
#include "kronrad/radius.hpp"
#include "kronrad/spectral.hpp"

namespace kronrad {

/// Exponent p in [1, inf], with infinity as an explicit variant rather than
/// a sentinel float.
class PExp {
public:
    explicit PExp(double v) : value_(v) {
        if (!(v >= 1.0) || std::isinf(v))
            throw std::invalid_argument("PExp: exponent must be a finite value >= 1");
    }

    static PExp infinity() {
        PExp p;
        p.inf_ = true;
        return p;
    }

    bool is_inf() const { return inf_; }
    bool is(double v) const { return !inf_ && value_ == v; }

    double value() const {
        if (inf_) throw std::logic_error("PExp: infinite exponent has no finite value");
        return value_;
    }

    /// Conjugate exponent q with 1/p + 1/q = 1.
    PExp conjugate() const {
        if (inf_) return PExp(1.0);
        if (value_ == 1.0) return infinity();
        return PExp(value_ / (value_ - 1.0));
    }

    std::string str() const { return inf_ ? "inf" : std::to_string(value_); }

    bool operator==(const PExp& o) const {
        return inf_ == o.inf_ && (inf_ || value_ == o.value_);
    }

private:
    PExp() = default;
    double value_ = 0.0;
    bool inf_ = false;
};

namespace detail {

/// Euclidean norms of the length-`block` segments of x.
inline std::vector<double> block_norms(const std::vector<cplx>& x, std::size_t block) {
    const std::size_t nblocks = x.size() / block;
    std::vector<double> out(nblocks, 0.0);
    for (std::size_t j = 0; j < nblocks; ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < block; ++i) s += std::norm(x[j * block + i]);
        out[j] = std::sqrt(s);
    }
    return out;
}

/// Mixed norm: lp across blocks, Euclidean inside each block.
inline double mixed_norm(const std::vector<cplx>& x, PExp p, std::size_t block) {
    const std::vector<double> b = block_norms(x, block);
    if (p.is_inf()) {
        double m = 0.0;
        for (double v : b) m = std::max(m, v);
        return m;
    }
    const double pv = p.value();
    if (pv == 1.0) {
        double s = 0.0;
        for (double v : b) s += v;
        return s;
    }
    if (pv == 2.0) {
        double s = 0.0;
        for (double v : b) s += v * v;
        return std::sqrt(s);
    }
    double s = 0.0;
    for (double v : b) s += std::pow(v, pv);
    return std::pow(s, 1.0 / pv);
}

/// Duality map: d with Re<d, x> = ||x||_p and ||d||_q = 1 (blockwise).
inline std::vector<cplx> dual_vector(const std::vector<cplx>& x, PExp p, std::size_t block) {
    const std::vector<double> b = block_norms(x, block);
    std::vector<cplx> d(x.size(), cplx{});
    if (p.is_inf()) {
        std::size_t arg = 0;
        for (std::size_t j = 1; j < b.size(); ++j)
            if (b[j] > b[arg]) arg = j;
        if (b[arg] > 0.0)
            for (std::size_t i = 0; i < block; ++i)
                d[arg * block + i] = x[arg * block + i] / b[arg];
        return d;
    }
    const double pv = p.value();
    const double total = mixed_norm(x, p, block);
    if (total == 0.0) return d;
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0.0) continue;
        const double coeff = (pv == 1.0) ? 1.0 / b[j]
                                         : std::pow(b[j] / total, pv - 1.0) / b[j];
        for (std::size_t i = 0; i < block; ++i) d[j * block + i] = coeff * x[j * block + i];
    }
    return d;
}

} // namespace detail

/// Exact lp operator norms at the classical exponents.
inline double opnorm_exact(const CMatrix& a, const PExp& p) {
    if (p.is(1.0)) {
        double best = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
            best = std::max(best, s);
        }
        return best;
    }
    if (p.is_inf()) {
        double best = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
            best = std::max(best, s);
        }
        return best;
    }
    if (p.is(2.0)) return spectral_norm(a);
    throw std::invalid_argument("opnorm_exact: exact value only at p in {1, 2, inf}");
}

struct LowerEstimate {
    double value = 0.0;
    std::vector<cplx> witness;
};

/// Constructive lower bound on the (mixed) lp operator norm: the best ratio
/// over the all-ones vector, the basis vectors, two-coordinate sums, and a
/// dual-norm power iteration started from the all-ones vector. Always a
/// valid lower bound.
inline LowerEstimate opnorm_lower(const CMatrix& a, const PExp& p, int iters = 50,
                                  std::size_t dom_block = 1, std::size_t cod_block = 1) {
    const std::size_t nc = a.cols();
    LowerEstimate best;

    auto consider = [&](const std::vector<cplx>& x) {
        const double den = detail::mixed_norm(x, p, dom_block);
        if (den <= 0.0) return;
        const double num = detail::mixed_norm(a.apply(x), p, cod_block);
        if (num / den > best.value) {
            best.value = num / den;
            best.witness = x;
        }
    };

    std::vector<cplx> ones(nc, cplx{1.0, 0.0});
    consider(ones);
    const std::size_t dom_blocks = nc / dom_block;
    for (std::size_t j = 0; j < nc; ++j) {
        std::vector<cplx> e(nc, cplx{});
        e[j] = 1.0;
        consider(e);
    }
    // two-coordinate block patterns (x, x, 0, ..., 0) in all positions
    for (std::size_t bi = 0; bi < dom_blocks; ++bi)
        for (std::size_t bj = bi + 1; bj < dom_blocks; ++bj)
            for (std::size_t i = 0; i < dom_block; ++i) {
                std::vector<cplx> e(nc, cplx{});
                e[bi * dom_block + i] = 1.0;
                e[bj * dom_block + i] = 1.0;
                consider(e);
            }

    // dual-norm power iteration
    const CMatrix at = a.adjoint();
    const PExp q = p.conjugate();
    std::vector<cplx> x = ones;
    for (int it = 0; it < iters; ++it) {
        const double xn = detail::mixed_norm(x, p, dom_block);
        if (xn <= 0.0) break;
        for (cplx& z : x) z /= xn;
        consider(x);
        const std::vector<cplx> y = a.apply(x);
        const std::vector<cplx> d = detail::dual_vector(y, p, cod_block);
        const std::vector<cplx> z = at.apply(d);
        const double zn = detail::mixed_norm(z, q, dom_block);
        if (zn <= 0.0) break;
        std::vector<cplx> xn_next = detail::dual_vector(z, q, dom_block);
        if (detail::mixed_norm(xn_next, p, dom_block) <= 0.0) break;
        x = std::move(xn_next);
    }
    consider(x);
    return best;
}

/// Interpolation upper bound (max row sum)^{1/q} (max col sum)^{1/p};
/// collapses to the exact norm at p = 1 and p = inf.
inline double opnorm_upper_interp(const CMatrix& a, const PExp& p) {
    double row = 0.0, col = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
        row = std::max(row, s);
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        col = std::max(col, s);
    }
    if (p.is(1.0)) return col;
    if (p.is_inf()) return row;
    const double pv = p.value();
    const double inv_p = 1.0 / pv;
    const double inv_q = 1.0 - inv_p;
    auto safe_pow = [](double x, double e) { return e == 0.0 ? 1.0 : std::pow(x, e); };
    return safe_pow(row, inv_q) * safe_pow(col, inv_p);
}

struct PNormBounds {
    PExp p = PExp(2.0);
    double lower = 0.0;
    double upper = 0.0;
    std::optional<double> exact;
    std::vector<cplx> witness;
};

/// Certified bracket for ||A (x) B||_p: minimum-row-sum lower bound against
/// the interpolation upper bound, tightened by a materialized lower estimate
/// when the product fits the element budget. Exact when A is a rescaled
/// doubly stochastic matrix (and at p = 2).
inline PNormBounds kron_pnorm_bounds(const CMatrix& a, const CMatrix& b, const PExp& p) {
    a.require_square("kron_pnorm_bounds");
    PNormBounds out;
    out.p = p;
    const double bnorm = spectral_norm(b);

    double min_row_sum = 1e300;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        cplx s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j);
        min_row_sum = std::min(min_row_sum, std::abs(s));
    }
    out.lower = min_row_sum * bnorm;

    try {
        const CMatrix prod = kron(a, b);
        const LowerEstimate est = opnorm_lower(prod, p, 50, b.cols(), b.rows());
        if (est.value > out.lower) {
            out.lower = est.value;
            out.witness = est.witness;
        }
    } catch (const budget_error&) {
        // the structural lower bound stands on its own
    }

    out.upper = opnorm_upper_interp(a, p) * bnorm;

    if (auto k = doubly_stochastic_scale(a))
        out.exact = *k * bnorm;
    else if (p.is(2.0))
        out.exact = spectral_norm(a) * bnorm;
    return out;
}

/// Closed-form spectral norm and numerical radius factor for
/// A = Circ(-a, b, ..., b) tensored with B.
inline std::pair<double, double> circ_norm2_closed(cplx a, cplx b, std::size_t n,
                                                   double b_norm, double b_radius) {
    if (n < 2) throw std::invalid_argument("circ_norm2_closed: n must be at least 2");
    const double factor = std::max(std::abs(a + b),
                                   std::abs(static_cast<double>(n - 1) * b - a));
    return {factor * b_norm, factor * b_radius};
}

inline std::pair<double, double> circ_norm2_closed(cplx a, cplx b, std::size_t n,
                                                   const CMatrix& op) {
    return circ_norm2_closed(a, b, n, spectral_norm(op), radius_value(op));
}

/// Spectral norm of A (x) B when the columns of A are equinorm and
/// equicorrelated: c_i* c_i = alpha, c_i* c_j = beta.
inline double gram_equicorrelated_norm(const CMatrix& a, const CMatrix& b,
                                       double tol = 1e-8) {
    a.require_square("gram_equicorrelated_norm");
    const std::size_t n = a.rows();
    const CMatrix gram = a.adjoint() * a;
    const double scale = std::max(1.0, gram.max_abs());
    double alpha = 0.0, beta = 0.0;
    for (std::size_t i = 0; i < n; ++i) alpha += gram(i, i).real();
    alpha /= static_cast<double>(n);
    if (n > 1) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) beta += gram(i, j).real();
        beta /= static_cast<double>(n * (n - 1));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double target = (i == j) ? alpha : beta;
            if (std::abs(gram(i, j) - target) > tol * scale)
                throw std::invalid_argument(
                    "gram_equicorrelated_norm: Gram matrix is not of the form "
                    "(alpha-beta) I + beta * ones");
        }
    const double factor = std::max(std::sqrt(std::abs(alpha - beta)),
                                   std::sqrt(std::abs(alpha + (n - 1) * beta)));
    return factor * spectral_norm(b);
}

/// kappa(n) = L1 norm on the unit circle (normalized Haar measure) of
/// 1 + z + ... + z^{n-1}, by trapezoidal quadrature. Strictly exceeds 1.
inline double kappa(std::size_t n, std::size_t quad_points = std::size_t{1} << 16) {
    if (n < 2) throw std::invalid_argument("kappa: n must be at least 2");
    const double two_pi = 2.0 * std::numbers::pi;
    double sum = 0.0;
    for (std::size_t k = 0; k < quad_points; ++k) {
        const double theta = two_pi * static_cast<double>(k) / quad_points;
        // |1 + e^{i t} + ... + e^{i (n-1) t}| = |sin(n t / 2) / sin(t / 2)|
        const double s = std::sin(0.5 * theta);
        const double v = (std::abs(s) < 1e-12)
                             ? static_cast<double>(n)
                             : std::abs(std::sin(0.5 * n * theta) / s);
        sum += v;
    }
    return sum / static_cast<double>(quad_points);
}

} // namespace kronrad
