#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kronrad {

using cplx = std::complex<double>;

/// Thrown when a requested product would exceed the element budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an iterative solver fails to converge.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline std::size_t& budget_ref() {
    static std::size_t budget = [] {
        if (const char* env = std::getenv("KRONRAD_BUDGET")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && v > 0) return static_cast<std::size_t>(v);
        }
        return static_cast<std::size_t>(1) << 24;
    }();
    return budget;
}
} // namespace detail

/// Maximum number of entries a constructed product may have.
inline std::size_t element_budget() { return detail::budget_ref(); }
inline void set_element_budget(std::size_t b) { detail::budget_ref() = b; }

/// Dense complex matrix, row-major. Value type; all entries kept finite.
class CMatrix {
public:
    CMatrix() = default;

    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("CMatrix: dimensions must be positive");
    }

    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("CMatrix: dimensions must be positive");
        if (data_.size() != rows * cols)
            throw std::invalid_argument("CMatrix: data length does not match shape");
        check_finite();
    }

    /// Build from nested initializer rows, e.g. {{1,0},{0,1}}.
    CMatrix(std::initializer_list<std::initializer_list<cplx>> init) {
        rows_ = init.size();
        if (rows_ == 0) throw std::invalid_argument("CMatrix: empty initializer");
        cols_ = init.begin()->size();
        if (cols_ == 0) throw std::invalid_argument("CMatrix: empty row");
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("CMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
        check_finite();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool is_square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static CMatrix ones(std::size_t r, std::size_t c) {
        CMatrix m(r, c);
        std::fill(m.data_.begin(), m.data_.end(), cplx{1.0, 0.0});
        return m;
    }

    static CMatrix diagonal(const std::vector<cplx>& d) {
        CMatrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    CMatrix adjoint() const {
        CMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(j, i) = std::conj((*this)(i, j));
        return m;
    }

    CMatrix transpose() const {
        CMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(j, i) = (*this)(i, j);
        return m;
    }

    cplx trace() const {
        require_square("trace");
        cplx t = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    /// Entrywise max modulus.
    double max_abs() const {
        double m = 0.0;
        for (const cplx& z : data_) m = std::max(m, std::abs(z));
        return m;
    }

    /// Max modulus of A - A*, for Hermitian-ness checks.
    double hermitian_defect() const {
        require_square("hermitian_defect");
        double d = 0.0;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return d;
    }

    bool entrywise_real_nonneg(double tol = 0.0) const {
        for (const cplx& z : data_)
            if (std::abs(z.imag()) > tol || z.real() < -tol) return false;
        return true;
    }

    CMatrix entrywise_abs() const {
        CMatrix m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = std::abs(data_[k]);
        return m;
    }

    CMatrix submatrix(const std::vector<std::size_t>& row_idx,
                      const std::vector<std::size_t>& col_idx) const {
        CMatrix m(row_idx.size(), col_idx.size());
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                m(i, j) = (*this)(row_idx[i], col_idx[j]);
        return m;
    }

    CMatrix& operator+=(const CMatrix& o) {
        require_same_shape(o, "operator+=");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    CMatrix& operator-=(const CMatrix& o) {
        require_same_shape(o, "operator-=");
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    CMatrix& operator*=(cplx s) {
        for (cplx& z : data_) z *= s;
        check_finite();
        return *this;
    }

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("CMatrix multiply: inner dimensions differ");
        CMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    /// Matrix-vector product.
    std::vector<cplx> apply(const std::vector<cplx>& x) const {
        if (x.size() != cols_)
            throw std::invalid_argument("CMatrix apply: vector length mismatch");
        std::vector<cplx> y(rows_, cplx{});
        for (std::size_t i = 0; i < rows_; ++i) {
            cplx s = 0.0;
            for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
            y[i] = s;
        }
        return y;
    }

    bool operator==(const CMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    void require_square(const char* who) const {
        if (!is_square())
            throw std::invalid_argument(std::string(who) + ": matrix must be square");
    }

private:
    void require_same_shape(const CMatrix& o, const char* who) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string(who) + ": shape mismatch");
    }

    void check_finite() const {
        for (const cplx& z : data_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("CMatrix: non-finite entry");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> data_;
};

/// Kronecker product [a_ij B]. Rejects results above the element budget.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const std::size_t r = a.rows() * b.rows();
    const std::size_t c = a.cols() * b.cols();
    if (r == 0 || c == 0 || r > element_budget() / c)
        throw budget_error("kron: result exceeds element budget of " +
                           std::to_string(element_budget()) + " entries");
    CMatrix k(r, c);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx aij = a(i, j);
            if (aij == cplx{}) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return k;
}

/// Entrywise (Schur) product.
inline CMatrix schur_product(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("schur_product: shape mismatch");
    CMatrix m(a.rows(), a.cols());
    for (std::size_t k = 0; k < m.size(); ++k) m.data()[k] = a.data()[k] * b.data()[k];
    return m;
}

/// m-th entrywise power, m >= 1.
inline CMatrix schur_power(const CMatrix& a, unsigned m) {
    if (m == 0) throw std::invalid_argument("schur_power: m must be positive");
    CMatrix p = a;
    for (unsigned k = 1; k < m; ++k) p = schur_product(p, a);
    return p;
}

/// Circulant matrix with first row a; each row is the cyclic right-shift
/// of the previous one.
inline CMatrix circulant(const std::vector<cplx>& a) {
    const std::size_t n = a.size();
    if (n == 0) throw std::invalid_argument("circulant: empty first row");
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = a[(j + n - i) % n];
    return m;
}

/// Monic polynomial z^n + a_{n-1} z^{n-1} + ... + a_0, stored as a_0..a_{n-1}.
struct Poly {
    std::vector<cplx> coeffs;

    explicit Poly(std::vector<cplx> c) : coeffs(std::move(c)) {
        if (coeffs.size() < 2)
            throw std::invalid_argument("Poly: degree must be at least 2");
    }

    std::size_t degree() const { return coeffs.size(); }

    cplx eval(cplx z) const {
        cplx v = 1.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) v = v * z + coeffs[k];
        return v;
    }
};

/// Frobenius companion matrix: first row -a_{n-1} ... -a_0, identity subdiagonal.
inline CMatrix companion(const Poly& p) {
    const std::size_t n = p.degree();
    CMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) m(0, j) = -p.coeffs[n - 1 - j];
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1.0;
    return m;
}

/// Matrix with (i, n+1-i) entry lams[i] (1-based), all else zero.
inline CMatrix anti_diagonal(const std::vector<cplx>& lams) {
    const std::size_t n = lams.size();
    if (n == 0) throw std::invalid_argument("anti_diagonal: empty entry list");
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = lams[i];
    return m;
}

/// If A is k times a doubly stochastic matrix within tol, return k.
inline std::optional<double> doubly_stochastic_scale(const CMatrix& a, double tol = 1e-10) {
    a.require_square("doubly_stochastic_scale");
    const std::size_t n = a.rows();
    if (!a.entrywise_real_nonneg(tol)) return std::nullopt;
    double k = 0.0;
    for (std::size_t j = 0; j < n; ++j) k += a(0, j).real();
    for (std::size_t i = 0; i < n; ++i) {
        double rs = 0.0, cs = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            rs += a(i, j).real();
            cs += a(j, i).real();
        }
        if (std::abs(rs - k) > tol || std::abs(cs - k) > tol) return std::nullopt;
    }
    return std::max(k, 0.0);
}

/// 1-based row/column indices at which the m-fold Schur product of p x q
/// matrices sits inside their m-fold Kronecker product: multiples of the
/// base-p repunit 1 + p + ... + p^{m-1}, plus one.
inline std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
schur_embed_indices(std::size_t p, std::size_t q, unsigned m) {
    auto axis = [m](std::size_t base) {
        std::size_t repunit = 0, power = 1;
        for (unsigned k = 0; k < m; ++k) {
            repunit += power;
            if (k + 1 < m) {
                if (base != 0 && power > element_budget() / base)
                    throw budget_error("schur_embed_indices: base^m overflows budget");
                power *= base;
            }
        }
        std::vector<std::size_t> idx(base);
        for (std::size_t j = 0; j < base; ++j) idx[j] = j * repunit + 1;
        return idx;
    };
    return {axis(p), axis(q)};
}

} // namespace kronrad
