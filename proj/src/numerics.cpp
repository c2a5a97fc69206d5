// SPDX-License-Identifier: Apache-2.0

#include "fairhp/numerics.hpp"

#include "fairhp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fairhp {

namespace {

bool finite(const Complex& z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string dims(const CMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

} // namespace

bool CVector::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), finite);
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    CMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c)
            throw DimensionError("CMatrix::from_rows: ragged row " + std::to_string(i));
        std::copy(row.begin(), row.end(), m.row(i).begin());
        ++i;
    }
    return m;
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> diag) {
    CMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i)
        m(i, i) = diag[i];
    return m;
}

CVector CMatrix::column(std::size_t c) const {
    CVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void CMatrix::set_column(std::size_t c, std::span<const Complex> values) {
    if (values.size() != rows_)
        throw DimensionError("CMatrix::set_column: length " + std::to_string(values.size()) + " for " + dims(*this));
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = values[r];
}

void CMatrix::set_row(std::size_t r, std::span<const Complex> values) {
    if (values.size() != cols_)
        throw DimensionError("CMatrix::set_row: length " + std::to_string(values.size()) + " for " + dims(*this));
    std::copy(values.begin(), values.end(), row(r).begin());
}

bool CMatrix::all_finite() const noexcept {
    return std::all_of(data_.begin(), data_.end(), finite);
}

CMatrix hermitian(const CMatrix& m) {
    CMatrix out(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(j, i) = std::conj(m(i, j));
    return out;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: " + dims(a) + " times " + dims(b));
    CMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto out_row = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{})
                continue;
            const auto b_row = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                out_row[j] += aik * b_row[j];
        }
    }
    return out;
}

CVector matvec(const CMatrix& m, std::span<const Complex> x) {
    if (m.cols() != x.size())
        throw DimensionError("matvec: " + dims(m) + " times length " + std::to_string(x.size()));
    CVector y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex acc{};
        const auto r = m.row(i);
        for (std::size_t j = 0; j < x.size(); ++j)
            acc += r[j] * x[j];
        y[i] = acc;
    }
    return y;
}

CVector kronecker(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i * b.size() + j] = a[i] * b[j];
    return out;
}

double norm2(std::span<const Complex> v) {
    double s = 0.0;
    for (const auto& z : v)
        s += std::norm(z);
    return std::sqrt(s);
}

double frobenius_norm(const CMatrix& m) { return norm2(m.data()); }

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("frobenius_distance: " + dims(a) + " vs " + dims(b));
    double s = 0.0;
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i)
        s += std::norm(da[i] - db[i]);
    return std::sqrt(s);
}

LuDecomposition::LuDecomposition(const CMatrix& a) : n_(a.rows()) {
    if (a.rows() != a.cols())
        throw DimensionError("LuDecomposition: matrix is " + dims(a));
    if (n_ == 0)
        throw DimensionError("LuDecomposition: empty matrix");

    double norm1 = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
        double col = 0.0;
        for (std::size_t i = 0; i < n_; ++i)
            col += std::abs(a(i, j));
        norm1 = std::max(norm1, col);
    }

    lu_.assign(a.data().begin(), a.data().end());
    perm_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
        perm_[i] = i;

    auto at = [this](std::size_t r, std::size_t c) -> Complex& { return lu_[r * n_ + c]; };

    for (std::size_t k = 0; k < n_; ++k) {
        std::size_t pivot = k;
        double best = std::abs(at(k, k));
        for (std::size_t i = k + 1; i < n_; ++i) {
            const double v = std::abs(at(i, k));
            if (v > best) {
                best = v;
                pivot = i;
            }
        }
        if (best == 0.0 || !std::isfinite(best))
            throw SingularMatrixError("LuDecomposition: zero pivot in column " + std::to_string(k));
        if (pivot != k) {
            std::swap_ranges(lu_.begin() + k * n_, lu_.begin() + (k + 1) * n_, lu_.begin() + pivot * n_);
            std::swap(perm_[k], perm_[pivot]);
        }
        const Complex inv_pivot = 1.0 / at(k, k);
        for (std::size_t i = k + 1; i < n_; ++i) {
            const Complex factor = at(i, k) * inv_pivot;
            at(i, k) = factor;
            if (factor == Complex{})
                continue;
            for (std::size_t j = k + 1; j < n_; ++j)
                at(i, j) -= factor * at(k, j);
        }
    }

    condition_ = norm1 * estimate_inverse_norm1();
    if (!(condition_ <= kMaxConditionNumber))
        throw SingularMatrixError("LuDecomposition: condition estimate " + std::to_string(condition_) +
                                      " exceeds limit",
                                  condition_);
}

void LuDecomposition::solve_in_place(std::span<Complex> b) const {
    if (b.size() != n_)
        throw DimensionError("LuDecomposition::solve: rhs length " + std::to_string(b.size()));
    // Scratch kept on the stack for the common small case.
    Complex small[64];
    std::vector<Complex> big;
    Complex* y = small;
    if (n_ > 64) {
        big.resize(n_);
        y = big.data();
    }
    for (std::size_t i = 0; i < n_; ++i)
        y[i] = b[perm_[i]];
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc = y[i];
        for (std::size_t j = 0; j < i; ++j)
            acc -= lu_[i * n_ + j] * y[j];
        y[i] = acc;
    }
    for (std::size_t ii = n_; ii-- > 0;) {
        Complex acc = y[ii];
        for (std::size_t j = ii + 1; j < n_; ++j)
            acc -= lu_[ii * n_ + j] * y[j];
        y[ii] = acc / lu_[ii * n_ + ii];
    }
    std::copy(y, y + n_, b.begin());
}

void LuDecomposition::solve_hermitian_in_place(std::span<Complex> b) const {
    if (b.size() != n_)
        throw DimensionError("LuDecomposition::solve_hermitian: rhs length " + std::to_string(b.size()));
    std::vector<Complex> w(b.begin(), b.end());
    // U^H w = b (lower triangular).
    for (std::size_t i = 0; i < n_; ++i) {
        Complex acc = w[i];
        for (std::size_t j = 0; j < i; ++j)
            acc -= std::conj(lu_[j * n_ + i]) * w[j];
        w[i] = acc / std::conj(lu_[i * n_ + i]);
    }
    // L^H v = w (unit upper triangular).
    for (std::size_t ii = n_; ii-- > 0;) {
        Complex acc = w[ii];
        for (std::size_t j = ii + 1; j < n_; ++j)
            acc -= std::conj(lu_[j * n_ + ii]) * w[j];
        w[ii] = acc;
    }
    for (std::size_t i = 0; i < n_; ++i)
        b[perm_[i]] = w[i];
}

CVector LuDecomposition::solve(std::span<const Complex> b) const {
    CVector x(std::vector<Complex>(b.begin(), b.end()));
    solve_in_place(x.span());
    return x;
}

double LuDecomposition::estimate_inverse_norm1() const {
    auto norm1 = [](std::span<const Complex> v) {
        double s = 0.0;
        for (const auto& z : v)
            s += std::abs(z);
        return s;
    };

    std::vector<Complex> x(n_, Complex(1.0 / static_cast<double>(n_)));
    std::vector<Complex> y(n_);
    double estimate = 0.0;
    for (int iter = 0; iter < 5; ++iter) {
        y = x;
        solve_in_place(y);
        const double candidate = norm1(y);
        if (iter > 0 && candidate <= estimate)
            break;
        estimate = candidate;

        std::vector<Complex> z(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            const double mag = std::abs(y[i]);
            z[i] = mag > 0.0 ? y[i] / mag : Complex(1.0);
        }
        solve_hermitian_in_place(z);

        std::size_t j = 0;
        double zmax = 0.0;
        Complex ztx{};
        for (std::size_t i = 0; i < n_; ++i) {
            if (std::abs(z[i]) > zmax) {
                zmax = std::abs(z[i]);
                j = i;
            }
            ztx += std::conj(z[i]) * x[i];
        }
        if (iter > 0 && zmax <= ztx.real())
            break;
        std::fill(x.begin(), x.end(), Complex{});
        x[j] = 1.0;
    }

    // Alternating-sign probe guards against the estimator stalling on structured inverses.
    if (n_ > 1) {
        for (std::size_t i = 0; i < n_; ++i) {
            const double sign = (i % 2 == 0) ? 1.0 : -1.0;
            y[i] = sign * (1.0 + static_cast<double>(i) / static_cast<double>(n_ - 1));
        }
        solve_in_place(y);
        estimate = std::max(estimate, 2.0 * norm1(y) / (3.0 * static_cast<double>(n_)));
    }
    return estimate;
}

CMatrix inverse(const CMatrix& m) {
    if (m.rows() != m.cols())
        throw DimensionError("inverse: matrix is " + dims(m));
    const LuDecomposition lu(m);
    const std::size_t n = m.rows();
    CMatrix out(n, n);
    std::vector<Complex> e(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), Complex{});
        e[j] = 1.0;
        lu.solve_in_place(e);
        out.set_column(j, e);
    }
    return out;
}

} // namespace fairhp
