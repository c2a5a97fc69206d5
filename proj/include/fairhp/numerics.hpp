// SPDX-License-Identifier: Apache-2.0
//
// Small dense complex linear algebra kernel. Matrices are row-major and sized for
// hybrid-precoding work: K x M channels, M x N_RF beamformers and N_RF x N_RF solves.

#ifndef FAIRHP_NUMERICS_HPP
#define FAIRHP_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace fairhp {

using Complex = std::complex<double>;

class CVector {
public:
    CVector() = default;
    explicit CVector(std::size_t n, Complex fill = {}) : data_(n, fill) {}
    CVector(std::initializer_list<Complex> values) : data_(values) {}
    explicit CVector(std::vector<Complex> values) : data_(std::move(values)) {}

    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    Complex& operator[](std::size_t i) noexcept { return data_[i]; }
    const Complex& operator[](std::size_t i) const noexcept { return data_[i]; }

    auto begin() noexcept { return data_.begin(); }
    auto end() noexcept { return data_.end(); }
    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    std::span<Complex> span() noexcept { return data_; }
    std::span<const Complex> span() const noexcept { return data_; }

    bool all_finite() const noexcept;

    friend bool operator==(const CVector&, const CVector&) = default;

private:
    std::vector<Complex> data_;
};

class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols, Complex fill = {})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    // Throws DimensionError on ragged input.
    static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Complex& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<Complex> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<const Complex> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }

    CVector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Complex> values);
    void set_row(std::size_t r, std::span<const Complex> values);

    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> data() const noexcept { return data_; }

    bool all_finite() const noexcept;

    friend bool operator==(const CMatrix&, const CMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

CMatrix hermitian(const CMatrix& m);

// Throws DimensionError when a.cols() != b.rows().
CMatrix matmul(const CMatrix& a, const CMatrix& b);

// y = m x. Throws DimensionError when m.cols() != x.size().
CVector matvec(const CMatrix& m, std::span<const Complex> x);

CVector kronecker(const CVector& a, const CVector& b);

double norm2(std::span<const Complex> v);
double frobenius_norm(const CMatrix& m);
// ||a - b||_F, dimensions must agree.
double frobenius_distance(const CMatrix& a, const CMatrix& b);

inline constexpr double kMaxConditionNumber = 1e12;

/// LU factorization with partial pivoting, P A = L U.
///
/// Construction estimates the 1-norm condition number from the factors
/// (Hager/Higham estimator) and refuses matrices that are singular or whose
/// estimate exceeds kMaxConditionNumber.
class LuDecomposition {
public:
    explicit LuDecomposition(const CMatrix& a);

    std::size_t size() const noexcept { return n_; }
    double condition_estimate() const noexcept { return condition_; }

    // Solves A x = b in place.
    void solve_in_place(std::span<Complex> b) const;
    // Solves A^H x = b in place.
    void solve_hermitian_in_place(std::span<Complex> b) const;

    CVector solve(std::span<const Complex> b) const;

private:
    double estimate_inverse_norm1() const;

    std::size_t n_ = 0;
    std::vector<Complex> lu_;
    std::vector<std::size_t> perm_;
    double condition_ = 0.0;
};

// Throws DimensionError for non-square input, SingularMatrixError when LuDecomposition refuses it.
CMatrix inverse(const CMatrix& m);

} // namespace fairhp

#endif // FAIRHP_NUMERICS_HPP
