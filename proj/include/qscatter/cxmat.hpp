#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

#include "qscatter/error.hpp"

namespace qscatter {

using Complex = std::complex<double>;

/// Dense complex matrix of dimension 2 or 4, stored row-major.
///
/// Values are immutable in practice: every operation below returns a new
/// matrix. Construction rejects other dimensions and non-finite entries.
class CMat {
public:
    static constexpr std::size_t kMaxDim = 4;

    explicit CMat(std::size_t dim);
    CMat(std::size_t dim, std::initializer_list<Complex> row_major);

    static CMat identity(std::size_t dim);
    static CMat diag(std::initializer_list<Complex> entries);

    std::size_t dim() const noexcept { return dim_; }

    Complex operator()(std::size_t row, std::size_t col) const noexcept {
        return data_[row * kMaxDim + col];
    }
    Complex& operator()(std::size_t row, std::size_t col) noexcept {
        return data_[row * kMaxDim + col];
    }

    double max_abs() const noexcept;
    double frobenius_sq() const noexcept;
    bool all_finite() const noexcept;

    friend CMat operator+(const CMat& a, const CMat& b);
    friend CMat operator-(const CMat& a, const CMat& b);
    friend CMat operator*(Complex s, const CMat& a);
    friend CMat operator*(const CMat& a, const CMat& b);

private:
    std::size_t dim_;
    std::array<Complex, kMaxDim * kMaxDim> data_{};
};

// Relative pivot threshold used by inverse().
inline constexpr double kSingularTolerance = 1e-13;

CMat mul(const CMat& a, const CMat& b);
CMat adjoint(const CMat& a);
CMat transpose(const CMat& a);
CMat conj(const CMat& a);

/// Gauss-Jordan inverse with partial pivoting. Throws SingularMatrix when the
/// best available pivot falls below kSingularTolerance times the largest entry
/// magnitude of the input.
CMat inverse(const CMat& a);

Complex det2(const CMat& a);

double max_abs_diff(const CMat& a, const CMat& b);

// 2x2 block access for 4x4 matrices; block (0,0) is the top-left.
CMat block(const CMat& a, std::size_t block_row, std::size_t block_col);
CMat from_blocks(const CMat& top_left, const CMat& top_right, const CMat& bottom_left,
                 const CMat& bottom_right);

CMat pauli_y();

}  // namespace qscatter
