#include "qscatter/cxmat.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qscatter {

namespace {

void check_dim(std::size_t dim) {
    if (dim != 2 && dim != 4) {
        throw Error(ErrorCode::DimensionMismatch,
                    "matrix dimension must be 2 or 4, got " + std::to_string(dim));
    }
}

void require_same_dim(const CMat& a, const CMat& b, const char* op) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::string(op) + ": " + std::to_string(a.dim()) + " vs " +
                        std::to_string(b.dim()));
    }
}

const CMat& require_finite(const CMat& m, const char* op) {
    if (!m.all_finite()) {
        throw Error(ErrorCode::NonFinite, std::string(op) + " produced a non-finite entry");
    }
    return m;
}

}  // namespace

CMat::CMat(std::size_t dim) : dim_(dim) { check_dim(dim); }

CMat::CMat(std::size_t dim, std::initializer_list<Complex> row_major) : dim_(dim) {
    check_dim(dim);
    if (row_major.size() != dim * dim) {
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(dim * dim) +
                                                      " entries, got " +
                                                      std::to_string(row_major.size()));
    }
    auto it = row_major.begin();
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) (*this)(i, j) = *it++;
    }
    require_finite(*this, "construction");
}

CMat CMat::identity(std::size_t dim) {
    CMat m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::diag(std::initializer_list<Complex> entries) {
    CMat m(entries.size());
    std::size_t i = 0;
    for (const auto& e : entries) {
        m(i, i) = e;
        ++i;
    }
    return require_finite(m, "diag");
}

double CMat::max_abs() const noexcept {
    double best = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) best = std::max(best, std::abs((*this)(i, j)));
    }
    return best;
}

double CMat::frobenius_sq() const noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) sum += std::norm((*this)(i, j));
    }
    return sum;
}

bool CMat::all_finite() const noexcept {
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const Complex z = (*this)(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        }
    }
    return true;
}

CMat operator+(const CMat& a, const CMat& b) {
    require_same_dim(a, b, "add");
    CMat c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
    }
    return require_finite(c, "add");
}

CMat operator-(const CMat& a, const CMat& b) {
    require_same_dim(a, b, "sub");
    CMat c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
    }
    return require_finite(c, "sub");
}

CMat operator*(Complex s, const CMat& a) {
    CMat c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
    }
    return require_finite(c, "scale");
}

CMat operator*(const CMat& a, const CMat& b) { return mul(a, b); }

CMat mul(const CMat& a, const CMat& b) {
    require_same_dim(a, b, "mul");
    const std::size_t n = a.dim();
    CMat c(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    }
    return require_finite(c, "mul");
}

CMat adjoint(const CMat& a) {
    CMat c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = std::conj(a(j, i));
    }
    return c;
}

CMat transpose(const CMat& a) {
    CMat c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = a(j, i);
    }
    return c;
}

CMat conj(const CMat& a) {
    CMat c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = std::conj(a(i, j));
    }
    return c;
}

CMat inverse(const CMat& a) {
    const std::size_t n = a.dim();
    const double scale = a.max_abs();
    if (scale == 0.0) throw Error(ErrorCode::SingularMatrix, "zero matrix");
    const double threshold = kSingularTolerance * scale;

    CMat work = a;
    CMat inv = CMat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t row = col + 1; row < n; ++row) {
            if (std::abs(work(row, col)) > std::abs(work(pivot, col))) pivot = row;
        }
        if (!(std::abs(work(pivot, col)) >= threshold)) {
            throw Error(ErrorCode::SingularMatrix,
                        "pivot below tolerance in column " + std::to_string(col));
        }
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(work(pivot, j), work(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const Complex p = work(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            work(col, j) /= p;
            inv(col, j) /= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col) continue;
            const Complex f = work(row, col);
            if (f == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                work(row, j) -= f * work(col, j);
                inv(row, j) -= f * inv(col, j);
            }
        }
    }
    return require_finite(inv, "inverse");
}

Complex det2(const CMat& a) {
    if (a.dim() != 2) {
        throw Error(ErrorCode::DimensionMismatch, "det2 requires a 2x2 matrix");
    }
    return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
}

double max_abs_diff(const CMat& a, const CMat& b) {
    require_same_dim(a, b, "max_abs_diff");
    double best = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) best = std::max(best, std::abs(a(i, j) - b(i, j)));
    }
    return best;
}

CMat block(const CMat& a, std::size_t block_row, std::size_t block_col) {
    if (a.dim() != 4 || block_row > 1 || block_col > 1) {
        throw Error(ErrorCode::DimensionMismatch, "block() needs a 4x4 matrix and indices 0/1");
    }
    CMat b(2);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) b(i, j) = a(2 * block_row + i, 2 * block_col + j);
    }
    return b;
}

CMat from_blocks(const CMat& top_left, const CMat& top_right, const CMat& bottom_left,
                 const CMat& bottom_right) {
    for (const CMat* m : {&top_left, &top_right, &bottom_left, &bottom_right}) {
        if (m->dim() != 2) throw Error(ErrorCode::DimensionMismatch, "blocks must be 2x2");
    }
    CMat out(4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            out(i, j) = top_left(i, j);
            out(i, j + 2) = top_right(i, j);
            out(i + 2, j) = bottom_left(i, j);
            out(i + 2, j + 2) = bottom_right(i, j);
        }
    }
    return out;
}

CMat pauli_y() { return CMat(2, {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}); }

}  // namespace qscatter
