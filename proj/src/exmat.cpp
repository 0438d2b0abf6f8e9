#include "kloc/exmat.hpp"

#include <string>
#include <utility>

namespace kloc {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionMismatch("entry count " + std::to_string(entries_.size()) +
                                " does not match " + std::to_string(rows_) + "x" +
                                std::to_string(cols_));
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = GaussianRational(1);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<GaussianRational>& values) {
    ExactMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw DimensionMismatch("matrix addition of different shapes");
    }
    ExactMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
    return out;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw DimensionMismatch("matrix subtraction of different shapes");
    }
    ExactMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
    return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_) {
        throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
    }
    ExactMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussianRational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ExactMatrix operator*(const GaussianRational& c, const ExactMatrix& a) {
    ExactMatrix out(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) out.entries_[k] = c * a.entries_[k];
    return out;
}

namespace {

// Row echelon reduction in place; returns the rank. Pivot selection is
// the first nonzero entry downward in each column, taken in column order.
std::size_t echelon_rank(ExactMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(m(r, j), m(pivot, j));
        }
        const GaussianRational inv_p = inverse(m(r, c));
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, c).is_zero()) continue;
            const GaussianRational factor = m(i, c) * inv_p;
            m(i, c) = GaussianRational();
            for (std::size_t j = c + 1; j < cols; ++j) {
                m(i, j) -= factor * m(r, j);
            }
        }
        ++r;
    }
    return r;
}

}  // namespace

std::size_t rank(const ExactMatrix& a) {
    ExactMatrix work = a;
    return echelon_rank(work);
}

ExactMatrix inverse(const ExactMatrix& a) {
    if (!a.is_square()) throw NonSquare("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    // Gauss-Jordan on [a | I].
    ExactMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = GaussianRational(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && aug(pivot, c).is_zero()) ++pivot;
        if (pivot == n) throw NotInvertible();
        if (pivot != c) {
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(c, j), aug(pivot, j));
        }
        const GaussianRational inv_p = inverse(aug(c, c));
        for (std::size_t j = c; j < 2 * n; ++j) aug(c, j) = inv_p * aug(c, j);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug(i, c).is_zero()) continue;
            const GaussianRational factor = aug(i, c);
            for (std::size_t j = c; j < 2 * n; ++j) {
                aug(i, j) -= factor * aug(c, j);
            }
        }
    }
    ExactMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    }
    return out;
}

ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b) {
    if (!a.is_square() || !b.is_square()) throw NonSquare("direct sum of non-square blocks");
    const std::size_t n = a.rows();
    const std::size_t m = b.rows();
    ExactMatrix out(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = b(i, j);
    }
    return out;
}

ExactMatrix conjugate(const ExactMatrix& a, const ExactMatrix& p) {
    if (!a.is_square() || !p.is_square() || a.rows() != p.rows()) {
        throw DimensionMismatch("conjugation needs square matrices of equal size");
    }
    return p * a * inverse(p);
}

ExactMatrix power(const ExactMatrix& a, std::size_t k) {
    if (!a.is_square()) throw NonSquare("power of a non-square matrix");
    ExactMatrix result = ExactMatrix::identity(a.rows());
    ExactMatrix base = a;
    while (k > 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return result;
}

}  // namespace kloc
