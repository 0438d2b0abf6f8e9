#pragma once

#include <cstddef>
#include <vector>

#include "kloc/gaussq.hpp"

namespace kloc {

/**
 * Dense matrix over Q(i), row-major. The 0x0 matrix is a legal value and
 * is the unit of the direct sum. All operations are exact; elimination
 * uses the first nonzero pivot in column order, so ranks and inverses
 * are deterministic.
 */
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries);

    static ExactMatrix identity(std::size_t n);
    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ExactMatrix diagonal(const std::vector<GaussianRational>& values);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_empty() const { return rows_ == 0 && cols_ == 0; }

    const GaussianRational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    GaussianRational& operator()(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator*(const GaussianRational& c, const ExactMatrix& a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<GaussianRational> entries_;
};

// Exact rank via Gaussian elimination; deterministic pivot choice.
std::size_t rank(const ExactMatrix& a);

// Two-sided exact inverse; throws NonSquare / NotInvertible.
ExactMatrix inverse(const ExactMatrix& a);

// Block diagonal [[a,0],[0,b]]; both blocks must be square.
ExactMatrix direct_sum(const ExactMatrix& a, const ExactMatrix& b);

// p * a * p^-1; p must be invertible and of a's size.
ExactMatrix conjugate(const ExactMatrix& a, const ExactMatrix& p);

// a^k for square a, k >= 0; a^0 = I.
ExactMatrix power(const ExactMatrix& a, std::size_t k);

}  // namespace kloc
