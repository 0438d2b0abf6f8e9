#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "kloc/exmat.hpp"
#include "kloc/gaussq.hpp"

namespace kloc {

/// One Jordan cell: lambda on the diagonal, 1 on the superdiagonal.
/// A size-1 cell is the 1x1 matrix [lambda].
struct JordanCell {
    std::size_t size;  // >= 1
    GaussianRational eigenvalue;

    friend bool operator==(const JordanCell& a, const JordanCell& b) {
        return a.size == b.size && a.eigenvalue == b.eigenvalue;
    }
};

/// Set of distinct eigenvalues, kept sorted in canonical scalar order.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<GaussianRational> values);
    Spectrum(std::initializer_list<GaussianRational> values)
        : Spectrum(std::vector<GaussianRational>(values)) {}

    bool contains(const GaussianRational& value) const;
    void insert(const GaussianRational& value);

    std::size_t size() const { return values_.size(); }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }
    const std::vector<GaussianRational>& values() const { return values_; }

private:
    std::vector<GaussianRational> values_;  // sorted, unique
};

/**
 * Multiset of Jordan cells with multiplicities. Equality is multiset
 * equality (insertion order never matters). Iteration is deterministic:
 * keyed by (eigenvalue canonical order, size).
 */
class JordanForm {
public:
    using Key = std::pair<GaussianRational, std::size_t>;  // (eigenvalue, size)

    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            const int c = scalar_compare(a.first, b.first);
            if (c != 0) return c < 0;
            return a.second < b.second;
        }
    };

    using CellMap = std::map<Key, long, KeyLess>;

    JordanForm() = default;

    void add(const JordanCell& cell, long multiplicity = 1);

    long multiplicity(const JordanCell& cell) const;
    const CellMap& cells() const { return cells_; }
    bool empty() const { return cells_.empty(); }

    /// Sum of size * multiplicity over all cells.
    std::size_t total_size() const;

    /// Distinct eigenvalues appearing in the form.
    Spectrum spectrum() const;

    /// Multiset union.
    friend JordanForm operator+(const JordanForm& a, const JordanForm& b);

    friend bool operator==(const JordanForm& a, const JordanForm& b) {
        return a.cells_ == b.cells_;
    }
    friend bool operator!=(const JordanForm& a, const JordanForm& b) { return !(a == b); }

private:
    CellMap cells_;  // multiplicities always >= 1
};

/// Materialize a cell as a matrix.
ExactMatrix cell_matrix(const JordanCell& cell);

/**
 * Closed-form k-th power of the size-n nilpotent shift (the cell matrix
 * minus its diagonal): ones on the k-th superdiagonal for k <= n-1, the
 * zero matrix for k >= n, the identity for k = 0.
 */
ExactMatrix nilpotent_power(std::size_t n, std::size_t k);

/**
 * Closed-form cell inverse via the alternating shift series
 *   sum_{k=0}^{n-1} (-1)^k / lambda^{k+1} * shift^k,
 * an upper-triangular matrix with 1/lambda on the diagonal.
 * Throws SingularCell when the eigenvalue is zero.
 */
ExactMatrix cell_inverse(const JordanCell& cell);

/**
 * Smallest k with rank((a - lambda*I)^k) = rank((a - lambda*I)^(k+1)):
 * the size of the largest Jordan cell at lambda, 0 when lambda is not an
 * eigenvalue.
 */
std::size_t jordan_rank(const ExactMatrix& a, const GaussianRational& lambda);

/**
 * Jordan form of `a` from rank sequences: with r_k = rank((a - lambda*I)^k),
 * the number of cells of size exactly k at lambda is r_{k-1} - 2 r_k + r_{k+1}.
 *
 * The spectrum must be complete: the multiplicities found must sum to the
 * dimension (IncompleteSpectrum otherwise, reporting the deficit).
 * Values in the spectrum that are not eigenvalues contribute nothing.
 */
JordanForm jordan_decompose(const ExactMatrix& a, const Spectrum& spectrum);

/// Direct sum of the form's cells in deterministic order
/// (eigenvalue canonical order, then size).
ExactMatrix compose(const JordanForm& form);

}  // namespace kloc
