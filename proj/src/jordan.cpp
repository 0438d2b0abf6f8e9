#include "kloc/jordan.hpp"

#include <algorithm>
#include <string>

#include "kloc/errors.hpp"

namespace kloc {

Spectrum::Spectrum(std::vector<GaussianRational> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end(), ScalarLess{});
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
}

bool Spectrum::contains(const GaussianRational& value) const {
    return std::binary_search(values_.begin(), values_.end(), value, ScalarLess{});
}

void Spectrum::insert(const GaussianRational& value) {
    auto it = std::lower_bound(values_.begin(), values_.end(), value, ScalarLess{});
    if (it == values_.end() || !(*it == value)) values_.insert(it, value);
}

void JordanForm::add(const JordanCell& cell, long multiplicity) {
    if (cell.size == 0) throw DimensionMismatch("Jordan cell of size 0");
    if (multiplicity < 0) throw DimensionMismatch("negative cell multiplicity");
    if (multiplicity == 0) return;
    cells_[{cell.eigenvalue, cell.size}] += multiplicity;
}

long JordanForm::multiplicity(const JordanCell& cell) const {
    auto it = cells_.find({cell.eigenvalue, cell.size});
    return it == cells_.end() ? 0 : it->second;
}

std::size_t JordanForm::total_size() const {
    std::size_t total = 0;
    for (const auto& [key, mult] : cells_) total += key.second * static_cast<std::size_t>(mult);
    return total;
}

Spectrum JordanForm::spectrum() const {
    Spectrum s;
    for (const auto& [key, mult] : cells_) s.insert(key.first);
    return s;
}

JordanForm operator+(const JordanForm& a, const JordanForm& b) {
    JordanForm out = a;
    for (const auto& [key, mult] : b.cells_) out.cells_[key] += mult;
    return out;
}

ExactMatrix cell_matrix(const JordanCell& cell) {
    ExactMatrix m(cell.size, cell.size);
    for (std::size_t i = 0; i < cell.size; ++i) {
        m(i, i) = cell.eigenvalue;
        if (i + 1 < cell.size) m(i, i + 1) = GaussianRational(1);
    }
    return m;
}

ExactMatrix nilpotent_power(std::size_t n, std::size_t k) {
    ExactMatrix m(n, n);
    if (k >= n && k > 0) return m;
    for (std::size_t i = 0; i + k < n; ++i) m(i, i + k) = GaussianRational(1);
    return m;
}

ExactMatrix cell_inverse(const JordanCell& cell) {
    if (cell.eigenvalue.is_zero()) throw SingularCell();
    const std::size_t n = cell.size;
    const GaussianRational inv_lambda = inverse(cell.eigenvalue);
    ExactMatrix m(n, n);
    // coefficient of the k-th superdiagonal: (-1)^k / lambda^(k+1)
    GaussianRational coeff = inv_lambda;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i + k < n; ++i) m(i, i + k) = coeff;
        coeff = -(coeff * inv_lambda);
    }
    return m;
}

namespace {

// rank((a - lambda*I)^k) for k = 0, 1, ... until two consecutive ranks
// agree; the sequence is constant from that point on.
std::vector<std::size_t> stabilized_rank_sequence(const ExactMatrix& a,
                                                  const GaussianRational& lambda) {
    const std::size_t n = a.rows();
    const ExactMatrix shifted = a - lambda * ExactMatrix::identity(n);
    std::vector<std::size_t> ranks{n};
    ExactMatrix pow = ExactMatrix::identity(n);
    while (true) {
        pow = pow * shifted;
        ranks.push_back(rank(pow));
        const std::size_t last = ranks.size() - 1;
        if (ranks[last] == ranks[last - 1]) return ranks;
    }
}

}  // namespace

std::size_t jordan_rank(const ExactMatrix& a, const GaussianRational& lambda) {
    if (!a.is_square()) throw NonSquare("Jordan rank of a non-square matrix");
    return stabilized_rank_sequence(a, lambda).size() - 2;
}

JordanForm jordan_decompose(const ExactMatrix& a, const Spectrum& spectrum) {
    if (!a.is_square()) throw NonSquare("Jordan decomposition of a non-square matrix");
    const std::size_t n = a.rows();

    JordanForm form;
    std::size_t accounted = 0;
    for (const GaussianRational& lambda : spectrum) {
        const std::vector<std::size_t> ranks = stabilized_rank_sequence(a, lambda);
        const std::size_t stable = ranks.size() - 2;  // index where the sequence stops moving
        accounted += n - ranks[stable];
        auto rank_at = [&](std::size_t k) { return k < ranks.size() ? ranks[k] : ranks.back(); };
        for (std::size_t k = 1; k <= stable; ++k) {
            const long count = static_cast<long>(rank_at(k - 1)) + static_cast<long>(rank_at(k + 1)) -
                               2 * static_cast<long>(rank_at(k));
            if (count > 0) form.add({k, lambda}, count);
        }
    }
    if (accounted != n) {
        throw IncompleteSpectrum(
            "spectrum accounts for " + std::to_string(accounted) + " of " + std::to_string(n) +
                " dimensions",
            static_cast<long>(n) - static_cast<long>(accounted));
    }
    return form;
}

ExactMatrix compose(const JordanForm& form) {
    ExactMatrix out;  // 0x0, unit of the direct sum
    for (const auto& [key, mult] : form.cells()) {
        const ExactMatrix block = cell_matrix({key.second, key.first});
        for (long i = 0; i < mult; ++i) out = direct_sum(out, block);
    }
    return out;
}

}  // namespace kloc
