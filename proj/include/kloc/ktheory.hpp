#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>

#include "kloc/exmat.hpp"
#include "kloc/gaussq.hpp"
#include "kloc/jordan.hpp"

namespace kloc {

/**
 * Canonical representative of the class of lambda under lambda ~ 1/lambda,
 * on Q(i) minus {-1, 0, 1}. The representative is the member of
 * {lambda, 1/lambda} with norm > 1; a norm-1 tie is broken by positive
 * imaginary part. `flipped` records whether the input was replaced by
 * its inverse.
 */
struct HatLambda {
    GaussianRational representative;
    bool flipped;
};

/// Throws ExcludedValue for lambda in {-1, 0, 1}.
HatLambda hat_normalize(const GaussianRational& lambda);

/// Element of K0: an integer (rank, or a formal rank difference).
struct K0Class {
    long value = 0;

    friend bool operator==(const K0Class& a, const K0Class& b) { return a.value == b.value; }
    friend bool operator!=(const K0Class& a, const K0Class& b) { return !(a == b); }
};

/**
 * Element of K1 in normalized form. Three coefficient families:
 *
 *   - torsion_minus: sizes n >= 1 whose generator at eigenvalue -1 has
 *     coefficient 1 (coefficients live mod 2; zeros are not stored);
 *   - torsion_plus: likewise for eigenvalue +1, sizes n >= 2;
 *   - free: (size, canonical eigenvalue) -> nonzero integer, keyed by
 *     canonical representatives only.
 *
 * The generator of size 1 at eigenvalue +1 is trivial and never appears.
 * Equality of normalized forms decides equality in the group.
 */
class K1Class {
public:
    using FreeKey = std::pair<GaussianRational, std::size_t>;  // (canonical eigenvalue, size)
    using FreeMap = std::map<FreeKey, long, JordanForm::KeyLess>;

    K1Class() = default;

    bool is_zero() const {
        return torsion_minus_.empty() && torsion_plus_.empty() && free_.empty();
    }

    const std::set<std::size_t>& torsion_minus() const { return torsion_minus_; }
    const std::set<std::size_t>& torsion_plus() const { return torsion_plus_; }
    const FreeMap& free_part() const { return free_; }

    /// Account for one Jordan cell with multiplicity (negative multiplicity
    /// subtracts, which is how negation and inverses enter).
    /// The eigenvalue must be nonzero.
    void add_cell(const JordanCell& cell, long multiplicity);

    friend K1Class operator+(const K1Class& a, const K1Class& b);
    K1Class operator-() const;

    friend bool operator==(const K1Class& a, const K1Class& b) {
        return a.torsion_minus_ == b.torsion_minus_ && a.torsion_plus_ == b.torsion_plus_ &&
               a.free_ == b.free_;
    }
    friend bool operator!=(const K1Class& a, const K1Class& b) { return !(a == b); }

private:
    std::set<std::size_t> torsion_minus_;
    std::set<std::size_t> torsion_plus_;
    FreeMap free_;
};

/// K1 class of a Jordan form (all eigenvalues must be nonzero).
K1Class k1_class_of(const JordanForm& form);

/**
 * K1 class of an invertible matrix: decompose into cells, drop the trivial
 * (1, +1) cells, reduce +/-1 cells mod 2, and fold every other eigenvalue
 * onto its canonical representative (a flipped cell contributes -1).
 * Throws NotInvertible / SpectrumError / IncompleteSpectrum.
 */
K1Class k1_class(const ExactMatrix& a, const Spectrum& spectrum);

/// K0 class of an idempotent: its rank. Throws NotIdempotent.
K0Class k0_class(const ExactMatrix& p);

/// Formal difference rank(p) - rank(q) of two idempotents.
K0Class k0_diff(const ExactMatrix& p, const ExactMatrix& q);

}  // namespace kloc
