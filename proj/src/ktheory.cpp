#include "kloc/ktheory.hpp"

#include "kloc/errors.hpp"

namespace kloc {

HatLambda hat_normalize(const GaussianRational& lambda) {
    if (lambda.is_zero() || lambda == GaussianRational(1) || lambda == GaussianRational(-1)) {
        throw ExcludedValue("cannot normalize " + format_scalar(lambda) +
                            ": excluded from the quotient");
    }
    const Rational n = norm(lambda);
    if (n > Rational(1)) return {lambda, false};
    if (n < Rational(1)) return {inverse(lambda), true};
    // Unit circle: the inverse is the conjugate, so exactly one of the two
    // has positive imaginary part (+-1 are excluded).
    if (lambda.im.sign() > 0) return {lambda, false};
    return {inverse(lambda), true};
}

void K1Class::add_cell(const JordanCell& cell, long multiplicity) {
    if (multiplicity == 0) return;
    const GaussianRational& lambda = cell.eigenvalue;
    if (lambda.is_zero()) throw SingularCell("K1 cell with eigenvalue 0");

    if (lambda == GaussianRational(1)) {
        if (cell.size == 1) return;  // trivial generator
        if (multiplicity % 2 != 0) {
            if (!torsion_plus_.erase(cell.size)) torsion_plus_.insert(cell.size);
        }
        return;
    }
    if (lambda == GaussianRational(-1)) {
        if (multiplicity % 2 != 0) {
            if (!torsion_minus_.erase(cell.size)) torsion_minus_.insert(cell.size);
        }
        return;
    }
    const HatLambda hat = hat_normalize(lambda);
    const FreeKey key{hat.representative, cell.size};
    auto [it, inserted] = free_.try_emplace(key, 0);
    it->second += hat.flipped ? -multiplicity : multiplicity;
    if (it->second == 0) free_.erase(it);
}

K1Class operator+(const K1Class& a, const K1Class& b) {
    K1Class out = a;
    for (std::size_t n : b.torsion_minus_) {
        if (!out.torsion_minus_.erase(n)) out.torsion_minus_.insert(n);
    }
    for (std::size_t n : b.torsion_plus_) {
        if (!out.torsion_plus_.erase(n)) out.torsion_plus_.insert(n);
    }
    for (const auto& [key, coeff] : b.free_) {
        auto [it, inserted] = out.free_.try_emplace(key, 0);
        it->second += coeff;
        if (it->second == 0) out.free_.erase(it);
    }
    return out;
}

K1Class K1Class::operator-() const {
    K1Class out = *this;  // 2-torsion is its own inverse
    for (auto& [key, coeff] : out.free_) coeff = -coeff;
    return out;
}

K1Class k1_class_of(const JordanForm& form) {
    K1Class out;
    for (const auto& [key, mult] : form.cells()) {
        out.add_cell({key.second, key.first}, mult);
    }
    return out;
}

K1Class k1_class(const ExactMatrix& a, const Spectrum& spectrum) {
    if (!a.is_square()) throw NonSquare("K1 class of a non-square matrix");
    if (rank(a) != a.rows()) throw NotInvertible();
    if (spectrum.contains(GaussianRational(0))) {
        throw SpectrumError("spectrum", "spectrum of an invertible matrix cannot contain 0");
    }
    return k1_class_of(jordan_decompose(a, spectrum));
}

namespace {

void require_idempotent(const ExactMatrix& p) {
    if (!p.is_square()) throw NonSquare("idempotent check on a non-square matrix");
    if (p * p != p) throw NotIdempotent();
}

}  // namespace

K0Class k0_class(const ExactMatrix& p) {
    require_idempotent(p);
    return {static_cast<long>(rank(p))};
}

K0Class k0_diff(const ExactMatrix& p, const ExactMatrix& q) {
    require_idempotent(p);
    require_idempotent(q);
    return {static_cast<long>(rank(p)) - static_cast<long>(rank(q))};
}

}  // namespace kloc
