#include "kloc/suites.hpp"

#include <algorithm>
#include <vector>

#include "kloc/detail/rng.hpp"
#include "kloc/errors.hpp"

namespace kloc {

namespace {

using detail::SplitMix64;

// Nonzero eigenvalues covering free generators, both torsion families,
// and values whose inverse is the canonical representative.
const std::vector<GaussianRational>& eigen_pool() {
    static const std::vector<GaussianRational> pool = {
        GaussianRational(2),
        GaussianRational(3),
        GaussianRational(-2),
        GaussianRational(Rational(1, 2)),
        GaussianRational(0, 1),
        GaussianRational(0, -1),
        GaussianRational(1, 1),
        GaussianRational(Rational(3, 2), Rational(-1, 4)),
        GaussianRational(1),
        GaussianRational(-1),
    };
    return pool;
}

Rational random_rational(SplitMix64& rng) {
    const long num = static_cast<long>(rng.below(7)) - 3;
    const long den = 1 + static_cast<long>(rng.below(3));
    return {num, den};
}

GaussianRational random_nonzero_scalar(SplitMix64& rng) {
    while (true) {
        const Rational re = random_rational(rng);
        const Rational im = rng.below(2) == 0 ? Rational(0) : random_rational(rng);
        const GaussianRational z(re, im);
        if (!z.is_zero()) return z;
    }
}

JordanForm random_invertible_form(SplitMix64& rng, std::size_t max_cells,
                                  std::size_t max_cell_size) {
    JordanForm form;
    const std::size_t cells = 1 + rng.below(max_cells);
    for (std::size_t c = 0; c < cells; ++c) {
        const std::size_t size = 1 + rng.below(max_cell_size);
        form.add({size, eigen_pool()[rng.below(eigen_pool().size())]});
    }
    return form;
}

JordanForm inverted_form(const JordanForm& form) {
    JordanForm out;
    for (const auto& [key, mult] : form.cells()) {
        out.add({key.second, inverse(key.first)}, mult);
    }
    return out;
}

Spectrum with_inverses(const Spectrum& s) {
    Spectrum out = s;
    for (const GaussianRational& v : s) out.insert(inverse(v));
    return out;
}

SuiteReport lemma5_suite(std::size_t trials, std::uint64_t seed, std::size_t size) {
    SuiteReport report;
    for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 rng(detail::mix_seed(seed, t));
        const std::size_t n = 1 + rng.below(std::max<std::size_t>(size, 1));
        const GaussianRational lambda = random_nonzero_scalar(rng);
        const GaussianRational inv_lambda = inverse(lambda);

        JordanForm expected;
        expected.add({n, inv_lambda});
        const JordanForm actual = jordan_decompose(cell_inverse({n, lambda}), {inv_lambda});
        ++report.trials;
        if (actual != expected) {
            report.pass = false;
            return report;
        }
    }
    return report;
}

SuiteReport lemma6_suite(std::size_t trials, std::uint64_t seed, std::size_t size) {
    SuiteReport report;
    const std::size_t max_cell = std::min<std::size_t>(3, std::max<std::size_t>(size, 1));
    for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 rng(detail::mix_seed(seed, t));
        const JordanForm form = random_invertible_form(rng, 3, max_cell);
        const ExactMatrix shape = compose(form);
        const ExactMatrix a = conjugate(shape, random_conjugator(shape.rows(), rng.next()));
        const ExactMatrix u = direct_sum(a, inverse(a));

        const Spectrum spec = with_inverses(form.spectrum());
        const JordanForm expected = form + inverted_form(form);
        ++report.trials;
        if (jordan_decompose(u, spec) != expected || !k1_class(u, spec).is_zero()) {
            report.pass = false;
            return report;
        }
    }
    return report;
}

// Class-preserving mutation: identity padding, a lambda/1-lambda pair, or
// a doubled torsion cell.
JordanForm mutate_same_class(const JordanForm& form, SplitMix64& rng) {
    JordanForm out = form;
    const std::size_t n = 1 + rng.below(3);
    switch (rng.below(4)) {
        case 0:
            out.add({1, GaussianRational(1)}, 1 + static_cast<long>(rng.below(3)));
            break;
        case 1: {
            const GaussianRational lambda = random_nonzero_scalar(rng);
            out.add({n, lambda});
            out.add({n, inverse(lambda)});
            break;
        }
        case 2:
            out.add({n, GaussianRational(-1)}, 2);
            break;
        default:
            out.add({n + 1, GaussianRational(1)}, 2);
            break;
    }
    return out;
}

SuiteReport lemma7_suite(std::size_t trials, std::uint64_t seed, std::size_t size) {
    SuiteReport report;
    const std::size_t max_n = std::max<std::size_t>(size, 2);

    // The trivial generator.
    ++report.trials;
    if (!k1_class(cell_matrix({1, GaussianRational(1)}), {GaussianRational(1)}).is_zero()) {
        report.pass = false;
        return report;
    }

    // Torsion generators: order exactly 2.
    for (std::size_t n = 1; n <= max_n; ++n) {
        K1Class minus;
        minus.add_cell({n, GaussianRational(-1)}, 1);
        ++report.trials;
        if (minus.is_zero() || !(minus + minus).is_zero()) {
            report.pass = false;
            return report;
        }
        if (n >= 2) {
            K1Class plus;
            plus.add_cell({n, GaussianRational(1)}, 1);
            ++report.trials;
            if (plus.is_zero() || !(plus + plus).is_zero()) {
                report.pass = false;
                return report;
            }
        }
    }

    // Inverse pairs cancel.
    for (const GaussianRational& lambda : eigen_pool()) {
        if (lambda == GaussianRational(1) || lambda == GaussianRational(-1)) continue;
        for (std::size_t n = 1; n <= max_n; ++n) {
            K1Class pair;
            pair.add_cell({n, lambda}, 1);
            pair.add_cell({n, inverse(lambda)}, 1);
            ++report.trials;
            if (!pair.is_zero()) {
                report.pass = false;
                return report;
            }
        }
    }

    // Completeness both ways on randomized pairs: equal classes are
    // constructively equivalent, and adding one free cell separates.
    for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 rng(detail::mix_seed(seed, t));
        const JordanForm u1 = random_invertible_form(rng, 3, 3);
        JordanForm u2 = mutate_same_class(u1, rng);
        if (rng.below(2) == 0) u2 = mutate_same_class(u2, rng);
        ++report.trials;
        if (!(k1_class_of(u1) == k1_class_of(u2)) || !constructively_equivalent(u1, u2)) {
            report.pass = false;
            return report;
        }

        JordanForm u3 = u2;
        u3.add({1 + rng.below(3), GaussianRational(2)});
        ++report.trials;
        if (k1_class_of(u1) == k1_class_of(u3) || constructively_equivalent(u1, u3)) {
            report.pass = false;
            return report;
        }
    }
    return report;
}

SuiteReport equiv_suite(std::size_t trials, std::uint64_t seed, std::size_t size) {
    SuiteReport report;
    const std::size_t matrices = 5;
    const std::size_t per_matrix = std::max<std::size_t>(1, trials / matrices);
    for (std::size_t m = 0; m < matrices; ++m) {
        SplitMix64 rng(detail::mix_seed(seed, 1000 + m));
        const JordanForm form =
            random_invertible_form(rng, 3, std::min<std::size_t>(3, std::max<std::size_t>(size, 1)));
        const ExactMatrix shape = compose(form);
        const ExactMatrix a = conjugate(shape, random_conjugator(shape.rows(), rng.next()));

        const InvarianceReport inner =
            verify_invariance(a, form.spectrum(), per_matrix, detail::mix_seed(seed, m));
        report.trials += inner.trials;
        if (!inner.pass) {
            report.pass = false;
            report.failure_trace = inner.failure_trace;
            return report;
        }
    }
    return report;
}

SuiteReport inverse_formula_suite(std::size_t trials, std::uint64_t seed, std::size_t size) {
    SuiteReport report;
    const std::size_t max_n = std::max<std::size_t>(size, 1);
    for (const GaussianRational& lambda : eigen_pool()) {
        for (std::size_t n = 1; n <= max_n; ++n) {
            ++report.trials;
            if (cell_inverse({n, lambda}) != inverse(cell_matrix({n, lambda}))) {
                report.pass = false;
                return report;
            }
        }
    }
    for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 rng(detail::mix_seed(seed, t));
        const JordanCell cell{1 + rng.below(max_n), random_nonzero_scalar(rng)};
        ++report.trials;
        if (cell_inverse(cell) != inverse(cell_matrix(cell))) {
            report.pass = false;
            return report;
        }
    }
    return report;
}

SuiteReport k0_suite(std::size_t trials, std::uint64_t seed, std::size_t size) {
    SuiteReport report;
    const std::size_t max_n = std::max<std::size_t>(size, 1);
    for (std::size_t t = 0; t < trials; ++t) {
        SplitMix64 rng(detail::mix_seed(seed, t));
        const std::size_t n = 1 + rng.below(max_n);
        const std::size_t r = rng.below(n + 1);

        ExactMatrix p(n, n);
        for (std::size_t i = 0; i < r; ++i) p(i, i) = GaussianRational(1);
        const ExactMatrix q = conjugate(p, random_conjugator(n, rng.next()));
        const std::size_t pad = 1 + rng.below(3);
        const ExactMatrix padded = direct_sum(q, ExactMatrix::zero(pad, pad));

        ++report.trials;
        if (k0_class(q).value != static_cast<long>(r) ||
            k0_class(padded).value != static_cast<long>(r) || k0_diff(q, p).value != 0) {
            report.pass = false;
            return report;
        }
    }
    return report;
}

}  // namespace

SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed,
                      std::size_t size) {
    if (name == "lemma5") return lemma5_suite(trials, seed, size);
    if (name == "lemma6") return lemma6_suite(trials, seed, size);
    if (name == "lemma7") return lemma7_suite(trials, seed, size);
    if (name == "equiv") return equiv_suite(trials, seed, size);
    if (name == "inverse-formula") return inverse_formula_suite(trials, seed, size);
    if (name == "k0") return k0_suite(trials, seed, size);
    throw Error("usage", "unknown verification suite \"" + name + "\"");
}

SuiteReport run_equiv_suite(const ExactMatrix& a, const Spectrum& spectrum, std::size_t trials,
                            std::uint64_t seed) {
    const InvarianceReport inner = verify_invariance(a, spectrum, trials, seed);
    SuiteReport report;
    report.pass = inner.pass;
    report.trials = inner.trials;
    report.cls = inner.base_class;
    report.failure_trace = inner.failure_trace;
    return report;
}

}  // namespace kloc
