#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "kloc/exmat.hpp"
#include "kloc/jordan.hpp"
#include "kloc/ktheory.hpp"

namespace kloc {

// The three class-preserving transforms.
struct Stabilize {
    std::size_t k;  // >= 1: append the k x k identity block
};
struct ConjugateBy {
    std::uint64_t seed;  // conjugate by random_conjugator(n, seed)
};
struct OPad {
    ExactMatrix u;  // invertible: append u (+) u^-1
};

using EquivTransform = std::variant<Stabilize, ConjugateBy, OPad>;

/// Evidence object: replaying `steps` on `initial` yields `final` exactly.
struct TransformTrace {
    ExactMatrix initial;
    std::vector<EquivTransform> steps;
    ExactMatrix final;
};

/// An error raised inside a transform pipeline, re-thrown with the trace
/// of the steps completed before the failure. Keeps the original code so
/// callers can still classify the underlying error.
class PipelineError : public Error {
public:
    PipelineError(const std::string& code, const std::string& message, TransformTrace trace)
        : Error(code, message), trace_(std::move(trace)) {}

    const TransformTrace& trace() const { return trace_; }

private:
    TransformTrace trace_;
};

/// a (+) I_k.
ExactMatrix stabilize(const ExactMatrix& a, std::size_t k);

/// a (+) u (+) u^-1; the appended block represents zero in K1.
/// Throws NotInvertible when u is singular.
ExactMatrix opad(const ExactMatrix& a, const ExactMatrix& u);

/**
 * Deterministic-from-seed invertible n x n matrix: a product of at most 3n
 * elementary row operations (row adds with multipliers from
 * {+-1, +-2, +-i, 1+-i}, swaps, unit scalings). Exactly invertible by
 * construction; identical output for identical (n, seed).
 */
ExactMatrix random_conjugator(std::size_t n, std::uint64_t seed);

ExactMatrix apply_transform(const ExactMatrix& a, const EquivTransform& step);

/// Replay a step sequence from an initial matrix.
ExactMatrix replay(const ExactMatrix& initial, const std::vector<EquivTransform>& steps);

enum class TrialExecution {
    serial,    // reference path
    parallel,  // OpenMP over independent trials; identical results
};

struct InvarianceReport {
    bool pass = true;
    std::size_t trials = 0;
    K1Class base_class;
    std::optional<TransformTrace> failure_trace;  // lowest-index failing trial
};

/**
 * Runs `trials` seeded random transform pipelines (shuffled stabilize /
 * conjugate / opad steps, opad eigenvalues drawn from the spectrum plus
 * {2, i, -1}, total size capped at 48) against `a` and checks that every
 * final matrix has the same K1 class as `a`. Trials are independent given
 * their derived seeds, so the serial and parallel paths produce identical
 * reports.
 */
InvarianceReport verify_invariance(const ExactMatrix& a, const Spectrum& spectrum,
                                   std::size_t trials, std::uint64_t seed,
                                   TrialExecution execution = TrialExecution::parallel);

/**
 * Constructive completeness check: two Jordan forms (of invertible
 * matrices) have equal K1 classes iff they can be matched exactly by
 * padding each side with u (+) u^-1 pairs and stabilization. Builds the
 * witness paddings and compares the padded forms cell by cell; returns
 * false when the classes genuinely differ.
 */
bool constructively_equivalent(const JordanForm& u1, const JordanForm& u2);

}  // namespace kloc
