#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "kloc/equiv.hpp"

namespace kloc {

/// Outcome of a named property suite. `cls` is only set when the suite
/// verified a single matrix (its invariant class); `failure_trace` only
/// when a transform pipeline produced the failure.
struct SuiteReport {
    bool pass = true;
    std::size_t trials = 0;  // independent checks executed
    std::optional<K1Class> cls;
    std::optional<TransformTrace> failure_trace;
};

/**
 * Runs one of the named property suites:
 *
 *   lemma5          — cell inverses decompose as the inverse-eigenvalue cell
 *   lemma6          — u (+) u^-1 splits into (n, lambda), (n, 1/lambda) pairs
 *                     and is zero in K1
 *   lemma7          — the relation set, torsion orders, and constructive
 *                     completeness on randomized pairs
 *   equiv           — class invariance under random transform pipelines
 *   inverse-formula — closed-form cell inverse against elimination
 *   k0              — conjugation/stabilization invariance of the rank class
 *
 * Throws Error("usage", ...) for an unknown suite name.
 */
SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed,
                      std::size_t size);

/// The equiv suite against one explicit matrix; reports its class.
SuiteReport run_equiv_suite(const ExactMatrix& a, const Spectrum& spectrum, std::size_t trials,
                            std::uint64_t seed);

}  // namespace kloc
