#pragma once

#include <nlohmann/json_fwd.hpp>

#include "kloc/equiv.hpp"
#include "kloc/exmat.hpp"
#include "kloc/jordan.hpp"
#include "kloc/ktheory.hpp"
#include "kloc/suites.hpp"

// JSON wire formats. All scalars travel as strings in the scalar grammar;
// object keys are emitted in sorted order, so equal values always
// serialize to identical bytes.
namespace kloc {

// {"rows": R, "cols": C, "entries": [["scalar", ...], ...]} — exactly R
// arrays of C strings, row-major.
nlohmann::json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const nlohmann::json& j);

// {"cells": [{"size": n, "eigenvalue": "scalar", "multiplicity": m}, ...]}
// sorted by (eigenvalue canonical order, size).
nlohmann::json form_to_json(const JordanForm& form);

// {"value": m}
nlohmann::json k0_to_json(const K0Class& c);

// {"torsion_minus": {"n": 1, ...}, "torsion_plus": {...},
//  "free": [{"size": n, "eigenvalue": "scalar", "coeff": m}, ...]}
// free entries sorted by (eigenvalue canonical order, size).
nlohmann::json k1_to_json(const K1Class& c);
K1Class k1_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const TransformTrace& trace);

// {"status": "pass"|"fail", "trials": n, "class": <K1Class JSON>,
//  "failure_trace": <TransformTrace JSON or null>}
nlohmann::json report_to_json(const InvarianceReport& report);

// Same schema; "class" is null for suites that aggregate over many inputs.
nlohmann::json report_to_json(const SuiteReport& report);

}  // namespace kloc
