#include "kloc/json_io.hpp"

#include <nlohmann/json.hpp>

#include <string>

#include "kloc/errors.hpp"

namespace kloc {

using nlohmann::json;

namespace {

[[noreturn]] void bad_input(const std::string& message) {
    throw ParseError(message, 0);
}

std::size_t get_count(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_unsigned()) {
        bad_input(std::string("expected non-negative integer field \"") + field + "\"");
    }
    return j[field].get<std::size_t>();
}

}  // namespace

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_scalar(m(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

ExactMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) bad_input("matrix JSON must be an object");
    const std::size_t rows = get_count(j, "rows");
    const std::size_t cols = get_count(j, "cols");
    if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != rows) {
        bad_input("\"entries\" must be an array of exactly " + std::to_string(rows) + " rows");
    }
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j["entries"][i];
        if (!row.is_array() || row.size() != cols) {
            bad_input("row " + std::to_string(i) + " must be an array of exactly " +
                      std::to_string(cols) + " strings");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (!row[c].is_string()) {
                bad_input("entry (" + std::to_string(i) + "," + std::to_string(c) +
                          ") must be a scalar string");
            }
            m(i, c) = parse_scalar(row[c].get<std::string>());
        }
    }
    return m;
}

json form_to_json(const JordanForm& form) {
    json cells = json::array();
    for (const auto& [key, mult] : form.cells()) {
        cells.push_back(json{{"size", key.second},
                             {"eigenvalue", format_scalar(key.first)},
                             {"multiplicity", mult}});
    }
    return json{{"cells", std::move(cells)}};
}

json k0_to_json(const K0Class& c) { return json{{"value", c.value}}; }

json k1_to_json(const K1Class& c) {
    json minus = json::object();
    for (std::size_t n : c.torsion_minus()) minus[std::to_string(n)] = 1;
    json plus = json::object();
    for (std::size_t n : c.torsion_plus()) plus[std::to_string(n)] = 1;
    json free = json::array();
    for (const auto& [key, coeff] : c.free_part()) {
        free.push_back(json{{"size", key.second},
                            {"eigenvalue", format_scalar(key.first)},
                            {"coeff", coeff}});
    }
    return json{{"torsion_minus", std::move(minus)},
                {"torsion_plus", std::move(plus)},
                {"free", std::move(free)}};
}

K1Class k1_from_json(const json& j) {
    if (!j.is_object()) bad_input("K1 class JSON must be an object");
    K1Class out;

    auto read_torsion = [&](const char* field, const GaussianRational& eigenvalue,
                            std::size_t min_size) {
        if (!j.contains(field)) return;
        if (!j[field].is_object()) bad_input(std::string("\"") + field + "\" must be an object");
        for (const auto& [key, value] : j[field].items()) {
            std::size_t n = 0;
            try {
                n = std::stoul(key);
            } catch (const std::exception&) {
                bad_input(std::string("bad size key \"") + key + "\" in " + field);
            }
            if (n < min_size) {
                bad_input(std::string("size ") + key + " below minimum in " + field);
            }
            if (!value.is_number_integer()) {
                bad_input(std::string("coefficient for size ") + key + " must be an integer");
            }
            out.add_cell({n, eigenvalue}, value.get<long>());
        }
    };
    read_torsion("torsion_minus", GaussianRational(-1), 1);
    read_torsion("torsion_plus", GaussianRational(1), 2);

    if (j.contains("free")) {
        if (!j["free"].is_array()) bad_input("\"free\" must be an array");
        for (const json& entry : j["free"]) {
            if (!entry.is_object() || !entry.contains("size") || !entry.contains("eigenvalue") ||
                !entry.contains("coeff")) {
                bad_input("free entries need \"size\", \"eigenvalue\", and \"coeff\"");
            }
            if (!entry["size"].is_number_unsigned()) bad_input("\"size\" must be a positive integer");
            const std::size_t size = entry["size"].get<std::size_t>();
            if (size == 0) bad_input("\"size\" must be >= 1");
            if (!entry["coeff"].is_number_integer()) bad_input("\"coeff\" must be an integer");
            if (!entry["eigenvalue"].is_string()) bad_input("\"eigenvalue\" must be a string");
            const GaussianRational lambda = parse_scalar(entry["eigenvalue"].get<std::string>());
            const HatLambda hat = hat_normalize(lambda);  // rejects -1, 0, 1
            if (hat.flipped) {
                bad_input("free eigenvalue " + format_scalar(lambda) +
                          " is not a canonical representative");
            }
            out.add_cell({size, lambda}, entry["coeff"].get<long>());
        }
    }
    return out;
}

namespace {

json step_to_json(const EquivTransform& step) {
    return std::visit(
        [](const auto& s) -> json {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Stabilize>) {
                return json{{"kind", "stabilize"}, {"k", s.k}};
            } else if constexpr (std::is_same_v<T, ConjugateBy>) {
                return json{{"kind", "conjugate"}, {"seed", s.seed}};
            } else {
                return json{{"kind", "opad"}, {"u", matrix_to_json(s.u)}};
            }
        },
        step);
}

}  // namespace

json trace_to_json(const TransformTrace& trace) {
    json steps = json::array();
    for (const EquivTransform& step : trace.steps) steps.push_back(step_to_json(step));
    return json{{"initial", matrix_to_json(trace.initial)},
                {"steps", std::move(steps)},
                {"final", matrix_to_json(trace.final)}};
}

json report_to_json(const InvarianceReport& report) {
    return json{{"status", report.pass ? "pass" : "fail"},
                {"trials", report.trials},
                {"class", k1_to_json(report.base_class)},
                {"failure_trace",
                 report.failure_trace ? trace_to_json(*report.failure_trace) : json(nullptr)}};
}

json report_to_json(const SuiteReport& report) {
    return json{{"status", report.pass ? "pass" : "fail"},
                {"trials", report.trials},
                {"class", report.cls ? k1_to_json(*report.cls) : json(nullptr)},
                {"failure_trace",
                 report.failure_trace ? trace_to_json(*report.failure_trace) : json(nullptr)}};
}

}  // namespace kloc
