// kloc: exact Jordan forms and K-theory classes over Q(i).
//
// All output is JSON on stdout (compact unless --pretty); errors are JSON
// objects on stderr with a stable "code" field. Identical invocations
// produce byte-identical output.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kloc/errors.hpp"
#include "kloc/json_io.hpp"
#include "kloc/suites.hpp"

namespace {

using nlohmann::json;

int exit_code_for(const std::string& code) {
    if (code == "parse" || code == "usage") return 2;
    if (code == "incomplete_spectrum" || code == "spectrum") return 3;
    if (code == "dimension" || code == "non_square") return 4;
    return 5;  // singular, singular_cell, division_by_zero, not_idempotent, excluded_value
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw kloc::Error("usage", "cannot open input file \"" + path + "\"");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

json read_json(const std::string& path) {
    const std::string text = read_input(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw kloc::ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

kloc::Spectrum parse_spectrum(const std::vector<std::string>& parts) {
    std::vector<kloc::GaussianRational> values;
    for (const std::string& part : parts) {
        if (part.empty()) continue;
        values.push_back(kloc::parse_scalar(part));
    }
    return kloc::Spectrum(std::move(values));
}

void emit(const json& payload, bool pretty) {
    // Single write: no partial output can precede a failure.
    std::cout << (pretty ? payload.dump(2) : payload.dump()) << "\n";
}

void emit_error(const json& payload) { std::cerr << payload.dump() << "\n"; }

struct CommonOptions {
    std::string input = "-";
    std::vector<std::string> spectrum;
    bool pretty = false;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_spectrum) {
    cmd->add_option("--input", opts.input, "matrix/class JSON file, or - for stdin");
    if (with_spectrum) {
        cmd->add_option("--spectrum", opts.spectrum, "comma-separated eigenvalue scalars")
            ->delimiter(',');
    }
    cmd->add_flag("--pretty", opts.pretty, "indented JSON output");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Jordan decomposition and K0/K1 class computation over Q(i)"};
    app.require_subcommand(1);

    CommonOptions jordan_opts;
    CLI::App* cmd_jordan = app.add_subcommand("jordan", "Jordan form of a matrix");
    add_common(cmd_jordan, jordan_opts, true);
    CLI::Option* jordan_spectrum = cmd_jordan->get_option("--spectrum");

    CommonOptions k0_opts;
    CLI::App* cmd_k0 = app.add_subcommand("k0", "K0 class (rank) of an idempotent");
    add_common(cmd_k0, k0_opts, false);

    CommonOptions k1_opts;
    CLI::App* cmd_k1 = app.add_subcommand("k1", "K1 class of an invertible matrix");
    add_common(cmd_k1, k1_opts, true);
    CLI::Option* k1_spectrum = cmd_k1->get_option("--spectrum");

    CommonOptions k1add_opts;
    CLI::App* cmd_k1add = app.add_subcommand("k1-add", "sum of two K1 classes ([lhs, rhs] JSON)");
    add_common(cmd_k1add, k1add_opts, false);

    CommonOptions k1neg_opts;
    CLI::App* cmd_k1neg = app.add_subcommand("k1-neg", "negation of a K1 class");
    add_common(cmd_k1neg, k1neg_opts, false);

    CommonOptions verify_opts;
    std::string suite;
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    std::size_t size = 6;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run a property suite");
    cmd_verify->add_option("suite", suite,
                           "one of: lemma5, lemma6, lemma7, equiv, inverse-formula, k0")
        ->required();
    cmd_verify->add_option("--trials", trials, "number of randomized checks");
    cmd_verify->add_option("--seed", seed, "base seed for all randomness");
    cmd_verify->add_option("--size", size, "size bound for generated inputs");
    add_common(cmd_verify, verify_opts, true);
    CLI::Option* verify_input = cmd_verify->get_option("--input");
    verify_opts.input.clear();  // only used when given explicitly

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error(json{{"code", "usage"}, {"message", e.what()}});
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_jordan)) {
            if (!*jordan_spectrum) throw kloc::Error("usage", "jordan requires --spectrum");
            const kloc::ExactMatrix m = kloc::matrix_from_json(read_json(jordan_opts.input));
            const kloc::JordanForm form =
                kloc::jordan_decompose(m, parse_spectrum(jordan_opts.spectrum));
            emit(kloc::form_to_json(form), jordan_opts.pretty);
        } else if (app.got_subcommand(cmd_k0)) {
            const kloc::ExactMatrix m = kloc::matrix_from_json(read_json(k0_opts.input));
            emit(kloc::k0_to_json(kloc::k0_class(m)), k0_opts.pretty);
        } else if (app.got_subcommand(cmd_k1)) {
            if (!*k1_spectrum) throw kloc::Error("usage", "k1 requires --spectrum");
            const kloc::ExactMatrix m = kloc::matrix_from_json(read_json(k1_opts.input));
            const kloc::K1Class cls = kloc::k1_class(m, parse_spectrum(k1_opts.spectrum));
            emit(kloc::k1_to_json(cls), k1_opts.pretty);
        } else if (app.got_subcommand(cmd_k1add)) {
            const json j = read_json(k1add_opts.input);
            if (!j.is_array() || j.size() != 2) {
                throw kloc::ParseError("k1-add expects a JSON array of exactly two classes", 0);
            }
            const kloc::K1Class sum = kloc::k1_from_json(j[0]) + kloc::k1_from_json(j[1]);
            emit(kloc::k1_to_json(sum), k1add_opts.pretty);
        } else if (app.got_subcommand(cmd_k1neg)) {
            emit(kloc::k1_to_json(-kloc::k1_from_json(read_json(k1neg_opts.input))),
                 k1neg_opts.pretty);
        } else if (app.got_subcommand(cmd_verify)) {
            kloc::SuiteReport report;
            if (*verify_input) {
                if (suite != "equiv") {
                    throw kloc::Error("usage", "--input is only supported by the equiv suite");
                }
                const kloc::ExactMatrix m = kloc::matrix_from_json(read_json(verify_opts.input));
                report = kloc::run_equiv_suite(m, parse_spectrum(verify_opts.spectrum), trials,
                                               seed);
            } else {
                report = kloc::run_suite(suite, trials, seed, size);
            }
            emit(kloc::report_to_json(report), verify_opts.pretty);
            return report.pass ? 0 : 1;
        }
        return 0;
    } catch (const kloc::PipelineError& e) {
        emit_error(json{{"code", e.code()},
                        {"message", e.what()},
                        {"trace", kloc::trace_to_json(e.trace())}});
        return exit_code_for(e.code());
    } catch (const kloc::IncompleteSpectrum& e) {
        emit_error(json{{"code", e.code()}, {"message", e.what()}, {"deficit", e.deficit()}});
        return exit_code_for(e.code());
    } catch (const kloc::ParseError& e) {
        emit_error(json{{"code", e.code()},
                        {"message", e.what()},
                        {"position", e.position()}});
        return exit_code_for(e.code());
    } catch (const kloc::Error& e) {
        emit_error(json{{"code", e.code()}, {"message", e.what()}});
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        emit_error(json{{"code", "internal"}, {"message", e.what()}});
        return 2;
    }
}
