// Acceptance suite: one check per release criterion, one PASS/FAIL line
// each, nonzero exit if anything fails. Criterion 11 drives the installed
// CLI binary (path via --cli) and compares bytes across repeated runs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include "kloc/detail/rng.hpp"
#include "kloc/equiv.hpp"
#include "kloc/json_io.hpp"
#include "test_support.hpp"

using namespace kloc;
using test::gq;

namespace {

std::string g_cli_path;

const std::vector<GaussianRational>& lambda_grid() {
    static const std::vector<GaussianRational> grid = {
        gq("2"), gq("1/2"), gq("-1"), gq("i"), gq("1+i"), gq("3/2-1/4i")};
    return grid;
}

// ---- criterion bodies --------------------------------------------------

bool closed_form_inverse() {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const GaussianRational& lambda : lambda_grid()) {
            if (cell_inverse({n, lambda}) != inverse(cell_matrix({n, lambda}))) return false;
        }
    }
    return true;
}

bool inverse_cell_decomposition() {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const GaussianRational& lambda : lambda_grid()) {
            JordanForm expected;
            expected.add({n, inverse(lambda)});
            if (jordan_decompose(cell_inverse({n, lambda}), {inverse(lambda)}) != expected) {
                return false;
            }
        }
    }
    return true;
}

bool rank_identities() {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const GaussianRational& lambda : lambda_grid()) {
            const ExactMatrix id = ExactMatrix::identity(n);
            const ExactMatrix lhs = cell_matrix({n, lambda}) - lambda * id;
            const ExactMatrix rhs = inverse(lambda) * id - cell_inverse({n, lambda});
            for (std::size_t k = 1; k <= n; ++k) {
                if (rank(power(lhs, k)) != rank(power(rhs, k))) return false;
            }
        }
    }
    return true;
}

bool jordan_rank_grid() {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (const GaussianRational& lambda : lambda_grid()) {
            if (jordan_rank(cell_matrix({n, lambda}), lambda) != n) return false;
            if (jordan_rank(cell_inverse({n, lambda}), inverse(lambda)) != n) return false;
        }
    }
    return true;
}

bool k0_rank_classes() {
    for (std::size_t r = 0; r <= 6; ++r) {
        for (std::size_t trial = 0; trial < 500; ++trial) {
            detail::SplitMix64 rng(detail::mix_seed(5000 + r, trial));
            const std::size_t lo = std::max<std::size_t>(r, 1);
            const std::size_t n = lo + rng.below(8 - lo + 1);
            ExactMatrix p(n, n);
            for (std::size_t i = 0; i < r; ++i) p(i, i) = GaussianRational(1);
            const ExactMatrix q = conjugate(p, random_conjugator(n, rng.next()));
            if (k0_class(q).value != static_cast<long>(r)) return false;
            const std::size_t pad = 1 + trial % 3;
            if (k0_class(direct_sum(q, ExactMatrix::zero(pad, pad))).value !=
                static_cast<long>(r)) {
                return false;
            }
        }
    }
    return true;
}

bool relation_set() {
    auto class_of = [](const JordanForm& f) { return k1_class(compose(f), f.spectrum()); };

    JordanForm trivial;
    trivial.add({1, gq("1")});
    if (!class_of(trivial).is_zero()) return false;

    for (std::size_t n = 1; n <= 6; ++n) {
        JordanForm one;
        one.add({n, gq("-1")});
        JordanForm two;
        two.add({n, gq("-1")}, 2);
        if (class_of(one).is_zero() || !class_of(two).is_zero()) return false;
        if (n >= 2) {
            JordanForm plus_one;
            plus_one.add({n, gq("1")});
            JordanForm plus_two;
            plus_two.add({n, gq("1")}, 2);
            if (class_of(plus_one).is_zero() || !class_of(plus_two).is_zero()) return false;
        }
    }

    for (std::size_t n = 1; n <= 8; ++n) {
        for (const GaussianRational& lambda : lambda_grid()) {
            JordanForm pair;
            pair.add({n, lambda});
            pair.add({n, inverse(lambda)});
            if (!class_of(pair).is_zero()) return false;
        }
    }
    return true;
}

bool integer_coefficients() {
    const std::vector<GaussianRational> lambdas = {gq("2"), gq("i")};
    for (const GaussianRational& lambda : lambdas) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (long m1 = 0; m1 <= 4; ++m1) {
                for (long m2 = 0; m2 <= 4; ++m2) {
                    JordanForm form;
                    form.add({n, lambda}, m1);
                    form.add({n, inverse(lambda)}, m2);
                    JordanForm swapped;
                    swapped.add({n, lambda}, m2);
                    swapped.add({n, inverse(lambda)}, m1);
                    const Spectrum spec{lambda, inverse(lambda)};
                    const K1Class cls = k1_class(compose(form), spec);
                    const K1Class swapped_cls = k1_class(compose(swapped), spec);

                    if (!cls.torsion_minus().empty() || !cls.torsion_plus().empty()) return false;
                    if (m1 == m2) {
                        if (!cls.is_zero()) return false;
                    } else {
                        if (cls.free_part().size() != 1) return false;
                        const auto it = cls.free_part().find({lambda, n});
                        if (it == cls.free_part().end() || it->second != m1 - m2) return false;
                    }
                    if (!(swapped_cls == -cls)) return false;
                }
            }
        }
    }
    return true;
}

bool pipeline_invariance() {
    for (std::size_t idx = 0; idx < 10; ++idx) {
        detail::SplitMix64 rng(detail::mix_seed(8000, idx));
        JordanForm form;
        const std::size_t cells = 1 + rng.below(3);
        for (std::size_t c = 0; c < cells; ++c) {
            form.add({1 + rng.below(3),
                      test::eigenvalue_pool()[rng.below(test::eigenvalue_pool().size())]});
        }
        const ExactMatrix shape = compose(form);
        const ExactMatrix a = conjugate(shape, random_conjugator(shape.rows(), rng.next()));
        const InvarianceReport report =
            verify_invariance(a, form.spectrum(), 10, detail::mix_seed(8500, idx));
        if (!report.pass) return false;
    }
    return true;
}

bool inverse_law() {
    for (std::size_t trial = 0; trial < 100; ++trial) {
        detail::SplitMix64 rng(detail::mix_seed(9000, trial));
        const JordanForm form = test::random_form(rng);
        const ExactMatrix a =
            conjugate(compose(form), random_conjugator(form.total_size(), rng.next()));
        Spectrum inv_spec;
        for (const GaussianRational& v : form.spectrum()) inv_spec.insert(inverse(v));
        if (!(k1_class(inverse(a), inv_spec) == -k1_class(a, form.spectrum()))) return false;
    }
    return true;
}

bool separation_catalog() {
    auto f = [](std::initializer_list<std::pair<JordanCell, long>> cells) {
        JordanForm form;
        for (const auto& [cell, mult] : cells) form.add(cell, mult);
        return form;
    };
    const std::vector<JordanForm> catalog = {
        f({{{1, gq("2")}, 1}}),
        f({{{2, gq("2")}, 1}}),
        f({{{3, gq("2")}, 1}}),
        f({{{1, gq("3")}, 1}}),
        f({{{1, gq("2")}, 2}}),
        f({{{1, gq("1/2")}, 1}}),
        f({{{1, gq("i")}, 1}}),
        f({{{2, gq("i")}, 1}}),
        f({{{1, gq("-1")}, 1}}),
        f({{{2, gq("-1")}, 1}}),
        f({{{3, gq("-1")}, 1}}),
        f({{{2, gq("1")}, 1}}),
        f({{{3, gq("1")}, 1}}),
        f({{{1, gq("2")}, 1}, {{2, gq("2")}, 1}}),
        f({{{1, gq("2")}, 1}, {{1, gq("-1")}, 1}}),
        f({{{2, gq("1")}, 1}, {{2, gq("-1")}, 1}}),
        f({{{1, gq("2")}, 1}, {{1, gq("3")}, 1}}),
        f({{{1, gq("2")}, 1}, {{1, gq("1/3")}, 1}}),
        f({{{1, gq("1")}, 1}}),  // the one zero-class entry
        f({{{1, gq("1+i")}, 1}}),
    };
    std::vector<K1Class> classes;
    classes.reserve(catalog.size());
    for (const JordanForm& form : catalog) {
        classes.push_back(k1_class(compose(form), form.spectrum()));
    }
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = i + 1; j < classes.size(); ++j) {
            if (classes[i] == classes[j]) return false;
        }
    }
    return true;
}

// ---- CLI determinism -----------------------------------------------------

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliRun run_cli(const std::string& args) {
    const std::string out_path = "acc_stdout.tmp";
    const std::string err_path = "acc_stderr.tmp";
    const std::string command =
        "'" + g_cli_path + "' " + args + " > " + out_path + " 2> " + err_path;
    const int status = std::system(command.c_str());
    CliRun run;
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    run.out = slurp(out_path);
    run.err = slurp(err_path);
    std::remove(out_path.c_str());
    std::remove(err_path.c_str());
    return run;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

bool cli_determinism() {
    if (g_cli_path.empty()) {
        std::fprintf(stderr, "missing --cli <path>\n");
        return false;
    }

    // inputs shared by the documented examples
    JordanForm j23;
    j23.add({2, gq("3")});
    j23.add({1, gq("3")});
    write_file("acc_j23.json", matrix_to_json(compose(j23)).dump());
    write_file("acc_idem.json",
               matrix_to_json(ExactMatrix::diagonal({gq("1"), gq("1"), gq("0")})).dump());
    write_file("acc_diag.json",
               matrix_to_json(ExactMatrix::diagonal({gq("2"), gq("2"), gq("1/2")})).dump());
    K1Class c1;
    c1.add_cell({2, gq("3")}, 1);
    c1.add_cell({1, gq("-1")}, 1);
    K1Class c2;
    c2.add_cell({2, gq("3")}, 2);
    write_file("acc_classes.json",
               nlohmann::json::array({k1_to_json(c1), k1_to_json(c2)}).dump());
    write_file("acc_class.json", k1_to_json(c1).dump());
    write_file("acc_eye2.json", matrix_to_json(ExactMatrix::identity(2)).dump());
    write_file("acc_singular.json",
               matrix_to_json(ExactMatrix::diagonal({gq("0"), gq("1")})).dump());
    write_file("acc_garbage.json", "this is not json");

    struct Example {
        std::string args;
        int expected_exit;
        std::optional<std::string> expected_out;  // exact bytes, newline included
    };
    const std::vector<Example> examples = {
        {"jordan --input acc_j23.json --spectrum 3", 0,
         "{\"cells\":[{\"eigenvalue\":\"3\",\"multiplicity\":1,\"size\":1},"
         "{\"eigenvalue\":\"3\",\"multiplicity\":1,\"size\":2}]}\n"},
        {"jordan --input acc_eye2.json --spectrum 1", 0,
         "{\"cells\":[{\"eigenvalue\":\"1\",\"multiplicity\":2,\"size\":1}]}\n"},
        {"jordan --input acc_eye2.json --spectrum 5", 3, std::nullopt},
        {"k0 --input acc_idem.json", 0, "{\"value\":2}\n"},
        {"k1 --input acc_diag.json --spectrum 2,1/2", 0,
         "{\"free\":[{\"coeff\":1,\"eigenvalue\":\"2\",\"size\":1}],"
         "\"torsion_minus\":{},\"torsion_plus\":{}}\n"},
        {"k1 --input acc_singular.json --spectrum 0,1", 5, std::nullopt},
        {"k1 --input acc_garbage.json --spectrum 1", 2, std::nullopt},
        {"k1-add --input acc_classes.json", 0, std::nullopt},
        {"k1-neg --input acc_class.json", 0, std::nullopt},
        {"jordan --input acc_j23.json --spectrum 3 --pretty", 0, std::nullopt},
        {"verify lemma5 --trials 25 --seed 1", 0, std::nullopt},
        {"verify lemma6 --trials 10 --seed 2", 0, std::nullopt},
        {"verify lemma7 --trials 10 --seed 4", 0, std::nullopt},
        {"verify equiv --trials 10 --seed 3", 0, std::nullopt},
        {"verify inverse-formula --size 8", 0, std::nullopt},
        {"verify k0 --trials 50 --seed 5 --size 8", 0, std::nullopt},
    };

    const std::vector<std::string> inputs = {
        "acc_j23.json",   "acc_idem.json", "acc_diag.json",     "acc_classes.json",
        "acc_class.json", "acc_eye2.json", "acc_singular.json", "acc_garbage.json"};

    bool ok = true;
    for (const Example& example : examples) {
        const CliRun first = run_cli(example.args);
        const CliRun second = run_cli(example.args);
        if (first.exit_code != example.expected_exit) {
            std::fprintf(stderr, "  exit %d (want %d): kloc %s\n", first.exit_code,
                         example.expected_exit, example.args.c_str());
            ok = false;
        }
        if (first.out != second.out || first.err != second.err ||
            first.exit_code != second.exit_code) {
            std::fprintf(stderr, "  output differs across runs: kloc %s\n", example.args.c_str());
            ok = false;
        }
        if (example.expected_out && first.out != *example.expected_out) {
            std::fprintf(stderr, "  unexpected output: kloc %s\n  got: %s", example.args.c_str(),
                         first.out.c_str());
            ok = false;
        }
    }
    for (const std::string& path : inputs) std::remove(path.c_str());
    return ok;
}

// ---- runner ----------------------------------------------------------------

struct Criterion {
    const char* name;
    std::function<bool()> check;
    double max_seconds;  // 0 = no bound
};

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
    }

    const std::vector<Criterion> criteria = {
        {"closed-form cell inverse equals elimination (n<=8, 6 eigenvalues)",
         closed_form_inverse, 5.0},
        {"cell inverse decomposes as the inverse-eigenvalue cell", inverse_cell_decomposition,
         5.0},
        {"rank sequences of a cell and its inverse coincide", rank_identities, 5.0},
        {"jordan rank equals the cell size on both sides", jordan_rank_grid, 0.0},
        {"k0 class is the rank, stable under conjugation and zero-padding", k0_rank_classes,
         0.0},
        {"relation set: trivial cell, torsion orders, inverse-pair cancellation", relation_set,
         0.0},
        {"free coefficients reduce to the signed multiplicity difference",
         integer_coefficients, 0.0},
        {"k1 class invariant under 100 random transform pipelines", pipeline_invariance, 60.0},
        {"k1 of the matrix inverse is the negated class", inverse_law, 0.0},
        {"catalog of 20 distinct classes stays pairwise separated", separation_catalog, 0.0},
        {"CLI reproduces byte-identical output on documented examples", cli_determinism, 0.0},
    };

    bool all_pass = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = criteria[i].check();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "  exception: %s\n", e.what());
            pass = false;
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].max_seconds > 0 && seconds >= criteria[i].max_seconds) pass = false;
        std::printf("[%2zu] %s  %s (%.2fs)\n", i + 1, pass ? "PASS" : "FAIL", criteria[i].name,
                    seconds);
        std::fflush(stdout);
        all_pass = all_pass && pass;
    }
    return all_pass ? 0 : 1;
}
