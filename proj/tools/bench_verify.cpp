// Times the invariance trial runner in its serial and OpenMP modes on the
// same seeded workload and confirms the two reports agree. The pipelines
// are exact-arithmetic work of uneven cost, so the parallel loop uses
// dynamic scheduling; this tool shows what that buys on the host.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kloc/detail/rng.hpp"
#include "kloc/equiv.hpp"

using namespace kloc;

namespace {

double run_ms(const ExactMatrix& a, const Spectrum& spectrum, std::size_t trials,
              std::uint64_t seed, TrialExecution mode, bool& pass) {
    const auto start = std::chrono::steady_clock::now();
    const InvarianceReport report = verify_invariance(a, spectrum, trials, seed, mode);
    const auto stop = std::chrono::steady_clock::now();
    pass = report.pass;
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t trials = 200;
    std::uint64_t seed = 0;
    std::size_t size = 8;

    CLI::App app{"serial vs OpenMP timing of the invariance verifier"};
    app.add_option("--trials", trials, "pipelines per mode");
    app.add_option("--seed", seed, "base seed");
    app.add_option("--size", size, "seed matrix dimension");
    CLI11_PARSE(app, argc, argv);

    // Seed matrix: one free cell, one torsion cell, identity padding.
    JordanForm form;
    form.add({2, GaussianRational(2)});
    form.add({1, GaussianRational(-1)});
    while (form.total_size() < size) form.add({1, GaussianRational(1)});
    const ExactMatrix shape = compose(form);
    const ExactMatrix a = conjugate(shape, random_conjugator(shape.rows(), detail::mix_seed(seed, 99)));
    const Spectrum spectrum = form.spectrum();

    bool serial_pass = false;
    bool parallel_pass = false;
    const double serial_ms =
        run_ms(a, spectrum, trials, seed, TrialExecution::serial, serial_pass);
    const double parallel_ms =
        run_ms(a, spectrum, trials, seed, TrialExecution::parallel, parallel_pass);

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif

    std::printf("trials            %zu (matrix %zux%zu)\n", trials, a.rows(), a.cols());
    std::printf("serial            %10.1f ms  (%s)\n", serial_ms, serial_pass ? "pass" : "FAIL");
    std::printf("openmp (%2d thr)   %10.1f ms  (%s)\n", threads, parallel_ms,
                parallel_pass ? "pass" : "FAIL");
    std::printf("speedup           %10.2fx\n", parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);

    if (serial_pass != parallel_pass) {
        std::fprintf(stderr, "modes disagree\n");
        return 1;
    }
    return 0;
}
