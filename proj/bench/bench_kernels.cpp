// Timing comparison of the OpenMP kernels against the serial reference
// versions, plus the incremental threshold search against the full
// re-evaluation route. Not a correctness test; build target `bench_kernels`.

#include <chrono>
#include <cstdio>
#include <random>

#include "overlapnet/graph.hpp"
#include "overlapnet/matrix.hpp"
#include "overlapnet/sbmf.hpp"
#include "overlapnet/snmf.hpp"

using namespace overlapnet;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

Matrix random_adjacency(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() % 20 == 0) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return adjacency_unit_diag(graph_from_edges(std::move(edges), n));
}

template <typename F>
double time_repeated(int reps, F&& f) {
    const auto start = clock_type::now();
    for (int r = 0; r < reps; ++r) f();
    return seconds_since(start) / reps;
}

} // namespace

int main() {
    std::mt19937_64 rng(1);
    std::printf("%-28s %10s %10s %8s\n", "kernel", "serial(s)", "omp(s)", "speedup");

    for (std::size_t n : {256, 512, 1024}) {
        const Matrix A = random_adjacency(n, rng);
        const SoftMembership U = init_soft(n, 16, 7);
        Matrix out(n, 16);

        const int reps = n <= 512 ? 20 : 5;
        const double t_serial =
            time_repeated(reps, [&] { kernels::serial::sym_product(A, U.values, out); });
        const double t_omp =
            time_repeated(reps, [&] { kernels::sym_product(A, U.values, out); });
        std::printf("%-28s %10.5f %10.5f %8.2f\n",
                    ("sym_product n=" + std::to_string(n)).c_str(), t_serial, t_omp,
                    t_serial / t_omp);

        const double r_serial =
            time_repeated(reps, [&] { (void)kernels::serial::residual_frob_sq(A, U.values); });
        const double r_omp =
            time_repeated(reps, [&] { (void)kernels::residual_frob_sq(A, U.values); });
        std::printf("%-28s %10.5f %10.5f %8.2f\n",
                    ("residual_frob_sq n=" + std::to_string(n)).c_str(), r_serial, r_omp,
                    r_serial / r_omp);
    }

    std::printf("\n%-28s %10s %10s %8s\n", "threshold search", "naive(s)", "increm(s)",
                "speedup");
    for (std::size_t n : {128, 256}) {
        const Matrix A = random_adjacency(n, rng);
        const SoftMembership U = init_soft(n, 8, 11);
        const BinarizeConfig cfg;
        const double t_naive = time_repeated(2, [&] { (void)binarize_reference(A, U, cfg); });
        const double t_fast = time_repeated(10, [&] { (void)binarize(A, U, cfg); });
        std::printf("%-28s %10.5f %10.5f %8.2f\n", ("binarize n=" + std::to_string(n)).c_str(),
                    t_naive, t_fast, t_naive / t_fast);
    }
    return 0;
}
