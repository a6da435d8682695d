// Times the serial and OpenMP paths of the dense kernels against each other
// and checks that they produce identical bits. Sizes are fixed so runs are
// comparable across machines.

#include "rankit/linalg.hpp"
#include "rankit/problem.hpp"
#include "rankit/solvers.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

namespace {

using namespace rankit;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

linalg::Matrix random_spd(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    linalg::Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = unit(rng);
    linalg::Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = 0.0;
            for (std::size_t k = 0; k < n; ++k) sum += b(i, k) * b(j, k);
            a(i, j) = a(j, i) = sum;
        }
    for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<double>(n);
    return a;
}

bool identical(const std::vector<double>& x, const std::vector<double>& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) return false;
    return true;
}

void bench_matvec(std::size_t n, std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    linalg::Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = unit(rng);
    std::vector<double> x(n), ys(n), yp(n);
    for (double& v : x) v = unit(rng);

    const int reps = n >= 2048 ? 20 : 100;
    const auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) linalg::matvec(a, x, ys, linalg::Exec::Serial);
    const double serial = ms_since(t0) / reps;
    const auto t1 = Clock::now();
    for (int r = 0; r < reps; ++r) linalg::matvec(a, x, yp, linalg::Exec::Parallel);
    const double parallel = ms_since(t1) / reps;

    std::printf("matvec    n=%5zu  serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx  %s\n", n,
                serial, parallel, serial / parallel, identical(ys, yp) ? "identical" : "DIFFER");
}

void bench_cholesky(std::size_t n, std::mt19937& rng) {
    const linalg::Matrix a = random_spd(n, rng);
    std::vector<double> rhs(n, 1.0);

    const int reps = n >= 1024 ? 2 : 5;
    std::vector<double> xs, xp;
    const auto t0 = Clock::now();
    for (int r = 0; r < reps; ++r) xs = linalg::cholesky(a, linalg::Exec::Serial).solve(rhs);
    const double serial = ms_since(t0) / reps;
    const auto t1 = Clock::now();
    for (int r = 0; r < reps; ++r) xp = linalg::cholesky(a, linalg::Exec::Parallel).solve(rhs);
    const double parallel = ms_since(t1) / reps;

    std::printf("cholesky  n=%5zu  serial %8.3f ms  parallel %8.3f ms  speedup %5.2fx  %s\n", n,
                serial, parallel, serial / parallel, identical(xs, xp) ? "identical" : "DIFFER");
}

// End-to-end context: one dense rating solve, auto execution policy.
void bench_solver(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<int> weight(1, 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    RankingProblem problem;
    problem.objects = default_labels(n);
    problem.results = linalg::Matrix(n, n);
    problem.matches = linalg::Matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double m = weight(rng);
            const double a = std::floor(unit(rng) * (2.0 * m + 1.0)) - m;
            problem.matches(i, j) = problem.matches(j, i) = m;
            problem.results(i, j) = a;
            problem.results(j, i) = -a;
        }

    const auto t0 = Clock::now();
    const RatingVector q = least_squares_direct(problem);
    const double elapsed = ms_since(t0);
    std::printf("least_squares_direct  n=%5zu  %8.3f ms  (auto policy, q[0]=%.6f)\n", n, elapsed,
                q.values[0]);
}

} // namespace

int main() {
    std::printf("openmp: %s, max threads: %d\n", linalg::openmp_enabled() ? "yes" : "no",
                linalg::max_threads());
    std::mt19937 rng(20240817);

    for (std::size_t n : {256, 512, 1024, 2048}) bench_matvec(n, rng);
    for (std::size_t n : {256, 512, 1024, 2048}) bench_cholesky(n, rng);
    bench_solver(1024, rng);
    return 0;
}
