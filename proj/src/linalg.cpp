#include "rankit/linalg.hpp"

#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rankit::linalg {

namespace {

// Problem sizes below these thresholds are not worth a parallel region.
constexpr std::size_t kMatvecParallelMin = 192;
constexpr std::size_t kCholeskyParallelMin = 128;

bool use_parallel(Exec exec, std::size_t n, std::size_t threshold) {
#ifdef _OPENMP
    switch (exec) {
        case Exec::Serial: return false;
        case Exec::Parallel: return true;
        case Exec::Auto: return n >= threshold && omp_get_max_threads() > 1;
    }
    return false;
#else
    (void)exec;
    (void)n;
    (void)threshold;
    return false;
#endif
}

inline double row_dot(const double* row, const double* x, std::size_t n) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    return acc;
}

} // namespace

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

void matvec(const Matrix& a, std::span<const double> x, std::span<double> y, Exec exec) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    assert(x.size() == cols && y.size() == rows);

    if (use_parallel(exec, rows, kMatvecParallelMin)) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows); ++i)
            y[static_cast<std::size_t>(i)] =
                row_dot(a.row(static_cast<std::size_t>(i)), x.data(), cols);
    } else {
        for (std::size_t i = 0; i < rows; ++i) y[i] = row_dot(a.row(i), x.data(), cols);
    }
}

std::vector<double> matvec(const Matrix& a, const std::vector<double>& x, Exec exec) {
    std::vector<double> y(a.rows());
    matvec(a, x, y, exec);
    return y;
}

double dot(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    return row_dot(x.data(), y.data(), x.size());
}

double inf_norm(std::span<const double> x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::fabs(v));
    return m;
}

double inf_norm_diff(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::fabs(x[i] - y[i]));
    return m;
}

std::vector<double> CholeskyFactor::solve(std::span<const double> b) const {
    const std::size_t n = size();
    assert(b.size() == n);
    std::vector<double> y(b.begin(), b.end());
    // L z = b
    for (std::size_t i = 0; i < n; ++i) {
        const double* li = lower_.row(i);
        double acc = y[i];
        for (std::size_t j = 0; j < i; ++j) acc -= li[j] * y[j];
        y[i] = acc / li[i];
    }
    // L^T x = z
    for (std::size_t ii = n; ii-- > 0;) {
        double acc = y[ii];
        for (std::size_t j = ii + 1; j < n; ++j) acc -= lower_(j, ii) * y[j];
        y[ii] = acc / lower_(ii, ii);
    }
    return y;
}

CholeskyFactor cholesky(const Matrix& a, Exec exec) {
    const std::size_t n = a.rows();
    assert(a.cols() == n);
    Matrix l = a;
    const bool parallel = use_parallel(exec, n, kCholeskyParallelMin);

    for (std::size_t k = 0; k < n; ++k) {
        const double pivot = l(k, k);
        if (!(pivot > 0.0))
            throw std::domain_error("matrix is not positive definite (pivot " +
                                    std::to_string(pivot) + " at index " + std::to_string(k) + ")");
        const double lkk = std::sqrt(pivot);
        l(k, k) = lkk;
        for (std::size_t i = k + 1; i < n; ++i) l(i, k) /= lkk;

        // Trailing update, rows independent.
        if (parallel) {
#pragma omp parallel for schedule(static)
            for (std::int64_t i = static_cast<std::int64_t>(k) + 1;
                 i < static_cast<std::int64_t>(n); ++i) {
                const std::size_t ii = static_cast<std::size_t>(i);
                const double lik = l(ii, k);
                double* rowi = l.row(ii);
                for (std::size_t j = k + 1; j <= ii; ++j) rowi[j] -= lik * l(j, k);
            }
        } else {
            for (std::size_t i = k + 1; i < n; ++i) {
                const double lik = l(i, k);
                double* rowi = l.row(i);
                for (std::size_t j = k + 1; j <= i; ++j) rowi[j] -= lik * l(j, k);
            }
        }
    }

    // Zero the strict upper triangle so the factor prints cleanly.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) l(i, j) = 0.0;
    return CholeskyFactor(std::move(l));
}

double largest_eigenvalue_sym(const Matrix& a, double rel_tol, std::size_t max_iter, Exec exec) {
    const std::size_t n = a.rows();
    assert(a.cols() == n);
    if (n == 0) return 0.0;

    // Fixed-seed xorshift start vector: deterministic and unlikely to be
    // orthogonal to the dominant eigenspace.
    std::vector<double> x(n);
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (std::size_t i = 0; i < n; ++i) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        x[i] = static_cast<double>(state % 1000003u) / 1000003.0 - 0.5;
    }

    std::vector<double> y(n);
    double lambda = 0.0;
    for (std::size_t it = 0; it < max_iter; ++it) {
        const double norm = std::sqrt(dot(x, x));
        if (norm == 0.0) return 0.0; // iterate fell into the kernel
        for (std::size_t i = 0; i < n; ++i) x[i] /= norm;
        matvec(a, x, y, exec);
        const double next = dot(x, y); // Rayleigh quotient
        if (it > 0 && std::fabs(next - lambda) <= rel_tol * std::max(1.0, std::fabs(next)))
            return next;
        lambda = next;
        x.swap(y);
    }
    return lambda;
}

} // namespace rankit::linalg
