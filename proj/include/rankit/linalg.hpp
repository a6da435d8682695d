#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rankit::linalg {

/// Kernel execution policy. Auto picks the OpenMP path for matrices large
/// enough to amortize the fork, and the serial path otherwise. Serial and
/// Parallel force one path; both produce bitwise-identical results because
/// they share the per-row arithmetic.
enum class Exec { Auto, Serial, Parallel };

/// True when the library was built with OpenMP.
bool openmp_enabled();
int max_threads();

/// Dense row-major matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    std::span<const double> data() const { return data_; }
    std::span<double> data() { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// y = A x.
void matvec(const Matrix& a, std::span<const double> x, std::span<double> y,
            Exec exec = Exec::Auto);
std::vector<double> matvec(const Matrix& a, const std::vector<double>& x,
                           Exec exec = Exec::Auto);

double dot(std::span<const double> x, std::span<const double> y);
double inf_norm(std::span<const double> x);
double inf_norm_diff(std::span<const double> x, std::span<const double> y);

/// Lower-triangular Cholesky factor of a symmetric positive definite matrix.
class CholeskyFactor {
public:
    explicit CholeskyFactor(Matrix lower) : lower_(std::move(lower)) {}

    std::size_t size() const { return lower_.rows(); }
    const Matrix& lower() const { return lower_; }

    /// Solves A x = b given A = L L^T.
    std::vector<double> solve(std::span<const double> b) const;

private:
    Matrix lower_;
};

/// Factors a symmetric positive definite matrix; only the lower triangle of
/// `a` is read. Throws std::domain_error if a nonpositive pivot appears.
CholeskyFactor cholesky(const Matrix& a, Exec exec = Exec::Auto);

/// Largest eigenvalue of a symmetric positive semidefinite matrix by power
/// iteration with a fixed-seed start vector. Returns the Rayleigh quotient at
/// the stopping step; stops when its relative change drops below rel_tol.
double largest_eigenvalue_sym(const Matrix& a, double rel_tol = 1e-8,
                              std::size_t max_iter = 10000, Exec exec = Exec::Auto);

} // namespace rankit::linalg
