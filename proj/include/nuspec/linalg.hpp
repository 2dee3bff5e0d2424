#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace nuspec::linalg {

/// Small dense square matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t rows() const { return n_; }
    double& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
    const std::vector<double>& data() const { return a_; }

    double trace() const;
    double max_abs() const;
    bool is_symmetric(double tol) const;

private:
    std::size_t n_ = 0;
    std::vector<double> a_;
};

/// Lower Cholesky factor of a symmetric positive definite matrix, or
/// nullopt if a nonpositive pivot is met.
std::optional<Matrix> cholesky_factor(const Matrix& a);

/// Solves L L^T x = b given the lower factor L.
std::vector<double> cholesky_solve(const Matrix& l, std::span<const double> b);

struct SpdSolve {
    std::vector<double> x;
    int jitter_rounds = 0;   // diagonal boosts applied before success
    double jitter = 0.0;     // total amount added to each diagonal entry
};

/// Solves A x = b by Cholesky with a diagonal-jitter fallback: on factor
/// failure, adds 1e-12*trace/n to the diagonal and retries, at most
/// max_rounds times. Throws ConditioningError carrying the condition
/// estimate if all attempts fail.
SpdSolve solve_spd_with_jitter(Matrix a, std::span<const double> b, int max_rounds = 3);

/// Eigenvalues of a symmetric matrix by the cyclic Jacobi method,
/// ascending order.
std::vector<double> jacobi_eigenvalues(Matrix a, int max_sweeps = 64);

/// lambda_max / lambda_min of a symmetric positive definite matrix;
/// +inf if the smallest eigenvalue is not positive.
double spd_condition_estimate(const Matrix& a);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);

} // namespace nuspec::linalg
