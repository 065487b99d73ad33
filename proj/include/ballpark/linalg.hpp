#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ballpark/types.hpp"

namespace ballpark {

// Dense row-major matrix, only as big as a handful of points ever makes it.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Solve A x = b by Gaussian elimination with partial pivoting.
// Returns nullopt when A is singular at the given pivot tolerance.
std::optional<std::vector<double>> solve_linear(Matrix A, std::vector<double> b,
                                                double pivot_tol = 1e-13);

// Rank of A via Householder QR with column pivoting; the threshold is
// rel_tol times the largest column norm.
std::size_t matrix_rank(Matrix A, double rel_tol = 1e-9);

// One nontrivial vector x with A x = 0 (A has more columns than rank),
// normalized to unit infinity norm. Returns nullopt only if A has full
// column rank at the tolerance.
std::optional<std::vector<double>> null_space_vector(Matrix A, double rel_tol = 1e-12);

// Least-squares minimizer of ||A x - b|| via normal equations with
// column-pivoted elimination; rank-deficient directions get coefficient 0.
std::vector<double> least_squares(const Matrix& A, const std::vector<double>& b,
                                  double rel_tol = 1e-12);

// Orthogonal projection of p onto the affine hull of `points`
// (p and all points in R^d). Also reports the affine coefficients used.
struct AffineProjection {
    Point point;                     // the projection itself
    std::vector<double> coeffs;      // affine coordinates, sum to 1
};
AffineProjection project_affine_hull(const std::vector<Point>& points, const Point& p);

// True when the difference vectors q_i - q_0 have full rank m (= size-1).
bool affinely_independent(const std::vector<Point>& points, double rel_tol = 1e-9);

}  // namespace ballpark
