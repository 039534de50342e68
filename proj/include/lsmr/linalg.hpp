#pragma once

#include <Eigen/Dense>

// Dense linear-algebra kernel shared by all reduction algorithms:
// rank-revealing orthonormal range extraction, one-sided inverses and
// the matrix exponential.

namespace lsmr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Default relative rank tolerance: singular values below tol * sigma_max
// are treated as zero.
inline constexpr double kRankTol = 1e-10;

/// Orthonormal basis of the column space of a matrix.
/// Invariant: mat has orthonormal columns and cols == rank(mat).
struct Basis {
    Matrix mat;
    double tol = kRankTol;

    int dim() const { return static_cast<int>(mat.cols()); }
    int rows() const { return static_cast<int>(mat.rows()); }
};

bool is_finite(const Matrix& m);

/// SVD-based orth: columns of the result span im(M) exactly (to tol).
/// A zero (or empty) matrix yields a basis with zero columns.
/// Throws std::invalid_argument on non-finite input.
Basis orth(const Matrix& m, double tol = kRankTol);

/// Rank with relative singular-value threshold.
int rank_of(const Matrix& m, double tol = kRankTol);

/// Left inverse of a matrix with orthonormal columns (the transpose).
Matrix left_inverse(const Basis& v);

/// Right inverse W^T (W W^T)^{-1} of a full-row-rank matrix.
/// Throws std::domain_error if W is row-rank deficient.
Matrix right_inverse(const Matrix& w, double tol = kRankTol);

/// Matrix exponential e^{A t} by scaling-and-squaring with Pade approximant.
Matrix expm(const Matrix& a, double t = 1.0);

/// Orthogonal projector onto im(M).
Matrix projector(const Matrix& m, double tol = kRankTol);

/// Operator-norm distance between the projectors onto im(a) and im(b).
/// Zero iff the two column spaces coincide.
double subspace_distance(const Matrix& a, const Matrix& b, double tol = kRankTol);

/// Orthonormal basis of ker(M) (columns span the nullspace).
Matrix kernel_basis(const Matrix& m, double tol = kRankTol);

}  // namespace lsmr
