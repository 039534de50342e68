#include "lsmr/linalg.hpp"

#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace lsmr {

bool is_finite(const Matrix& m) { return m.allFinite(); }

Basis orth(const Matrix& m, double tol) {
    if (!m.allFinite()) throw std::invalid_argument("orth: non-finite input");
    if (tol <= 0.0) throw std::invalid_argument("orth: tol must be positive");
    if (m.rows() == 0 || m.cols() == 0) return Basis{Matrix(m.rows(), 0), tol};

    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
    int r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    return Basis{svd.matrixU().leftCols(r), tol};
}

int rank_of(const Matrix& m, double tol) { return orth(m, tol).dim(); }

Matrix left_inverse(const Basis& v) { return v.mat.transpose(); }

Matrix right_inverse(const Matrix& w, double tol) {
    if (rank_of(w, tol) != w.rows())
        throw std::domain_error("right_inverse: matrix is row-rank deficient");
    return w.transpose() * (w * w.transpose()).inverse();
}

Matrix expm(const Matrix& a, double t) {
    if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
    if (!std::isfinite(t)) throw std::invalid_argument("expm: non-finite time");
    return (a * t).exp();
}

Matrix projector(const Matrix& m, double tol) {
    Basis u = orth(m, tol);
    if (u.dim() == 0) return Matrix::Zero(m.rows(), m.rows());
    return u.mat * u.mat.transpose();
}

double subspace_distance(const Matrix& a, const Matrix& b, double tol) {
    return (projector(a, tol) - projector(b, tol)).norm();
}

Matrix kernel_basis(const Matrix& m, double tol) {
    if (m.rows() == 0) return Matrix::Identity(m.cols(), m.cols());
    if (m.cols() == 0) return Matrix(0, 0);
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? tol * sv(0) : 0.0;
    int r = 0;
    while (r < sv.size() && sv(r) > cutoff) ++r;
    return svd.matrixV().rightCols(m.cols() - r);
}

}  // namespace lsmr
