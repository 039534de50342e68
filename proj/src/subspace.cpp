#include "lsmr/subspace.hpp"

namespace lsmr {

namespace {

// V := orth(seed); repeat V := orth([V, A_1 V, ..., A_D V]) up to N times,
// stopping as soon as the rank stops increasing.
Basis reach_core(const std::vector<Matrix>& as, const Matrix& seed, int n_depth, double tol) {
    Basis v = orth(seed, tol);
    for (int k = 1; k <= n_depth; ++k) {
        const Eigen::Index n = seed.rows();
        Matrix stacked(n, v.mat.cols() * (static_cast<Eigen::Index>(as.size()) + 1));
        stacked.leftCols(v.mat.cols()) = v.mat;
        for (size_t q = 0; q < as.size(); ++q)
            stacked.middleCols(static_cast<Eigen::Index>(q + 1) * v.mat.cols(), v.mat.cols()) =
                as[q] * v.mat;
        Basis next = orth(stacked, tol);
        if (next.dim() == v.dim()) return next;  // fixed point reached
        v = std::move(next);
    }
    return v;
}

}  // namespace

ReachBasisN reach_space(const Lss& sys, int n_depth, double tol) {
    if (n_depth < 0) throw std::invalid_argument("reach_space: N must be >= 0");
    std::vector<Matrix> as;
    for (const auto& md : sys.modes) as.push_back(md.A);
    return ReachBasisN{reach_core(as, b_tilde(sys), n_depth, tol), n_depth};
}

ObsKernelN unobs_space(const Lss& sys, int n_depth, double tol) {
    if (n_depth < 0) throw std::invalid_argument("unobs_space: N must be >= 0");
    std::vector<Matrix> as;
    for (const auto& md : sys.modes) as.push_back(md.A.transpose());
    Basis v = reach_core(as, c_tilde(sys).transpose(), n_depth, tol);
    return ObsKernelN{v.mat.transpose(), n_depth};
}

}  // namespace lsmr
