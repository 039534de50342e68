#pragma once

#include "lsmr/lss.hpp"

// Fixed-point computation of the partial reachability space R_N and the
// partial unobservability space O_N.

namespace lsmr {

struct ReachBasisN {
    Basis V;  // n x r, im(V) = R_N
    int N = 0;
};

struct ObsKernelN {
    Matrix W;  // r x n, orthonormal rows, ker(W) = O_N
    int N = 0;
};

/// im(V) = span{ im(A_v Btilde) : |v| <= N }. The iteration stops early
/// once the rank stabilizes (monotone in N).
ReachBasisN reach_space(const Lss& sys, int n_depth, double tol = kRankTol);

/// ker(W) = intersection of ker(Ctilde A_v) over |v| <= N. Computed by
/// running reach_space on the transposed data with x0 = 0.
ObsKernelN unobs_space(const Lss& sys, int n_depth, double tol = kRankTol);

}  // namespace lsmr
