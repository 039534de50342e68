#pragma once

#include "lsmr/lss.hpp"
#include "lsmr/subspace.hpp"

// Moment-matching reduction: project the system onto R_N (mode R), factor
// out O_N (mode O), or both sides at once (mode T, matching depth 2N when
// the rank guard holds).

namespace lsmr {

enum class ReductionMode { R, O, T };

ReductionMode mode_from_string(const std::string& s);
std::string mode_to_string(ReductionMode mode);

struct ReductionReport {
    Lss reduced;
    ReductionMode mode = ReductionMode::R;
    int N = 0;
    int matched_depth = 0;   // N, or 2N for mode T with the guard satisfied
    int rank_v = 0;
    int rank_w = 0;
    int rank_wv = 0;
    double cond_wv = 0.0;    // condition of WV (mode T only)
};

/// Thrown when mode T is requested and rank(V) = rank(W) = rank(WV) fails;
/// carries the three ranks so callers can report why.
struct RankFailure : std::runtime_error {
    int rank_v, rank_w, rank_wv;
    RankFailure(int rv, int rw, int rwv);
};

ReductionReport reduce(const Lss& sys, int n_depth, ReductionMode mode, double tol = kRankTol);

/// Max over |v| <= N of the relative Frobenius error between the Markov
/// parameters of sys and red. The acceptance oracle for N-matching.
double check_partial_realization(const Lss& sys, const Lss& red, int n_depth);

}  // namespace lsmr
