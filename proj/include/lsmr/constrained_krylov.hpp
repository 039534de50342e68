#pragma once

#include "lsmr/automata.hpp"

// Automaton-constrained subspace iterations: per-state basis fixed points
// computing span{A_v G_{:,j} | v in L} and the dual kernel intersection.

namespace lsmr {

/// Basis of R_{L,j}(G) = span{ A_v G_{:,j} : v in L(a) }.
/// `a` must be co-reachable (trim it first); an automaton with no final
/// states (empty language) yields an n x 0 basis.
Basis reach_constrained(const Lss& sys, const Matrix& g, int j, const Ndfa& a,
                        double tol = kRankTol);

/// Full-row-rank W with ker(W) = O_{L,i}(H) = intersection over v in L(a)
/// of ker(H_{i,:} A_v). Empty language yields a 0 x n matrix.
Matrix obs_constrained(const Lss& sys, const Matrix& h, int i, const Ndfa& a,
                       double tol = kRankTol);

}  // namespace lsmr
