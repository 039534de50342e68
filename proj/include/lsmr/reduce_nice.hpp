#pragma once

#include "lsmr/constrained_krylov.hpp"
#include "lsmr/nice_selection.hpp"
#include "lsmr/reduce_moment.hpp"

// Reduction by nice selections: beta-, alpha- and (alpha,beta)-partial
// realizations, plus exact input-output matching along a fixed switching
// mode sequence.

namespace lsmr {

enum class SelectionSide { Column, Row };

/// Assemble V from the per-language constrained reach spaces and project.
/// An empty beta gives a valid 0-dimensional system.
ReductionReport reduce_beta(const Lss& sys, const ColumnLanguages& langs, double tol = kRankTol);

/// Dual: stack the constrained observability rows and project.
ReductionReport reduce_alpha(const Lss& sys, const RowLanguages& langs, double tol = kRankTol);

/// Two-sided reduction; throws RankFailure if the rank guard
/// rank(V) = rank(W) = rank(WV) fails.
ReductionReport reduce_alphabeta(const Lss& sys, const RowLanguages& row_langs,
                                 const ColumnLanguages& col_langs, double tol = kRankTol);

/// Max relative error over exactly the matched columns of a finite column
/// selection: Ctilde A_w B_q e_j for (w,q,j) in beta and Ctilde A_w x0 for
/// w in beta. The beta acceptance oracle.
double check_selection(const Lss& sys, const Lss& red, const NiceColumnSelection& sel);

/// Row dual: e_i^T C_q A_v Btilde for (v,q,i) in alpha.
double check_selection(const Lss& sys, const Lss& red, const NiceRowSelection& sel);

/// (alpha,beta) entries: e_i^T C_q A_{wv} B_{q0} e_j (the alpha row fixes
/// the C block, the beta column fixes the B block) plus the x0 column.
double check_selection_pair(const Lss& sys, const Lss& red, const NiceRowSelection& alpha,
                            const NiceColumnSelection& beta);

/// Reduce so that the output matches the original exactly along every
/// timed switching sequence whose mode word is upsilon: derives the
/// generating-language NDFA, its per-mode quotients, and runs the beta
/// (column side) or alpha (row side) reduction.
ReductionReport match_sequence(const Lss& sys, const Word& upsilon, SelectionSide side,
                               double tol = kRankTol);

/// The languages of the sequence-linked selection (exposed for diagnostics
/// and the CLI verify path).
ColumnLanguages sequence_column_languages(const Lss& sys, const Word& upsilon);
RowLanguages sequence_row_languages(const Lss& sys, const Word& upsilon);

}  // namespace lsmr
