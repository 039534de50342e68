#pragma once

#include <map>
#include <set>

#include "lsmr/automata.hpp"

// Nice row/column selections, the languages they induce, the base-(D+1)
// word ordering and the greedy construction of a selection of prescribed
// dimension.

namespace lsmr {

struct ColumnEntry {
    Word w;
    int q = 1;  // mode, 1..D
    int j = 1;  // input channel, 1..m

    auto operator<=>(const ColumnEntry&) const = default;
};

struct RowEntry {
    Word v;
    int q = 1;  // mode, 1..D
    int i = 1;  // output channel, 1..p

    auto operator<=>(const RowEntry&) const = default;
};

/// beta: prefix-closed set of column indices of the reachability array.
struct NiceColumnSelection {
    std::set<Word> x0_words;
    std::set<ColumnEntry> column_entries;

    size_t size() const { return x0_words.size() + column_entries.size(); }
};

/// alpha: set of row indices closed under dropping the first letter.
struct NiceRowSelection {
    std::set<RowEntry> row_entries;

    size_t size() const { return row_entries.size(); }
};

/// Per-index languages of a column selection: L_0 for the x0 column plus
/// one language per (q,j) pair.
struct ColumnLanguages {
    Ndfa x0_language;                       // L_0
    bool has_x0 = false;
    std::map<std::pair<int, int>, Ndfa> per_index;  // (q,j) -> L_{q,j}

    /// t_beta = |J_beta| + 1.
    size_t subset_cardinality() const { return per_index.size() + 1; }
};

struct RowLanguages {
    std::map<std::pair<int, int>, Ndfa> per_index;  // (q,i) -> L_{q,i}

    /// t_alpha = |I_alpha|.
    size_t subset_cardinality() const { return per_index.size(); }
};

/// Lists every entry whose required shorter entry is missing (empty = nice).
std::vector<std::string> validate_nice(const NiceColumnSelection& sel);
std::vector<std::string> validate_nice(const NiceRowSelection& sel);

/// Partition a finite selection into its per-index languages, encoded as
/// co-reachable prefix-tree NDFAs ready for the constrained iterations.
ColumnLanguages extract_languages(const NiceColumnSelection& sel);
RowLanguages extract_languages(const NiceRowSelection& sel);

/// phi(v) = q_1 (D+1)^{k-1} + ... + q_k; v precedes w iff phi(v) < phi(w).
std::uint64_t word_order_key(const Word& v, int d);

/// Greedy left-to-right scan of the columns of the depth-(n-1) reachability
/// array in the base-(D+1) word order: pick the first r independent
/// columns. The result is always nice and spans an r-dimensional subspace.
/// Throws std::domain_error (naming the achievable maximum) if r is too big.
NiceColumnSelection select_nice_columns(const Lss& sys, int r, double tol = kRankTol);

/// Dual scan over the rows of the observability array; dim O_alpha = n - r.
NiceRowSelection select_nice_rows(const Lss& sys, int r, double tol = kRankTol);

// Selection JSON:
// columns: {"x0_words":["","2"],"columns":[{"w":"","q":1,"j":1},...]}
// rows:    {"rows":[{"v":"","q":1,"i":1},...]}
std::string column_selection_to_json(const NiceColumnSelection& sel);
NiceColumnSelection column_selection_from_json(const std::string& text);
std::string row_selection_to_json(const NiceRowSelection& sel);
NiceRowSelection row_selection_from_json(const std::string& text);

}  // namespace lsmr
