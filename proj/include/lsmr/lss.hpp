#pragma once

#include <map>
#include <string>
#include <vector>

#include "lsmr/linalg.hpp"

namespace lsmr {

/// A mode word: finite sequence of letters from {1..D}. Empty = epsilon.
using Word = std::vector<int>;

/// Serialize a word as a digit string ("" printed as "eps" is up to callers;
/// the wire form of epsilon is the empty string). Requires D <= 9.
std::string word_to_string(const Word& w);
Word word_from_string(const std::string& s);

/// All words over {1..D} of length exactly len, in lexicographic order.
std::vector<Word> words_of_length(int d, int len);
/// All words of length <= n, ordered by length then lexicographically
/// (this is the base-(D+1) ordering of the selection scan).
std::vector<Word> words_up_to(int d, int n);

struct LssMode {
    Matrix A;  // n x n
    Matrix B;  // n x m
    Matrix C;  // p x n
};

/// Continuous-time linear switched system
/// dx/dt = A_q x + B_q u, y = C_q x, with continuous state across switches.
struct Lss {
    int p = 0;  // output dim
    int m = 0;  // input dim
    int n = 0;  // state dim
    int D = 0;  // number of modes, Q = {1..D}
    std::vector<LssMode> modes;  // indexed q-1
    Vector x0;

    const LssMode& mode(int q) const { return modes.at(static_cast<size_t>(q - 1)); }
};

/// All invariant violations (empty list means the system is well formed).
std::vector<std::string> validate(const Lss& sys);
/// Throws std::invalid_argument listing the violations, if any.
void validate_or_throw(const Lss& sys);

/// A_w = A_{q_k} ... A_{q_1}  (first letter applied first); A_eps = I.
Matrix a_word(const Lss& sys, const Word& w);

/// Stacked output matrix [C_1; ...; C_D]  (Dp x n).
Matrix c_tilde(const Lss& sys);
/// Combined input matrix [x0, B_1, ..., B_D]  (n x (mD+1)).
Matrix b_tilde(const Lss& sys);

/// Markov parameter M(v) = Ctilde A_v Btilde, shape Dp x (mD+1).
Matrix markov_parameter(const Lss& sys, const Word& v);

/// All Markov parameters for |v| <= N. Guard: at most 10^6 words.
std::map<Word, Matrix> markov_parameters_up_to(const Lss& sys, int n_depth);

/// Minimal realization with the same input-output map: project onto the
/// partial reachability space at depth n-1, then factor out the partial
/// unobservability space of the result.
Lss minimize(const Lss& sys, double tol = kRankTol);

// JSON model format (bit-exact contract):
// {"p":int,"m":int,"n":int,"D":int,
//  "modes":[{"A":[[..]],"B":[[..]],"C":[[..]]},...],"x0":[..]}
std::string lss_to_json(const Lss& sys);
Lss lss_from_json(const std::string& text);
Lss load_lss(const std::string& path);
void save_lss(const Lss& sys, const std::string& path);

}  // namespace lsmr
