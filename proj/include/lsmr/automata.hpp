#pragma once

#include <set>
#include <tuple>

#include "lsmr/lss.hpp"

// NDFAs over the mode alphabet {1..D}: the regular index languages that
// drive the constrained subspace iterations. No epsilon transitions.

namespace lsmr {

struct Transition {
    int from = 0;
    int letter = 1;
    int to = 0;

    auto operator<=>(const Transition&) const = default;
};

struct Ndfa {
    int state_count = 0;
    int initial = 0;
    std::set<int> finals;
    std::set<Transition> transitions;
};

/// Structural invariant check; throws std::invalid_argument on violation.
void validate_ndfa(const Ndfa& a);

/// True iff some run from the initial state over w ends in a final state.
bool accepts(const Ndfa& a, const Word& w);

/// Language-preserving trim to the co-reachable part (every remaining
/// state reaches a final state). An empty language collapses to a single
/// non-final state.
Ndfa trim_coreachable(const Ndfa& a);

/// True iff every state reaches a final state.
bool is_coreachable(const Ndfa& a);

/// Automaton for the generating language of a mode sequence upsilon =
/// q_1...q_k: all words (q_1)^w1 (q_2)^w2 ... (q_k)^wk, wi >= 0.
Ndfa generating_ndfa(const Word& upsilon);

/// Accepts { w | q0 w in L(a) }.
Ndfa left_quotient(const Ndfa& a, int q0);

/// Accepts { v | v q in L(a) }.
Ndfa right_quotient(const Ndfa& a, int q);

/// Automaton accepting exactly the given finite word set (prefix tree).
Ndfa ndfa_from_words(const std::set<Word>& words);

/// All accepted words of length <= max_len (enumeration for oracles and
/// finite-selection checks).
std::vector<Word> accepted_words(const Ndfa& a, int d, int max_len);

// JSON automaton format:
// {"states":int,"initial":int,"finals":[int],"transitions":[[from,letter,to],...]}
std::string ndfa_to_json(const Ndfa& a);
Ndfa ndfa_from_json(const std::string& text);

}  // namespace lsmr
