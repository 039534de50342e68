#include <doctest.h>

#include "lsmr/generate.hpp"
#include "lsmr/reduce_nice.hpp"
#include "lsmr/simulate.hpp"

using namespace lsmr;

namespace {

std::set<Word> accepted_set(const Ndfa& a, int d, int max_len) {
    auto v = accepted_words(a, d, max_len);
    return {v.begin(), v.end()};
}

// The full column selection of depth N: every word, every (q,j).
NiceColumnSelection full_beta(const Lss& sys, int N) {
    NiceColumnSelection sel;
    for (const Word& w : words_up_to(sys.D, N)) {
        sel.x0_words.insert(w);
        for (int q = 1; q <= sys.D; ++q)
            for (int j = 1; j <= sys.m; ++j) sel.column_entries.insert({w, q, j});
    }
    return sel;
}

NiceRowSelection full_alpha(const Lss& sys, int N) {
    NiceRowSelection sel;
    for (const Word& v : words_up_to(sys.D, N))
        for (int q = 1; q <= sys.D; ++q)
            for (int i = 1; i <= sys.p; ++i) sel.row_entries.insert({v, q, i});
    return sel;
}

}  // namespace

TEST_CASE("beta reduction reproduces the selected columns") {
    Lss sys = random_lss(6, 2, 2, 1, {1.0}, 3);
    for (int r : {2, 4, 6}) {
        NiceColumnSelection beta = select_nice_columns(sys, r);
        ReductionReport rep = reduce_beta(sys, extract_languages(beta));
        CHECK(validate(rep.reduced).empty());
        CHECK(check_selection(sys, rep.reduced, beta) < 1e-9);
    }
}

TEST_CASE("beta reduction with the full depth-N selection matches reduce(N, R)") {
    Lss sys = random_lss(6, 2, 1, 1, {1.0}, 7);
    sys.x0.setZero();
    for (auto& md : sys.modes) md.B.bottomRows(5).setZero();
    for (int N : {0, 1, 2}) {
        ReductionReport by_sel = reduce_beta(sys, extract_languages(full_beta(sys, N)));
        ReductionReport by_depth = reduce(sys, N, ReductionMode::R);
        CHECK(by_sel.reduced.n == by_depth.reduced.n);
        CHECK(check_partial_realization(sys, by_sel.reduced, N) < 1e-9);
    }
}

TEST_CASE("alpha reduction reproduces the selected rows") {
    Lss sys = random_lss(6, 2, 1, 2, {1.0}, 11);
    for (int r : {2, 4, 6}) {
        NiceRowSelection alpha = select_nice_rows(sys, r);
        ReductionReport rep = reduce_alpha(sys, extract_languages(alpha));
        CHECK(validate(rep.reduced).empty());
        CHECK(check_selection(sys, rep.reduced, alpha) < 1e-9);
    }
}

TEST_CASE("alpha reduction with the full depth-N selection matches reduce(N, O)") {
    Lss sys = random_lss(6, 2, 1, 1, {1.0}, 13);
    for (auto& md : sys.modes) md.C.rightCols(5).setZero();
    for (int N : {0, 1, 2}) {
        ReductionReport by_sel = reduce_alpha(sys, extract_languages(full_alpha(sys, N)));
        ReductionReport by_depth = reduce(sys, N, ReductionMode::O);
        CHECK(by_sel.reduced.n == by_depth.reduced.n);
        CHECK(check_partial_realization(sys, by_sel.reduced, N) < 1e-9);
    }
}

TEST_CASE("two-sided reduction matches the alpha x beta entries") {
    Lss sys = random_lss(6, 2, 1, 1, {1.0}, 17);
    NiceColumnSelection beta = select_nice_columns(sys, 4);
    NiceRowSelection alpha = select_nice_rows(sys, 4);
    ReductionReport rep;
    try {
        rep = reduce_alphabeta(sys, extract_languages(alpha), extract_languages(beta));
    } catch (const RankFailure&) {
        return;  // the guard is not guaranteed for arbitrary pairs; nothing to check
    }
    CHECK(rep.rank_v == rep.rank_w);
    CHECK(rep.rank_v == rep.rank_wv);
    CHECK(check_selection_pair(sys, rep.reduced, alpha, beta) < 1e-8);
}

TEST_CASE("two-sided reduction with full selections reproduces a generic system") {
    Lss sys = random_lss(4, 2, 1, 1, {1.0}, 19);
    ReductionReport rep = reduce_alphabeta(sys, extract_languages(full_alpha(sys, 3)),
                                           extract_languages(full_beta(sys, 3)));
    CHECK(rep.reduced.n == 4);
    CHECK(check_partial_realization(sys, rep.reduced, 4) < 1e-8);
}

TEST_CASE("empty beta gives a 0-dimensional system") {
    Lss sys = random_lss(3, 2, 1, 1, {1.0}, 23);
    ReductionReport rep = reduce_beta(sys, ColumnLanguages{});
    CHECK(rep.reduced.n == 0);
    CHECK(validate(rep.reduced).empty());
}

TEST_CASE("sequence languages: L_0 is the generating language and quotients index the columns") {
    Lss sys = random_lss(5, 2, 1, 1, {1.0}, 27);
    Word upsilon = {1, 2};
    ColumnLanguages cl = sequence_column_languages(sys, upsilon);
    CHECK(cl.has_x0);
    CHECK(accepted_set(cl.x0_language, 2, 3) == accepted_set(generating_ndfa(upsilon), 2, 3));
    // L_{1,j} = 1^a 2^b, L_{2,j} = 2^b
    REQUIRE(cl.per_index.count({1, 1}) == 1);
    REQUIRE(cl.per_index.count({2, 1}) == 1);
    CHECK(accepted_set(cl.per_index.at({1, 1}), 2, 3) ==
          accepted_set(generating_ndfa(upsilon), 2, 3));
    std::set<Word> twos;
    for (int b = 0; b <= 3; ++b) twos.insert(Word(b, 2));
    CHECK(accepted_set(cl.per_index.at({2, 1}), 2, 3) == twos);

    RowLanguages rl = sequence_row_languages(sys, upsilon);
    REQUIRE(rl.per_index.count({2, 1}) == 1);
    CHECK(accepted_set(rl.per_index.at({2, 1}), 2, 3) ==
          accepted_set(generating_ndfa(upsilon), 2, 3));
    REQUIRE(rl.per_index.count({1, 1}) == 1);
    std::set<Word> ones;
    for (int a = 0; a <= 3; ++a) ones.insert(Word(a, 1));
    CHECK(accepted_set(rl.per_index.at({1, 1}), 2, 3) == ones);
}

TEST_CASE("match_sequence: outputs coincide along every switching sequence with that mode word") {
    Lss sys = random_lss(8, 2, 1, 1, {0.8}, 31);
    const Word upsilon = {1, 2};
    for (SelectionSide side : {SelectionSide::Column, SelectionSide::Row}) {
        ReductionReport rep = match_sequence(sys, upsilon, side);
        CHECK(rep.reduced.n <= sys.n);
        for (auto [d1, d2] : {std::pair{0.3, 0.7}, {0.55, 0.45}, {0.9, 0.1}}) {
            SwitchingSequence mu{{{1, d1}, {2, d2}}};
            SampledSignal u = white_noise_input(1, 1.0, 1e-3, 5);
            SampledSignal y = simulate(sys, mu, u);
            SampledSignal ybar = simulate(rep.reduced, mu, u);
            double err = 0, scale = 0;
            for (size_t k = 0; k < y.size(); ++k) {
                err = std::max(err, (y.values[k] - ybar.values[k]).norm());
                scale = std::max(scale, y.values[k].norm());
            }
            CHECK(err < 1e-7 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("match_sequence rejects letters outside the alphabet") {
    Lss sys = random_lss(3, 2, 1, 1, {1.0}, 37);
    CHECK_THROWS(match_sequence(sys, {1, 3}, SelectionSide::Column));
}
