#include <doctest.h>

#include <algorithm>

#include "lsmr/automata.hpp"

using namespace lsmr;

namespace {

std::set<Word> accepted_set(const Ndfa& a, int d, int max_len) {
    auto v = accepted_words(a, d, max_len);
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("validate_ndfa rejects malformed automata") {
    Ndfa a;
    a.state_count = 2;
    a.initial = 0;
    a.finals = {1};
    a.transitions = {{0, 1, 1}};
    CHECK_NOTHROW(validate_ndfa(a));

    Ndfa bad = a;
    bad.initial = 5;
    CHECK_THROWS_AS(validate_ndfa(bad), std::invalid_argument);

    bad = a;
    bad.transitions = {{0, 1, 7}};
    CHECK_THROWS_AS(validate_ndfa(bad), std::invalid_argument);

    bad = a;
    bad.finals = {3};
    CHECK_THROWS_AS(validate_ndfa(bad), std::invalid_argument);

    bad = a;
    bad.transitions = {{0, 0, 1}};  // letters are 1-based
    CHECK_THROWS_AS(validate_ndfa(bad), std::invalid_argument);
}

TEST_CASE("accepts follows nondeterministic subsets") {
    // two paths on letter 1; only one continues with letter 2 to a final state
    Ndfa a;
    a.state_count = 4;
    a.initial = 0;
    a.finals = {3};
    a.transitions = {{0, 1, 1}, {0, 1, 2}, {2, 2, 3}};
    CHECK(accepts(a, {1, 2}));
    CHECK_FALSE(accepts(a, {1}));
    CHECK_FALSE(accepts(a, {2}));
    CHECK_FALSE(accepts(a, {}));
}

TEST_CASE("accepts epsilon iff the initial state is final") {
    Ndfa a;
    a.state_count = 1;
    a.initial = 0;
    a.finals = {0};
    CHECK(accepts(a, {}));
    a.finals.clear();
    CHECK_FALSE(accepts(a, {}));
}

TEST_CASE("trim_coreachable removes dead states without changing the language") {
    Ndfa a;
    a.state_count = 3;
    a.initial = 0;
    a.finals = {1};
    a.transitions = {{0, 1, 1}, {0, 2, 2}, {2, 1, 2}};  // state 2 is a dead end
    CHECK_FALSE(is_coreachable(a));
    Ndfa t = trim_coreachable(a);
    CHECK(is_coreachable(t));
    CHECK(t.state_count == 2);
    CHECK(accepted_set(t, 2, 3) == accepted_set(a, 2, 3));
}

TEST_CASE("trim of an empty language is the single non-final state") {
    Ndfa a;
    a.state_count = 2;
    a.initial = 0;
    a.finals = {};
    a.transitions = {{0, 1, 1}};
    Ndfa t = trim_coreachable(a);
    CHECK(t.state_count == 1);
    CHECK(t.finals.empty());
    CHECK(t.transitions.empty());
}

TEST_CASE("generating_ndfa of upsilon = 12 accepts exactly 1^a 2^b") {
    Ndfa g = generating_ndfa({1, 2});
    CHECK(is_coreachable(g));
    std::set<Word> expect;
    for (int i = 0; i <= 3; ++i)
        for (int j = 0; j + i <= 3; ++j) {
            Word w(i, 1);
            w.insert(w.end(), j, 2);
            expect.insert(w);
        }
    CHECK(accepted_set(g, 2, 3) == expect);
}

TEST_CASE("generating_ndfa of a longer sequence") {
    Ndfa g = generating_ndfa({2, 1, 2});
    CHECK(accepts(g, {}));
    CHECK(accepts(g, {2, 2, 1, 2}));
    CHECK(accepts(g, {1, 1, 2}));
    CHECK(accepts(g, {2, 1}));
    CHECK_FALSE(accepts(g, {1, 2, 1}));
    CHECK_FALSE(accepts(g, {2, 1, 2, 1}));
}

TEST_CASE("left_quotient shifts off the leading letter") {
    Ndfa g = generating_ndfa({1, 2});
    Ndfa l1 = left_quotient(g, 1);
    // { w | 1 w in 1^a 2^b } = 1^a 2^b again
    CHECK(accepted_set(l1, 2, 3) == accepted_set(g, 2, 3));

    Ndfa l2 = left_quotient(g, 2);
    // { w | 2 w in 1^a 2^b } = 2^b
    std::set<Word> expect;
    for (int j = 0; j <= 3; ++j) expect.insert(Word(j, 2));
    CHECK(accepted_set(l2, 2, 3) == expect);
}

TEST_CASE("right_quotient strips a trailing letter") {
    Ndfa g = generating_ndfa({1, 2});
    Ndfa r2 = right_quotient(g, 2);
    CHECK(accepted_set(r2, 2, 3) == accepted_set(g, 2, 3));

    Ndfa r1 = right_quotient(g, 1);
    // { v | v 1 in 1^a 2^b } = 1^a
    std::set<Word> expect;
    for (int i = 0; i <= 3; ++i) expect.insert(Word(i, 1));
    CHECK(accepted_set(r1, 2, 3) == expect);
}

TEST_CASE("quotients of finite languages agree with direct set quotients") {
    std::set<Word> lang = {{}, {1}, {1, 2}, {2, 2}, {2, 1, 1}};
    Ndfa a = ndfa_from_words(lang);
    for (int q = 1; q <= 2; ++q) {
        std::set<Word> left_expect, right_expect;
        for (const Word& w : lang) {
            if (!w.empty() && w.front() == q) left_expect.insert(Word(w.begin() + 1, w.end()));
            if (!w.empty() && w.back() == q) right_expect.insert(Word(w.begin(), w.end() - 1));
        }
        CHECK(accepted_set(left_quotient(a, q), 2, 4) == left_expect);
        CHECK(accepted_set(right_quotient(a, q), 2, 4) == right_expect);
    }
}

TEST_CASE("ndfa_from_words accepts exactly the given set") {
    std::set<Word> lang = {{}, {2}, {1, 1}, {1, 2, 1}};
    Ndfa a = ndfa_from_words(lang);
    CHECK(accepted_set(a, 2, 4) == lang);
    CHECK_FALSE(accepts(a, {1}));
    CHECK_FALSE(accepts(a, {1, 2}));
}

TEST_CASE("json round trip preserves the language") {
    Ndfa g = generating_ndfa({1, 2, 1});
    Ndfa back = ndfa_from_json(ndfa_to_json(g));
    CHECK(back.state_count == g.state_count);
    CHECK(back.initial == g.initial);
    CHECK(back.finals == g.finals);
    CHECK(back.transitions == g.transitions);
}
