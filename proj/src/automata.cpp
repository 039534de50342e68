#include "lsmr/automata.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace lsmr {

void validate_ndfa(const Ndfa& a) {
    if (a.state_count < 1) throw std::invalid_argument("ndfa: must have at least one state");
    if (a.initial < 0 || a.initial >= a.state_count)
        throw std::invalid_argument("ndfa: initial state out of range");
    for (int f : a.finals)
        if (f < 0 || f >= a.state_count) throw std::invalid_argument("ndfa: final state out of range");
    for (const auto& t : a.transitions) {
        if (t.from < 0 || t.from >= a.state_count || t.to < 0 || t.to >= a.state_count)
            throw std::invalid_argument("ndfa: transition endpoint out of range");
        if (t.letter < 1) throw std::invalid_argument("ndfa: transition letter must be >= 1");
    }
}

bool accepts(const Ndfa& a, const Word& w) {
    std::set<int> current{a.initial};
    for (int q : w) {
        std::set<int> next;
        for (const auto& t : a.transitions)
            if (t.letter == q && current.count(t.from)) next.insert(t.to);
        if (next.empty()) return false;
        current = std::move(next);
    }
    for (int s : current)
        if (a.finals.count(s)) return true;
    return false;
}

bool is_coreachable(const Ndfa& a) {
    // Backward closure from the final states.
    std::vector<char> good(static_cast<size_t>(a.state_count), 0);
    for (int f : a.finals) good[static_cast<size_t>(f)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : a.transitions)
            if (good[static_cast<size_t>(t.to)] && !good[static_cast<size_t>(t.from)]) {
                good[static_cast<size_t>(t.from)] = 1;
                changed = true;
            }
    }
    return std::all_of(good.begin(), good.end(), [](char c) { return c != 0; });
}

Ndfa trim_coreachable(const Ndfa& a) {
    validate_ndfa(a);
    std::vector<char> good(static_cast<size_t>(a.state_count), 0);
    for (int f : a.finals) good[static_cast<size_t>(f)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& t : a.transitions)
            if (good[static_cast<size_t>(t.to)] && !good[static_cast<size_t>(t.from)]) {
                good[static_cast<size_t>(t.from)] = 1;
                changed = true;
            }
    }
    if (!good[static_cast<size_t>(a.initial)]) {
        // Empty language: single useless state, no finals.
        Ndfa empty;
        empty.state_count = 1;
        empty.initial = 0;
        return empty;
    }
    std::map<int, int> remap;
    for (int s = 0; s < a.state_count; ++s)
        if (good[static_cast<size_t>(s)]) remap[s] = static_cast<int>(remap.size());
    Ndfa out;
    out.state_count = static_cast<int>(remap.size());
    out.initial = remap.at(a.initial);
    for (int f : a.finals) out.finals.insert(remap.at(f));
    for (const auto& t : a.transitions)
        if (good[static_cast<size_t>(t.from)] && good[static_cast<size_t>(t.to)])
            out.transitions.insert({remap.at(t.from), t.letter, remap.at(t.to)});
    return out;
}

Ndfa generating_ndfa(const Word& upsilon) {
    if (upsilon.empty()) throw std::invalid_argument("generating_ndfa: empty mode sequence");
    const int k = static_cast<int>(upsilon.size());
    Ndfa a;
    a.state_count = k + 1;  // s_0 plus one state per position
    a.initial = 0;
    for (int s = 0; s <= k; ++s) a.finals.insert(s);  // all omega may be zero
    for (int i = 0; i <= k; ++i) {
        if (i >= 1) a.transitions.insert({i, upsilon[static_cast<size_t>(i - 1)], i});
        for (int j = i + 1; j <= k; ++j)
            a.transitions.insert({i, upsilon[static_cast<size_t>(j - 1)], j});
    }
    return a;
}

Ndfa left_quotient(const Ndfa& a, int q0) {
    validate_ndfa(a);
    // Fresh initial state aggregating all q0-successors of the old initial.
    std::set<int> succ;
    for (const auto& t : a.transitions)
        if (t.from == a.initial && t.letter == q0) succ.insert(t.to);
    Ndfa out;
    out.state_count = a.state_count + 1;
    out.initial = a.state_count;
    out.finals = a.finals;
    out.transitions = a.transitions;
    for (int s : succ) {
        if (a.finals.count(s)) out.finals.insert(out.initial);
        for (const auto& t : a.transitions)
            if (t.from == s) out.transitions.insert({out.initial, t.letter, t.to});
    }
    return out;
}

Ndfa right_quotient(const Ndfa& a, int q) {
    validate_ndfa(a);
    Ndfa out = a;
    out.finals.clear();
    for (const auto& t : a.transitions)
        if (t.letter == q && a.finals.count(t.to)) out.finals.insert(t.from);
    return out;
}

Ndfa ndfa_from_words(const std::set<Word>& words) {
    // Prefix tree with one state per distinct prefix.
    std::map<Word, int> state_of;
    state_of[{}] = 0;
    Ndfa a;
    a.initial = 0;
    for (const Word& w : words) {
        Word prefix;
        for (int q : w) {
            const int from = state_of.at(prefix);
            prefix.push_back(q);
            auto [it, inserted] = state_of.emplace(prefix, static_cast<int>(state_of.size()));
            a.transitions.insert({from, q, it->second});
        }
        a.finals.insert(state_of.at(w));
    }
    a.state_count = static_cast<int>(state_of.size());
    return a;
}

std::vector<Word> accepted_words(const Ndfa& a, int d, int max_len) {
    // Breadth-first over (word, reachable-state-subset) pairs; dead subsets
    // prune the whole word prefix, so only live prefixes are expanded.
    std::vector<Word> out;
    std::vector<std::pair<Word, std::set<int>>> frontier{{{}, {a.initial}}};
    auto is_final = [&](const std::set<int>& states) {
        for (int s : states)
            if (a.finals.count(s)) return true;
        return false;
    };
    if (is_final(frontier[0].second)) out.push_back({});
    for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
        std::vector<std::pair<Word, std::set<int>>> next_frontier;
        for (const auto& [w, states] : frontier) {
            for (int q = 1; q <= d; ++q) {
                std::set<int> next;
                for (const auto& t : a.transitions)
                    if (t.letter == q && states.count(t.from)) next.insert(t.to);
                if (next.empty()) continue;
                Word wq = w;
                wq.push_back(q);
                if (is_final(next)) out.push_back(wq);
                next_frontier.emplace_back(std::move(wq), std::move(next));
            }
        }
        frontier = std::move(next_frontier);
    }
    std::sort(out.begin(), out.end(), [](const Word& x, const Word& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

std::string ndfa_to_json(const Ndfa& a) {
    nlohmann::json j;
    j["states"] = a.state_count;
    j["initial"] = a.initial;
    j["finals"] = a.finals;
    j["transitions"] = nlohmann::json::array();
    for (const auto& t : a.transitions) j["transitions"].push_back({t.from, t.letter, t.to});
    return j.dump(2);
}

Ndfa ndfa_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Ndfa a;
    a.state_count = j.at("states").get<int>();
    a.initial = j.at("initial").get<int>();
    for (const auto& f : j.at("finals")) a.finals.insert(f.get<int>());
    for (const auto& t : j.at("transitions"))
        a.transitions.insert({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>()});
    validate_ndfa(a);
    return a;
}

}  // namespace lsmr
