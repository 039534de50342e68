#include "lsmr/nice_selection.hpp"

#include <stdexcept>

#include <json.hpp>

namespace lsmr {

std::vector<std::string> validate_nice(const NiceColumnSelection& sel) {
    std::vector<std::string> errs;
    for (const Word& w : sel.x0_words) {
        if (w.empty()) continue;
        Word prefix(w.begin(), w.end() - 1);
        if (!sel.x0_words.count(prefix))
            errs.push_back("x0 word '" + word_to_string(w) + "' lacks prefix '" +
                           word_to_string(prefix) + "'");
    }
    for (const auto& e : sel.column_entries) {
        if (e.w.empty()) continue;
        ColumnEntry shorter{Word(e.w.begin(), e.w.end() - 1), e.q, e.j};
        if (!sel.column_entries.count(shorter))
            errs.push_back("entry ('" + word_to_string(e.w) + "'," + std::to_string(e.q) + "," +
                           std::to_string(e.j) + ") lacks ('" + word_to_string(shorter.w) + "'," +
                           std::to_string(e.q) + "," + std::to_string(e.j) + ")");
    }
    return errs;
}

std::vector<std::string> validate_nice(const NiceRowSelection& sel) {
    std::vector<std::string> errs;
    for (const auto& e : sel.row_entries) {
        if (e.v.empty()) continue;
        RowEntry shorter{Word(e.v.begin() + 1, e.v.end()), e.q, e.i};
        if (!sel.row_entries.count(shorter))
            errs.push_back("entry ('" + word_to_string(e.v) + "'," + std::to_string(e.q) + "," +
                           std::to_string(e.i) + ") lacks ('" + word_to_string(shorter.v) + "'," +
                           std::to_string(e.q) + "," + std::to_string(e.i) + ")");
    }
    return errs;
}

ColumnLanguages extract_languages(const NiceColumnSelection& sel) {
    ColumnLanguages langs;
    if (!sel.x0_words.empty()) {
        langs.has_x0 = true;
        langs.x0_language = trim_coreachable(ndfa_from_words(sel.x0_words));
    }
    std::map<std::pair<int, int>, std::set<Word>> grouped;
    for (const auto& e : sel.column_entries) grouped[{e.q, e.j}].insert(e.w);
    for (const auto& [idx, words] : grouped)
        langs.per_index.emplace(idx, trim_coreachable(ndfa_from_words(words)));
    return langs;
}

RowLanguages extract_languages(const NiceRowSelection& sel) {
    RowLanguages langs;
    std::map<std::pair<int, int>, std::set<Word>> grouped;
    for (const auto& e : sel.row_entries) grouped[{e.q, e.i}].insert(e.v);
    for (const auto& [idx, words] : grouped)
        langs.per_index.emplace(idx, trim_coreachable(ndfa_from_words(words)));
    return langs;
}

std::uint64_t word_order_key(const Word& v, int d) {
    std::uint64_t key = 0;
    for (int q : v) {
        if (q < 1 || q > d) throw std::invalid_argument("word_order_key: letter out of range");
        key = key * static_cast<std::uint64_t>(d + 1) + static_cast<std::uint64_t>(q);
    }
    return key;
}

namespace {

// Greedy left-to-right independent-column scan over word blocks in the
// base-(D+1) order. `seed` is the per-word block (B-tilde or C-tilde^T);
// `on_pick(v, c)` records the selected block column c of word v.
template <typename Pick>
int greedy_scan(const std::vector<Matrix>& as, const Matrix& seed, int r, double tol, Pick on_pick) {
    const Eigen::Index n = seed.rows();
    const int d = static_cast<int>(as.size());
    Matrix basis(n, 0);
    const double scale = std::max(seed.norm(), 1e-300);
    int picked = 0;
    for (const Word& v : words_up_to(d, static_cast<int>(n) > 0 ? static_cast<int>(n) - 1 : 0)) {
        Matrix block = seed;
        for (int q : v) block = as[static_cast<size_t>(q - 1)] * block;
        for (Eigen::Index c = 0; c < block.cols() && picked < r; ++c) {
            Vector col = block.col(c);
            if (col.norm() <= tol * scale) continue;
            // Re-orthogonalized Gram-Schmidt for a robust rank decision.
            Vector resid = col - basis * (basis.transpose() * col);
            resid -= basis * (basis.transpose() * resid);
            if (resid.norm() > tol * col.norm()) {
                basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
                basis.col(basis.cols() - 1) = resid / resid.norm();
                on_pick(v, static_cast<int>(c));
                ++picked;
            }
        }
        if (picked >= r) break;
    }
    return picked;
}

}  // namespace

NiceColumnSelection select_nice_columns(const Lss& sys, int r, double tol) {
    validate_or_throw(sys);
    std::vector<Matrix> as;
    for (const auto& md : sys.modes) as.push_back(md.A);
    NiceColumnSelection sel;
    const int got = greedy_scan(as, b_tilde(sys), r, tol, [&](const Word& v, int c) {
        if (c == 0) {
            sel.x0_words.insert(v);
        } else {
            const int q = (c - 1) / sys.m + 1;
            const int j = (c - 1) % sys.m + 1;
            sel.column_entries.insert({v, q, j});
        }
    });
    if (got < r)
        throw std::domain_error("select_nice_columns: requested " + std::to_string(r) +
                                " but dim R_{n-1} is only " + std::to_string(got));
    return sel;
}

NiceRowSelection select_nice_rows(const Lss& sys, int r, double tol) {
    validate_or_throw(sys);
    std::vector<Matrix> as;
    for (const auto& md : sys.modes) as.push_back(md.A.transpose());
    NiceRowSelection sel;
    const int got = greedy_scan(as, c_tilde(sys).transpose(), r, tol, [&](const Word& v, int c) {
        const int q = c / sys.p + 1;
        const int i = c % sys.p + 1;
        sel.row_entries.insert({v, q, i});
    });
    if (got < r)
        throw std::domain_error("select_nice_rows: requested " + std::to_string(r) +
                                " but the observability array has rank " + std::to_string(got));
    return sel;
}

std::string column_selection_to_json(const NiceColumnSelection& sel) {
    nlohmann::json j;
    j["x0_words"] = nlohmann::json::array();
    for (const Word& w : sel.x0_words) j["x0_words"].push_back(word_to_string(w));
    j["columns"] = nlohmann::json::array();
    for (const auto& e : sel.column_entries)
        j["columns"].push_back({{"w", word_to_string(e.w)}, {"q", e.q}, {"j", e.j}});
    return j.dump(2);
}

NiceColumnSelection column_selection_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    NiceColumnSelection sel;
    for (const auto& w : j.value("x0_words", nlohmann::json::array()))
        sel.x0_words.insert(word_from_string(w.get<std::string>()));
    for (const auto& e : j.value("columns", nlohmann::json::array()))
        sel.column_entries.insert({word_from_string(e.at("w").get<std::string>()),
                                   e.at("q").get<int>(), e.at("j").get<int>()});
    return sel;
}

std::string row_selection_to_json(const NiceRowSelection& sel) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto& e : sel.row_entries)
        j["rows"].push_back({{"v", word_to_string(e.v)}, {"q", e.q}, {"i", e.i}});
    return j.dump(2);
}

NiceRowSelection row_selection_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    NiceRowSelection sel;
    for (const auto& e : j.value("rows", nlohmann::json::array()))
        sel.row_entries.insert({word_from_string(e.at("v").get<std::string>()),
                                e.at("q").get<int>(), e.at("i").get<int>()});
    return sel;
}

}  // namespace lsmr
