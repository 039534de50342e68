#include "lsmr/lss.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "lsmr/reduce_moment.hpp"

namespace lsmr {

std::string word_to_string(const Word& w) {
    std::string s;
    s.reserve(w.size());
    for (int q : w) {
        if (q < 1 || q > 9) throw std::invalid_argument("word_to_string: letters must be in 1..9");
        s.push_back(static_cast<char>('0' + q));
    }
    return s;
}

Word word_from_string(const std::string& s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c < '1' || c > '9') throw std::invalid_argument("word_from_string: invalid digit '" + std::string(1, c) + "'");
        w.push_back(c - '0');
    }
    return w;
}

std::vector<Word> words_of_length(int d, int len) {
    std::vector<Word> out;
    Word w(static_cast<size_t>(len), 1);
    if (len == 0) {
        out.push_back({});
        return out;
    }
    while (true) {
        out.push_back(w);
        int i = len - 1;
        while (i >= 0 && w[static_cast<size_t>(i)] == d) {
            w[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++w[static_cast<size_t>(i)];
    }
    return out;
}

std::vector<Word> words_up_to(int d, int n) {
    std::vector<Word> out;
    for (int len = 0; len <= n; ++len) {
        auto block = words_of_length(d, len);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<std::string> validate(const Lss& sys) {
    std::vector<std::string> errs;
    if (sys.D < 1) errs.push_back("D must be >= 1");
    if (sys.m < 1) errs.push_back("m must be >= 1");
    if (sys.p < 1) errs.push_back("p must be >= 1");
    if (sys.n < 0) errs.push_back("n must be >= 0");
    if (static_cast<int>(sys.modes.size()) != sys.D)
        errs.push_back("modes array length differs from D");
    for (size_t k = 0; k < sys.modes.size(); ++k) {
        const auto& md = sys.modes[k];
        const std::string tag = "mode " + std::to_string(k + 1) + " field ";
        if (md.A.rows() != sys.n || md.A.cols() != sys.n)
            errs.push_back(tag + "A: expected " + std::to_string(sys.n) + "x" + std::to_string(sys.n));
        if (md.B.rows() != sys.n || md.B.cols() != sys.m)
            errs.push_back(tag + "B: expected " + std::to_string(sys.n) + "x" + std::to_string(sys.m));
        if (md.C.rows() != sys.p || md.C.cols() != sys.n)
            errs.push_back(tag + "C: expected " + std::to_string(sys.p) + "x" + std::to_string(sys.n));
        if (!md.A.allFinite() || !md.B.allFinite() || !md.C.allFinite())
            errs.push_back(tag + "A/B/C: non-finite entries");
    }
    if (sys.x0.size() != sys.n) errs.push_back("x0: length differs from n");
    if (!sys.x0.allFinite()) errs.push_back("x0: non-finite entries");
    return errs;
}

void validate_or_throw(const Lss& sys) {
    auto errs = validate(sys);
    if (errs.empty()) return;
    std::string msg = "invalid LSS:";
    for (const auto& e : errs) msg += "\n  " + e;
    throw std::invalid_argument(msg);
}

Matrix a_word(const Lss& sys, const Word& w) {
    Matrix prod = Matrix::Identity(sys.n, sys.n);
    for (int q : w) {
        if (q < 1 || q > sys.D) throw std::out_of_range("a_word: letter out of range");
        prod = sys.mode(q).A * prod;
    }
    return prod;
}

Matrix c_tilde(const Lss& sys) {
    Matrix ct(sys.D * sys.p, sys.n);
    for (int q = 1; q <= sys.D; ++q) ct.middleRows((q - 1) * sys.p, sys.p) = sys.mode(q).C;
    return ct;
}

Matrix b_tilde(const Lss& sys) {
    Matrix bt(sys.n, sys.m * sys.D + 1);
    bt.col(0) = sys.x0;
    for (int q = 1; q <= sys.D; ++q) bt.middleCols(1 + (q - 1) * sys.m, sys.m) = sys.mode(q).B;
    return bt;
}

Matrix markov_parameter(const Lss& sys, const Word& v) {
    return c_tilde(sys) * a_word(sys, v) * b_tilde(sys);
}

std::map<Word, Matrix> markov_parameters_up_to(const Lss& sys, int n_depth) {
    if (n_depth < 0) throw std::invalid_argument("markov_parameters_up_to: N must be >= 0");
    double count = sys.D == 1 ? n_depth + 1
                              : (std::pow(static_cast<double>(sys.D), n_depth + 1) - 1) / (sys.D - 1);
    if (count > 1e6) throw std::length_error("markov_parameters_up_to: word count exceeds 10^6");
    std::map<Word, Matrix> out;
    const Matrix ct = c_tilde(sys);
    const Matrix bt = b_tilde(sys);
    for (const Word& v : words_up_to(sys.D, n_depth)) out.emplace(v, ct * a_word(sys, v) * bt);
    return out;
}

Lss minimize(const Lss& sys, double tol) {
    validate_or_throw(sys);
    if (sys.n == 0) return sys;
    // Restrict to the span-reachable part, then factor out the unobservable part.
    auto step_r = reduce(sys, sys.n - 1, ReductionMode::R, tol);
    const Lss& half = step_r.reduced;
    if (half.n == 0) return half;
    auto step_o = reduce(half, half.n - 1, ReductionMode::O, tol);
    return step_o.reduced;
}

namespace {

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, Eigen::Index rows, Eigen::Index cols,
                        const std::string& what) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
        throw std::invalid_argument("model JSON: bad row count for " + what);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw std::invalid_argument("model JSON: bad column count for " + what);
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = row[static_cast<size_t>(c)].get<double>();
    }
    return m;
}

}  // namespace

std::string lss_to_json(const Lss& sys) {
    nlohmann::json j;
    j["p"] = sys.p;
    j["m"] = sys.m;
    j["n"] = sys.n;
    j["D"] = sys.D;
    j["modes"] = nlohmann::json::array();
    for (const auto& md : sys.modes) {
        nlohmann::json jm;
        jm["A"] = matrix_to_json(md.A);
        jm["B"] = matrix_to_json(md.B);
        jm["C"] = matrix_to_json(md.C);
        j["modes"].push_back(std::move(jm));
    }
    nlohmann::json x0 = nlohmann::json::array();
    for (Eigen::Index i = 0; i < sys.x0.size(); ++i) x0.push_back(sys.x0(i));
    j["x0"] = std::move(x0);
    return j.dump(2);
}

Lss lss_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Lss sys;
    sys.p = j.at("p").get<int>();
    sys.m = j.at("m").get<int>();
    sys.n = j.at("n").get<int>();
    sys.D = j.at("D").get<int>();
    for (const auto& jm : j.at("modes")) {
        LssMode md;
        md.A = matrix_from_json(jm.at("A"), sys.n, sys.n, "A");
        md.B = matrix_from_json(jm.at("B"), sys.n, sys.m, "B");
        md.C = matrix_from_json(jm.at("C"), sys.p, sys.n, "C");
        sys.modes.push_back(std::move(md));
    }
    const auto& jx = j.at("x0");
    sys.x0 = Vector(static_cast<Eigen::Index>(jx.size()));
    for (size_t i = 0; i < jx.size(); ++i) sys.x0(static_cast<Eigen::Index>(i)) = jx[i].get<double>();
    validate_or_throw(sys);
    return sys;
}

Lss load_lss(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open model file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return lss_from_json(ss.str());
}

void save_lss(const Lss& sys, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write model file: " + path);
    out << lss_to_json(sys) << "\n";
}

}  // namespace lsmr
