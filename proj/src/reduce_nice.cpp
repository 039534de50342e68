#include "lsmr/reduce_nice.hpp"

#include <iostream>
#include <limits>

namespace lsmr {

namespace {

Matrix hcat(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

Matrix assemble_v(const Lss& sys, const ColumnLanguages& langs, double tol) {
    Matrix cols(sys.n, 0);
    if (langs.has_x0)
        cols = hcat(cols, reach_constrained(sys, sys.x0, 1, langs.x0_language, tol).mat);
    for (const auto& [idx, ndfa] : langs.per_index)
        cols = hcat(cols, reach_constrained(sys, sys.mode(idx.first).B, idx.second, ndfa, tol).mat);
    return orth(cols, tol).mat;
}

Matrix assemble_w(const Lss& sys, const RowLanguages& langs, double tol) {
    Matrix rows_t(sys.n, 0);
    for (const auto& [idx, ndfa] : langs.per_index)
        rows_t = hcat(rows_t,
                      obs_constrained(sys, sys.mode(idx.first).C, idx.second, ndfa, tol).transpose());
    return orth(rows_t, tol).mat.transpose();
}

Lss project_r(const Lss& sys, const Matrix& v) {
    Lss out;
    out.p = sys.p;
    out.m = sys.m;
    out.D = sys.D;
    out.n = static_cast<int>(v.cols());
    for (const auto& md : sys.modes)
        out.modes.push_back({v.transpose() * md.A * v, v.transpose() * md.B, md.C * v});
    out.x0 = v.transpose() * sys.x0;
    return out;
}

Lss project_o(const Lss& sys, const Matrix& w) {
    Lss out;
    out.p = sys.p;
    out.m = sys.m;
    out.D = sys.D;
    out.n = static_cast<int>(w.rows());
    for (const auto& md : sys.modes)
        out.modes.push_back({w * md.A * w.transpose(), w * md.B, md.C * w.transpose()});
    out.x0 = w * sys.x0;
    return out;
}

double relative_error(const Matrix& ref, const Matrix& got, double scale) {
    const double denom = std::max(ref.norm(), scale * 1e-12);
    return (got - ref).norm() / denom;
}

}  // namespace

ReductionReport reduce_beta(const Lss& sys, const ColumnLanguages& langs, double tol) {
    validate_or_throw(sys);
    const Matrix v = assemble_v(sys, langs, tol);
    ReductionReport rep;
    rep.mode = ReductionMode::R;
    rep.rank_v = static_cast<int>(v.cols());
    rep.reduced = project_r(sys, v);
    return rep;
}

ReductionReport reduce_alpha(const Lss& sys, const RowLanguages& langs, double tol) {
    validate_or_throw(sys);
    const Matrix w = assemble_w(sys, langs, tol);
    ReductionReport rep;
    rep.mode = ReductionMode::O;
    rep.rank_w = static_cast<int>(w.rows());
    rep.reduced = project_o(sys, w);
    return rep;
}

ReductionReport reduce_alphabeta(const Lss& sys, const RowLanguages& row_langs,
                                 const ColumnLanguages& col_langs, double tol) {
    validate_or_throw(sys);
    const Matrix v = assemble_v(sys, col_langs, tol);
    const Matrix w = assemble_w(sys, row_langs, tol);
    ReductionReport rep;
    rep.mode = ReductionMode::T;
    rep.rank_v = static_cast<int>(v.cols());
    rep.rank_w = static_cast<int>(w.rows());
    const Matrix wv = w * v;
    rep.rank_wv = rank_of(wv, tol);
    if (rep.rank_v != rep.rank_w || rep.rank_v != rep.rank_wv)
        throw RankFailure(rep.rank_v, rep.rank_w, rep.rank_wv);

    Eigen::JacobiSVD<Matrix> svd(wv);
    const auto& sv = svd.singularValues();
    rep.cond_wv = sv.size() > 0 && sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                                           : std::numeric_limits<double>::infinity();
    if (rep.cond_wv > 1e12)
        std::cerr << "warning: WV is ill conditioned (cond = " << rep.cond_wv << ")\n";

    const Matrix p = v * Eigen::PartialPivLU<Matrix>(wv).solve(Matrix::Identity(wv.rows(), wv.cols()));
    Lss out;
    out.p = sys.p;
    out.m = sys.m;
    out.D = sys.D;
    out.n = static_cast<int>(v.cols());
    for (const auto& md : sys.modes) out.modes.push_back({w * md.A * p, w * md.B, md.C * p});
    out.x0 = w * sys.x0;
    rep.reduced = std::move(out);
    return rep;
}

double check_selection(const Lss& sys, const Lss& red, const NiceColumnSelection& sel) {
    const Matrix ct_sys = c_tilde(sys), ct_red = c_tilde(red);
    double scale = std::max(b_tilde(sys).norm() * ct_sys.norm(), 1e-300);
    double worst = 0.0;
    for (const Word& w : sel.x0_words) {
        const Matrix ref = ct_sys * a_word(sys, w) * sys.x0;
        const Matrix got = ct_red * a_word(red, w) * red.x0;
        worst = std::max(worst, relative_error(ref, got, scale));
    }
    for (const auto& e : sel.column_entries) {
        const Matrix ref = ct_sys * a_word(sys, e.w) * sys.mode(e.q).B.col(e.j - 1);
        const Matrix got = ct_red * a_word(red, e.w) * red.mode(e.q).B.col(e.j - 1);
        worst = std::max(worst, relative_error(ref, got, scale));
    }
    return worst;
}

double check_selection(const Lss& sys, const Lss& red, const NiceRowSelection& sel) {
    const Matrix bt_sys = b_tilde(sys), bt_red = b_tilde(red);
    double scale = std::max(bt_sys.norm() * c_tilde(sys).norm(), 1e-300);
    double worst = 0.0;
    for (const auto& e : sel.row_entries) {
        const Matrix ref = sys.mode(e.q).C.row(e.i - 1) * a_word(sys, e.v) * bt_sys;
        const Matrix got = red.mode(e.q).C.row(e.i - 1) * a_word(red, e.v) * bt_red;
        worst = std::max(worst, relative_error(ref, got, scale));
    }
    return worst;
}

double check_selection_pair(const Lss& sys, const Lss& red, const NiceRowSelection& alpha,
                            const NiceColumnSelection& beta) {
    double scale = std::max(b_tilde(sys).norm() * c_tilde(sys).norm(), 1e-300);
    double worst = 0.0;
    for (const auto& a : alpha.row_entries) {
        for (const auto& b : beta.column_entries) {
            Word wv = b.w;  // A_{wv} = A_v-part applied after A_w-part
            wv.insert(wv.end(), a.v.begin(), a.v.end());
            const double ref = (sys.mode(a.q).C.row(a.i - 1) * a_word(sys, wv) *
                                sys.mode(b.q).B.col(b.j - 1))(0);
            const double got = (red.mode(a.q).C.row(a.i - 1) * a_word(red, wv) *
                                red.mode(b.q).B.col(b.j - 1))(0);
            const double denom = std::max(std::abs(ref), scale * 1e-12);
            worst = std::max(worst, std::abs(got - ref) / denom);
        }
        for (const Word& w : beta.x0_words) {
            Word wv = w;
            wv.insert(wv.end(), a.v.begin(), a.v.end());
            const double ref = (sys.mode(a.q).C.row(a.i - 1) * a_word(sys, wv) * sys.x0)(0);
            const double got = (red.mode(a.q).C.row(a.i - 1) * a_word(red, wv) * red.x0)(0);
            const double denom = std::max(std::abs(ref), scale * 1e-12);
            worst = std::max(worst, std::abs(got - ref) / denom);
        }
    }
    return worst;
}

ColumnLanguages sequence_column_languages(const Lss& sys, const Word& upsilon) {
    const Ndfa gen = generating_ndfa(upsilon);
    ColumnLanguages langs;
    langs.has_x0 = true;
    langs.x0_language = trim_coreachable(gen);
    for (int q0 = 1; q0 <= sys.D; ++q0) {
        // L_{q0,j} = q0^{-1} L_upsilon, the same language for every j.
        const Ndfa quot = trim_coreachable(left_quotient(gen, q0));
        if (quot.finals.empty()) continue;
        for (int j = 1; j <= sys.m; ++j) langs.per_index.emplace(std::make_pair(q0, j), quot);
    }
    return langs;
}

RowLanguages sequence_row_languages(const Lss& sys, const Word& upsilon) {
    const Ndfa gen = generating_ndfa(upsilon);
    RowLanguages langs;
    for (int q = 1; q <= sys.D; ++q) {
        const Ndfa quot = trim_coreachable(right_quotient(gen, q));
        if (quot.finals.empty()) continue;
        for (int i = 1; i <= sys.p; ++i) langs.per_index.emplace(std::make_pair(q, i), quot);
    }
    return langs;
}

ReductionReport match_sequence(const Lss& sys, const Word& upsilon, SelectionSide side, double tol) {
    validate_or_throw(sys);
    if (upsilon.empty()) throw std::invalid_argument("match_sequence: empty mode sequence");
    if (upsilon.size() < 2)
        std::cerr << "warning: match_sequence with a single-mode sequence\n";
    for (int q : upsilon)
        if (q < 1 || q > sys.D) throw std::out_of_range("match_sequence: mode out of range");
    if (side == SelectionSide::Column)
        return reduce_beta(sys, sequence_column_languages(sys, upsilon), tol);
    return reduce_alpha(sys, sequence_row_languages(sys, upsilon), tol);
}

}  // namespace lsmr
