#include "lsmr/reduce_moment.hpp"

#include <iostream>
#include <limits>

namespace lsmr {

ReductionMode mode_from_string(const std::string& s) {
    if (s == "R") return ReductionMode::R;
    if (s == "O") return ReductionMode::O;
    if (s == "T") return ReductionMode::T;
    throw std::invalid_argument("unknown reduction mode '" + s + "' (expected R, O or T)");
}

std::string mode_to_string(ReductionMode mode) {
    switch (mode) {
        case ReductionMode::R: return "R";
        case ReductionMode::O: return "O";
        case ReductionMode::T: return "T";
    }
    return "?";
}

RankFailure::RankFailure(int rv, int rw, int rwv)
    : std::runtime_error("two-sided rank guard failed: rank(V)=" + std::to_string(rv) +
                         ", rank(W)=" + std::to_string(rw) + ", rank(WV)=" + std::to_string(rwv)),
      rank_v(rv), rank_w(rw), rank_wv(rwv) {}

namespace {

Lss project_r(const Lss& sys, const Matrix& v) {
    // Abar_q = V^-1 A_q V, Bbar_q = V^-1 B_q, Cbar_q = C_q V, x0bar = V^-1 x0,
    // with V^-1 = V^T (orthonormal columns).
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
    // Abar_q = W A_q W^-1, Bbar_q = W B_q, Cbar_q = C_q W^-1, x0bar = W x0,
    // with W^-1 = W^T (orthonormal rows).
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

}  // namespace

ReductionReport reduce(const Lss& sys, int n_depth, ReductionMode mode, double tol) {
    validate_or_throw(sys);
    ReductionReport rep;
    rep.mode = mode;
    rep.N = n_depth;

    const Matrix v = reach_space(sys, n_depth, tol).V.mat;
    const Matrix w = unobs_space(sys, n_depth, tol).W;
    rep.rank_v = static_cast<int>(v.cols());
    rep.rank_w = static_cast<int>(w.rows());
    const Matrix wv = w * v;
    rep.rank_wv = rank_of(wv, tol);

    switch (mode) {
        case ReductionMode::R:
            rep.reduced = project_r(sys, v);
            rep.matched_depth = n_depth;
            break;
        case ReductionMode::O:
            rep.reduced = project_o(sys, w);
            rep.matched_depth = n_depth;
            break;
        case ReductionMode::T: {
            if (rep.rank_v != rep.rank_w || rep.rank_v != rep.rank_wv)
                throw RankFailure(rep.rank_v, rep.rank_w, rep.rank_wv);
            Eigen::PartialPivLU<Matrix> lu(wv);
            Eigen::JacobiSVD<Matrix> svd(wv);
            const auto& sv = svd.singularValues();
            rep.cond_wv = sv.size() > 0 && sv(sv.size() - 1) > 0.0 ? sv(0) / sv(sv.size() - 1)
                                                                  : std::numeric_limits<double>::infinity();
            if (rep.cond_wv > 1e12)
                std::cerr << "warning: WV is ill conditioned (cond = " << rep.cond_wv << ")\n";
            const Matrix p = lu.solve(Matrix::Identity(wv.rows(), wv.cols()));  // (WV)^-1
            Lss out;
            out.p = sys.p;
            out.m = sys.m;
            out.D = sys.D;
            out.n = static_cast<int>(v.cols());
            for (const auto& md : sys.modes)
                out.modes.push_back({w * md.A * v * p, w * md.B, md.C * v * p});
            out.x0 = w * sys.x0;
            rep.reduced = std::move(out);
            rep.matched_depth = 2 * n_depth;
            break;
        }
    }
    return rep;
}

double check_partial_realization(const Lss& sys, const Lss& red, int n_depth) {
    if (sys.p != red.p || sys.m != red.m || sys.D != red.D)
        throw std::invalid_argument("check_partial_realization: signature mismatch");
    auto ref = markov_parameters_up_to(sys, n_depth);
    double scale = 0.0;
    for (const auto& [v, mat] : ref) scale = std::max(scale, mat.norm());
    if (scale == 0.0) scale = 1.0;
    double worst = 0.0;
    for (const auto& [v, mat] : ref) {
        const Matrix got = markov_parameter(red, v);
        const double denom = std::max(mat.norm(), scale * 1e-12);
        worst = std::max(worst, (got - mat).norm() / denom);
    }
    return worst;
}

}  // namespace lsmr
