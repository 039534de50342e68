#include "lsmr/constrained_krylov.hpp"

#include <stdexcept>

namespace lsmr {

namespace {

Matrix hcat(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows(), a.cols() + b.cols());
    out.leftCols(a.cols()) = a;
    out.rightCols(b.cols()) = b;
    return out;
}

void require_coreachable(const Ndfa& a, const char* who) {
    if (!a.finals.empty() && !is_coreachable(a))
        throw std::invalid_argument(std::string(who) + ": automaton must be co-reachable (trim it first)");
}

}  // namespace

Basis reach_constrained(const Lss& sys, const Matrix& g, int j, const Ndfa& a, double tol) {
    validate_or_throw(sys);
    validate_ndfa(a);
    require_coreachable(a, "reach_constrained");
    if (g.rows() != sys.n) throw std::invalid_argument("reach_constrained: G row count differs from n");
    if (j < 1 || j > g.cols()) throw std::out_of_range("reach_constrained: column index out of range");
    if (a.finals.empty()) return Basis{Matrix(sys.n, 0), tol};

    const size_t ns = static_cast<size_t>(a.state_count);
    std::vector<Matrix> v(ns, Matrix(sys.n, 0));
    v[static_cast<size_t>(a.initial)] = orth(g.col(j - 1), tol).mat;

    while (true) {
        std::vector<Matrix> v_old = v;
        for (int s = 0; s < a.state_count; ++s) {
            Matrix m = v[static_cast<size_t>(s)];
            for (const auto& t : a.transitions)
                if (t.to == s)
                    m = hcat(m, sys.mode(t.letter).A * v_old[static_cast<size_t>(t.from)]);
            v[static_cast<size_t>(s)] = orth(m, tol).mat;
        }
        bool stable = true;
        for (size_t s = 0; s < ns; ++s)
            if (v[s].cols() != v_old[s].cols()) stable = false;
        if (stable) break;
    }

    Matrix all(sys.n, 0);
    for (int f : a.finals) all = hcat(all, v[static_cast<size_t>(f)]);
    return orth(all, tol);
}

Matrix obs_constrained(const Lss& sys, const Matrix& h, int i, const Ndfa& a, double tol) {
    validate_or_throw(sys);
    validate_ndfa(a);
    require_coreachable(a, "obs_constrained");
    if (h.cols() != sys.n) throw std::invalid_argument("obs_constrained: H column count differs from n");
    if (i < 1 || i > h.rows()) throw std::out_of_range("obs_constrained: row index out of range");
    if (a.finals.empty()) return Matrix(0, sys.n);

    const size_t ns = static_cast<size_t>(a.state_count);
    // W_s stored transposed (column bases of the row spaces).
    std::vector<Matrix> wt(ns, Matrix(sys.n, 0));
    const Matrix seed = orth(h.row(i - 1).transpose(), tol).mat;
    for (int f : a.finals) wt[static_cast<size_t>(f)] = seed;

    while (true) {
        std::vector<Matrix> wt_old = wt;
        for (int s = 0; s < a.state_count; ++s) {
            Matrix m = wt[static_cast<size_t>(s)];
            for (const auto& t : a.transitions)
                if (t.from == s)
                    m = hcat(m, sys.mode(t.letter).A.transpose() * wt_old[static_cast<size_t>(t.to)]);
            wt[static_cast<size_t>(s)] = orth(m, tol).mat;
        }
        bool stable = true;
        for (size_t s = 0; s < ns; ++s)
            if (wt[s].cols() != wt_old[s].cols()) stable = false;
        if (stable) break;
    }

    return wt[static_cast<size_t>(a.initial)].transpose();
}

}  // namespace lsmr
