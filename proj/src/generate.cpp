#include "lsmr/generate.hpp"

#include <random>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace lsmr {

Lss random_lss(int n, int d, int m, int p, const std::vector<double>& spectral_radius,
               std::uint64_t seed) {
    if (n < 1 || d < 1 || m < 1 || p < 1) throw std::invalid_argument("random_lss: bad dimensions");
    if (spectral_radius.size() != 1 && static_cast<int>(spectral_radius.size()) != d)
        throw std::invalid_argument("random_lss: need 1 or D spectral radii");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto randn = [&](Eigen::Index r, Eigen::Index c) {
        Matrix mat(r, c);
        for (Eigen::Index i = 0; i < r; ++i)
            for (Eigen::Index jj = 0; jj < c; ++jj) mat(i, jj) = gauss(rng);
        return mat;
    };

    Lss sys;
    sys.n = n;
    sys.D = d;
    sys.m = m;
    sys.p = p;
    for (int q = 1; q <= d; ++q) {
        const double rho =
            spectral_radius.size() == 1 ? spectral_radius[0] : spectral_radius[static_cast<size_t>(q - 1)];
        Matrix a = randn(n, n);
        const double cur = a.eigenvalues().cwiseAbs().maxCoeff();
        if (cur > 0) a *= rho / cur;
        // Negative spectral-radius request means "stable": shift so the
        // real parts sit at -|rho| .. 0.
        if (rho < 0) {
            a = randn(n, n);
            const double sc = a.eigenvalues().cwiseAbs().maxCoeff();
            if (sc > 0) a *= (-rho) / sc;
            a -= Matrix::Identity(n, n) * (a.eigenvalues().real().maxCoeff() + 0.05 * (-rho));
        }
        sys.modes.push_back({a, randn(n, m), randn(p, n)});
    }
    sys.x0 = randn(n, 1);
    return sys;
}

}  // namespace lsmr
