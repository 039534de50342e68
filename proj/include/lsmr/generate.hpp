#pragma once

#include <cstdint>

#include "lsmr/lss.hpp"

namespace lsmr {

/// Random test system: Gaussian B_q, C_q, x0 and Gaussian A_q rescaled so
/// that each mode has the prescribed spectral radius (one value per mode,
/// or a single value applied to all). Deterministic per seed.
Lss random_lss(int n, int d, int m, int p, const std::vector<double>& spectral_radius,
               std::uint64_t seed);

}  // namespace lsmr
