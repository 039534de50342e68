#pragma once

#include <cstdint>

#include "lsmr/lss.hpp"

// Numerical input-output map along a timed switching sequence, plus the
// random-experiment generators and the best-fit-rate metric.

namespace lsmr {

struct Segment {
    int mode = 1;        // in 1..D
    double duration = 0; // strictly positive seconds
};

struct SwitchingSequence {
    std::vector<Segment> segments;

    double total_duration() const;
    /// Mode word q_1 q_2 ... q_k of the sequence.
    Word mode_word() const;
};

/// Uniformly sampled multichannel signal: values[j] is the sample at j*dt.
struct SampledSignal {
    double dt = 1e-3;
    std::vector<Vector> values;

    size_t size() const { return values.size(); }
};

/// Output of sys along mu driven by u (zero-order hold per step, advanced
/// by the exact augmented-matrix exponential; state continuous across
/// switches). Switch instants are snapped to the sampling grid. u must
/// provide a sample for every grid point of the horizon.
SampledSignal simulate(const Lss& sys, const SwitchingSequence& mu, const SampledSignal& u);

/// Random switching sequence: consecutive modes differ, each duration at
/// least the per-mode minimum dwell time, total exactly `horizon`.
/// Deterministic per seed.
SwitchingSequence random_switching(int d, double horizon, const std::vector<double>& min_dwell,
                                   std::uint64_t seed);

/// i.i.d. standard normal input samples, one per grid point.
SampledSignal white_noise_input(int m, double horizon, double dt, std::uint64_t seed);

/// Constant-zero input covering the horizon.
SampledSignal zero_input(int m, double horizon, double dt);

/// Best fit rate: 100 * max(1 - ||y - ybar||_2 / ||y - y_m||_2, 0), with
/// y_m the per-channel time mean of y. Defined as 100 when y is constant
/// and ybar == y, 0 when y is constant and ybar != y.
double bfr(const SampledSignal& y, const SampledSignal& ybar);

// Signal CSV: header "t,v1..vk", one row per sample, 17 significant digits.
void save_signal_csv(const SampledSignal& s, const std::string& path);
SampledSignal load_signal_csv(const std::string& path);

}  // namespace lsmr
