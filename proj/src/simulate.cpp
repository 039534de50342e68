#include "lsmr/simulate.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lsmr {

double SwitchingSequence::total_duration() const {
    double t = 0;
    for (const auto& s : segments) t += s.duration;
    return t;
}

Word SwitchingSequence::mode_word() const {
    Word w;
    for (const auto& s : segments) w.push_back(s.mode);
    return w;
}

SampledSignal simulate(const Lss& sys, const SwitchingSequence& mu, const SampledSignal& u) {
    validate_or_throw(sys);
    const double dt = u.dt;
    if (dt <= 0) throw std::invalid_argument("simulate: dt must be positive");

    // Snap switch instants to the sampling grid.
    std::vector<long> seg_end_steps;
    double t_cum = 0;
    for (const auto& seg : mu.segments) {
        if (seg.mode < 1 || seg.mode > sys.D) throw std::out_of_range("simulate: mode out of range");
        if (seg.duration <= 0) throw std::invalid_argument("simulate: non-positive segment duration");
        t_cum += seg.duration;
        seg_end_steps.push_back(std::lround(t_cum / dt));
    }
    const long total_steps = seg_end_steps.empty() ? 0 : seg_end_steps.back();
    if (static_cast<long>(u.size()) < total_steps + 1)
        throw std::invalid_argument("simulate: input does not cover the switching horizon");
    for (const auto& val : u.values)
        if (val.size() != sys.m) throw std::invalid_argument("simulate: input dimension mismatch");

    // Exact ZOH discretization per mode: [Ad, Bd] from the (n+m) augmented
    // exponential, computed once per mode since the grid is uniform.
    std::vector<Matrix> ad(static_cast<size_t>(sys.D)), bd(static_cast<size_t>(sys.D));
    for (int q = 1; q <= sys.D; ++q) {
        Matrix aug = Matrix::Zero(sys.n + sys.m, sys.n + sys.m);
        aug.topLeftCorner(sys.n, sys.n) = sys.mode(q).A;
        aug.topRightCorner(sys.n, sys.m) = sys.mode(q).B;
        Matrix e = expm(aug, dt);
        ad[static_cast<size_t>(q - 1)] = e.topLeftCorner(sys.n, sys.n);
        bd[static_cast<size_t>(q - 1)] = e.topRightCorner(sys.n, sys.m);
    }

    // sigma(t) = q_i for t in (end_{i-1}, end_i]; sigma(0) = q_1.
    auto mode_at_step = [&](long j) {
        for (size_t i = 0; i < seg_end_steps.size(); ++i)
            if (j <= seg_end_steps[i]) return mu.segments[i].mode;
        return mu.segments.back().mode;
    };

    SampledSignal y;
    y.dt = dt;
    Vector x = sys.x0;
    size_t seg = 0;
    for (long j = 0; j <= total_steps; ++j) {
        while (seg < seg_end_steps.size() && j > seg_end_steps[seg]) ++seg;
        y.values.push_back(sys.mode(mode_at_step(j)).C * x);
        if (j < total_steps) {
            // The step (j, j+1] belongs to the first segment ending after j.
            size_t si = seg;
            while (si + 1 < seg_end_steps.size() && seg_end_steps[si] <= j) ++si;
            const int q = mu.segments[si].mode;
            x = ad[static_cast<size_t>(q - 1)] * x +
                bd[static_cast<size_t>(q - 1)] * u.values[static_cast<size_t>(j)];
        }
    }
    return y;
}

SwitchingSequence random_switching(int d, double horizon, const std::vector<double>& min_dwell,
                                   std::uint64_t seed) {
    if (d < 1) throw std::invalid_argument("random_switching: D must be >= 1");
    if (static_cast<int>(min_dwell.size()) != d)
        throw std::invalid_argument("random_switching: need one min dwell time per mode");
    double smallest = min_dwell[0];
    for (double md : min_dwell) {
        if (md <= 0) throw std::invalid_argument("random_switching: dwell times must be positive");
        smallest = std::min(smallest, md);
    }
    if (horizon < smallest)
        throw std::invalid_argument("random_switching: horizon shorter than every minimum dwell time");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::uniform_int_distribution<int> pick_mode(1, d);

    SwitchingSequence mu;
    if (d == 1) {
        mu.segments.push_back({1, horizon});
        return mu;
    }
    int q = pick_mode(rng);
    if (min_dwell[static_cast<size_t>(q - 1)] > horizon) {
        // First mode must fit the horizon.
        for (int c = 1; c <= d; ++c)
            if (min_dwell[static_cast<size_t>(c - 1)] <= horizon) { q = c; break; }
    }
    double t = 0;
    while (true) {
        const double dwell = min_dwell[static_cast<size_t>(q - 1)];
        const double dur = dwell * (1.0 + unif(rng));
        if (t + dur >= horizon) {
            const double rest = horizon - t;
            if (rest >= dwell || mu.segments.empty())
                mu.segments.push_back({q, rest});
            else
                mu.segments.back().duration += rest;  // extend instead of under-dwelling
            break;
        }
        mu.segments.push_back({q, dur});
        t += dur;
        int next = pick_mode(rng);
        while (next == q) next = pick_mode(rng);
        q = next;
    }
    return mu;
}

SampledSignal white_noise_input(int m, double horizon, double dt, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SampledSignal u;
    u.dt = dt;
    const long steps = std::lround(horizon / dt);
    for (long j = 0; j <= steps; ++j) {
        Vector v(m);
        for (int i = 0; i < m; ++i) v(i) = gauss(rng);
        u.values.push_back(std::move(v));
    }
    return u;
}

SampledSignal zero_input(int m, double horizon, double dt) {
    SampledSignal u;
    u.dt = dt;
    const long steps = std::lround(horizon / dt);
    for (long j = 0; j <= steps; ++j) u.values.push_back(Vector::Zero(m));
    return u;
}

double bfr(const SampledSignal& y, const SampledSignal& ybar) {
    if (y.size() != ybar.size()) throw std::invalid_argument("bfr: signal length mismatch");
    if (y.dt != ybar.dt) throw std::invalid_argument("bfr: sampling step mismatch");
    if (y.size() == 0) throw std::invalid_argument("bfr: empty signals");

    Vector mean = Vector::Zero(y.values[0].size());
    for (const auto& v : y.values) mean += v;
    mean /= static_cast<double>(y.size());

    double err2 = 0, dev2 = 0;
    for (size_t j = 0; j < y.size(); ++j) {
        err2 += (y.values[j] - ybar.values[j]).squaredNorm();
        dev2 += (y.values[j] - mean).squaredNorm();
    }
    if (dev2 == 0.0) return err2 == 0.0 ? 100.0 : 0.0;
    return 100.0 * std::max(1.0 - std::sqrt(err2) / std::sqrt(dev2), 0.0);
}

void save_signal_csv(const SampledSignal& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write signal file: " + path);
    const Eigen::Index k = s.values.empty() ? 0 : s.values[0].size();
    out << "t";
    for (Eigen::Index c = 1; c <= k; ++c) out << ",v" << c;
    out << "\n";
    out.precision(17);
    for (size_t j = 0; j < s.values.size(); ++j) {
        out << static_cast<double>(j) * s.dt;
        for (Eigen::Index c = 0; c < k; ++c) out << "," << s.values[j](c);
        out << "\n";
    }
}

SampledSignal load_signal_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open signal file: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty signal file: " + path);
    SampledSignal s;
    std::vector<double> times;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
        if (row.empty()) continue;
        times.push_back(row[0]);
        Vector v(static_cast<Eigen::Index>(row.size() - 1));
        for (size_t c = 1; c < row.size(); ++c) v(static_cast<Eigen::Index>(c - 1)) = row[c];
        s.values.push_back(std::move(v));
    }
    if (times.size() >= 2) s.dt = times[1] - times[0];
    return s;
}

}  // namespace lsmr
