#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace arblab {

// Uniform sample grid: times are start + k*step for k in [0, count).
struct TimeGrid {
    double start = 0.0;
    double step = 1e-3;
    std::int64_t count = 2;

    TimeGrid() = default;
    TimeGrid(double start, double step, std::int64_t count);

    double time(std::int64_t k) const { return start + static_cast<double>(k) * step; }
    double end() const { return time(count - 1); }

    bool operator==(const TimeGrid&) const = default;
};

// Behaviour of a signal outside its grid.
enum class Extension {
    ZeroOutside,  // pulses: vanish outside a finite interval
    HoldEnds,     // latch trajectories: hold the resolved value
};

// Real-valued function of time on a uniform grid; the computational
// stand-in for a continuous signal.
class SampledSignal {
public:
    SampledSignal(TimeGrid grid, std::vector<double> values, Extension ext);

    static SampledSignal zeros(TimeGrid grid, Extension ext = Extension::ZeroOutside);

    const TimeGrid& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }
    Extension extension() const { return ext_; }

    // Sample at grid index k; indices outside [0, count) follow the
    // extension rule.
    double sample(std::int64_t k) const;

    // Evaluate at an arbitrary time: exact at grid points, linear
    // interpolation between them, extension rule outside the grid.
    double value_at(double t) const;

private:
    TimeGrid grid_;
    std::vector<double> values_;
    Extension ext_;
};

// Index range of the grid-phase-aligned ticks t_k with 0 <= t_k <= r.
// Ticks outside [0, count) are evaluated through the extension rule.
struct TickRange {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
};
TickRange window_ticks(const TimeGrid& grid, double r);

// Distance on the value set: |x - y|.
double point_distance(double x, double y);

// Sup distance over the window [0, r], taken over grid ticks.
// Monotone nondecreasing in r. Signals must share a grid.
double window_distance(const SampledSignal& f, const SampledSignal& g, double r);

// Weighted series sum_{r=1..R} 2^-r * d^r/(1 + d^r); metrizes uniform
// convergence on bounded windows. Value in [0, 1); truncation error
// against the infinite series is at most 2^-R.
double compact_open_distance(const SampledSignal& f, const SampledSignal& g, int R);

struct ConvergenceReport {
    std::vector<std::pair<int, double>> distances;  // (n, d* value)
    bool passed = false;
    double tolerance = 0.0;
    int threshold_index = 0;
};

// Evaluates d*(f_n, limit) for n in [n_min, n_max]. Passes iff every
// distance is within tolerance and the final distance does not exceed
// the first (no divergence).
ConvergenceReport verify_convergence(const std::function<SampledSignal(int)>& sequence,
                                     const SampledSignal& limit, double tolerance, int n_min,
                                     int n_max, int R);

// Tent of height 1: ramps 0 -> 1 on [0, 1/n], back to 0 on [1/n, 2/n],
// zero elsewhere. The grid step is a unit fraction 1/D with n | D, so
// the peak sample is exactly 1 and sits exactly at t = 1/n.
SampledSignal tent_function(int n);
SampledSignal tent_function(int n, std::int64_t denominator, std::int64_t count);

// Samples of t -> e^(t - n) on the given grid.
SampledSignal exp_function(int n, const TimeGrid& grid);

// Grid with step 1e-3 from 0 covering [0, horizon].
TimeGrid default_metric_grid(double horizon);

}  // namespace arblab
