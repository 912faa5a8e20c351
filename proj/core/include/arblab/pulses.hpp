#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arblab/funcspace.hpp"

namespace arblab {

// Raised-cosine pulse shape: p0(t) = A*(1-cos(2*pi*t/w))/2 on [0, w],
// zero elsewhere. Continuous with vanishing slope at both edges, peak A
// at w/2.
struct PulseShape {
    double amplitude = 1.0;
    double width = 0.1;

    PulseShape() = default;
    PulseShape(double amplitude, double width);

    // Continuous evaluation of the canonical pulse p0.
    double value(double t) const;
};

// Arrival-time pair (t_a, t_b), both strictly inside (0, 1).
struct InputPair {
    double t_a = 0.0;
    double t_b = 0.0;

    InputPair() = default;
    InputPair(double t_a, double t_b);
};

// One of +p_s, -p_s, or the identically zero signal.
struct SignedPulse {
    int sign = 0;        // +1, -1, or 0 for the zero signal
    double start = 0.0;  // ignored when sign == 0
};

// Samples of p_s(t) = p0(t - start) on the grid, ZeroOutside extension.
// Start times that land on a grid tick are snapped to it, which makes
// the shift identity p_{s+eps}(t) = p_s(t-eps) bit-exact for
// grid-multiple eps.
SampledSignal pulse_signal(const PulseShape& shape, double start, const TimeGrid& grid);

SampledSignal signal_of(const SignedPulse& pulse, const PulseShape& shape, const TimeGrid& grid);

// Component signals for wires a and b.
std::pair<SampledSignal, SampledSignal> input_signals(const InputPair& pair,
                                                      const PulseShape& shape,
                                                      const TimeGrid& grid);

// Straight-line path between arrival-time pairs: both components
// interpolate linearly, endpoints reproduced exactly.
InputPair input_path_point(const InputPair& i0, const InputPair& i1, double lambda);

// Path joining p_1 to -p_1 through the zero signal: pulses escape to
// larger and larger start times on the way out and return with the
// opposite sign. Start times beyond the grid horizon yield the zero
// signal (identical samples, no overflow).
SampledSignal u_infty_path_point(double lambda, const PulseShape& shape, const TimeGrid& grid);

struct SignalFamily {
    std::vector<SignedPulse> members;
    std::vector<SampledSignal> signals;
    // Largest d* gap between consecutive chain neighbours (within each
    // sign block for a finite family; across the whole chain when the
    // escape path is included).
    double net_resolution = 0.0;
};

// Finite radius: +-p_s at `count` start times evenly spaced in (0, r].
// No radius (the unbounded family): the radius-1 net augmented with
// escape-path samples and, if requested, the zero signal, ordered as a
// single chain from +p family through zero to the -p family.
SignalFamily sample_family(std::optional<double> radius, int count, bool include_zero,
                           const PulseShape& shape, const TimeGrid& grid, int R = 20,
                           int path_samples = 128);

}  // namespace arblab
