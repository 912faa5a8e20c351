#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arblab/arbiter.hpp"
#include "arblab/funcspace.hpp"
#include "arblab/pulses.hpp"

namespace arblab {

// Connectivity of a finite signal net under delta-chaining: two signals
// share a component iff they are joined by a chain of pairwise d*
// steps each at most delta.
struct ConnectivityReport {
    int component_count = 0;
    std::vector<int> component_labels;  // one per input signal, 0-based
    double delta = 0.0;
    std::optional<double> min_cross_distance;  // smallest d* between two named subsets
};

ConnectivityReport epsilon_components(std::span<const SampledSignal> signals, double delta,
                                      int R);

// Smallest d* over all cross pairs; a positive value certifies
// separation of the two sets at that scale.
double min_cross_distance(std::span<const SampledSignal> a, std::span<const SampledSignal> b,
                          int R);

// Largest d* between consecutive entries; the resolution of a sampled
// chain.
double max_consecutive_distance(std::span<const SampledSignal> signals, int R);

// Maps every path point through the device and reports the component
// structure of the image net. When no delta is given, the observed
// largest consecutive gap is used as the chaining threshold.
// Path endpoints must decide with opposite signs.
struct ImageChainReport {
    ConnectivityReport components;
    double chain_delta = 0.0;           // threshold actually used
    double max_consecutive_gap = 0.0;
    std::vector<std::optional<Decision>> decisions;
    std::vector<SampledSignal> outputs;
};

ImageChainReport image_chain_check(std::span<const InputPair> path, const PulseShape& shape,
                                   const ArbiterParams& params, std::optional<double> delta,
                                   int R);

// Outputs that decide no later than time_limit, split by decision sign.
std::pair<std::vector<SampledSignal>, std::vector<SampledSignal>> split_early_deciders(
    std::span<const SampledSignal> outputs,
    std::span<const std::optional<Decision>> decisions, double time_limit);

struct SearchStep {
    int iteration = 0;
    double lo = 0.0;
    double hi = 0.0;
    double mid = 0.0;
    std::optional<Decision> decision;
};

struct GlitchSearchResult {
    double skew = 0.0;                    // best skew found
    std::optional<double> achieved_time;  // absent: undecided within the horizon
    int iterations = 0;
    std::pair<double, double> bracket;    // final bracket
    bool target_met = false;
    std::vector<SearchStep> steps;
};

// Bisects on skew inside a sign-flipping bracket, retaining opposite
// decision signs at the endpoints. Each halving lands closer to the
// balance point and buys roughly tau*ln(2) of extra decision time; an
// undecided midpoint satisfies any target outright. Stops when the
// bracket half-width falls below the floating-point skew resolution.
GlitchSearchResult glitch_search(double target, double base_time, double bracket_lo,
                                 double bracket_hi, const PulseShape& shape,
                                 const ArbiterParams& params, int max_iterations);

// Symmetric default bracket (-skew0, +skew0).
GlitchSearchResult glitch_search(double target, double base_time, const PulseShape& shape,
                                 const ArbiterParams& params, int max_iterations,
                                 double skew0 = 0.25);

}  // namespace arblab
