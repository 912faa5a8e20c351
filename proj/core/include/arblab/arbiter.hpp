#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "arblab/funcspace.hpp"
#include "arblab/pulses.hpp"

namespace arblab {

// Double-well regenerative latch driven by the difference of the two
// input pulses:
//
//     dx/dt = (x - x^3)/tau + gain * (a(t) - b(t)),   x(0) = 0
//     o(t)  = out_amp * tanh(x(t) / sat)
//
// x = 0 is the metastable point; the wells sit at x = +-1. A pulse on
// wire a first pushes x positive, so the latch reports +1.
struct ArbiterParams {
    double tau = 1.0;        // regeneration time constant
    double gain = 50.0;      // input coupling
    double theta = 0.9;      // decision threshold, fraction of out_amp
    double out_amp = 1.0;    // output amplitude
    double sat = 0.25;       // output saturation scale
    double step = 1e-3;      // integrator step
    double horizon = 40.0;   // observation window

    void validate() const;

    // State-level decision threshold sat * atanh(theta). Must stay
    // below the well at |x| = 1 or the free dynamics can never cross it.
    double state_threshold() const;
};

struct Decision {
    int sign = 0;       // +1 or -1
    double time = 0.0;  // first grid instant with |o| >= theta * out_amp
};

struct Trajectory {
    SampledSignal state;
    SampledSignal output;
    ArbiterParams params;
};

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double time)
        : std::runtime_error(what), time_(time) {}
    double time() const { return time_; }

private:
    double time_;
};

// Classical fixed-step fourth-order integration of the latch equation.
// Deterministic: identical inputs give bit-identical trajectories.
// Pulse forcing is evaluated analytically at the stage times, so
// arrival-time differences far below the grid step still register.
Trajectory integrate(const InputPair& input, const PulseShape& shape,
                     const ArbiterParams& params);

// Unforced latch released from x(0) = x0; used to compare the simulated
// escape from the metastable region against the closed-form law.
Trajectory relax(double x0, const ArbiterParams& params);

// The device map: input pair to output signal.
SampledSignal delta(const InputPair& input, const PulseShape& shape,
                    const ArbiterParams& params);

// First threshold crossing of the output, if any occurs on the grid.
std::optional<Decision> decision_of(const SampledSignal& output, const ArbiterParams& params);

// Escape time of the linearization dx/dt = x/tau from x0 to the state
// threshold: tau * ln(state_threshold / |x0|).
double escape_time_oracle(double x0, const ArbiterParams& params);

struct SkewSample {
    double skew = 0.0;
    std::optional<Decision> decision;
    std::optional<std::string> error;  // per-row failure, sweep continues
};

// One row per skew for inputs (base_time, base_time + skew).
std::vector<SkewSample> decision_time_curve(std::span<const double> skews, double base_time,
                                            const PulseShape& shape,
                                            const ArbiterParams& params);

// Least-squares slope and intercept of decision time against
// ln(1/|skew|) over the decided rows. The slope recovers tau.
struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    int points = 0;
};
SlopeFit fit_decision_slope(std::span<const SkewSample> rows);

}  // namespace arblab
