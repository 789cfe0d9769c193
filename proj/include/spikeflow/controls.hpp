#pragma once

#include <vector>

namespace spikeflow {

// Piecewise-constant input signal with sampling period delta (ms).
// Value k is held on [k*delta - phase, (k+1)*delta - phase) intersected with
// t >= 0; evaluation past the last stored value clamps to that value, so a
// finite sequence behaves like its infinite constant extension.
//
// Immutable after construction; shift/concat return new signals.
class PiecewiseConstantControl {
public:
    PiecewiseConstantControl(double delta, std::vector<std::vector<double>> values, double phase = 0.0);

    double delta() const { return delta_; }
    double phase() const { return phase_; }
    int dim() const { return dim_; }
    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<std::vector<double>>& values() const { return values_; }

    // Value at time t >= 0: values[floor((t + phase) / delta)], clamped.
    const std::vector<double>& eval(double t) const;

    // Index of the value active at t >= 0 (after clamping).
    int index_at(double t) const;

    // Time shift by s >= 0: whole periods drop leading values, the remainder
    // accumulates into phase.
    PiecewiseConstantControl shift(double s) const;

    // Splice: result equals *this before s and other (time-shifted by s)
    // from s on. Requires matching delta and dim, zero phases, and s on the
    // switching grid.
    PiecewiseConstantControl concat(const PiecewiseConstantControl& other, double s) const;

private:
    double delta_;
    double phase_;
    int dim_;
    std::vector<std::vector<double>> values_;
};

} // namespace spikeflow
