#pragma once

#include <cstdint>

namespace isa {

/// Uniform time grid t_m = t0 + m*dt. Signals are treated as periodic on the
/// grid (period n*dt); one sample must fall within dt/2 of t = 0, which serves
/// as the phase-reference anchor for triplets and demodulation.
struct TimeGrid {
    int    n  = 0;
    double dt = 0.0;
    double t0 = 0.0;

    double t(int m) const { return t0 + m * dt; }
    double span() const { return n * dt; }

    /// Index of the sample nearest t = 0.
    int zero_index() const;

    bool operator==(const TimeGrid&) const = default;
};

/// Uniform frequency grid with bin centers w_k = w0 + k*dw (rad/s).
struct FreqGrid {
    int    n_w = 0;
    double dw  = 0.0;
    double w0  = 0.0;

    double w(int k) const { return w0 + k * dw; }
    double band_lo() const { return w0; }
    double band_hi() const { return w0 + n_w * dw; }

    bool operator==(const FreqGrid&) const = default;
};

/// Validates n >= 8, dt > 0, anchor-sample existence. Does not require a
/// power-of-two count (brute-force oracles and file import accept any n).
TimeGrid make_time_grid(int n, double dt, double t0);

/// Grid for the fast-transform paths: make_time_grid plus power-of-two n.
TimeGrid build_time_grid(int n, double dt, double t0);

/// Canonical centered band of a time grid: n_w = n, dw = 2*pi/(n*dt),
/// w0 = -pi/dt, covering [-pi/dt, pi/dt).
FreqGrid freq_grid_of(const TimeGrid& g);

bool is_power_of_two(int n);

} // namespace isa
