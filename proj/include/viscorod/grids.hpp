#pragma once

#include <vector>

namespace viscorod {

/// Descriptor of a log-spaced probe grid on [lo, hi], endpoints included.
struct GridSpec {
    double lo;
    double hi;
    int points;
};

/// Log-spaced points, lo and hi included. Requires 0 < lo < hi, points >= 2.
/// Doubling: {lo, hi, 2n-1} contains every point of {lo, hi, n}.
std::vector<double> log_grid(const GridSpec& spec);

/// Uniform time grid 0, h, 2h, ..., t_end with n points.
struct TimeGrid {
    double t_end;
    int points;

    double step() const { return t_end / (points - 1); }
    std::vector<double> values() const;
};

}  // namespace viscorod
