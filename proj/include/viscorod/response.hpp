#pragma once

/**
 * @file response.hpp
 * @brief Strain/stress time histories for the supported forcings:
 *        eps = F * P and sigma = F * Q (convolution), with the displacement
 *        of the cross-section at x given by u(x, t) = x * eps(t).
 *
 * Impulse forcing is the exact identity eps = F0 P; step forcing integrates
 * the kernels; harmonic forcing is convolved in the time domain so the
 * transient is reproduced. Quadrature-based variants run composite Simpson
 * on the grid refined x4 internally.
 */

#include <optional>
#include <variant>
#include <vector>

#include "viscorod/grids.hpp"
#include "viscorod/kernels.hpp"

namespace viscorod {

struct Impulse {
    double amplitude = 1.0;
};
struct Step {
    double amplitude = 1.0;
};
struct Harmonic {
    double amplitude = 1.0;
    double omega = 1.0;
};
/// Samples of F on the uniform grid k * dt, k = 0..values.size()-1; F = 0
/// beyond the last sample. dt must match the response grid step.
struct Sampled {
    double dt = 0.0;
    std::vector<double> values;
};

using Forcing = std::variant<Impulse, Step, Harmonic, Sampled>;

struct ResponseSeries {
    std::vector<double> t;
    std::vector<double> eps;
    std::vector<double> sigma;
    std::optional<double> x_section;  // scale for u(x, t) = x * eps(t)

    /// Displacement history u(x, t) = x * eps(t) of the cross-section at
    /// x in [0, 1]; records x in x_section.
    std::vector<double> displacement(double x);
};

/// Computes the response on the uniform grid. Throws GridTooCoarse when the
/// step exceeds pi / (8 max(omega, Im s0)).
ResponseSeries respond(const KernelEvaluator& evaluator, const Forcing& forcing,
                       const TimeGrid& grid);

/// Elastic body (M = 1) under F0 cos(omega t):
/// eps = sigma = 2 F0/(omega^2 - 1) sin((omega+1)t/2) sin((omega-1)t/2).
/// Throws ResonanceCase for |omega - 1| < 1e-9.
std::pair<double, double> elastic_closed_form(double F0, double omega, double t);

/// Elastic resonance (omega = 1): eps = sigma = t sin(t) / 2.
std::pair<double, double> resonance_closed_form(double t);

}  // namespace viscorod
