#pragma once

/**
 * @file poles.hpp
 * @brief Argument-principle certification and location of the conjugate pole
 *        pair of the transfer functions: the zeros of f(s) = 1 + (s M(s))^2.
 *
 * Winding numbers are accumulated by phase unwrapping with adaptive parameter
 * bisection, never by quadrature of f'/f: the output is an integer and the
 * accumulation refines until every step's argument change is below pi/2.
 */

#include <string>

#include "viscorod/models.hpp"

namespace viscorod {

/// Annular half-plane contour. side = left counts zeros with Re s below the
/// vertical boundary, side = right certifies the (upper) right region empty.
/// axis_offset moves the vertical boundary from the imaginary axis to
/// Re s = axis_offset; marginal (elastic-limit) certificates shift it just
/// right of the axis because their zeros sit on the axis itself, and a
/// negative offset (left side only) probes a strictly-left region.
struct ContourSpec {
    enum class Side { left, right };

    Side side;
    double r;  // inner radius
    double R;  // outer radius
    double axis_offset = 0.0;
    int samples_per_arc = 64;

    static ContourSpec left(double r, double R, double axis_offset = 0.0) {
        return {Side::left, r, R, axis_offset, 64};
    }
    static ContourSpec right(double r, double R, double axis_offset = 0.0) {
        return {Side::right, r, R, axis_offset, 64};
    }
};

/// Winding number of f along the contour: Delta arg f / (2 pi) rounded to the
/// nearest integer. Throws ZeroOnContour if |f| falls below the safety floor
/// at any sample, ContourTooCoarse if bisection exceeds depth 40 or the total
/// phase fails to close up to an integer multiple of 2 pi.
int winding_number(const MaterialModel& model, const ContourSpec& contour);

/// Certified dominant pole: the upper zero s0 of f, the winding counts that
/// certify the pair is the full zero set, and the residue data of P~ and Q~.
struct PoleCertificate {
    Complex s0;
    int winding_left = 0;
    int winding_right = 0;
    Complex dfds_at_s0;
    Complex residue_P;  // M^2(s0) / f'(s0)
    Complex residue_Q;  // 1 / f'(s0)
    bool marginal = false;  // |Re s0| < 1e-8: pole on (or at tolerance of) the axis

    std::string to_key_values() const;
};

/// Newton iteration on f from the shifted guess (-0.05 + i)/c0 with the
/// analytic derivative, followed by winding certification at radii
/// r = 1e-4 |s0|, R = 1e4 |s0|. Marginal poles are certified with the
/// vertical boundary shifted just right of the axis. Requires x0 = 0.
PoleCertificate locate_pole(const MaterialModel& model);

}  // namespace viscorod
