#pragma once

/**
 * @file oracle.hpp
 * @brief Independent numerical inverse-Laplace references (fixed Talbot and
 *        de Hoog) used to cross-validate the kernel evaluation. No code is
 *        shared with the branch-cut/residue path.
 */

#include <functional>

#include "viscorod/models.hpp"

namespace viscorod {

enum class InversionMethod { fixed_talbot, de_hoog };

struct InversionConfig {
    InversionMethod method = InversionMethod::de_hoog;
    int node_count = 48;   // transform evaluations per time point
    double scaling = 1.2;  // contour parameter (de Hoog period T = scaling * t)
};

using TransferFn = std::function<Complex(Complex)>;

/// Approximate inverse transform of `transfer` at t > 0. The transfer must be
/// analytic right of the imaginary axis and decay like O(1/|s|^2).
/// Throws MethodBreakdown on overflow/underflow or when a Talbot node leaves
/// |arg s| < pi - 1e-3.
double invert_reference(const TransferFn& transfer, double t, const InversionConfig& cfg = {});

}  // namespace viscorod
