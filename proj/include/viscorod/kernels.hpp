#pragma once

/**
 * @file kernels.hpp
 * @brief Time-domain response kernels P(t) (strain per unit impulse) and
 *        Q(t) (stress per unit impulse), evaluated as a branch-cut integral
 *        over the lower edge of (-inf, 0] plus the contribution of the
 *        certified conjugate pole pair.
 *
 *   P(t) = (1/pi) * integral_0^inf Im(M^2/f)(q e^{-i pi}) e^{-q t} dq
 *          + 2 Re(residue_P * e^{s0 t}),
 *   Q(t) likewise with the integrand Im(1/f) and residue_Q.
 *
 * P(0) = Q(0) = 0, consistent with the O(1/|s|^2) decay of both transfers.
 */

#include <span>
#include <vector>

#include "viscorod/models.hpp"
#include "viscorod/poles.hpp"

namespace viscorod {

struct QuadratureConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
    int max_panels = 200;
    double truncation_factor = 50.0;  // integrate out to q = truncation_factor / t
};

enum class Kernel { P, Q };

struct KernelTable {
    std::vector<double> t;
    std::vector<double> P;
    std::vector<double> Q;
};

class KernelEvaluator {
public:
    /// Binds a certificate to the model it was produced from; the residual
    /// |f(s0)| is re-verified against this model at construction.
    KernelEvaluator(MaterialModel model, PoleCertificate cert, QuadratureConfig quad = {});

    /// Locates and certifies the pole internally.
    static KernelEvaluator create(MaterialModel model, QuadratureConfig quad = {});

    const MaterialModel& model() const { return model_; }
    const PoleCertificate& certificate() const { return cert_; }
    const QuadratureConfig& quadrature() const { return quad_; }

    /// Im of the requested transfer on the lower cut edge at radius q > 0.
    double branch_cut_integrand(double q, Kernel which) const;

    /// Kernel value at t >= 0 (exactly 0 at t = 0).
    double kernel_value(double t, Kernel which) const;

    /// Elementwise kernel values over a strictly increasing grid of
    /// nonnegative times; points are evaluated in parallel.
    KernelTable kernel_table(std::span<const double> times) const;

private:
    double cut_integral(double t, Kernel which) const;

    MaterialModel model_;
    PoleCertificate cert_;
    QuadratureConfig quad_;
    double envelope_;        // bound on |integrand| used for tail truncation
    bool cut_vanishes_;      // marginal certificate with identically-zero integrand
};

}  // namespace viscorod
