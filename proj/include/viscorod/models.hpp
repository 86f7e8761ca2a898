#pragma once

/**
 * @file models.hpp
 * @brief Order distributions and the Laplace-domain constitutive quantities
 *        built from them: Phi(s), M(s), E(omega), P~(s), Q~(s), f(s) and
 *        their s-derivatives.
 *
 * All powers, logarithms and square roots use the principal branch with the
 * cut along (-inf, 0]. Points on the lower/upper edge of the cut are
 * addressed explicitly through PolarPoint, never through signed-zero
 * behaviour of a library branch.
 */

#include <complex>
#include <utility>
#include <vector>

#include "viscorod/errors.hpp"

namespace viscorod {

using Complex = std::complex<double>;

/// A point s = exp(log_r) * e^(i*theta) with an explicit angle theta in
/// [-pi, pi]. theta = -pi and theta = +pi address the lower and upper edge
/// of the branch cut, which a plain Complex cannot distinguish.
struct PolarPoint {
    double log_r;
    double theta;

    /// Builds from a complex value off the cut (-inf, 0].
    static PolarPoint from(Complex s);
    /// s = q * e^(-i*pi), the lower edge of the cut at radius q > 0.
    static PolarPoint lower_cut_edge(double q);
    /// s = q * e^(+i*pi), the upper edge of the cut at radius q > 0.
    static PolarPoint upper_cut_edge(double q);
    static PolarPoint polar(double radius, double theta);

    Complex value() const;
    /// log s = log_r + i*theta: the branch selected by theta.
    Complex log() const { return {log_r, theta}; }
    /// s^g = exp(g * (log_r + i*theta)).
    Complex pow(double g) const;
};

/// Constitutive weight phi(gamma) on gamma in [0,1]: Dirac atoms
/// w * delta(gamma - order) plus power-law densities w * base^gamma.
class OrderDistribution {
public:
    struct Atom {
        double weight;
        double order;
    };
    struct Density {
        double weight;
        double base;
    };

    /// Validates: at least one term, weights > 0, orders in [0,1], bases > 0.
    OrderDistribution(std::vector<Atom> atoms, std::vector<Density> densities);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::vector<Density>& densities() const { return densities_; }
    bool has_densities() const { return !densities_.empty(); }

private:
    std::vector<Atom> atoms_;
    std::vector<Density> densities_;
};

/// Phi(s) = sum_k w_k s^(g_k) + sum_j w_j ((c_j s) - 1) / log(c_j s).
Complex phi_symbol(const OrderDistribution& dist, const PolarPoint& p);
Complex phi_symbol(const OrderDistribution& dist, Complex s);

/// dPhi/ds = sum_k w_k g_k s^(g_k - 1)
///         + sum_j w_j [c_j/log(c_j s) - c_j((c_j s) - 1)/((c_j s) log^2(c_j s))].
Complex phi_symbol_derivative(const OrderDistribution& dist, const PolarPoint& p);
Complex phi_symbol_derivative(const OrderDistribution& dist, Complex s);

/// A viscoelastic material: the stress/strain order distributions, the
/// reality threshold x0 (models with x0 > 0 are representable but are
/// rejected by the pole/kernel pipeline), and cached modulus probes
/// c0 ~ M(0+) and c_inf ~ M(+inf) taken on the positive real axis.
class MaterialModel {
public:
    MaterialModel(OrderDistribution phi_sigma, OrderDistribution phi_eps, double x0 = 0.0);

    /// (1 + a D^alpha) sigma = (1 + b D^alpha) eps, atoms at orders 0 and alpha.
    static MaterialModel fractional_zener(double a, double b, double alpha);
    /// Power-law densities a^gamma / b^gamma on both sides.
    static MaterialModel distributed_order(double a, double b);

    const OrderDistribution& phi_sigma() const { return phi_sigma_; }
    const OrderDistribution& phi_eps() const { return phi_eps_; }
    double x0() const { return x0_; }
    /// Probe value of M at 1e-8 on the real axis (validated by estimate_asymptotics).
    double c0() const { return c0_; }
    /// Probe value of Re M at 1e8 on the real axis.
    double c_inf() const { return c_inf_; }

private:
    OrderDistribution phi_sigma_;
    OrderDistribution phi_eps_;
    double x0_;
    double c0_;
    double c_inf_;
};

/// M(s) = sqrt(Phi_sigma(s) / Phi_eps(s)), principal square root.
Complex modulus_M(const MaterialModel& model, const PolarPoint& p);
Complex modulus_M(const MaterialModel& model, Complex s);

/// dM/ds = (M/2) (Phi_sigma'/Phi_sigma - Phi_eps'/Phi_eps).
Complex modulus_M_derivative(const MaterialModel& model, Complex s);

/// Complex modulus E(omega) = Phi_eps(i omega) / Phi_sigma(i omega)
/// decomposed into (storage, loss) parts.
std::pair<double, double> complex_modulus_E(const MaterialModel& model, double omega);

/// f(s) = 1 + (s M(s))^2.
Complex f_eval(const MaterialModel& model, const PolarPoint& p);
Complex f_eval(const MaterialModel& model, Complex s);

/// df/ds = 2 s M (M + s dM/ds), evaluated through the log-derivatives of the
/// symbols so it stays finite wherever f does.
Complex f_derivative(const MaterialModel& model, Complex s);

/// P~(s) = M^2(s) / f(s). Throws PoleHit when |f| is below the pole floor.
Complex transfer_P(const MaterialModel& model, Complex s);
/// Q~(s) = 1 / f(s). Throws PoleHit when |f| is below the pole floor.
Complex transfer_Q(const MaterialModel& model, Complex s);

struct Asymptotics {
    double c0;
    double c_inf;
};

/// Probes M on the positive real axis at 1e-8 and 1e8 and validates that the
/// values are finite, positive and real there (AsymptoticsViolation otherwise).
Asymptotics estimate_asymptotics(const MaterialModel& model);

}  // namespace viscorod
