#include "viscorod/models.hpp"

#include <cmath>
#include <limits>

namespace viscorod {

namespace {

constexpr double kPi = 3.14159265358979323846;

// |f| floor below which transfer evaluation is treated as a pole hit.
constexpr double kPoleFloor = 1e-12;

// Switch to the series of (x-1)/log(x) once |x-1| drops below these radii;
// inside, the result is insensitive to the rounding of x-1, outside, the
// direct formula's log carries at most ~eps/radius relative error. Both
// paths stay below ~2e-14 relative at the crossover.
constexpr double kRatioSeriesRadius = 1e-2;
constexpr double kRatioDerivSeriesRadius = 3e-2;

bool on_cut(Complex s) { return s.imag() == 0.0 && s.real() <= 0.0; }

// (x-1)/log(x) with the removable singularity at x = 1 filled by its
// expansion in u = x-1 (Gregory coefficients):
// 1 + u/2 - u^2/12 + u^3/24 - 19u^4/720 + 3u^5/160 - 863u^6/60480
//   + 275u^7/24192 - 33953u^8/3628800 + O(u^9).
Complex one_ratio(Complex x, Complex log_x) {
    const Complex u = x - 1.0;
    if (std::abs(u) < kRatioSeriesRadius) {
        return 1.0 +
               u * (1.0 / 2.0 +
                    u * (-1.0 / 12.0 +
                         u * (1.0 / 24.0 +
                              u * (-19.0 / 720.0 +
                                   u * (3.0 / 160.0 +
                                        u * (-863.0 / 60480.0 +
                                             u * (275.0 / 24192.0 +
                                                  u * (-33953.0 / 3628800.0))))))));
    }
    return u / log_x;
}

// d/dx of (x-1)/log(x); termwise derivative of the series above.
Complex one_ratio_derivative(Complex x, Complex log_x) {
    const Complex u = x - 1.0;
    if (std::abs(u) < kRatioDerivSeriesRadius) {
        return 1.0 / 2.0 +
               u * (-1.0 / 6.0 +
                    u * (1.0 / 8.0 +
                         u * (-19.0 / 180.0 +
                              u * (3.0 / 32.0 +
                                   u * (-863.0 / 10080.0 +
                                        u * (275.0 / 3456.0 + u * (-33953.0 / 453600.0)))))));
    }
    return 1.0 / log_x - u / (x * log_x * log_x);
}

Complex modulus_from_symbols(const OrderDistribution& sigma, const OrderDistribution& eps,
                             const PolarPoint& p) {
    const Complex den = phi_symbol(eps, p);
    if (std::abs(den) == 0.0) {
        throw SingularModel("strain symbol vanishes at the evaluation point");
    }
    return std::sqrt(phi_symbol(sigma, p) / den);
}

}  // namespace

PolarPoint PolarPoint::from(Complex s) {
    if (on_cut(s)) {
        throw DomainError("point lies on the branch cut (-inf, 0]");
    }
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
        throw DomainError("non-finite evaluation point");
    }
    return {std::log(std::abs(s)), std::arg(s)};
}

PolarPoint PolarPoint::lower_cut_edge(double q) {
    if (!(q > 0.0)) throw DomainError("cut-edge radius must be positive");
    return {std::log(q), -kPi};
}

PolarPoint PolarPoint::upper_cut_edge(double q) {
    if (!(q > 0.0)) throw DomainError("cut-edge radius must be positive");
    return {std::log(q), kPi};
}

PolarPoint PolarPoint::polar(double radius, double theta) {
    if (!(radius > 0.0)) throw DomainError("radius must be positive");
    if (!(theta >= -kPi && theta <= kPi)) throw DomainError("angle outside [-pi, pi]");
    return {std::log(radius), theta};
}

Complex PolarPoint::value() const {
    const double r = std::exp(log_r);
    return {r * std::cos(theta), r * std::sin(theta)};
}

Complex PolarPoint::pow(double g) const { return std::exp(g * log()); }

OrderDistribution::OrderDistribution(std::vector<Atom> atoms, std::vector<Density> densities)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
    if (atoms_.empty() && densities_.empty()) {
        throw std::invalid_argument("order distribution needs at least one term");
    }
    for (const Atom& a : atoms_) {
        if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
            throw std::invalid_argument("atom weight must be positive and finite");
        }
        if (!(a.order >= 0.0 && a.order <= 1.0)) {
            throw std::invalid_argument("atom order must lie in [0, 1]");
        }
    }
    for (const Density& d : densities_) {
        if (!(d.weight > 0.0) || !std::isfinite(d.weight)) {
            throw std::invalid_argument("density weight must be positive and finite");
        }
        if (!(d.base > 0.0) || !std::isfinite(d.base)) {
            throw std::invalid_argument("density base must be positive and finite");
        }
    }
}

Complex phi_symbol(const OrderDistribution& dist, const PolarPoint& p) {
    const Complex log_s = p.log();
    Complex sum = 0.0;
    for (const auto& a : dist.atoms()) {
        if (a.order == 0.0) {
            sum += a.weight;
        } else {
            sum += a.weight * std::exp(a.order * log_s);
        }
    }
    for (const auto& d : dist.densities()) {
        // integral_0^1 (c s)^gamma dgamma = ((c s) - 1) / log(c s)
        const Complex log_cs = std::log(d.base) + log_s;
        const Complex cs = d.base * std::exp(log_s);
        sum += d.weight * one_ratio(cs, log_cs);
    }
    return sum;
}

Complex phi_symbol(const OrderDistribution& dist, Complex s) {
    if (s == 0.0) {
        if (dist.has_densities()) {
            throw DomainError("density symbol undefined at s = 0");
        }
        Complex sum = 0.0;
        for (const auto& a : dist.atoms()) sum += (a.order == 0.0) ? a.weight : 0.0;
        return sum;
    }
    return phi_symbol(dist, PolarPoint::from(s));
}

Complex phi_symbol_derivative(const OrderDistribution& dist, const PolarPoint& p) {
    const Complex log_s = p.log();
    Complex sum = 0.0;
    for (const auto& a : dist.atoms()) {
        if (a.order == 0.0) continue;
        sum += a.weight * a.order * std::exp((a.order - 1.0) * log_s);
    }
    for (const auto& d : dist.densities()) {
        // d/ds of ((c s) - 1)/log(c s) = c * g'(c s) with g(x) = (x-1)/log x.
        const Complex log_cs = std::log(d.base) + log_s;
        const Complex cs = d.base * std::exp(log_s);
        sum += d.weight * d.base * one_ratio_derivative(cs, log_cs);
    }
    return sum;
}

Complex phi_symbol_derivative(const OrderDistribution& dist, Complex s) {
    if (s == 0.0) throw DomainError("symbol derivative undefined at s = 0");
    return phi_symbol_derivative(dist, PolarPoint::from(s));
}

MaterialModel::MaterialModel(OrderDistribution phi_sigma, OrderDistribution phi_eps, double x0)
    : phi_sigma_(std::move(phi_sigma)), phi_eps_(std::move(phi_eps)), x0_(x0) {
    if (!(x0 >= 0.0) || !std::isfinite(x0)) {
        throw std::invalid_argument("reality threshold x0 must be finite and >= 0");
    }
    // Best-effort probes; estimate_asymptotics() validates them on demand.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    try {
        c0_ = modulus_from_symbols(phi_sigma_, phi_eps_, PolarPoint::polar(1e-8, 0.0)).real();
        c_inf_ = modulus_from_symbols(phi_sigma_, phi_eps_, PolarPoint::polar(1e8, 0.0)).real();
    } catch (const Error&) {
        c0_ = nan;
        c_inf_ = nan;
    }
}

MaterialModel MaterialModel::fractional_zener(double a, double b, double alpha) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("zener parameters a, b must be positive");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("zener order alpha must lie in (0, 1)");
    }
    OrderDistribution sigma({{1.0, 0.0}, {a, alpha}}, {});
    OrderDistribution eps({{1.0, 0.0}, {b, alpha}}, {});
    return MaterialModel(std::move(sigma), std::move(eps));
}

MaterialModel MaterialModel::distributed_order(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) {
        throw std::invalid_argument("distributed-order parameters a, b must be positive");
    }
    OrderDistribution sigma({}, {{1.0, a}});
    OrderDistribution eps({}, {{1.0, b}});
    return MaterialModel(std::move(sigma), std::move(eps));
}

Complex modulus_M(const MaterialModel& model, const PolarPoint& p) {
    return modulus_from_symbols(model.phi_sigma(), model.phi_eps(), p);
}

Complex modulus_M(const MaterialModel& model, Complex s) {
    return modulus_M(model, PolarPoint::from(s));
}

Complex modulus_M_derivative(const MaterialModel& model, Complex s) {
    const PolarPoint p = PolarPoint::from(s);
    const Complex ps = phi_symbol(model.phi_sigma(), p);
    const Complex pe = phi_symbol(model.phi_eps(), p);
    if (std::abs(ps) == 0.0 || std::abs(pe) == 0.0) {
        throw SingularModel("symbol vanishes; modulus derivative undefined");
    }
    const Complex m = std::sqrt(ps / pe);
    const Complex dlog = phi_symbol_derivative(model.phi_sigma(), p) / ps -
                         phi_symbol_derivative(model.phi_eps(), p) / pe;
    return 0.5 * m * dlog;
}

std::pair<double, double> complex_modulus_E(const MaterialModel& model, double omega) {
    if (!(omega > 0.0)) throw DomainError("complex modulus requires omega > 0");
    const PolarPoint p = PolarPoint::polar(omega, kPi / 2.0);
    const Complex ps = phi_symbol(model.phi_sigma(), p);
    if (std::abs(ps) == 0.0) {
        throw SingularModel("stress symbol vanishes on the imaginary axis");
    }
    const Complex e = phi_symbol(model.phi_eps(), p) / ps;
    return {e.real(), e.imag()};
}

Complex f_eval(const MaterialModel& model, const PolarPoint& p) {
    const Complex m = modulus_M(model, p);
    const Complex w = p.value() * m;
    return 1.0 + w * w;
}

Complex f_eval(const MaterialModel& model, Complex s) {
    const Complex m = modulus_M(model, s);
    const Complex w = s * m;
    return 1.0 + w * w;
}

Complex f_derivative(const MaterialModel& model, Complex s) {
    const PolarPoint p = PolarPoint::from(s);
    const Complex ps = phi_symbol(model.phi_sigma(), p);
    const Complex pe = phi_symbol(model.phi_eps(), p);
    if (std::abs(pe) == 0.0) throw SingularModel("strain symbol vanishes");
    // f' = (sM)^2 * (2/s + Phi_sigma'/Phi_sigma - Phi_eps'/Phi_eps)
    const Complex w2 = s * s * (ps / pe);
    Complex dlog = 2.0 / s;
    if (std::abs(ps) == 0.0) {
        // (sM)^2 = 0 here and Phi_sigma' stays finite: (sM)^2 * Phi_s'/Phi_s -> s^2 Phi_s'/Phi_e.
        return s * s * phi_symbol_derivative(model.phi_sigma(), p) / pe;
    }
    dlog += phi_symbol_derivative(model.phi_sigma(), p) / ps -
            phi_symbol_derivative(model.phi_eps(), p) / pe;
    return w2 * dlog;
}

Complex transfer_P(const MaterialModel& model, Complex s) {
    const Complex m = modulus_M(model, s);
    const Complex f = 1.0 + (s * m) * (s * m);
    if (std::abs(f) < kPoleFloor) throw PoleHit("transfer evaluated at a pole");
    return m * m / f;
}

Complex transfer_Q(const MaterialModel& model, Complex s) {
    const Complex f = f_eval(model, s);
    if (std::abs(f) < kPoleFloor) throw PoleHit("transfer evaluated at a pole");
    return 1.0 / f;
}

Asymptotics estimate_asymptotics(const MaterialModel& model) {
    const auto probe = [&](double x) {
        const Complex m = modulus_M(model, PolarPoint::polar(x, 0.0));
        if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
            throw AsymptoticsViolation("modulus probe not finite");
        }
        if (std::abs(m.imag()) > 1e-6 * std::abs(m)) {
            throw AsymptoticsViolation("modulus not real on the positive real axis");
        }
        if (!(m.real() > 0.0)) {
            throw AsymptoticsViolation("modulus probe not positive");
        }
        return m.real();
    };
    return {probe(1e-8), probe(1e8)};
}

}  // namespace viscorod
