#include "viscorod/kernels.hpp"

#include <cmath>
#include <vector>

#include "viscorod/parallel.hpp"

namespace viscorod {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Gauss 7 / Kronrod 15 pair on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <typename F>
void gk15(const F& fn, double a, double b, double& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f_mid = fn(mid);
    double k = kWgk[7] * f_mid;
    double g = kWg[3] * f_mid;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kXgk[i];
        const double pair = fn(mid + dx) + fn(mid - dx);
        k += kWgk[i] * pair;
        if (i % 2 == 1) g += kWg[i / 2] * pair;
    }
    value = k * half;
    error = std::abs((k - g) * half);
}

// Adaptive Gauss-Kronrod on [a, b] to absolute tolerance tol: worst-first
// global refinement, which digests the q^alpha endpoint behaviour of the
// integrand without demanding per-interval accuracy near the cusp.
template <typename F>
double adaptive_gk(const F& fn, double a, double b, double tol) {
    struct Interval {
        double a, b, value, error;
    };
    constexpr std::size_t kMaxIntervals = 4096;

    std::vector<Interval> ivs;
    ivs.reserve(128);
    double value = 0.0, error = 0.0;
    gk15(fn, a, b, value, error);
    ivs.push_back({a, b, value, error});
    double total_error = error;

    while (total_error > tol) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < ivs.size(); ++i) {
            if (ivs[i].error > ivs[worst].error) worst = i;
        }
        const Interval iv = ivs[worst];
        const double mid = 0.5 * (iv.a + iv.b);
        if (ivs.size() >= kMaxIntervals || !(iv.a < mid && mid < iv.b)) {
            throw QuadratureFailure("panel refinement exhausted before reaching tolerance");
        }
        Interval left{iv.a, mid, 0.0, 0.0};
        Interval right{mid, iv.b, 0.0, 0.0};
        gk15(fn, left.a, left.b, left.value, left.error);
        gk15(fn, right.a, right.b, right.value, right.error);
        total_error += left.error + right.error - iv.error;
        ivs[worst] = left;
        ivs.push_back(right);
    }
    double sum = 0.0;
    for (const Interval& iv : ivs) sum += iv.value;
    return sum;
}

}  // namespace

KernelEvaluator::KernelEvaluator(MaterialModel model, PoleCertificate cert, QuadratureConfig quad)
    : model_(std::move(model)), cert_(cert), quad_(quad) {
    if (!(quad_.rel_tol > 0.0) || !(quad_.abs_tol > 0.0)) {
        throw std::invalid_argument("quadrature tolerances must be positive");
    }
    if (quad_.max_panels < 8) throw std::invalid_argument("max_panels must be >= 8");
    if (!(quad_.truncation_factor > 0.0)) {
        throw std::invalid_argument("truncation factor must be positive");
    }
    // Certificate/model pairing check: the certified zero must be a zero of
    // this model's f.
    const double residual = std::abs(f_eval(model_, cert_.s0));
    if (!(residual <= 1e-10 * (1.0 + std::norm(cert_.s0)))) {
        throw CertificationFailed("certificate does not match the model");
    }
    const double cinf = model_.c_inf();
    // Envelope bound on |integrand|: 10 * (1 + 1/c_inf^2); the constant 10 is
    // a conservative cover for the transfer magnitude on the cut.
    envelope_ = 10.0 * (1.0 + 1.0 / (cinf * cinf));

    cut_vanishes_ = false;
    if (cert_.marginal) {
        double worst = 0.0;
        for (double q : {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2}) {
            worst = std::max(worst, std::abs(branch_cut_integrand(q, Kernel::P)));
            worst = std::max(worst, std::abs(branch_cut_integrand(q, Kernel::Q)));
        }
        cut_vanishes_ = worst < 1e-13;
    }
}

KernelEvaluator KernelEvaluator::create(MaterialModel model, QuadratureConfig quad) {
    PoleCertificate cert = locate_pole(model);
    return KernelEvaluator(std::move(model), cert, quad);
}

double KernelEvaluator::branch_cut_integrand(double q, Kernel which) const {
    if (!(q > 0.0)) throw DomainError("branch-cut integrand requires q > 0");
    const PolarPoint p = PolarPoint::lower_cut_edge(q);
    const Complex m = modulus_M(model_, p);
    const Complex w = q * m;  // q M(q e^{-i pi}) per the lower-edge formula
    const Complex f = 1.0 + w * w;
    const Complex value = (which == Kernel::P) ? m * m / f : 1.0 / f;
    return value.imag();
}

double KernelEvaluator::cut_integral(double t, Kernel which) const {
    const auto fn = [&](double q) {
        return q > 0.0 ? branch_cut_integrand(q, which) * std::exp(-q * t) : 0.0;
    };
    const double q_cap = quad_.truncation_factor / t;
    double acc = 0.0;
    double lo = 0.0;
    double hi = 1.0;
    for (int panel = 0; panel < quad_.max_panels; ++panel) {
        const double tol = 0.25 * (quad_.abs_tol + quad_.rel_tol * std::abs(acc));
        acc += adaptive_gk(fn, lo, hi, tol);
        const double tail = envelope_ * std::exp(-hi * t) / t;
        if (tail < quad_.abs_tol + quad_.rel_tol * std::abs(acc)) return acc;
        if (hi >= q_cap) return acc;
        lo = hi;
        hi *= 2.0;
    }
    throw QuadratureFailure("panel budget exhausted before the truncation criterion");
}

double KernelEvaluator::kernel_value(double t, Kernel which) const {
    if (t < 0.0 || !std::isfinite(t)) throw DomainError("kernel time must be >= 0");
    if (t == 0.0) return 0.0;

    const Complex residue = (which == Kernel::P) ? cert_.residue_P : cert_.residue_Q;
    const double pole_part = 2.0 * (residue * std::exp(cert_.s0 * t)).real();
    if (cut_vanishes_) return pole_part;
    return cut_integral(t, which) / kPi + pole_part;
}

KernelTable KernelEvaluator::kernel_table(std::span<const double> times) const {
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (!(times[i] >= 0.0) || !std::isfinite(times[i])) {
            throw DomainError("kernel grid points must be finite and >= 0");
        }
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw DomainError("kernel grid must be strictly increasing");
        }
    }
    KernelTable table;
    table.t.assign(times.begin(), times.end());
    table.P.resize(times.size());
    table.Q.resize(times.size());
    parallel_for(times.size(), [&](std::size_t i) {
        table.P[i] = kernel_value(times[i], Kernel::P);
        table.Q[i] = kernel_value(times[i], Kernel::Q);
    });
    return table;
}

}  // namespace viscorod
