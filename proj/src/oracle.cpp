#include "viscorod/oracle.hpp"

#include <cmath>
#include <vector>

namespace viscorod {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fixed-Talbot rule: nodes on s(theta) = r theta (cot theta + i) with
// r = 2 M / (5 t), theta_k = k pi / M.
double invert_talbot(const TransferFn& transfer, double t, int m) {
    const double r = 2.0 * m / (5.0 * t);
    if (!std::isfinite(std::exp(r * t))) {
        throw MethodBreakdown("Talbot scaling overflows exp(r t)");
    }
    double sum = 0.5 * transfer(Complex(r, 0.0)).real() * std::exp(r * t);
    for (int k = 1; k < m; ++k) {
        const double theta = k * kPi / m;
        const double cot = std::cos(theta) / std::sin(theta);
        const Complex s(r * theta * cot, r * theta);
        if (std::abs(std::arg(s)) >= kPi - 1e-3) {
            throw MethodBreakdown("Talbot node too close to the branch cut");
        }
        const double sigma = theta + (theta * cot - 1.0) * cot;
        sum += (std::exp(s * t) * transfer(s) * Complex(1.0, sigma)).real();
    }
    const double value = r / m * sum;
    if (!std::isfinite(value)) throw MethodBreakdown("Talbot sum not finite");
    return value;
}

// de Hoog-Knight-Stokes: Fourier-series inversion accelerated by the
// quotient-difference continued fraction, with the remainder-improved last
// convergent. The tableau cancels heavily, so it runs in long double.
double invert_de_hoog(const TransferFn& transfer, double t, int node_count, double scaling) {
    using CL = std::complex<long double>;
    const int m = std::max(node_count / 2, 8);
    const int n = 2 * m + 1;
    const double period = scaling * t;
    const double tol = 1e-10;
    const double gamma = -std::log(tol) / (2.0 * period);

    const auto idx = [](int i) { return static_cast<std::size_t>(i); };
    std::vector<CL> a(idx(n));
    for (int j = 0; j < n; ++j) {
        const Complex value = transfer(Complex(gamma, j * kPi / period));
        a[idx(j)] = CL(value.real(), value.imag());
    }
    a[0] *= 0.5L;

    // Quotient-difference tableau.
    std::vector<std::vector<CL>> e(idx(m + 1), std::vector<CL>(idx(n), 0.0L));
    std::vector<std::vector<CL>> q(idx(m + 1), std::vector<CL>(idx(n), 0.0L));
    for (int j = 0; j < n - 1; ++j) {
        if (std::abs(a[idx(j)]) == 0.0L) throw MethodBreakdown("zero term in the QD tableau");
        q[1][idx(j)] = a[idx(j + 1)] / a[idx(j)];
    }
    for (int r = 1; r <= m; ++r) {
        for (int j = 0; j <= 2 * (m - r); ++j) {
            e[idx(r)][idx(j)] = q[idx(r)][idx(j + 1)] - q[idx(r)][idx(j)] + e[idx(r - 1)][idx(j + 1)];
        }
        if (r < m) {
            for (int j = 0; j <= 2 * (m - r) - 1; ++j) {
                if (std::abs(e[idx(r)][idx(j)]) == 0.0L) {
                    throw MethodBreakdown("zero term in the QD tableau");
                }
                q[idx(r + 1)][idx(j)] =
                    q[idx(r)][idx(j + 1)] * e[idx(r)][idx(j + 1)] / e[idx(r)][idx(j)];
            }
        }
    }
    std::vector<CL> d(idx(n));
    d[0] = a[0];
    for (int r = 1; r <= m; ++r) {
        d[idx(2 * r - 1)] = -q[idx(r)][0];
        d[idx(2 * r)] = -e[idx(r)][0];
    }

    // Continued-fraction convergents at z = exp(i pi t / period).
    const CL z = std::exp(CL(0.0L, static_cast<long double>(kPi * t / period)));
    CL a_prev2 = 0.0L, b_prev2 = 1.0L;
    CL a_prev = d[0], b_prev = 1.0L;
    for (int k = 1; k < n - 1; ++k) {
        const CL ak = a_prev + d[idx(k)] * z * a_prev2;
        const CL bk = b_prev + d[idx(k)] * z * b_prev2;
        a_prev2 = a_prev;
        b_prev2 = b_prev;
        a_prev = ak;
        b_prev = bk;
    }
    const CL d_last = d[idx(n - 1)];
    const CL h = 0.5L * (1.0L + z * (d[idx(n - 2)] - d_last));
    const CL rem = -h * (1.0L - std::sqrt(1.0L + z * d_last / (h * h)));
    const CL a_fin = a_prev + rem * a_prev2;
    const CL b_fin = b_prev + rem * b_prev2;
    if (std::abs(b_fin) == 0.0L) throw MethodBreakdown("continued fraction denominator vanished");

    const double value = static_cast<double>(
        std::exp(static_cast<long double>(gamma * t)) / static_cast<long double>(period) *
        (a_fin / b_fin).real());
    if (!std::isfinite(value)) throw MethodBreakdown("de Hoog sum not finite");
    return value;
}

}  // namespace

double invert_reference(const TransferFn& transfer, double t, const InversionConfig& cfg) {
    if (!(t > 0.0)) throw DomainError("inverse transform requires t > 0");
    if (cfg.node_count < 16) throw std::invalid_argument("node_count must be >= 16");
    if (!(cfg.scaling > 0.0)) throw std::invalid_argument("scaling must be positive");
    switch (cfg.method) {
        case InversionMethod::fixed_talbot:
            return invert_talbot(transfer, t, cfg.node_count);
        case InversionMethod::de_hoog:
            return invert_de_hoog(transfer, t, cfg.node_count, cfg.scaling);
    }
    throw std::invalid_argument("unknown inversion method");
}

}  // namespace viscorod
