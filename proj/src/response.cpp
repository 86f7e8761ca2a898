#include "viscorod/response.hpp"

#include <cmath>

namespace viscorod {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kRefine = 4;  // internal grid refinement for Simpson quadrature

// Cumulative Simpson integral of y over a uniform grid of step h; exact
// partial sums are produced at even indices, odd indices get the midpoint
// completion I[j] = I[j-1] + h/12 (5 y[j-1] + 8 y[j] - y[j+1]).
std::vector<double> cumulative_simpson(const std::vector<double>& y, double h) {
    std::vector<double> acc(y.size(), 0.0);
    for (std::size_t j = 2; j < y.size(); j += 2) {
        acc[j] = acc[j - 2] + h / 3.0 * (y[j - 2] + 4.0 * y[j - 1] + y[j]);
    }
    for (std::size_t j = 1; j < y.size(); j += 2) {
        const double corr = (j + 1 < y.size())
                                ? h / 12.0 * (5.0 * y[j - 1] + 8.0 * y[j] - y[j + 1])
                                : h / 2.0 * (y[j - 1] + y[j]);
        acc[j] = acc[j - 1] + corr;
    }
    return acc;
}

std::vector<double> refined_times(const TimeGrid& grid) {
    const std::size_t n = static_cast<std::size_t>(grid.points);
    const double h = grid.step() / kRefine;
    std::vector<double> t(kRefine * (n - 1) + 1);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = h * static_cast<double>(i);
    t.back() = grid.t_end;
    return t;
}

void check_step(const KernelEvaluator& ev, const TimeGrid& grid, double omega) {
    const double rate = std::max(omega, ev.certificate().s0.imag());
    if (rate > 0.0 && grid.step() > kPi / (8.0 * rate)) {
        throw GridTooCoarse("time step too large for the oscillation frequency");
    }
}

}  // namespace

ResponseSeries respond(const KernelEvaluator& evaluator, const Forcing& forcing,
                       const TimeGrid& grid) {
    if (!(grid.t_end > 0.0) || grid.points < 2) {
        throw DomainError("response grid needs t_end > 0 and at least two points");
    }
    const std::size_t n = static_cast<std::size_t>(grid.points);
    const double h = grid.step();

    ResponseSeries series;
    series.t = grid.values();
    series.eps.assign(n, 0.0);
    series.sigma.assign(n, 0.0);

    if (const auto* impulse = std::get_if<Impulse>(&forcing)) {
        check_step(evaluator, grid, 0.0);
        const KernelTable table = evaluator.kernel_table(series.t);
        for (std::size_t k = 0; k < n; ++k) {
            series.eps[k] = impulse->amplitude * table.P[k];
            series.sigma[k] = impulse->amplitude * table.Q[k];
        }
        return series;
    }

    if (const auto* step = std::get_if<Step>(&forcing)) {
        check_step(evaluator, grid, 0.0);
        const KernelTable table = evaluator.kernel_table(refined_times(grid));
        const std::vector<double> ip = cumulative_simpson(table.P, h / kRefine);
        const std::vector<double> iq = cumulative_simpson(table.Q, h / kRefine);
        for (std::size_t k = 0; k < n; ++k) {
            series.eps[k] = step->amplitude * ip[kRefine * k];
            series.sigma[k] = step->amplitude * iq[kRefine * k];
        }
        return series;
    }

    if (const auto* harmonic = std::get_if<Harmonic>(&forcing)) {
        if (!(harmonic->omega >= 0.0)) throw DomainError("harmonic forcing needs omega >= 0");
        check_step(evaluator, grid, harmonic->omega);
        const std::vector<double> tr = refined_times(grid);
        const KernelTable table = evaluator.kernel_table(tr);
        // cos(w(t - tau)) = cos(wt) cos(w tau) + sin(wt) sin(w tau): the
        // convolution splits into two running kernel integrals.
        std::vector<double> pc(tr.size()), ps(tr.size());
        std::vector<double> qc(tr.size()), qs(tr.size());
        for (std::size_t j = 0; j < tr.size(); ++j) {
            const double c = std::cos(harmonic->omega * tr[j]);
            const double s = std::sin(harmonic->omega * tr[j]);
            pc[j] = c * table.P[j];
            ps[j] = s * table.P[j];
            qc[j] = c * table.Q[j];
            qs[j] = s * table.Q[j];
        }
        const double hr = h / kRefine;
        const std::vector<double> ipc = cumulative_simpson(pc, hr);
        const std::vector<double> ips = cumulative_simpson(ps, hr);
        const std::vector<double> iqc = cumulative_simpson(qc, hr);
        const std::vector<double> iqs = cumulative_simpson(qs, hr);
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t j = kRefine * k;
            const double c = std::cos(harmonic->omega * series.t[k]);
            const double s = std::sin(harmonic->omega * series.t[k]);
            series.eps[k] = harmonic->amplitude * (c * ipc[j] + s * ips[j]);
            series.sigma[k] = harmonic->amplitude * (c * iqc[j] + s * iqs[j]);
        }
        return series;
    }

    const auto& sampled = std::get<Sampled>(forcing);
    if (sampled.values.size() < 2) throw DomainError("sampled forcing needs >= 2 points");
    if (!(sampled.dt > 0.0) || std::abs(sampled.dt - h) > 1e-12 * h) {
        throw DomainError("sampled forcing step must match the response grid step");
    }
    check_step(evaluator, grid, 0.0);
    const KernelTable table = evaluator.kernel_table(series.t);
    const auto force_at = [&](std::size_t j) {
        return j < sampled.values.size() ? sampled.values[j] : 0.0;
    };
    for (std::size_t k = 1; k < n; ++k) {
        double sum_p = 0.5 * (force_at(0) * table.P[k] + force_at(k) * table.P[0]);
        double sum_q = 0.5 * (force_at(0) * table.Q[k] + force_at(k) * table.Q[0]);
        for (std::size_t j = 1; j < k; ++j) {
            sum_p += force_at(j) * table.P[k - j];
            sum_q += force_at(j) * table.Q[k - j];
        }
        series.eps[k] = h * sum_p;
        series.sigma[k] = h * sum_q;
    }
    return series;
}

std::vector<double> ResponseSeries::displacement(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("cross-section x must lie in [0, 1]");
    x_section = x;
    std::vector<double> u(eps.size());
    for (std::size_t i = 0; i < eps.size(); ++i) u[i] = x * eps[i];
    return u;
}

std::pair<double, double> elastic_closed_form(double F0, double omega, double t) {
    if (!(omega >= 0.0)) throw DomainError("elastic closed form needs omega >= 0");
    if (std::abs(omega - 1.0) < 1e-9) {
        throw ResonanceCase("omega = 1 is the resonance case");
    }
    const double value = 2.0 * F0 / (omega * omega - 1.0) * std::sin(0.5 * (omega + 1.0) * t) *
                         std::sin(0.5 * (omega - 1.0) * t);
    return {value, value};
}

std::pair<double, double> resonance_closed_form(double t) {
    const double value = 0.5 * t * std::sin(t);
    return {value, value};
}

}  // namespace viscorod
