#include "viscorod/admissibility.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace viscorod {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kRealityTol = 1e-8;
constexpr double kThermoTol = -1e-12;  // absorbs round-off at the elastic boundary a = b
constexpr double kRayImagFraction = 0.05;
// Slowest admissible family (zener with alpha = 0.1) drifts ~6% between the
// 1e6 and 1e8 probes; a divergent modulus like sqrt(s) drifts ~90%.
constexpr double kLimitDriftFraction = 0.15;

void fmt_value(std::ostream& os, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

}  // namespace

std::string AdmissibilityReport::to_text() const {
    std::ostringstream os;
    os << "admissibility: " << (admissible() ? "PASS" : "FAIL") << "\n";
    os << "  reality (Im M = 0 on the real half-line): " << (reality_ok ? "ok" : "VIOLATED")
       << "\n";
    os << "  thermodynamics (E', E'' >= 0):            " << (thermo_ok ? "ok" : "VIOLATED")
       << "\n";
    os << "  asymptotics (finite c0, c_inf):           " << (asymptotics_ok ? "ok" : "VIOLATED")
       << "\n";
    os << "  c0 = " << c0 << ", c_inf = " << c_inf << "\n";
    for (const Violation& v : violations) {
        os << "  violation: check=" << v.check << " probe=" << v.probe << " value=" << v.value
           << " (" << v.detail << ")\n";
    }
    return os.str();
}

std::string AdmissibilityReport::to_key_values() const {
    std::ostringstream os;
    os << "reality_ok=" << (reality_ok ? 1 : 0) << "\n";
    os << "thermo_ok=" << (thermo_ok ? 1 : 0) << "\n";
    os << "asymptotics_ok=" << (asymptotics_ok ? 1 : 0) << "\n";
    os << "admissible=" << (admissible() ? 1 : 0) << "\n";
    os << "c0=";
    fmt_value(os, c0);
    os << "\nc_inf=";
    fmt_value(os, c_inf);
    os << "\n";
    for (const Violation& v : violations) {
        os << "violation=" << v.check << " probe=";
        fmt_value(os, v.probe);
        os << " value=";
        fmt_value(os, v.value);
        os << " detail=" << v.detail << "\n";
    }
    return os.str();
}

GridSpec default_reality_grid(const MaterialModel& model) {
    const double lo = model.x0() > 0.0 ? model.x0() * (1.0 + 1e-12) : 1e-6;
    return {lo, 1e6, 200};
}

GridSpec default_thermo_grid() { return {1e-4, 1e4, 400}; }

AdmissibilityReport check_reality(const MaterialModel& model, const GridSpec& grid) {
    AdmissibilityReport report;
    report.reality_ok = true;
    for (double x : log_grid(grid)) {
        const Complex m = modulus_M(model, PolarPoint::polar(x, 0.0));
        if (!(std::abs(m.imag()) <= kRealityTol * (1.0 + std::abs(m)))) {
            report.reality_ok = false;
            report.violations.push_back({"reality", x, m.imag(), "Im M nonzero on real axis"});
            break;
        }
    }
    return report;
}

AdmissibilityReport check_reality(const MaterialModel& model) {
    return check_reality(model, default_reality_grid(model));
}

AdmissibilityReport check_thermodynamics(const MaterialModel& model, const GridSpec& grid) {
    AdmissibilityReport report;
    report.thermo_ok = true;
    for (double omega : log_grid(grid)) {
        const auto [storage, loss] = complex_modulus_E(model, omega);
        if (storage < kThermoTol) {
            report.thermo_ok = false;
            report.violations.push_back({"thermodynamics", omega, storage, "storage modulus E' < 0"});
            break;
        }
        if (loss < kThermoTol) {
            report.thermo_ok = false;
            report.violations.push_back({"thermodynamics", omega, loss, "loss modulus E'' < 0"});
            break;
        }
    }
    return report;
}

AdmissibilityReport check_thermodynamics(const MaterialModel& model) {
    return check_thermodynamics(model, default_thermo_grid());
}

AdmissibilityReport check_asymptotics(const MaterialModel& model) {
    AdmissibilityReport report;
    report.asymptotics_ok = true;

    try {
        const Asymptotics a = estimate_asymptotics(model);
        report.c0 = a.c0;
        report.c_inf = a.c_inf;
    } catch (const AsymptoticsViolation& e) {
        report.asymptotics_ok = false;
        report.violations.push_back({"asymptotics", 0.0, 0.0, e.what()});
        return report;
    }

    const double angles[] = {kPi / 4.0, kPi / 2.0, 3.0 * kPi / 4.0};

    // Vanishing imaginary part at infinity, checked on rays: small at 1e8 and
    // not growing from 1e6 outward. The 5% scale accommodates the slowly
    // (logarithmically / R^-alpha) converging model families.
    for (double phi : angles) {
        const Complex m_mid = modulus_M(model, PolarPoint::polar(1e6, phi));
        const Complex m_far = modulus_M(model, PolarPoint::polar(1e8, phi));
        if (!std::isfinite(std::abs(m_far)) ||
            std::abs(m_far.imag()) > kRayImagFraction * std::abs(m_far)) {
            report.asymptotics_ok = false;
            report.violations.push_back(
                {"asymptotics", phi, m_far.imag(), "Im M on outer ray not vanishing"});
            break;
        }
        if (std::abs(m_far.imag()) > std::abs(m_mid.imag()) + 1e-12 * std::abs(m_far)) {
            report.asymptotics_ok = false;
            report.violations.push_back(
                {"asymptotics", phi, m_far.imag(), "Im M grows outward along ray"});
            break;
        }
    }
    if (!report.asymptotics_ok) return report;

    // Convergence of the real-axis probes themselves.
    const double m_far = modulus_M(model, PolarPoint::polar(1e8, 0.0)).real();
    const double m_mid = modulus_M(model, PolarPoint::polar(1e6, 0.0)).real();
    if (std::abs(m_far - m_mid) > kLimitDriftFraction * std::abs(m_far)) {
        report.asymptotics_ok = false;
        report.violations.push_back(
            {"asymptotics", 1e8, m_far, "M not settling toward a limit at infinity"});
        return report;
    }
    const double m_zero = modulus_M(model, PolarPoint::polar(1e-8, 0.0)).real();
    const double m_near = modulus_M(model, PolarPoint::polar(1e-6, 0.0)).real();
    if (std::abs(m_zero - m_near) > kLimitDriftFraction * std::max(std::abs(m_zero), 1e-30)) {
        report.asymptotics_ok = false;
        report.violations.push_back(
            {"asymptotics", 1e-8, m_zero, "M not settling toward a limit at zero"});
        return report;
    }

    // Angle independence of the limit near zero.
    for (double phi : angles) {
        const Complex m = modulus_M(model, PolarPoint::polar(1e-8, phi));
        if (std::abs(m - Complex(report.c0, 0.0)) >
            kLimitDriftFraction * (1.0 + std::abs(report.c0))) {
            report.asymptotics_ok = false;
            report.violations.push_back(
                {"asymptotics", phi, std::abs(m), "M near zero differs from c0 across angles"});
            break;
        }
    }
    return report;
}

AdmissibilityReport check_admissibility(const MaterialModel& model) {
    AdmissibilityReport report = check_asymptotics(model);

    const AdmissibilityReport reality = check_reality(model);
    report.reality_ok = reality.reality_ok;
    report.violations.insert(report.violations.end(), reality.violations.begin(),
                             reality.violations.end());

    const AdmissibilityReport thermo = check_thermodynamics(model);
    report.thermo_ok = thermo.thermo_ok;
    report.violations.insert(report.violations.end(), thermo.violations.begin(),
                             thermo.violations.end());
    return report;
}

}  // namespace viscorod
