#include "viscorod/poles.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace viscorod {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

// |f| floor along contours; a smaller value means a zero is within ~1e-9.
constexpr double kContourFloor = 1e-9;
constexpr int kMaxBisectionDepth = 40;
constexpr int kNewtonBudget = 200;
constexpr double kMarginalRealPart = 1e-8;

// One contour piece: maps u in [0,1] to a PolarPoint.
struct Segment {
    enum class Kind { arc, radial, vertical };

    Kind kind;
    // arc: radius rho, angle from phi0 to phi1 (extended range [0, 2pi]).
    // radial: theta = 0 ray, log-spaced radius x0 -> x1.
    // vertical: Re s = x fixed, y from y0 to y1 (log-spaced in |y| when the
    //           range excludes 0, linear otherwise).
    double a0 = 0.0, a1 = 0.0, fixed = 0.0;
    bool log_spaced = true;

    PolarPoint at(double u) const {
        switch (kind) {
            case Kind::arc: {
                double phi = a0 + (a1 - a0) * u;
                if (phi > kPi) phi -= kTwoPi;  // extended angle -> principal edge value
                return PolarPoint{std::log(fixed), phi};
            }
            case Kind::radial: {
                const double x = a0 * std::pow(a1 / a0, u);
                return PolarPoint{std::log(x), 0.0};
            }
            case Kind::vertical: {
                double y;
                if (log_spaced) {
                    const double mag = std::abs(a0) * std::pow(std::abs(a1 / a0), u);
                    y = a0 < 0.0 || a1 < 0.0 ? -mag : mag;
                } else {
                    y = a0 + (a1 - a0) * u;
                }
                const Complex s(fixed, y);
                return PolarPoint{std::log(std::abs(s)), std::arg(s)};
            }
        }
        return PolarPoint{0.0, 0.0};
    }
};

Segment arc(double rho, double phi0, double phi1) {
    return {Segment::Kind::arc, phi0, phi1, rho, false};
}
Segment radial(double x0, double x1) { return {Segment::Kind::radial, x0, x1, 0.0, true}; }
Segment vertical_log(double x, double y0, double y1) {
    return {Segment::Kind::vertical, y0, y1, x, true};
}
Segment vertical_lin(double x, double y0, double y1) {
    return {Segment::Kind::vertical, y0, y1, x, false};
}

std::vector<Segment> build_contour(const ContourSpec& c) {
    if (!(c.r > 0.0) || !(c.R > c.r)) throw DomainError("contour needs 0 < r < R");
    if (std::abs(c.axis_offset) >= c.R) throw DomainError("contour axis offset out of range");
    const double d = c.axis_offset;
    std::vector<Segment> segs;
    if (c.side == ContourSpec::Side::left) {
        if (d == 0.0) {
            segs.push_back(vertical_log(0.0, c.r, c.R));
            segs.push_back(arc(c.R, kPi / 2.0, 3.0 * kPi / 2.0));
            segs.push_back(vertical_log(0.0, -c.R, -c.r));
            segs.push_back(arc(c.r, 3.0 * kPi / 2.0, kPi / 2.0));
        } else {
            // Boundary of {Re s <= d, |s| <= R}; for d > 0 the disc |s| < r
            // around the branch point is excised by a clockwise rim, for
            // d < 0 the branch point lies outside the region already.
            const double ry = std::sqrt(c.R * c.R - d * d);
            const double y_lin = std::min(c.r, std::abs(d));
            segs.push_back(vertical_log(d, -ry, -y_lin));
            segs.push_back(vertical_lin(d, -y_lin, y_lin));
            segs.push_back(vertical_log(d, y_lin, ry));
            const double theta = std::atan2(ry, d);
            segs.push_back(arc(c.R, theta, kTwoPi - theta));
            if (d > 0.0) segs.push_back(arc(c.r, kTwoPi, 0.0));
        }
    } else {
        if (d < 0.0) throw DomainError("right contour requires axis offset >= 0");
        if (d == 0.0) {
            segs.push_back(radial(c.r, c.R));
            segs.push_back(arc(c.R, 0.0, kPi / 2.0));
            segs.push_back(vertical_log(0.0, c.R, c.r));
            segs.push_back(arc(c.r, kPi / 2.0, 0.0));
        } else {
            const double ry = std::sqrt(c.R * c.R - d * d);
            const double theta = std::atan2(ry, d);
            segs.push_back(radial(d, c.R));
            segs.push_back(arc(c.R, 0.0, theta));
            segs.push_back(vertical_log(d, ry, d));
            segs.push_back(vertical_lin(d, d, 0.0));
        }
    }
    return segs;
}

}  // namespace

int winding_number(const MaterialModel& model, const ContourSpec& contour) {
    const std::vector<Segment> segs = build_contour(contour);
    const int n0 = std::max(contour.samples_per_arc, 8);

    const auto eval = [&](const Segment& seg, double u) {
        const Complex f = f_eval(model, seg.at(u));
        if (!(std::abs(f) >= kContourFloor)) {
            throw ZeroOnContour("|f| fell below the contour floor");
        }
        return f;
    };

    double total = 0.0;
    for (const Segment& seg : segs) {
        struct Piece {
            double u0, u1;
            Complex f0, f1;
            int depth;
        };
        std::vector<Piece> stack;
        Complex f_prev = eval(seg, 0.0);
        for (int i = 1; i <= n0; ++i) {
            const double u = static_cast<double>(i) / n0;
            const Complex f = eval(seg, u);
            stack.push_back({static_cast<double>(i - 1) / n0, u, f_prev, f, 0});
            f_prev = f;
        }
        while (!stack.empty()) {
            const Piece p = stack.back();
            stack.pop_back();
            const double d = std::arg(p.f1 / p.f0);
            if (std::abs(d) < kPi / 2.0) {
                total += d;
                continue;
            }
            if (p.depth >= kMaxBisectionDepth) {
                throw ContourTooCoarse("phase step stayed >= pi/2 at maximum bisection depth");
            }
            const double um = 0.5 * (p.u0 + p.u1);
            const Complex fm = eval(seg, um);
            stack.push_back({p.u0, um, p.f0, fm, p.depth + 1});
            stack.push_back({um, p.u1, fm, p.f1, p.depth + 1});
        }
    }

    const double turns = total / kTwoPi;
    const long nearest = std::lround(turns);
    if (std::abs(turns - static_cast<double>(nearest)) > 0.35) {
        throw ContourTooCoarse("accumulated phase does not close to an integer turn count");
    }
    return static_cast<int>(nearest);
}

std::string PoleCertificate::to_key_values() const {
    const auto line = [](const char* key, double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%s=%.17g\n", key, v);
        return std::string(buf);
    };
    std::string out;
    out += line("s0_re", s0.real());
    out += line("s0_im", s0.imag());
    out += "winding_left=" + std::to_string(winding_left) + "\n";
    out += "winding_right=" + std::to_string(winding_right) + "\n";
    out += "marginal=" + std::string(marginal ? "1" : "0") + "\n";
    out += line("dfds_re", dfds_at_s0.real());
    out += line("dfds_im", dfds_at_s0.imag());
    out += line("residue_p_re", residue_P.real());
    out += line("residue_p_im", residue_P.imag());
    out += line("residue_q_re", residue_Q.real());
    out += line("residue_q_im", residue_Q.imag());
    return out;
}

PoleCertificate locate_pole(const MaterialModel& model) {
    if (model.x0() > 0.0) {
        throw DomainError("pole location requires a model with reality threshold x0 = 0");
    }
    const Asymptotics asym = estimate_asymptotics(model);
    const double cinf2 = asym.c_inf * asym.c_inf;

    Complex s(-0.05 / asym.c0, 1.0 / asym.c0);
    Complex f = 0.0;
    bool converged = false;
    for (int it = 0; it < kNewtonBudget; ++it) {
        if (s.imag() == 0.0 && s.real() <= 0.0) {
            s = Complex(s.real(), 1e-12 * (1.0 + std::abs(s.real())));
        }
        f = f_eval(model, s);
        const double tol = 1e-12 * (1.0 + std::norm(s) * cinf2);
        if (std::abs(f) <= tol) {
            converged = true;
            break;
        }
        const Complex df = f_derivative(model, s);
        if (!std::isfinite(std::abs(df)) || std::abs(df) == 0.0) {
            throw NoConvergence("Newton derivative degenerate");
        }
        Complex step = f / df;
        const double cap = 0.8 * std::abs(s);
        if (std::abs(step) > cap) step *= cap / std::abs(step);
        s -= step;
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw NoConvergence("Newton iterate left the finite plane");
        }
    }
    if (!converged) throw NoConvergence("Newton did not converge within 200 iterations");
    if (s.imag() < 0.0) s = std::conj(s);

    PoleCertificate cert;
    cert.s0 = s;
    cert.marginal = std::abs(s.real()) < kMarginalRealPart;
    cert.dfds_at_s0 = f_derivative(model, s);
    if (!(std::abs(cert.dfds_at_s0) > 1e-6)) {
        throw CertificationFailed("zero of f is not numerically simple");
    }
    cert.residue_Q = 1.0 / cert.dfds_at_s0;
    const Complex m = modulus_M(model, s);
    cert.residue_P = m * m * cert.residue_Q;

    const double scale = std::abs(s);
    const double r = 1e-4 * scale;
    const double R = 1e4 * scale;
    const double offset =
        cert.marginal ? std::max(1e-3 * scale, 10.0 * std::abs(s.real())) : 0.0;
    cert.winding_left = winding_number(model, ContourSpec::left(r, R, offset));
    cert.winding_right = winding_number(model, ContourSpec::right(r, R, offset));
    if (cert.winding_left != 2 || cert.winding_right != 0) {
        std::ostringstream os;
        os << "winding counts (" << cert.winding_left << ", " << cert.winding_right
           << ") differ from the expected (2, 0)";
        throw CertificationFailed(os.str());
    }
    return cert;
}

}  // namespace viscorod
