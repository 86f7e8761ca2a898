#include <doctest.h>

#include <cmath>
#include <vector>

#include "viscorod/response.hpp"

using namespace viscorod;

namespace {

constexpr double kPi = 3.14159265358979323846;

const KernelEvaluator& elastic_evaluator() {
    static const KernelEvaluator ev =
        KernelEvaluator::create(MaterialModel::fractional_zener(0.5, 0.5, 0.5));
    return ev;
}

const KernelEvaluator& zener_evaluator() {
    static const KernelEvaluator ev =
        KernelEvaluator::create(MaterialModel::fractional_zener(0.2, 0.6, 0.5));
    return ev;
}

double eom_residual(const ResponseSeries& rs, const std::vector<double>& force, double h,
                    double t_min = 0.0) {
    double worst = 0.0;
    for (std::size_t k = 1; k + 1 < rs.t.size(); ++k) {
        if (rs.t[k] < t_min) continue;
        const double acc = (rs.eps[k + 1] - 2.0 * rs.eps[k] + rs.eps[k - 1]) / (h * h);
        worst = std::max(worst, std::abs(acc + rs.sigma[k] - force[k]));
    }
    return worst;
}

}  // namespace

TEST_CASE("elastic closed form: frozen values") {
    CHECK(elastic_closed_form(1.0, 2.0, kPi).first == doctest::Approx(-2.0 / 3.0).epsilon(1e-14));
    CHECK(elastic_closed_form(3.7, 0.4, 0.0).first == 0.0);
    for (double t : {0.5, 2.0, 9.0}) {
        // omega = 0 degenerates to the constant-force response 1 - cos t.
        CHECK(elastic_closed_form(1.0, 0.0, t).first ==
              doctest::Approx(1.0 - std::cos(t)).epsilon(1e-13));
    }
    CHECK_THROWS_AS(elastic_closed_form(1.0, 1.0, 2.0), ResonanceCase);
    CHECK_THROWS_AS(elastic_closed_form(1.0, 1.0 + 1e-10, 2.0), ResonanceCase);
    CHECK_THROWS_AS(elastic_closed_form(1.0, -0.5, 2.0), DomainError);
}

TEST_CASE("resonance closed form: frozen values") {
    CHECK(resonance_closed_form(0.0).first == 0.0);
    CHECK(resonance_closed_form(kPi / 2.0).first == doctest::Approx(kPi / 4.0).epsilon(1e-14));
    CHECK(std::abs(resonance_closed_form(kPi).first) < 1e-14);
    CHECK(resonance_closed_form(2.0).second == resonance_closed_form(2.0).first);
}

TEST_CASE("elastic pipeline matches the closed forms") {
    const TimeGrid grid{40.0, 2000};
    const ResponseSeries harmonic = respond(elastic_evaluator(), Harmonic{1.0, 2.0}, grid);
    for (std::size_t i = 0; i < harmonic.t.size(); ++i) {
        const auto [eps, sigma] = elastic_closed_form(1.0, 2.0, harmonic.t[i]);
        CHECK(std::abs(harmonic.eps[i] - eps) <= 1e-4);
        CHECK(std::abs(harmonic.sigma[i] - sigma) <= 1e-4);
    }

    const ResponseSeries resonance = respond(elastic_evaluator(), Harmonic{1.0, 1.0},
                                             TimeGrid{20.0, 2000});
    for (std::size_t i = 0; i < resonance.t.size(); ++i) {
        CHECK(std::abs(resonance.eps[i] - resonance_closed_form(resonance.t[i]).first) <= 1e-4);
    }
}

TEST_CASE("impulse response is the scaled kernel") {
    const TimeGrid grid{10.0, 101};
    const ResponseSeries rs = respond(zener_evaluator(), Impulse{2.5}, grid);
    const KernelTable table = zener_evaluator().kernel_table(grid.values());
    for (std::size_t i = 0; i < rs.t.size(); ++i) {
        CHECK(rs.eps[i] == 2.5 * table.P[i]);
        CHECK(rs.sigma[i] == 2.5 * table.Q[i]);
    }
    CHECK(rs.eps[0] == 0.0);
    CHECK(rs.sigma[0] == 0.0);
}

TEST_CASE("step response creeps toward the compliance limit") {
    const ResponseSeries rs = respond(zener_evaluator(), Step{1.0}, TimeGrid{140.0, 1400});
    CHECK(rs.eps[0] == 0.0);
    CHECK(std::abs(rs.eps.back() - 1.0) <= 0.02);
    // Monotone late-time approach: strain keeps gaining once oscillations die.
    CHECK(rs.eps.back() > rs.eps[rs.eps.size() / 2] - 0.05);
}

TEST_CASE("equation-of-motion residual stays within budget") {
    const TimeGrid grid{30.0, 1500};
    const double h = grid.step();
    const std::size_t n = static_cast<std::size_t>(grid.points);

    std::vector<double> zero(n, 0.0), one(n, 1.0), cosine(n);
    for (std::size_t i = 0; i < n; ++i) cosine[i] = std::cos(1.5 * h * static_cast<double>(i));

    const ResponseSeries imp = respond(zener_evaluator(), Impulse{1.0}, grid);
    CHECK(eom_residual(imp, zero, h) <= 5e-3);

    const ResponseSeries step = respond(zener_evaluator(), Step{1.0}, grid);
    CHECK(eom_residual(step, one, h) <= 5e-3);

    const ResponseSeries har = respond(zener_evaluator(), Harmonic{1.0, 1.5}, grid);
    CHECK(eom_residual(har, cosine, h) <= 5e-3);

    const ResponseSeries sam = respond(zener_evaluator(), Sampled{h, cosine}, grid);
    CHECK(eom_residual(sam, cosine, h) <= 5e-3);

    const ResponseSeries el = respond(elastic_evaluator(), Harmonic{1.0, 2.0}, grid);
    for (std::size_t i = 0; i < n; ++i) cosine[i] = std::cos(2.0 * h * static_cast<double>(i));
    CHECK(eom_residual(el, cosine, h) <= 5e-3);
}

TEST_CASE("respond is linear in the forcing") {
    const TimeGrid grid{12.0, 240};
    const double h = grid.step();
    const std::size_t n = static_cast<std::size_t>(grid.points);

    // Homogeneity (impulse) to round-off.
    const ResponseSeries i1 = respond(zener_evaluator(), Impulse{1.0}, grid);
    const ResponseSeries i3 = respond(zener_evaluator(), Impulse{3.0}, grid);
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(i3.eps[k] - 3.0 * i1.eps[k]) <= 1e-10 * (1.0 + std::abs(i3.eps[k])));
    }

    // Additivity (sampled convolution).
    std::vector<double> f1(n), f2(n), sum(n);
    for (std::size_t k = 0; k < n; ++k) {
        f1[k] = std::sin(0.7 * h * static_cast<double>(k));
        f2[k] = std::exp(-0.1 * h * static_cast<double>(k));
        sum[k] = f1[k] + f2[k];
    }
    const ResponseSeries r1 = respond(zener_evaluator(), Sampled{h, f1}, grid);
    const ResponseSeries r2 = respond(zener_evaluator(), Sampled{h, f2}, grid);
    const ResponseSeries rs = respond(zener_evaluator(), Sampled{h, sum}, grid);
    for (std::size_t k = 0; k < n; ++k) {
        CHECK(std::abs(rs.eps[k] - r1.eps[k] - r2.eps[k]) <= 1e-10);
        CHECK(std::abs(rs.sigma[k] - r1.sigma[k] - r2.sigma[k]) <= 1e-10);
    }
}

TEST_CASE("displacement scales the strain by the cross-section") {
    ResponseSeries rs = respond(zener_evaluator(), Impulse{1.0}, TimeGrid{5.0, 64});
    const std::vector<double> u = rs.displacement(0.25);
    REQUIRE(rs.x_section.has_value());
    CHECK(*rs.x_section == 0.25);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(u[i] == 0.25 * rs.eps[i]);
    CHECK_THROWS_AS(rs.displacement(1.5), DomainError);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(respond(elastic_evaluator(), Harmonic{1.0, 2.0}, TimeGrid{40.0, 50}),
                    GridTooCoarse);
    // The kernel's own oscillation frequency constrains forcings without one.
    CHECK_THROWS_AS(respond(zener_evaluator(), Impulse{1.0}, TimeGrid{38.0, 16}), GridTooCoarse);
    CHECK_THROWS_AS(respond(zener_evaluator(), Impulse{1.0}, TimeGrid{-1.0, 100}), DomainError);
    // Sampled forcing must share the response grid step.
    std::vector<double> vals(100, 1.0);
    CHECK_THROWS_AS(respond(zener_evaluator(), Sampled{0.3, vals}, TimeGrid{9.9, 100}),
                    DomainError);
}
