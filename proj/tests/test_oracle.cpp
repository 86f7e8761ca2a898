#include <doctest.h>

#include <cmath>

#include "viscorod/oracle.hpp"

using namespace viscorod;

namespace {

const InversionConfig talbot_cfg{InversionMethod::fixed_talbot, 48, 1.2};
const InversionConfig dehoog_cfg{InversionMethod::de_hoog, 48, 1.2};

double mixed_rel(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("known transform pairs") {
    const TransferFn osc = [](Complex s) { return 1.0 / (1.0 + s * s); };
    const TransferFn ramp = [](Complex s) { return 1.0 / (s * s); };
    const TransferFn step = [](Complex s) { return 1.0 / s; };

    for (const InversionConfig& cfg : {talbot_cfg, dehoog_cfg}) {
        CHECK(invert_reference(osc, 1.5707963267948966, cfg) == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(invert_reference(ramp, 3.0, cfg) == doctest::Approx(3.0).epsilon(1e-8));
        CHECK(invert_reference(step, 1.0, cfg) == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("fixed Talbot and de Hoog agree on rational transfers") {
    // Rational transfers with singularities Talbot's pinched contour still
    // encloses over the whole window (low-frequency poles); high-frequency
    // poles at large t are the documented Talbot weakness and are owned by
    // de Hoog alone.
    const TransferFn ramp = [](Complex s) { return 1.0 / (s * s); };
    const TransferFn decay = [](Complex s) { return 1.0 / (s + 0.2); };
    const TransferFn damped_cos = [](Complex s) {
        return (s + 0.1) / ((s + 0.1) * (s + 0.1) + 0.25);
    };
    for (int i = 0; i < 40; ++i) {
        const double t = 0.1 * std::pow(500.0, i / 39.0);
        for (const TransferFn* fn : {&ramp, &decay, &damped_cos}) {
            const double a = invert_reference(*fn, t, talbot_cfg);
            const double b = invert_reference(*fn, t, dehoog_cfg);
            CHECK(mixed_rel(a, b) <= 1e-7);
        }
    }
}

TEST_CASE("de Hoog resolves damped oscillations out to t = 50") {
    // Pole pair at -0.104 +/- 1.138i, the regime of the response kernels.
    const double im2 = 1.295;
    const TransferFn zener_like = [&](Complex s) {
        return 1.0 / ((s + 0.104) * (s + 0.104) + im2);
    };
    const auto exact = [&](double t) {
        return std::exp(-0.104 * t) * std::sin(std::sqrt(im2) * t) / std::sqrt(im2);
    };
    for (int i = 0; i < 40; ++i) {
        const double t = 0.5 * std::pow(100.0, i / 39.0);
        CHECK(std::abs(invert_reference(zener_like, t, dehoog_cfg) - exact(t)) < 1e-8);
    }
}

TEST_CASE("Talbot nodes must stay clear of the branch cut") {
    const TransferFn ramp = [](Complex s) { return 1.0 / (s * s); };
    InversionConfig too_many{InversionMethod::fixed_talbot, 4000, 1.2};
    CHECK_THROWS_AS(invert_reference(ramp, 1.0, too_many), MethodBreakdown);
}

TEST_CASE("overflowing Talbot scaling is a method breakdown") {
    const TransferFn ramp = [](Complex s) { return 1.0 / (s * s); };
    InversionConfig huge{InversionMethod::fixed_talbot, 3000, 1.2};
    CHECK_THROWS_AS(invert_reference(ramp, 1.0, huge), MethodBreakdown);
}

TEST_CASE("configuration validation") {
    const TransferFn ramp = [](Complex s) { return 1.0 / (s * s); };
    CHECK_THROWS_AS(invert_reference(ramp, 0.0, dehoog_cfg), DomainError);
    CHECK_THROWS_AS(invert_reference(ramp, -1.0, dehoog_cfg), DomainError);
    InversionConfig small = dehoog_cfg;
    small.node_count = 8;
    CHECK_THROWS_AS(invert_reference(ramp, 1.0, small), std::invalid_argument);
}
