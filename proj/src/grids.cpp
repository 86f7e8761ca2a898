#include "viscorod/grids.hpp"

#include <cmath>
#include <stdexcept>

namespace viscorod {

std::vector<double> log_grid(const GridSpec& spec) {
    if (!(spec.lo > 0.0) || !(spec.hi > spec.lo)) {
        throw std::invalid_argument("log grid needs 0 < lo < hi");
    }
    if (spec.points < 2) throw std::invalid_argument("log grid needs >= 2 points");
    std::vector<double> out(static_cast<std::size_t>(spec.points));
    const double llo = std::log(spec.lo);
    const double lhi = std::log(spec.hi);
    for (int i = 0; i < spec.points; ++i) {
        out[static_cast<std::size_t>(i)] =
            std::exp(llo + (lhi - llo) * static_cast<double>(i) / (spec.points - 1));
    }
    out.front() = spec.lo;
    out.back() = spec.hi;
    return out;
}

std::vector<double> TimeGrid::values() const {
    if (!(t_end > 0.0)) throw std::invalid_argument("time grid needs t_end > 0");
    if (points < 2) throw std::invalid_argument("time grid needs >= 2 points");
    std::vector<double> out(static_cast<std::size_t>(points));
    const double h = step();
    for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = h * i;
    out.back() = t_end;
    return out;
}

}  // namespace viscorod
