#pragma once

/**
 * @file admissibility.hpp
 * @brief Sampling-based physical admissibility checks: reality of M on the
 *        real half-line, nonnegative storage/loss moduli, and the finite
 *        positive limits of M at zero and infinity.
 *
 * These are sampling certificates over dense log grids with stated
 * tolerances, not symbolic proofs.
 */

#include <string>
#include <vector>

#include "viscorod/grids.hpp"
#include "viscorod/models.hpp"

namespace viscorod {

struct Violation {
    std::string check;  // "reality", "thermodynamics", "asymptotics"
    double probe;       // offending x or omega (0 when not applicable)
    double value;       // offending quantity
    std::string detail;
};

struct AdmissibilityReport {
    bool reality_ok = false;
    bool thermo_ok = false;
    bool asymptotics_ok = false;
    std::vector<Violation> violations;
    double c0 = 0.0;
    double c_inf = 0.0;

    bool admissible() const { return reality_ok && thermo_ok && asymptotics_ok; }

    /// Human-readable multi-line summary.
    std::string to_text() const;
    /// Machine-readable key=value lines.
    std::string to_key_values() const;
};

/// Default reality grid: (x0, 1e6], >= 200 points, log spaced. A zero x0 is
/// probed from 1e-6 upward.
GridSpec default_reality_grid(const MaterialModel& model);
/// Default loss/storage grid: [1e-4, 1e4], >= 400 points, log spaced.
GridSpec default_thermo_grid();

/// Passes iff |Im M(x)| <= 1e-8 (1 + |M(x)|) at every grid point.
AdmissibilityReport check_reality(const MaterialModel& model, const GridSpec& grid);
AdmissibilityReport check_reality(const MaterialModel& model);

/// Passes iff E'(omega) >= -1e-12 and E''(omega) >= -1e-12 at every grid
/// point; the first violating omega is recorded.
AdmissibilityReport check_thermodynamics(const MaterialModel& model, const GridSpec& grid);
AdmissibilityReport check_thermodynamics(const MaterialModel& model);

/// Wraps estimate_asymptotics and additionally probes the modulus along rays
/// (angles pi/4, pi/2, 3pi/4) at |s| = 1e6 and 1e8, requiring the imaginary
/// part to be small (5% of |M|) and non-increasing outward, plus agreement of
/// M near zero with the c0 probe at the same 5% scale.
AdmissibilityReport check_asymptotics(const MaterialModel& model);

/// All three checks combined.
AdmissibilityReport check_admissibility(const MaterialModel& model);

}  // namespace viscorod
