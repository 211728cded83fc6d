#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ybmaps/catalog.hpp"
#include "ybmaps/state.hpp"

namespace ybmaps {

struct OrbitRecord {
    long step = 0;
    PairState<Real> state;
    std::vector<Real> invariants;  // declared invariants followed by Casimirs
    std::vector<Real> drift;       // |I(step) - I(0)| per tracked quantity
};

struct OrbitResult {
    std::vector<OrbitRecord> records;
    bool aborted = false;
    long last_good_step = 0;
    std::string abort_reason;
    std::vector<Real> max_drift;  // per tracked quantity over the whole run

    std::vector<std::string> tracked_names;
};

/// Iterates the map in long double arithmetic, recording per-step invariant
/// values and drift. Aborts cleanly when any guard magnitude falls below
/// guard_tol, reporting the last good step.
OrbitResult iterate_orbit(const MapDescriptor& map, const PairState<Real>& initial, long steps,
                          Real guard_tol = 1e-12L);

/// Orbit of a caller-supplied map (used for the float-only implicit maps);
/// guards are not monitored beyond the map's own singularity errors.
OrbitResult iterate_orbit_fn(const std::function<PairState<Real>(const PairState<Real>&)>& map,
                             const std::function<std::vector<Real>(const PairState<Real>&)>& invs,
                             const std::vector<std::string>& inv_names,
                             const PairState<Real>& initial, long steps);

/// Exact-rational orbit drift: max |I_n - I_0| per tracked quantity over the
/// given number of steps. Identically zero for exact invariants.
std::vector<Rational> exact_orbit_drift(const MapDescriptor& map,
                                        const PairState<Rational>& initial, int steps);

/// CSV: step, state coordinates, invariant values, drifts. Header row, dot
/// decimal separator, locale independent.
void write_orbit_csv(std::ostream& os, bool has_aux, const OrbitResult& orbit);

}  // namespace ybmaps
