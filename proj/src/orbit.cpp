#include "ybmaps/orbit.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "ybmaps/errors.hpp"

namespace ybmaps {

namespace {

std::vector<std::string> tracked_names(const MapDescriptor& map) {
    std::vector<std::string> names = map.invariant_names;
    names.insert(names.end(), map.casimir_names.begin(), map.casimir_names.end());
    return names;
}

std::vector<Real> tracked_values(const MapDescriptor& map, const PairState<Real>& s) {
    std::vector<Real> v = map.numeric.invariants(s);
    if (map.numeric.casimirs) {
        const std::vector<Real> c = map.numeric.casimirs(s);
        v.insert(v.end(), c.begin(), c.end());
    }
    return v;
}

}  // namespace

OrbitResult iterate_orbit(const MapDescriptor& map, const PairState<Real>& initial, long steps,
                          Real guard_tol) {
    OrbitResult out;
    out.tracked_names = tracked_names(map);

    PairState<Real> s = initial;
    const std::vector<Real> base = tracked_values(map, s);
    out.max_drift.assign(base.size(), 0.0L);
    out.records.push_back({0, s, base, std::vector<Real>(base.size(), 0.0L)});

    for (long step = 1; step <= steps; ++step) {
        const std::vector<Real> guards = map.numeric.guards(s);
        for (std::size_t g = 0; g < guards.size(); ++g) {
            if (std::fabs(guards[g]) < guard_tol) {
                char tol[24];
                std::snprintf(tol, sizeof tol, "%.3Lg", guard_tol);
                out.aborted = true;
                out.last_good_step = step - 1;
                out.abort_reason = "guard " + map.guard_names[g] + " within " + tol +
                                   " of zero before step " + std::to_string(step);
                return out;
            }
        }
        s = map.numeric.apply(s);
        const std::vector<Real> vals = tracked_values(map, s);
        std::vector<Real> drift(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            drift[i] = std::fabs(vals[i] - base[i]);
            if (drift[i] > out.max_drift[i]) out.max_drift[i] = drift[i];
        }
        out.records.push_back({step, s, vals, std::move(drift)});
        out.last_good_step = step;
    }
    return out;
}

OrbitResult iterate_orbit_fn(const std::function<PairState<Real>(const PairState<Real>&)>& map,
                             const std::function<std::vector<Real>(const PairState<Real>&)>& invs,
                             const std::vector<std::string>& inv_names,
                             const PairState<Real>& initial, long steps) {
    OrbitResult out;
    out.tracked_names = inv_names;
    PairState<Real> s = initial;
    const std::vector<Real> base = invs ? invs(s) : std::vector<Real>{};
    out.max_drift.assign(base.size(), 0.0L);
    out.records.push_back({0, s, base, std::vector<Real>(base.size(), 0.0L)});
    for (long step = 1; step <= steps; ++step) {
        try {
            s = map(s);
        } catch (const Error& e) {
            out.aborted = true;
            out.last_good_step = step - 1;
            out.abort_reason = e.what();
            return out;
        }
        const std::vector<Real> vals = invs ? invs(s) : std::vector<Real>{};
        std::vector<Real> drift(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            drift[i] = std::fabs(vals[i] - base[i]);
            if (drift[i] > out.max_drift[i]) out.max_drift[i] = drift[i];
        }
        out.records.push_back({step, s, vals, std::move(drift)});
        out.last_good_step = step;
    }
    return out;
}

std::vector<Rational> exact_orbit_drift(const MapDescriptor& map,
                                        const PairState<Rational>& initial, int steps) {
    PairState<Rational> s = initial;
    std::vector<Rational> base = map.exact.invariants(s);
    if (map.exact.casimirs) {
        const auto c = map.exact.casimirs(s);
        base.insert(base.end(), c.begin(), c.end());
    }
    std::vector<Rational> drift(base.size(), Rational(0));
    for (int step = 0; step < steps; ++step) {
        s = map.exact.apply(s);
        std::vector<Rational> vals = map.exact.invariants(s);
        if (map.exact.casimirs) {
            const auto c = map.exact.casimirs(s);
            vals.insert(vals.end(), c.begin(), c.end());
        }
        for (std::size_t i = 0; i < vals.size(); ++i) {
            const Rational d = (vals[i] - base[i]).abs();
            if (drift[i] < d) drift[i] = d;
        }
    }
    return drift;
}

namespace {

void put_real(std::ostream& os, Real v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.21Lg", v);
    os << buf;
}

}  // namespace

void write_orbit_csv(std::ostream& os, bool has_aux, const OrbitResult& orbit) {
    os << "step";
    const std::size_t nx = orbit.records.empty() ? 0 : orbit.records[0].state.x.size();
    for (std::size_t i = 1; i <= nx; ++i) os << ",x" << i;
    if (has_aux) os << ",X";
    for (std::size_t i = 1; i <= nx; ++i) os << ",y" << i;
    if (has_aux) os << ",Y";
    for (const std::string& n : orbit.tracked_names) os << "," << n;
    for (const std::string& n : orbit.tracked_names) os << ",drift_" << n;
    os << "\n";
    for (const OrbitRecord& rec : orbit.records) {
        os << rec.step;
        for (const Real v : rec.state.x) {
            os << ",";
            put_real(os, v);
        }
        if (rec.state.X) {
            os << ",";
            put_real(os, *rec.state.X);
        }
        for (const Real v : rec.state.y) {
            os << ",";
            put_real(os, v);
        }
        if (rec.state.Y) {
            os << ",";
            put_real(os, *rec.state.Y);
        }
        for (const Real v : rec.invariants) {
            os << ",";
            put_real(os, v);
        }
        for (const Real v : rec.drift) {
            os << ",";
            put_real(os, v);
        }
        os << "\n";
    }
}

}  // namespace ybmaps
