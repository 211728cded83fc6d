#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ybmaps/orbit.hpp"

using namespace ybmaps;

namespace {

const MapDescriptor& get(const char* name) { return Catalog::instance().get(name); }

PairState<Real> ay_init() {
    PairState<Real> s;
    s.x = {1.0L / 3.0L, 1.0L / 5.0L};
    s.y = {1.0L / 7.0L, 1.0L / 2.0L};
    s.a = 2.0L;
    s.b = 1.0L;
    return s;
}

}  // namespace

TEST_CASE("permutation orbit has period two and zero drift") {
    PairState<Real> s;
    s.x = {1.0L, 2.0L};
    s.y = {3.0L, 4.0L};
    const OrbitResult orbit = iterate_orbit(get("permutation"), s, 10);
    REQUIRE(orbit.records.size() == 11);
    CHECK_FALSE(orbit.aborted);
    CHECK(orbit.records[2].state.x == s.x);
    CHECK(orbit.records[2].state.y == s.y);
    CHECK(orbit.records[1].state.x == s.y);
    for (const Real d : orbit.max_drift) CHECK(d == 0.0L);
}

TEST_CASE("long orbits keep invariants") {
    const OrbitResult ay = iterate_orbit(get("adler-yamilov"), ay_init(), 10000);
    CHECK_FALSE(ay.aborted);
    REQUIRE(ay.max_drift.size() == 2);
    CHECK(ay.max_drift[0] <= 1e-10L);
    CHECK(ay.max_drift[1] <= 1e-10L);

    const OrbitResult d4 = iterate_orbit(get("dnls4"), ay_init(), 10000);
    CHECK_FALSE(d4.aborted);
    REQUIRE(d4.max_drift.size() == 4);  // I1, I2, C1, C2
    CHECK(d4.max_drift[0] <= 1e-10L);
    CHECK(d4.max_drift[1] <= 1e-10L);
    CHECK(d4.max_drift[2] <= 1e-12L);
    CHECK(d4.max_drift[3] <= 1e-12L);
}

TEST_CASE("exact orbits have identically zero drift") {
    PairState<Rational> s;
    s.x = {Rational(1, 3), Rational(1, 5)};
    s.y = {Rational(1, 7), Rational(1, 2)};
    s.a = Rational(2);
    s.b = Rational(1);
    for (const char* name : {"adler-yamilov", "dnls4"}) {
        const std::vector<Rational> drift = exact_orbit_drift(get(name), s, 100);
        for (const Rational& d : drift) CHECK(d.is_zero());
    }
}

TEST_CASE("near-singular orbit aborts cleanly with the last good step") {
    PairState<Real> s;
    s.x = {1.0L, 0.0L};
    s.y = {0.0L, -1.0L + 1e-13L};  // guard 1 + x1*y2 is within 1e-12 of zero
    s.a = 2.0L;
    s.b = 1.0L;
    const OrbitResult orbit = iterate_orbit(get("adler-yamilov"), s, 5);
    CHECK(orbit.aborted);
    CHECK(orbit.last_good_step == 0);
    CHECK(orbit.abort_reason.find("1+x1*y2") != std::string::npos);
}

TEST_CASE("orbit csv has a header and dot-separated floats") {
    const OrbitResult orbit = iterate_orbit(get("adler-yamilov"), ay_init(), 3);
    std::ostringstream os;
    write_orbit_csv(os, false, orbit);
    const std::string text = os.str();
    CHECK(text.rfind("step,x1,x2,y1,y2,I1,I2,drift_I1,drift_I2\n", 0) == 0);
    CHECK(text.find(',') != std::string::npos);
    CHECK(text.find("0.333333") != std::string::npos);
    // four data rows after the header
    int rows = 0;
    for (const char ch : text)
        if (ch == '\n') ++rows;
    CHECK(rows == 5);
}
