#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybmaps/lax.hpp"
#include "ybmaps/sampling.hpp"

using namespace ybmaps;

namespace {

const MapDescriptor& get(const char* name) { return Catalog::instance().get(name); }
const LaxBuilder& builder(const char* name) { return LaxRegistry::instance().get(name); }

LaurentPoly mono(long c, int e) { return LaurentPoly::monomial(Rational(c), e); }

}  // namespace

TEST_CASE("leaf matrix at zero fields") {
    const LaurentMatrix m = build_lax("adler-yamilov", {{0, 0}, {}, Rational(0)});
    CHECK(m.at(0, 0) == mono(1, 1));
    CHECK(m.at(0, 1).is_zero());
    CHECK(m.at(1, 0).is_zero());
    CHECK(m.at(1, 1) == LaurentPoly(Rational(1)));
}

TEST_CASE("adler matrix at x=0") {
    const LaurentMatrix m = build_lax("adler", {{0}, {}, Rational(5)});
    CHECK(m.at(0, 0).is_zero());
    CHECK(m.at(0, 1) == LaurentPoly(Rational(1)));
    CHECK(m.at(1, 0) == LaurentPoly(Rational(5)) + mono(-1, 1));
    CHECK(m.at(1, 1).is_zero());
}

TEST_CASE("dihedral matrix entries") {
    const LaurentMatrix m = build_lax("dihedral6", {{1, 0}, Rational(2), Rational(1)});
    CHECK(m.at(0, 0) == mono(2, 2) + LaurentPoly(Rational(1)));
    CHECK(m.at(0, 1) == mono(2, 1));
    CHECK(m.at(1, 0) == mono(2, -1));
    CHECK(m.at(1, 1) == mono(2, -2) + LaurentPoly(Rational(1)));
}

TEST_CASE("vector builders assemble block matrices") {
    const LaurentMatrix m = build_lax("vector-nls", {{1, 2, 3, 4}, {}, Rational(5)});
    CHECK(m.size() == 3);
    CHECK(m.at(0, 0) == mono(1, 1) + LaurentPoly(Rational(5 + 1 * 3 + 2 * 4)));
    CHECK(m.at(0, 1) == LaurentPoly(Rational(1)));
    CHECK(m.at(0, 2) == LaurentPoly(Rational(2)));
    CHECK(m.at(1, 0) == LaurentPoly(Rational(3)));
    CHECK(m.at(2, 0) == LaurentPoly(Rational(4)));
    CHECK(m.at(1, 1) == LaurentPoly(Rational(1)));
    CHECK(m.at(1, 2).is_zero());

    const LaurentMatrix z = build_lax("vector-z2", {{1, 0, 0, 1}, {}, Rational(2)});
    CHECK(z.at(0, 0) == mono(2, 2) + LaurentPoly(Rational(1)));
    CHECK(z.at(0, 1) == mono(1, 1));
    CHECK(z.at(2, 0) == mono(1, 1));
}

TEST_CASE("builder errors") {
    CHECK_THROWS_AS(build_lax("no-such", {{0}, {}, {}}), UnknownName);
    CHECK_THROWS_AS(build_lax("adler", {{0, 1}, {}, Rational(1)}), SizeMismatch);
    CHECK_THROWS_AS(build_lax("adler", {{0}, {}, {}}), Error);          // missing parameter
    CHECK_THROWS_AS(build_lax("nls6", {{0, 0}, {}, {}}), Error);        // missing aux
    CHECK_THROWS_AS(build_lax("vector-nls", {{1, 2, 3}, {}, Rational(1)}), SizeMismatch);
}

TEST_CASE("adler refactorisation at the worked example") {
    PairState<Rational> s;
    s.x = {1};
    s.y = {1};
    s.a = Rational(2);
    s.b = Rational(0);
    CHECK(check_refactorisation(get("adler"), builder("adler"), s));
}

TEST_CASE("permutation satisfies any aux-builder refactorisation") {
    const auto& perm = get("permutation");
    TrialRng rng(7, 0);
    for (int t = 0; t < 10; ++t) {
        PairState<Rational> s;
        s.x = {rng.rational(), rng.rational()};
        s.y = {rng.rational(), rng.rational()};
        s.X = rng.rational();
        s.Y = rng.rational();
        CHECK(check_refactorisation(perm, builder("nls6"), s));
    }
}

TEST_CASE("corrupted map fails refactorisation") {
    MapDescriptor bad = get("adler-yamilov");
    const auto orig = bad.exact.apply;
    bad.exact.apply = [orig](const PairState<Rational>& s) {
        PairState<Rational> r = orig(s);
        r.x[0] += Rational(1);
        return r;
    };
    PairState<Rational> s;
    s.x = {1, 0};
    s.y = {0, 0};
    s.a = Rational(2);
    s.b = Rational(1);
    CHECK_FALSE(check_refactorisation(bad, builder("adler-yamilov"), s));

    // the shift happens to preserve the trace at the point above, so the
    // trace mutation is caught over a sample instead
    int trace_fails = 0;
    for (int t = 0; t < 20; ++t) {
        try {
            if (!check_trace_preservation(bad, builder("adler-yamilov"),
                                          sample_state(bad, 71, t)))
                ++trace_fails;
        } catch (const SingularLocus&) {
        }
    }
    CHECK(trace_fails > 0);
}

TEST_CASE("trace coefficients") {
    // zero fields, parameters zero: both matrices are diag(l, 1)
    PairState<Rational> z;
    z.x = {0, 0};
    z.y = {0, 0};
    z.a = Rational(0);
    z.b = Rational(0);
    const auto tz = extract_trace_invariants(builder("adler-yamilov"), z);
    CHECK(tz == std::vector<std::pair<int, Rational>>{{0, Rational(1)}, {2, Rational(1)}});

    PairState<Rational> s;
    s.x = {1, 0};
    s.y = {0, 0};
    s.a = Rational(2);
    s.b = Rational(1);
    const auto ts = extract_trace_invariants(builder("adler-yamilov"), s);
    CHECK(ts == std::vector<std::pair<int, Rational>>{
                    {0, Rational(3)}, {1, Rational(3)}, {2, Rational(1)}});

    // the l^0 coefficient of the aux matrix trace carries a +1 beside the
    // printed invariant x2*y1 + x1*y2 + X*Y
    PairState<Rational> n;
    n.x = {1, 2};
    n.y = {3, 5};
    n.X = Rational(7);
    n.Y = Rational(11);
    const auto tn = extract_trace_invariants(builder("nls6"), n);
    CHECK(tn == std::vector<std::pair<int, Rational>>{
                    {0, Rational(2 * 3 + 1 * 5 + 7 * 11 + 1)},
                    {1, Rational(18)},
                    {2, Rational(1)}});
}

TEST_CASE("trace preservation and determinant consistency across the catalog") {
    const std::vector<const char*> names{"adler",         "nls6",   "adler-yamilov",
                                         "dnls6-orig",    "dnls6-reparam", "dnls4",
                                         "dihedral6",     "vector-nls",    "vector-z2"};
    for (const char* name : names) {
        const auto& m = get(name);
        const auto& b = builder(m.lax_name.c_str());
        int checked = 0;
        for (int t = 0; t < 60 && checked < 25; ++t) {
            const auto s = sample_state(m, 1234, t);
            try {
                CHECK(check_refactorisation(m, b, s));
                CHECK(check_trace_preservation(m, b, s));
                CHECK(check_det_consistency(m, b, s));
                ++checked;
            } catch (const SingularLocus&) {
            }
        }
        CHECK(checked >= 25);
    }
}
