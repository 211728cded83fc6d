#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ybmaps/leaves.hpp"
#include "ybmaps/sampling.hpp"

using namespace ybmaps;

namespace {

const MapDescriptor& get(const char* name) { return Catalog::instance().get(name); }

// deterministic floats in [lo, hi]
Real uniform(TrialRng& rng, Real lo, Real hi) {
    const Real u = static_cast<Real>(rng.next() >> 11) / static_cast<Real>(1ULL << 53);
    return lo + (hi - lo) * u;
}

}  // namespace

TEST_CASE("affine lift") {
    CHECK(lift_affine(Rational(0), Rational(17), Rational(5)) == Rational(5));
    CHECK(lift_affine(Rational(1), Rational(1), Rational(2)) == Rational(3));
    TrialRng rng(1, 0);
    for (int t = 0; t < 50; ++t) {
        const Rational x1 = rng.rational(), x2 = rng.rational(), k = rng.rational();
        CHECK(affine_residual(x1, x2, lift_affine(x1, x2, k), k).is_zero());
    }
}

TEST_CASE("leaf commutation examples and property") {
    const auto& ay = get("adler-yamilov");
    const auto& nls = get("nls6");
    const auto& d4 = get("dnls4");
    const auto& d6 = get("dnls6-reparam");

    PairState<Rational> s;
    s.x = {1, 0};
    s.y = {0, 0};
    s.a = Rational(2);
    s.b = Rational(1);
    CHECK(check_leaf_commutation(ay, nls, s));

    PairState<Rational> t;
    t.x = {1, 1};
    t.y = {1, 1};
    t.a = Rational(2);
    t.b = Rational(3);
    CHECK(check_leaf_commutation(d4, d6, t));

    // zero fields commute trivially under both pairings
    PairState<Rational> z;
    z.x = {0, 0};
    z.y = {0, 0};
    z.a = Rational(2);
    z.b = Rational(5);
    CHECK(check_leaf_commutation(ay, nls, z));
    CHECK(check_leaf_commutation(d4, d6, z));

    int ok_ay = 0, ok_d4 = 0, swapped_fails = 0;
    for (int i = 0; i < 200 && (ok_ay < 100 || ok_d4 < 100); ++i) {
        try {
            const auto sa = sample_state(ay, 42, i);
            if (check_leaf_commutation(ay, nls, sa)) ++ok_ay;
            if (*sa.a != *sa.b && !check_leaf_commutation(ay, nls, sa, true)) ++swapped_fails;
        } catch (const SingularLocus&) {
        }
        try {
            const auto sd = sample_state(d4, 43, i);
            if (check_leaf_commutation(d4, d6, sd)) ++ok_d4;
        } catch (const SingularLocus&) {
        }
    }
    CHECK(ok_ay >= 100);
    CHECK(ok_d4 >= 100);
    CHECK(swapped_fails > 0);  // the swapped pairing is not the right one
}

TEST_CASE("dnls quadratic leaf roots") {
    const QuadRoots lin = solve_dnls_leaf(0.7L, 0.0L, 0.25L);
    CHECK(lin.count == 1);
    CHECK(lin.pick(Branch::Minus) == 0.25L);

    const QuadRoots r = solve_dnls_leaf(1.0L, 1.0L, -2.0L);
    CHECK(r.count == 2);
    CHECK(r.pick(Branch::Minus) == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(r.pick(Branch::Plus) == doctest::Approx(2.0).epsilon(1e-15));

    CHECK_THROWS_AS(solve_dnls_leaf(1.0L, 1.0L, 1.0L), ComplexRoots);

    // residuals of both roots
    TrialRng rng(5, 0);
    Real worst = 0.0L;
    for (int t = 0; t < 300; ++t) {
        const Real x1 = uniform(rng, -0.8L, 0.8L), x2 = uniform(rng, -0.8L, 0.8L),
                   k = uniform(rng, -0.5L, 0.5L);
        QuadRoots q;
        try {
            q = solve_dnls_leaf(x1, x2, k);
        } catch (const ComplexRoots&) {
            continue;
        }
        for (int i = 0; i < q.count; ++i) {
            const Real X = q.root[i];
            const Real res = std::fabs(x1 * x2 * X * X - X + k) /
                             std::max((Real)1.0L, std::fabs(X));
            worst = std::max(worst, res);
        }
    }
    CHECK(worst <= 1e-12L);
}

TEST_CASE("dihedral quadratic leaf roots") {
    const QuadRoots dbl = solve_dihedral_leaf(0.0L, 0.0L, 2.0L);
    CHECK(dbl.pick(Branch::Minus) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dbl.pick(Branch::Plus) == doctest::Approx(1.0).epsilon(1e-15));

    const QuadRoots r = solve_dihedral_leaf(0.0L, 0.0L, 2.5L);
    CHECK(r.pick(Branch::Minus) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.pick(Branch::Plus) == doctest::Approx(2.0).epsilon(1e-15));

    // leading coefficient vanishes at x1 = 1: linear fallback
    const QuadRoots lin = solve_dihedral_leaf(1.0L, 0.0L, 1.0L);
    CHECK(lin.count == 1);
    CHECK(lin.pick(Branch::Minus) == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(solve_dihedral_leaf(1.0L, 0.0L, 0.0L), DegenerateConstraint);
    CHECK_THROWS_AS(solve_dihedral_leaf(0.2L, 0.1L, 0.0L), ComplexRoots);

    TrialRng rng(6, 0);
    Real worst = 0.0L;
    for (int t = 0; t < 300; ++t) {
        const Real x1 = uniform(rng, -0.7L, 0.7L), x2 = uniform(rng, -0.7L, 0.7L),
                   c2 = uniform(rng, 2.2L, 3.5L);
        QuadRoots q;
        try {
            q = solve_dihedral_leaf(x1, x2, c2);
        } catch (const Error&) {
            continue;
        }
        for (int i = 0; i < q.count; ++i) {
            const Real X = q.root[i];
            const Real res =
                std::fabs((1 - x1 * x1 - x2 * x2 + x1 * x1 * x2 * x2) * X * X +
                          (2 * x1 * x2 - c2) * X + 1) /
                std::max((Real)1.0L, std::fabs(X));
            worst = std::max(worst, res);
        }
    }
    CHECK(worst <= 1e-12L);
}

TEST_CASE("implicit dnls map: linear leaf case matches the six-dimensional map") {
    // with x2 = y1 = 0 the leaf constraints are linear, X = a and Y = b exactly
    PairState<Rational> lifted;
    lifted.x = {Rational(1, 2), Rational(0)};
    lifted.y = {Rational(0), Rational(1, 4)};
    lifted.X = Rational(1, 8);
    lifted.Y = Rational(1, 4);
    const auto exact_img = get("dnls6-orig").exact.apply(lifted);

    PairState<Real> s;
    s.x = {0.5L, 0.0L};
    s.y = {0.0L, 0.25L};
    s.a = 0.125L;
    s.b = 0.25L;
    const auto img = eval_dnls4_implicit(s, Branch::Minus, Branch::Minus);
    CHECK(std::fabs(img.x[0] - exact_img.x[0].to_real()) <= 1e-15L);
    CHECK(std::fabs(img.y[1] - exact_img.y[1].to_real()) <= 1e-15L);
    CHECK(img.x[1] == 0.25L);
    CHECK(img.y[0] == 0.5L);
}

TEST_CASE("implicit dnls map satisfies the yb equation numerically") {
    TrialRng rng(8, 0);
    for (const Branch br : {Branch::Minus, Branch::Plus}) {
        int states = 0;
        Real worst = 0.0L;
        while (states < 60) {
            TripleState<Real> t;
            for (auto* pt : {&t.x, &t.y, &t.z})
                *pt = {uniform(rng, -0.3L, 0.3L), uniform(rng, -0.3L, 0.3L)};
            t.a = uniform(rng, -0.2L, 0.2L);
            t.b = uniform(rng, -0.2L, 0.2L);
            t.c = uniform(rng, -0.2L, 0.2L);
            try {
                const Real r = yb_residual(
                    [br](const PairState<Real>& s) { return eval_dnls4_implicit(s, br, br); }, t);
                worst = std::max(worst, r);
                ++states;
            } catch (const Error&) {
                continue;
            }
        }
        CHECK(worst <= 1e-9L);
    }
}

TEST_CASE("implicit dnls map: branch mixing generally breaks the yb equation") {
    TrialRng rng(9, 0);
    int states = 0, above = 0;
    while (states < 30) {
        TripleState<Real> t;
        for (auto* pt : {&t.x, &t.y, &t.z})
            *pt = {uniform(rng, -0.3L, 0.3L), uniform(rng, -0.3L, 0.3L)};
        t.a = uniform(rng, -0.2L, 0.2L);
        t.b = uniform(rng, -0.2L, 0.2L);
        t.c = uniform(rng, -0.2L, 0.2L);
        try {
            const Real r = yb_residual(
                [](const PairState<Real>& s) {
                    return eval_dnls4_implicit(s, Branch::Plus, Branch::Minus);
                },
                t);
            ++states;
            if (r > 1e-9L) ++above;
        } catch (const Error&) {
            continue;
        }
    }
    CHECK(above > 0);  // recorded observation, not a theorem
}

TEST_CASE("implicit dihedral map: zero fields and yb residual") {
    PairState<Real> z;
    z.x = {0.0L, 0.0L};
    z.y = {0.0L, 0.0L};
    z.a = 2.5L;
    z.b = 3.0L;
    const auto img = eval_dihedral4_implicit(z, Branch::Minus, Branch::Minus);
    CHECK(img.x[0] == 0.0L);
    CHECK(img.x[1] == 0.0L);
    CHECK(img.y[0] == 0.0L);
    CHECK(img.y[1] == 0.0L);

    TrialRng rng(10, 0);
    for (const Branch br : {Branch::Minus, Branch::Plus}) {
        int states = 0;
        Real worst = 0.0L;
        while (states < 50) {
            TripleState<Real> t;
            for (auto* pt : {&t.x, &t.y, &t.z})
                *pt = {uniform(rng, -0.5L, 0.5L), uniform(rng, -0.5L, 0.5L)};
            t.a = uniform(rng, 2.2L, 3.5L);
            t.b = uniform(rng, 2.2L, 3.5L);
            t.c = uniform(rng, 2.2L, 3.5L);
            try {
                const Real r = yb_residual(
                    [br](const PairState<Real>& s) {
                        return eval_dihedral4_implicit(s, br, br);
                    },
                    t);
                worst = std::max(worst, r);
                ++states;
            } catch (const Error&) {
                continue;
            }
        }
        CHECK(worst <= 1e-9L);
    }

    // discriminant goes negative once the constant is small at small fields
    PairState<Real> badp;
    badp.x = {0.1L, 0.1L};
    badp.y = {0.0L, 0.0L};
    badp.a = 0.5L;
    badp.b = 2.5L;
    CHECK_THROWS_AS(eval_dihedral4_implicit(badp, Branch::Minus, Branch::Minus), ComplexRoots);
}

TEST_CASE("f and fg of the linearised dihedral matrix") {
    {
        const auto [f, fg] = dihedral_f_fg(0.0L, 0.0L, 1.0L);
        CHECK(f == doctest::Approx(1.0));
        CHECK(fg == doctest::Approx(0.0));
    }
    {
        const auto [f, fg] = dihedral_f_fg(0.0L, 0.0L, 3.0L);
        CHECK(f == doctest::Approx(2.0));
        CHECK(fg == doctest::Approx(-1.0));
    }
    TrialRng rng(11, 0);
    Real worst = 0.0L;
    for (int t = 0; t < 100; ++t) {
        const Real x1 = uniform(rng, -3.0L, 3.0L), x2 = uniform(rng, -3.0L, 3.0L),
                   k = uniform(rng, -3.0L, 3.0L);
        const auto [r1, r2] = dihedral_f_fg_residuals(x1, x2, k);
        worst = std::max({worst, std::fabs(r1), std::fabs(r2)});
    }
    CHECK(worst <= 1e-10L);
}
