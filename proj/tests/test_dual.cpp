#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "ybmaps/dual.hpp"
#include "ybmaps/sampling.hpp"

using namespace ybmaps;

TEST_CASE("product rule example") {
    const auto [v, g] = dual_eval(
        [](const std::vector<DualRational>& x) { return x[0] * x[1]; },
        {Rational(2), Rational(3)});
    CHECK(v == Rational(6));
    CHECK(g == std::vector<Rational>{Rational(3), Rational(2)});
}

TEST_CASE("quotient rule example") {
    const auto [v, g] = dual_eval(
        [](const std::vector<DualRational>& x) {
            return x[0] / (DualRational(1) + x[0] * x[1]);
        },
        {Rational(1), Rational(1)});
    CHECK(v == Rational(1, 2));
    CHECK(g == std::vector<Rational>{Rational(1, 4), Rational(-1, 4)});
}

TEST_CASE("constants have zero gradient") {
    const auto [v, g] = dual_eval(
        [](const std::vector<DualRational>&) { return DualRational::constant(Rational(7)); },
        {Rational(5), Rational(-2), Rational(0)});
    CHECK(v == Rational(7));
    CHECK(g == std::vector<Rational>(3, Rational(0)));
}

TEST_CASE("vanishing denominator raises") {
    CHECK_THROWS_AS(dual_eval(
                        [](const std::vector<DualRational>& x) {
                            return DualRational(1) / (x[0] + x[1]);
                        },
                        {Rational(1), Rational(-1)}),
                    DivisionByZero);
}

namespace {

// Random rational expression tree over n variables, built from +,-,*,/ with
// small integer constants. Returns evaluators for duals and for doubles.
struct RandomExpr {
    std::function<DualRational(const std::vector<DualRational>&)> dual_fn;
    std::function<double(const std::vector<double>&)> dbl_fn;
};

RandomExpr gen_expr(TrialRng& rng, int depth) {
    if (depth == 0 || rng.draw(0, 3) == 0) {
        if (rng.draw(0, 2) == 0) {
            const long c = rng.draw(-4, 4);
            return {[c](const std::vector<DualRational>&) {
                        return DualRational::constant(Rational(c));
                    },
                    [c](const std::vector<double>&) { return static_cast<double>(c); }};
        }
        const std::size_t i = static_cast<std::size_t>(rng.draw(0, 2));
        return {[i](const std::vector<DualRational>& x) { return x[i]; },
                [i](const std::vector<double>& x) { return x[i]; }};
    }
    const auto lhs = gen_expr(rng, depth - 1);
    const auto rhs = gen_expr(rng, depth - 1);
    switch (rng.draw(0, 3)) {
        case 0:
            return {[=](const std::vector<DualRational>& x) { return lhs.dual_fn(x) + rhs.dual_fn(x); },
                    [=](const std::vector<double>& x) { return lhs.dbl_fn(x) + rhs.dbl_fn(x); }};
        case 1:
            return {[=](const std::vector<DualRational>& x) { return lhs.dual_fn(x) - rhs.dual_fn(x); },
                    [=](const std::vector<double>& x) { return lhs.dbl_fn(x) - rhs.dbl_fn(x); }};
        case 2:
            return {[=](const std::vector<DualRational>& x) { return lhs.dual_fn(x) * rhs.dual_fn(x); },
                    [=](const std::vector<double>& x) { return lhs.dbl_fn(x) * rhs.dbl_fn(x); }};
        default:
            return {[=](const std::vector<DualRational>& x) { return lhs.dual_fn(x) / rhs.dual_fn(x); },
                    [=](const std::vector<double>& x) { return lhs.dbl_fn(x) / rhs.dbl_fn(x); }};
    }
}

}  // namespace

TEST_CASE("gradients agree with central finite differences") {
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 40; ++trial) {
        TrialRng rng(99, trial);
        const RandomExpr e = gen_expr(rng, 3);
        const std::vector<Rational> pt{rng.rational(), rng.rational(), rng.rational()};
        Rational val;
        std::vector<Rational> grad;
        try {
            std::tie(val, grad) = dual_eval(e.dual_fn, pt);
        } catch (const DivisionByZero&) {
            continue;  // expression singular at this point; next trial
        }
        const double h = 1e-6;
        std::vector<double> p{pt[0].to_double(), pt[1].to_double(), pt[2].to_double()};
        bool usable = true;
        std::vector<double> fd(3, 0.0);
        for (int i = 0; i < 3 && usable; ++i) {
            auto pp = p, pm = p;
            pp[i] += h;
            pm[i] -= h;
            const double fp = e.dbl_fn(pp), fm = e.dbl_fn(pm);
            if (!std::isfinite(fp) || !std::isfinite(fm) || std::fabs(fp) > 100 ||
                std::fabs(fm) > 100 || std::fabs(grad[i].to_double()) > 1e4)
                usable = false;  // too close to a pole for a meaningful difference
            fd[i] = (fp - fm) / (2 * h);
        }
        if (!usable) continue;
        ++checked;
        for (int i = 0; i < 3; ++i) {
            const double exact = grad[i].to_double();
            CHECK(std::fabs(fd[i] - exact) <=
                  1e-6 * std::max({1.0, std::fabs(exact), std::fabs(fd[i])}));
        }
    }
    CHECK(checked >= 40);
}
