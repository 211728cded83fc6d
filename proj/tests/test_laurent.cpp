#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ybmaps/laurent.hpp"
#include "ybmaps/sampling.hpp"

using namespace ybmaps;

namespace {

LaurentMatrix diag2(const LaurentPoly& a, const LaurentPoly& d) {
    LaurentMatrix m(2);
    m.at(0, 0) = a;
    m.at(1, 1) = d;
    return m;
}

LaurentPoly random_poly(TrialRng& rng) {
    LaurentPoly p;
    for (int e = -2; e <= 2; ++e)
        p = p + LaurentPoly::monomial(rng.rational(), e);
    return p;
}

LaurentMatrix random_mat(TrialRng& rng) {
    LaurentMatrix m(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m.at(i, j) = random_poly(rng);
    return m;
}

}  // namespace

TEST_CASE("identity is neutral") {
    TrialRng rng(5, 0);
    const LaurentMatrix a = random_mat(rng);
    CHECK(LaurentMatrix::identity(2) * a == a);
    CHECK(a * LaurentMatrix::identity(2) == a);
}

TEST_CASE("negative powers cancel") {
    const LaurentMatrix l = diag2(LaurentPoly::monomial(Rational(1), 1), LaurentPoly(Rational(1)));
    const LaurentMatrix linv =
        diag2(LaurentPoly::monomial(Rational(1), -1), LaurentPoly(Rational(1)));
    CHECK(l * linv == LaurentMatrix::identity(2));
}

TEST_CASE("squaring a scalar entry") {
    LaurentMatrix a(2);
    a.at(0, 0) = LaurentPoly::monomial(Rational(1), 1) + LaurentPoly(Rational(1));  // l + 1
    a.at(1, 1) = LaurentPoly(Rational(1));
    const LaurentMatrix sq = a * a;
    LaurentPoly expect = LaurentPoly::monomial(Rational(1), 2) +
                         LaurentPoly::monomial(Rational(2), 1) + LaurentPoly(Rational(1));
    CHECK(sq.at(0, 0) == expect);
    CHECK(sq.at(0, 1).is_zero());
    CHECK(sq.at(1, 1) == LaurentPoly(Rational(1)));
}

TEST_CASE("equality ignores zero-coefficient clutter") {
    LaurentPoly a = LaurentPoly::monomial(Rational(1), 1);
    LaurentPoly b = LaurentPoly::monomial(Rational(1), 1) + LaurentPoly::monomial(Rational(0), 5);
    LaurentPoly c = b - LaurentPoly::monomial(Rational(2), 3) + LaurentPoly::monomial(Rational(2), 3);
    CHECK(a == b);
    CHECK(a == c);
    CHECK(a != a + LaurentPoly(Rational(1)));
}

TEST_CASE("size mismatch raises") {
    CHECK_THROWS_AS(LaurentMatrix(2) * LaurentMatrix(3), SizeMismatch);
}

TEST_CASE("product associativity on random matrices") {
    for (int trial = 0; trial < 60; ++trial) {
        TrialRng rng(31, trial);
        const LaurentMatrix a = random_mat(rng), b = random_mat(rng), c = random_mat(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) * c == a * c + b * c);
    }
}

TEST_CASE("trace and determinant") {
    TrialRng rng(8, 3);
    const LaurentMatrix a = random_mat(rng), b = random_mat(rng);
    CHECK((a * b).trace() == (b * a).trace());
    CHECK((a * b).determinant() == a.determinant() * b.determinant());

    LaurentMatrix m(3);
    for (int i = 0; i < 3; ++i)
        m.at(i, i) = LaurentPoly::monomial(Rational(1), i - 1);  // diag(l^-1, 1, l)
    CHECK(m.determinant() == LaurentPoly(Rational(1)));
    CHECK(m.trace() == LaurentPoly::monomial(Rational(1), -1) + LaurentPoly(Rational(1)) +
                           LaurentPoly::monomial(Rational(1), 1));
}

TEST_CASE("degree bounds add under multiplication") {
    TrialRng rng(77, 1);
    for (int trial = 0; trial < 50; ++trial) {
        const LaurentPoly p = random_poly(rng), q = random_poly(rng);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).max_degree() <= p.max_degree() + q.max_degree());
        CHECK((p * q).min_degree() >= p.min_degree() + q.min_degree());
    }
}
