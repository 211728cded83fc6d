#include "ybmaps/leaves.hpp"

#include <cmath>

#include "ybmaps/errors.hpp"
#include "ybmaps/maps.hpp"
#include "ybmaps/verify.hpp"

namespace ybmaps {

Rational lift_affine(const Rational& x1, const Rational& x2, const Rational& k) {
    return k + x1 * x2;
}

Rational affine_residual(const Rational& x1, const Rational& x2, const Rational& X,
                         const Rational& k) {
    return X - x1 * x2 - k;
}

PairState<Rational> lift_pair(const PairState<Rational>& s4) {
    if (!s4.a || !s4.b) throw Error("leaf lift needs parameters (a,b)");
    PairState<Rational> s6;
    s6.x = s4.x;
    s6.y = s4.y;
    s6.X = lift_affine(s4.x[0], s4.x[1], *s4.a);
    s6.Y = lift_affine(s4.y[0], s4.y[1], *s4.b);
    return s6;
}

bool check_leaf_commutation(const MapDescriptor& map4, const MapDescriptor& map6,
                            const PairState<Rational>& s4, bool swapped_pairing) {
    const PairState<Rational> up = map6.exact.apply(lift_pair(s4));
    const PairState<Rational> im4 = map4.exact.apply(s4);
    const Rational ku = swapped_pairing ? *s4.b : *s4.a;
    const Rational kv = swapped_pairing ? *s4.a : *s4.b;
    return up.x == im4.x && up.y == im4.y &&
           *up.X == lift_affine(im4.x[0], im4.x[1], ku) &&
           *up.Y == lift_affine(im4.y[0], im4.y[1], kv);
}

// ---------------------------------------------------------------------------

Branch parse_branch(const std::string& name) {
    if (name == "minus") return Branch::Minus;
    if (name == "plus") return Branch::Plus;
    throw UnknownName("branch", name);
}

QuadRoots solve_dnls_leaf(Real x1, Real x2, Real k) {
    const Real p = x1 * x2;
    if (p == 0.0L) return {{k, k}, 1};
    const Real disc = 1.0L - 4.0L * k * p;
    if (disc < 0.0L) throw ComplexRoots();
    const Real sq = std::sqrt(disc);
    // Rationalised form keeps the first root continuous as x1*x2 -> 0.
    return {{2.0L * k / (1.0L + sq), (1.0L + sq) / (2.0L * p)}, 2};
}

QuadRoots solve_dihedral_leaf(Real x1, Real x2, Real c2) {
    const Real lead = (1.0L - x1 * x1) * (1.0L - x2 * x2);
    const Real lin = 2.0L * x1 * x2 - c2;
    if (lead == 0.0L) {
        if (lin == 0.0L) throw DegenerateConstraint();
        return {{-1.0L / lin, -1.0L / lin}, 1};
    }
    const Real disc = lin * lin - 4.0L * lead;
    if (disc < 0.0L) throw ComplexRoots();
    const Real sq = std::sqrt(disc);
    return {{(-lin - sq) / (2.0L * lead), (-lin + sq) / (2.0L * lead)}, 2};
}

PairState<Real> eval_dnls4_implicit(const PairState<Real>& s, Branch bx, Branch by) {
    if (!s.a || !s.b) throw Error("dnls4-implicit requires leaf constants (a,b)");
    PairState<Real> lifted;
    lifted.x = s.x;
    lifted.y = s.y;
    lifted.X = solve_dnls_leaf(s.x[0], s.x[1], *s.a).pick(bx);
    lifted.Y = solve_dnls_leaf(s.y[0], s.y[1], *s.b).pick(by);
    const PairState<Real> image = maps::Dnls6Orig::apply(lifted);
    PairState<Real> r = s;
    r.x = image.x;
    r.y = image.y;
    return r;
}

PairState<Real> eval_dihedral4_implicit(const PairState<Real>& s, Branch bx, Branch by) {
    if (!s.a || !s.b) throw Error("dihedral4-implicit requires leaf constants (a,b)");
    // The leaf quadratic is normalised to a unit matrix constant, so the f/g
    // polynomials are evaluated with both matrix constants equal to one; the
    // (a,b) of this map are the quadratic constants.
    PairState<Real> lifted;
    lifted.x = s.x;
    lifted.y = s.y;
    lifted.X = solve_dihedral_leaf(s.x[0], s.x[1], *s.a).pick(bx);
    lifted.Y = solve_dihedral_leaf(s.y[0], s.y[1], *s.b).pick(by);
    lifted.a = 1.0L;
    lifted.b = 1.0L;
    const PairState<Real> image = maps::Dihedral6::apply(lifted);
    PairState<Real> r = s;
    r.x = image.x;
    r.y = image.y;
    return r;
}

std::pair<Real, Real> dihedral_f_fg(Real x1, Real x2, Real k) {
    const Real p = 0.5L * std::sqrt(1.0L + (x1 + x2) * (x1 + x2));
    const Real q = 0.5L * std::sqrt(k * k + (x1 - x2) * (x1 - x2));
    return {p + q, p - q};
}

std::pair<Real, Real> dihedral_f_fg_residuals(Real x1, Real x2, Real k) {
    const auto [f, fg] = dihedral_f_fg(x1, x2, k);
    const Real r1 = f * fg - x1 * x2 - (1.0L - k * k) / 4.0L;
    const Real r2 = f * f + fg * fg - x1 * x1 - x2 * x2 - (1.0L + k * k) / 2.0L;
    return {r1, r2};
}

Real yb_residual(const ImplicitMap& map, const TripleState<Real>& t) {
    auto [left, right] = yb_both_sides(map, t);
    Real res = 0.0L;
    const auto acc = [&](const std::vector<Real>& a, const std::vector<Real>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            const Real d = std::fabs(a[i] - b[i]);
            if (d > res) res = d;
        }
    };
    acc(left.x, right.x);
    acc(left.y, right.y);
    acc(left.z, right.z);
    return res;
}

}  // namespace ybmaps
