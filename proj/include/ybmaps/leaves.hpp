#pragma once

#include <string>
#include <utility>

#include "ybmaps/catalog.hpp"
#include "ybmaps/state.hpp"

namespace ybmaps {

/// Affine leaf lift X = k + x1*x2 (exact); shared by the NLS and reparametrised
/// DNLS leaf families, whose constraints are both of the form X - x1*x2 = k.
Rational lift_affine(const Rational& x1, const Rational& x2, const Rational& k);

/// Residual of the affine constraint at (x1, x2, X, k); zero by construction
/// for lifted values.
Rational affine_residual(const Rational& x1, const Rational& x2, const Rational& X,
                         const Rational& k);

/// Lift a 4-dimensional parametric state onto the 6-dimensional leaves
/// X = a + x1*x2, Y = b + y1*y2 (parameters dropped from the lifted state).
PairState<Rational> lift_pair(const PairState<Rational>& s4);

/// map6(lift(s)) == lift'(map4(s)) exactly, where lift' uses U = a + u1*u2,
/// V = b + v1*v2. With swapped_pairing the image pairing is U <- b, V <- a
/// (the rejected alternative, kept testable for the pairing resolution).
bool check_leaf_commutation(const MapDescriptor& map4, const MapDescriptor& map6,
                            const PairState<Rational>& s4, bool swapped_pairing = false);

// ---------------------------------------------------------------------------
// Quadratic leaves (numeric): square roots leave the rational field.
// ---------------------------------------------------------------------------
enum class Branch { Minus, Plus };
Branch parse_branch(const std::string& name);  // "minus" | "plus"

struct QuadRoots {
    Real root[2];
    int count;  // 1 when the constraint degenerates to a linear equation
    Real pick(Branch b) const { return count == 1 ? root[0] : root[b == Branch::Minus ? 0 : 1]; }
};

/// Roots of x1*x2*X^2 - X + k = 0 (the constraint X - X^2 x1 x2 = k).
/// root[0] is the branch continuous as x1*x2 -> 0 (tends to k); root[1] is the
/// divergent one. Single root X = k when x1*x2 = 0. Throws ComplexRoots.
QuadRoots solve_dnls_leaf(Real x1, Real x2, Real k);

/// Roots of (1 - x1^2)(1 - x2^2) X^2 + (2 x1 x2 - c2) X + 1 = 0.
/// root[0]/root[1] are the (-) and (+) roots of the quadratic formula; linear
/// fallback when the leading coefficient vanishes. Throws ComplexRoots or
/// DegenerateConstraint.
QuadRoots solve_dihedral_leaf(Real x1, Real x2, Real c2);

/// The implicit 4-dimensional DNLS map: solve the quadratic leaves for (X, Y)
/// with the given branches, then apply the original-parametrisation formulas.
/// Input carries (a, b) as the leaf constants.
PairState<Real> eval_dnls4_implicit(const PairState<Real>& s, Branch bx, Branch by);

/// The implicit 4-dimensional dihedral map. (a, b) are the leaf constants of
/// the two quadratics; the f/g polynomials are evaluated at unit matrix
/// constants, matching the normalisation under which the leaf quadratic holds.
PairState<Real> eval_dihedral4_implicit(const PairState<Real>& s, Branch bx, Branch by);

/// f and f*g of the linearised dihedral Lax matrix in terms of (x1, x2, k):
/// f  = sqrt(1 + (x1+x2)^2)/2 + sqrt(k^2 + (x1-x2)^2)/2,
/// fg = sqrt(1 + (x1+x2)^2)/2 - sqrt(k^2 + (x1-x2)^2)/2.
std::pair<Real, Real> dihedral_f_fg(Real x1, Real x2, Real k);

/// Residuals of the two conserved combinations behind dihedral_f_fg:
/// f*(fg) - x1*x2 - (1-k^2)/4 and f^2 + (fg)^2 - x1^2 - x2^2 - (1+k^2)/2.
std::pair<Real, Real> dihedral_f_fg_residuals(Real x1, Real x2, Real k);

/// Max-norm YB residual of an implicit map over a float triple; the map is
/// applied through the standard embeddings with per-slot leaf constants.
using ImplicitMap = std::function<PairState<Real>(const PairState<Real>&)>;
Real yb_residual(const ImplicitMap& map, const TripleState<Real>& t);

}  // namespace ybmaps
