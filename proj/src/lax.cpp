#include "ybmaps/lax.hpp"

#include "ybmaps/errors.hpp"

namespace ybmaps {

namespace {

using LP = LaurentPoly;

Rational dot(const std::vector<Rational>& w, std::size_t ai, std::size_t bi, std::size_t n) {
    Rational r(0);
    for (std::size_t i = 0; i < n; ++i) r += w[ai + i] * w[bi + i];
    return r;
}

void want(const LaxSide& s, const LaxBuilder& b) {
    if (b.arity >= 0 && static_cast<int>(s.w.size()) != b.arity)
        throw SizeMismatch("lax builder " + b.name + ": expected " + std::to_string(b.arity) +
                           " state scalars, got " + std::to_string(s.w.size()));
    if (b.arity < 0 && (s.w.size() % 2 != 0 || s.w.empty()))
        throw SizeMismatch("lax builder " + b.name + ": expected an even number of state scalars");
    if (b.uses_aux && !s.aux) throw Error("lax builder " + b.name + " needs an aux coordinate");
    if (b.uses_param && !s.param) throw Error("lax builder " + b.name + " needs a parameter");
}

// [[x, 1], [x^2 + a - lam, x]]
LaurentMatrix build_adler(const LaxSide& s) {
    const Rational& x = s.w[0];
    const Rational& a = *s.param;
    LaurentMatrix m(2);
    m.at(0, 0) = LP(x);
    m.at(0, 1) = LP(Rational(1));
    m.at(1, 0) = LP(x * x + a) + LP::monomial(Rational(-1), 1);
    m.at(1, 1) = LP(x);
    return m;
}

// lam*diag(1,0) + [[c, x1], [x2, 1]] with c = a + x1 x2 (leaf form) or c = X.
LaurentMatrix build_nls_like(const Rational& corner, const Rational& x1, const Rational& x2) {
    LaurentMatrix m(2);
    m.at(0, 0) = LP(corner) + LP::monomial(Rational(1), 1);
    m.at(0, 1) = LP(x1);
    m.at(1, 0) = LP(x2);
    m.at(1, 1) = LP(Rational(1));
    return m;
}

// lam^2*diag(c,0) + lam*[[0, o12], [o21, 0]] + I
LaurentMatrix build_z2_like(const Rational& corner, const Rational& o12, const Rational& o21) {
    LaurentMatrix m(2);
    m.at(0, 0) = LP(Rational(1)) + LP::monomial(corner, 2);
    m.at(0, 1) = LP::monomial(o12, 1);
    m.at(1, 0) = LP::monomial(o21, 1);
    m.at(1, 1) = LP(Rational(1));
    return m;
}

// [[lam^2 X + x1x2X + c1, lam x1 X + lam^-1 x2 X],
//  [lam x2 X + lam^-1 x1 X, lam^-2 X + x1x2X + c1]]
LaurentMatrix build_dihedral(const LaxSide& s) {
    const Rational& x1 = s.w[0];
    const Rational& x2 = s.w[1];
    const Rational& X = *s.aux;
    const Rational& c1 = *s.param;
    const Rational w = x1 * x2 * X + c1;
    LaurentMatrix m(2);
    m.at(0, 0) = LP(w) + LP::monomial(X, 2);
    m.at(0, 1) = LP::monomial(x1 * X, 1) + LP::monomial(x2 * X, -1);
    m.at(1, 0) = LP::monomial(x2 * X, 1) + LP::monomial(x1 * X, -1);
    m.at(1, 1) = LP(w) + LP::monomial(X, -2);
    return m;
}

// (N+1)x(N+1): corner lam + a + <w1,w2>, row <w1|, column |w2>, identity block.
LaurentMatrix build_vector_nls(const LaxSide& s) {
    const std::size_t n = s.w.size() / 2;
    LaurentMatrix m(static_cast<int>(n) + 1);
    m.at(0, 0) = LP(*s.param + dot(s.w, 0, n, n)) + LP::monomial(Rational(1), 1);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(0, static_cast<int>(i) + 1) = LP(s.w[i]);
        m.at(static_cast<int>(i) + 1, 0) = LP(s.w[n + i]);
        m.at(static_cast<int>(i) + 1, static_cast<int>(i) + 1) = LP(Rational(1));
    }
    return m;
}

// (N+1)x(N+1): corner lam^2 (a + <w1,w2>) + 1, blocks lam <w1| and lam |w2>,
// identity block. The corner constant is the identity contribution that makes
// the matrix the N=1 leaf matrix verbatim; without it the refactorisation
// identity fails.
LaurentMatrix build_vector_z2(const LaxSide& s) {
    const std::size_t n = s.w.size() / 2;
    LaurentMatrix m(static_cast<int>(n) + 1);
    m.at(0, 0) = LP(Rational(1)) + LP::monomial(*s.param + dot(s.w, 0, n, n), 2);
    for (std::size_t i = 0; i < n; ++i) {
        m.at(0, static_cast<int>(i) + 1) = LP::monomial(s.w[i], 1);
        m.at(static_cast<int>(i) + 1, 0) = LP::monomial(s.w[n + i], 1);
        m.at(static_cast<int>(i) + 1, static_cast<int>(i) + 1) = LP(Rational(1));
    }
    return m;
}

}  // namespace

void LaxRegistry::add(LaxBuilder b) {
    order_.push_back(b.name);
    by_name_.emplace(b.name, std::move(b));
}

const LaxBuilder& LaxRegistry::get(const std::string& name) const {
    const LaxBuilder* b = find(name);
    if (!b) throw UnknownName("lax builder", name);
    return *b;
}

const LaxBuilder* LaxRegistry::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &it->second;
}

const LaxRegistry& LaxRegistry::instance() {
    static const LaxRegistry registry = [] {
        LaxRegistry r;
        r.add({"adler", 1, false, true, build_adler});
        r.add({"adler-yamilov", 2, false, true, [](const LaxSide& s) {
                   return build_nls_like(*s.param + s.w[0] * s.w[1], s.w[0], s.w[1]);
               }});
        r.add({"nls6", 2, true, false, [](const LaxSide& s) {
                   return build_nls_like(*s.aux, s.w[0], s.w[1]);
               }});
        r.add({"dnls6-orig", 2, true, false, [](const LaxSide& s) {
                   return build_z2_like(*s.aux, s.w[0] * *s.aux, s.w[1] * *s.aux);
               }});
        r.add({"dnls6-reparam", 2, true, false, [](const LaxSide& s) {
                   return build_z2_like(*s.aux, s.w[0], s.w[1]);
               }});
        r.add({"dnls4", 2, false, true, [](const LaxSide& s) {
                   return build_z2_like(*s.param + s.w[0] * s.w[1], s.w[0], s.w[1]);
               }});
        r.add({"dihedral6", 2, true, true, build_dihedral});
        r.add({"vector-nls", -1, false, true, build_vector_nls});
        r.add({"vector-z2", -1, false, true, build_vector_z2});
        return r;
    }();
    return registry;
}

LaurentMatrix build_lax(const std::string& name, const LaxSide& side) {
    const LaxBuilder& b = LaxRegistry::instance().get(name);
    want(side, b);
    return b.build(side);
}

LaxSide x_side(const PairState<Rational>& s) { return {s.x, s.X, s.a}; }
LaxSide y_side(const PairState<Rational>& s) { return {s.y, s.Y, s.b}; }

bool check_refactorisation(const MapDescriptor& map, const LaxBuilder& lax,
                           const PairState<Rational>& state) {
    const PairState<Rational> image = map.exact.apply(state);
    want(x_side(state), lax);
    const LaurentMatrix lu = lax.build(x_side(image));
    const LaurentMatrix lv = lax.build(y_side(image));
    const LaurentMatrix ly = lax.build(y_side(state));
    const LaurentMatrix lx = lax.build(x_side(state));
    return lu * lv == ly * lx;
}

std::vector<std::pair<int, Rational>> extract_trace_invariants(const LaxBuilder& lax,
                                                               const PairState<Rational>& state) {
    want(x_side(state), lax);
    const LaurentPoly tr = (lax.build(y_side(state)) * lax.build(x_side(state))).trace();
    std::vector<std::pair<int, Rational>> out;
    out.reserve(tr.terms().size());
    for (const auto& [e, c] : tr.terms()) out.emplace_back(e, c);
    return out;
}

bool check_trace_preservation(const MapDescriptor& map, const LaxBuilder& lax,
                              const PairState<Rational>& state) {
    const PairState<Rational> image = map.exact.apply(state);
    return extract_trace_invariants(lax, state) == extract_trace_invariants(lax, image);
}

bool check_det_consistency(const MapDescriptor& map, const LaxBuilder& lax,
                           const PairState<Rational>& state) {
    const PairState<Rational> image = map.exact.apply(state);
    want(x_side(state), lax);
    const LaurentPoly lhs =
        lax.build(x_side(image)).determinant() * lax.build(y_side(image)).determinant();
    const LaurentPoly rhs =
        lax.build(y_side(state)).determinant() * lax.build(x_side(state)).determinant();
    return lhs == rhs;
}

}  // namespace ybmaps
