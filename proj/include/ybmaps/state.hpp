#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybmaps/dual.hpp"
#include "ybmaps/errors.hpp"
#include "ybmaps/rational.hpp"

namespace ybmaps {

using Real = long double;

inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline bool is_zero(const DualRational& v) { return v.value().is_zero(); }
inline bool is_zero(Real v) { return v == 0.0L; }

/// A pair of points (x, y) plus optional auxiliary coordinates (X, Y) for the
/// six-dimensional maps and optional parameters (a, b) for the parametric ones.
/// For the vector maps x and y are the concatenated blocks (x1 | x2) of length 2N.
template <class S>
struct PairState {
    std::vector<S> x, y;
    std::optional<S> X, Y;
    std::optional<S> a, b;

    std::size_t dim() const { return x.size() + y.size() + (X ? 1 : 0) + (Y ? 1 : 0); }

    friend bool operator==(const PairState& l, const PairState& r) {
        return l.x == r.x && l.y == r.y && l.X == r.X && l.Y == r.Y && l.a == r.a && l.b == r.b;
    }
    friend bool operator!=(const PairState& l, const PairState& r) { return !(l == r); }
};

/// Three points plus parameters (a, b, c) for the parametric YB equation.
template <class S>
struct TripleState {
    std::vector<S> x, y, z;
    std::optional<S> X, Y, Z;
    std::optional<S> a, b, c;

    friend bool operator==(const TripleState& l, const TripleState& r) {
        return l.x == r.x && l.y == r.y && l.z == r.z && l.X == r.X && l.Y == r.Y && l.Z == r.Z &&
               l.a == r.a && l.b == r.b && l.c == r.c;
    }
    friend bool operator!=(const TripleState& l, const TripleState& r) { return !(l == r); }
};

/// State coordinates in a fixed order: x-components, X, y-components, Y.
/// Parameters are not part of the flattening.
template <class S>
std::vector<S> flatten(const PairState<S>& s) {
    std::vector<S> v;
    v.reserve(s.dim());
    v.insert(v.end(), s.x.begin(), s.x.end());
    if (s.X) v.push_back(*s.X);
    v.insert(v.end(), s.y.begin(), s.y.end());
    if (s.Y) v.push_back(*s.Y);
    return v;
}

template <class S>
PairState<S> unflatten(const std::vector<S>& v, const PairState<S>& like) {
    PairState<S> s = like;
    std::size_t i = 0;
    for (auto& c : s.x) c = v.at(i++);
    if (s.X) s.X = v.at(i++);
    for (auto& c : s.y) c = v.at(i++);
    if (s.Y) s.Y = v.at(i++);
    return s;
}

std::string to_string(const PairState<Rational>& s);
std::string to_string(const TripleState<Rational>& s);

}  // namespace ybmaps
