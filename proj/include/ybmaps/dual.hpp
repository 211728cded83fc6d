#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ybmaps/errors.hpp"
#include "ybmaps/rational.hpp"

namespace ybmaps {

/// Forward-mode dual number: value plus a gradient vector of exact partials.
/// A default-constructed or int-constructed Dual has an empty gradient, which
/// stands for "zero gradient of whatever dimension the context uses"; binary
/// operations adopt the wider gradient. Only first derivatives are carried.
template <class S>
class Dual {
  public:
    Dual() : v_(0) {}
    Dual(int c) : v_(c) {}  // NOLINT: implicit constants in generic formulas
    Dual(S value, std::vector<S> grad) : v_(std::move(value)), g_(std::move(grad)) {}

    static Dual constant(S value) { return Dual(std::move(value), {}); }
    static Dual variable(S value, std::size_t index, std::size_t n_vars) {
        std::vector<S> g(n_vars, S(0));
        g.at(index) = S(1);
        return Dual(std::move(value), std::move(g));
    }

    const S& value() const { return v_; }
    const std::vector<S>& gradient() const { return g_; }

    /// Gradient entry i, treating an empty gradient as all-zero.
    S partial(std::size_t i) const { return i < g_.size() ? g_[i] : S(0); }

    friend Dual operator+(const Dual& a, const Dual& b) {
        Dual r(a.v_ + b.v_, zip(a.g_, b.g_, [](const S& x, const S& y) { return x + y; }));
        return r;
    }
    friend Dual operator-(const Dual& a, const Dual& b) {
        return Dual(a.v_ - b.v_, zip(a.g_, b.g_, [](const S& x, const S& y) { return x - y; }));
    }
    Dual operator-() const {
        std::vector<S> g;
        g.reserve(g_.size());
        for (const auto& x : g_) g.push_back(-x);
        return Dual(-v_, std::move(g));
    }
    friend Dual operator*(const Dual& a, const Dual& b) {
        return Dual(a.v_ * b.v_, zip(a.g_, b.g_, [&](const S& da, const S& db) {
                        return da * b.v_ + a.v_ * db;
                    }));
    }
    friend Dual operator/(const Dual& a, const Dual& b) {
        if (b.v_ == S(0)) throw DivisionByZero();
        const S b2 = b.v_ * b.v_;
        return Dual(a.v_ / b.v_, zip(a.g_, b.g_, [&](const S& da, const S& db) {
                        return (da * b.v_ - a.v_ * db) / b2;
                    }));
    }

    Dual& operator+=(const Dual& o) { *this = *this + o; return *this; }
    Dual& operator-=(const Dual& o) { *this = *this - o; return *this; }
    Dual& operator*=(const Dual& o) { *this = *this * o; return *this; }
    Dual& operator/=(const Dual& o) { *this = *this / o; return *this; }

    friend bool operator==(const Dual& a, const Dual& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Dual& a, const Dual& b) { return a.v_ != b.v_; }

  private:
    template <class F>
    static std::vector<S> zip(const std::vector<S>& a, const std::vector<S>& b, F&& f) {
        const std::size_t n = a.size() > b.size() ? a.size() : b.size();
        std::vector<S> r;
        r.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const S za = i < a.size() ? a[i] : S(0);
            const S zb = i < b.size() ? b[i] : S(0);
            r.push_back(f(za, zb));
        }
        return r;
    }

    S v_;
    std::vector<S> g_;
};

using DualRational = Dual<Rational>;

/// Evaluates a rational expression together with its exact gradient.
/// `expr` is any callable taking std::vector<Dual<Rational>> and returning one Dual.
template <class F>
std::pair<Rational, std::vector<Rational>> dual_eval(F&& expr, const std::vector<Rational>& point) {
    std::vector<DualRational> vars;
    vars.reserve(point.size());
    for (std::size_t i = 0; i < point.size(); ++i)
        vars.push_back(DualRational::variable(point[i], i, point.size()));
    DualRational out = expr(vars);
    std::vector<Rational> grad(point.size(), Rational(0));
    for (std::size_t i = 0; i < point.size(); ++i) grad[i] = out.partial(i);
    return {out.value(), std::move(grad)};
}

}  // namespace ybmaps
