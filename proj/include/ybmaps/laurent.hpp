#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ybmaps/errors.hpp"
#include "ybmaps/rational.hpp"

namespace ybmaps {

/// Sparse Laurent polynomial in the spectral parameter: exponent -> coefficient,
/// exponents may be negative, zero coefficients are never stored.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c) {
        if (!c.is_zero()) c_[0] = c;
    }
    static LaurentPoly monomial(const Rational& c, int exponent) {
        LaurentPoly p;
        if (!c.is_zero()) p.c_[exponent] = c;
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    Rational coeff(int exponent) const {
        auto it = c_.find(exponent);
        return it == c_.end() ? Rational(0) : it->second;
    }
    const std::map<int, Rational>& terms() const { return c_; }

    int min_degree() const { return c_.empty() ? 0 : c_.begin()->first; }
    int max_degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.c_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.c_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : c_) r.c_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    std::string str(const std::string& var = "l") const;

  private:
    void add_term(int e, const Rational& c) {
        auto it = c_.find(e);
        if (it == c_.end()) {
            if (!c.is_zero()) c_[e] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
    std::map<int, Rational> c_;
};

/// Square matrix with LaurentPoly entries; the container for every Lax and
/// Darboux matrix. Identity checks are coefficient-wise, which over a field of
/// characteristic zero is the same as holding for every value of the parameter.
class LaurentMatrix {
  public:
    explicit LaurentMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n) {}

    static LaurentMatrix identity(int n) {
        LaurentMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = LaurentPoly(Rational(1));
        return m;
    }

    int size() const { return n_; }
    LaurentPoly& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const LaurentPoly& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
        if (a.n_ != b.n_)
            throw SizeMismatch("matrix size mismatch: " + std::to_string(a.n_) + " vs " +
                               std::to_string(b.n_));
        LaurentMatrix r(a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int j = 0; j < a.n_; ++j) {
                LaurentPoly s;
                for (int k = 0; k < a.n_; ++k) s = s + a.at(i, k) * b.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }
    friend LaurentMatrix operator+(const LaurentMatrix& a, const LaurentMatrix& b) {
        if (a.n_ != b.n_) throw SizeMismatch("matrix size mismatch");
        LaurentMatrix r(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
        return r;
    }
    friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }
    friend bool operator!=(const LaurentMatrix& a, const LaurentMatrix& b) { return !(a == b); }

    LaurentPoly trace() const {
        LaurentPoly t;
        for (int i = 0; i < n_; ++i) t = t + at(i, i);
        return t;
    }

    /// Exact determinant by Laplace expansion; fine for the small sizes used here.
    LaurentPoly determinant() const;

    std::string str() const;

  private:
    LaurentMatrix minor_matrix(int row, int col) const;

    int n_;
    std::vector<LaurentPoly> e_;
};

}  // namespace ybmaps
