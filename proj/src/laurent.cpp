#include "ybmaps/laurent.hpp"

#include <sstream>

namespace ybmaps {

std::string LaurentPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0)
            os << "-";
        first = false;
        const Rational mag = c.abs();
        if (e == 0) {
            os << mag.str();
        } else {
            if (mag != Rational(1)) os << mag.str() << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

LaurentMatrix LaurentMatrix::minor_matrix(int row, int col) const {
    LaurentMatrix m(n_ - 1);
    for (int i = 0, mi = 0; i < n_; ++i) {
        if (i == row) continue;
        for (int j = 0, mj = 0; j < n_; ++j) {
            if (j == col) continue;
            m.at(mi, mj) = at(i, j);
            ++mj;
        }
        ++mi;
    }
    return m;
}

LaurentPoly LaurentMatrix::determinant() const {
    if (n_ == 1) return at(0, 0);
    if (n_ == 2) return at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
    LaurentPoly det;
    for (int j = 0; j < n_; ++j) {
        if (at(0, j).is_zero()) continue;
        const LaurentPoly term = at(0, j) * minor_matrix(0, j).determinant();
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

std::string LaurentMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << (i == 0 ? "[" : " ");
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "[") << at(i, j).str();
        os << "]" << (i + 1 == n_ ? "]" : "\n");
    }
    return os.str();
}

}  // namespace ybmaps
