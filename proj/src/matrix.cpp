#include "ybmaps/matrix.hpp"

#include <gmpxx.h>

#include <vector>

namespace ybmaps {

int exact_rank(const Mat<Rational>& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators row by row; scaling a row by a nonzero integer does
    // not change the rank.
    std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_class d = m.at(i, j).denominator();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
            l = l / g * d;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational& r = m.at(i, j);
            z[i][j] = r.numerator() * (l / r.denominator());
        }
    }

    // Bareiss fraction-free elimination: every division below is exact.
    mpz_class prev(1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && z[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(z[piv], z[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j)
                z[i][j] = (z[i][j] * z[rank][col] - z[i][col] * z[rank][j]) / prev;
            z[i][col] = 0;
        }
        prev = z[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace ybmaps
