#include "cag/matrix.hpp"

namespace cag {

BigInt int_matrix_det(const IntMatrix &m) {
    if (m.rows() != m.cols()) throw NotSquare();
    std::size_t k = m.rows();
    if (k == 0) return BigInt(1);
    IntMatrix a = m;
    BigInt prev(1);
    int sign = 1;
    for (std::size_t col = 0; col < k - 1; ++col) {
        // pivot search
        std::size_t piv = col;
        while (piv < k && a.at(piv, col) == 0) ++piv;
        if (piv == k) return BigInt(0);
        if (piv != col) {
            for (std::size_t j = 0; j < k; ++j) std::swap(a.at(piv, j), a.at(col, j));
            sign = -sign;
        }
        for (std::size_t i = col + 1; i < k; ++i)
            for (std::size_t j = col + 1; j < k; ++j) {
                BigInt num = a.at(i, j) * a.at(col, col) - a.at(i, col) * a.at(col, j);
                a.at(i, j) = num / prev; // exact by Bareiss invariant
            }
        prev = a.at(col, col);
    }
    BigInt d = a.at(k - 1, k - 1);
    return sign > 0 ? d : BigInt(-d);
}

bool int_matrix_unimodular(const IntMatrix &m) {
    BigInt d = int_matrix_det(m);
    return d == 1 || d == -1;
}

RatMatrix rat_matrix_invert(const RatMatrix &m) {
    if (m.rows() != m.cols()) throw NotSquare();
    std::size_t k = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(k);
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t piv = col;
        while (piv < k && a.at(piv, col).is_zero()) ++piv;
        if (piv == k) throw Singular();
        if (piv != col)
            for (std::size_t j = 0; j < k; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Rat p = a.at(col, col).inverse();
        for (std::size_t j = 0; j < k; ++j) {
            a.at(col, j) *= p;
            inv.at(col, j) *= p;
        }
        for (std::size_t i = 0; i < k; ++i) {
            if (i == col || a.at(i, col).is_zero()) continue;
            Rat f = a.at(i, col);
            for (std::size_t j = 0; j < k; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool rat_matrix_invertible(const RatMatrix &m) {
    if (m.rows() != m.cols()) return false;
    try {
        rat_matrix_invert(m);
        return true;
    } catch (const Singular &) {
        return false;
    }
}

RatMatrix to_rat(const IntMatrix &m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = Rat(m.at(i, j));
    return r;
}

IntMatrix int_matrix_unimodular_inverse(const IntMatrix &m) {
    RatMatrix inv = rat_matrix_invert(to_rat(m));
    IntMatrix r(inv.rows(), inv.cols());
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) {
            const Rat &e = inv.at(i, j);
            if (!e.is_integer()) throw Error("matrix is not unimodular");
            r.at(i, j) = e.num();
        }
    return r;
}

} // namespace cag
