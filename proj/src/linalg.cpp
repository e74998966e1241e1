#include "katz/linalg.hpp"

#include <stdexcept>

namespace katz {

RfMatrix RfMatrix::identity(std::size_t n) {
    RfMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RationalFunction(Rat(1));
    return m;
}

RfVector RfMatrix::column(std::size_t j) const {
    RfVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

bool RfMatrix::column_is_zero(std::size_t j) const {
    for (std::size_t i = 0; i < rows_; ++i)
        if (!at(i, j).is_zero()) return false;
    return true;
}

RfMatrix operator*(const RfMatrix& a, const RfMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RfMatrix: shape mismatch");
    RfMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return c;
}

RationalFunction determinant(RfMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
    std::size_t n = m.rows();
    RationalFunction det(Rat(1));
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k).is_zero()) ++piv;
        if (piv == n) return RationalFunction();
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            det = -det;
        }
        det *= m.at(k, k);
        RationalFunction inv = m.at(k, k).inv();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            RationalFunction f = m.at(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

Polynomial poly_determinant(std::vector<std::vector<Polynomial>> m) {
    std::size_t n = m.size();
    if (n == 0) return Polynomial(Rat(1));
    Polynomial prev_pivot(Rat(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return {};
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Polynomial t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto [q, r] = Polynomial::divmod(t, prev_pivot);
                // Bareiss: the division is exact
                m[i][j] = std::move(q);
            }
        prev_pivot = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

Val determinant_valuation(const RfMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant_valuation: non-square");
    std::size_t n = m.rows();
    // Scale column j by the product of its entry denominators; the entries
    // become num_i times the product of the other denominators.
    std::vector<std::vector<Polynomial>> poly(n, std::vector<Polynomial>(n));
    long denominator_valuation = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Polynomial> prefix(n + 1, Polynomial(Rat(1)));
        std::vector<Polynomial> suffix(n + 1, Polynomial(Rat(1)));
        for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * m.at(i, j).den();
        for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * m.at(i, j).den();
        denominator_valuation += prefix[n].low_order().value();
        for (std::size_t i = 0; i < n; ++i)
            poly[i][j] = m.at(i, j).num() * (prefix[i] * suffix[i + 1]);
    }
    Polynomial det = poly_determinant(std::move(poly));
    Val v = det.low_order();
    if (v.is_inf()) return v;
    return Val(v.value() - denominator_valuation);
}

std::size_t rank(RfMatrix m) {
    std::size_t r = 0;
    std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m.at(piv, c).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
        RationalFunction inv = m.at(r, c).inv();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m.at(i, c).is_zero()) continue;
            RationalFunction f = m.at(i, c) * inv;
            for (std::size_t j = c; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

RfVector solve(RfMatrix a, RfVector b) {
    std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a.at(piv, k).is_zero()) ++piv;
        if (piv == n) throw std::invalid_argument("solve: singular matrix");
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
            std::swap(b[piv], b[k]);
        }
        RationalFunction inv = a.at(k, k).inv();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            RationalFunction f = a.at(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            b[i] -= f * b[k];
        }
    }
    RfVector x(n);
    for (std::size_t i = n; i-- > 0;) {
        RationalFunction s = b[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
        x[i] = s * a.at(i, i).inv();
    }
    return x;
}

}  // namespace katz
